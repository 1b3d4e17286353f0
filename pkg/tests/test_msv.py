import time

from schubtorus.cone import exact_rank
from schubtorus.diagram import L, Lprime
from schubtorus.digraph import Bar, Digraph, edge_cone_dim, is_acyclic
from schubtorus.msv import analyze_msv, graph_Gw, is_toric_by_hooks
from schubtorus.perm import all_permutations, direct_sum, identity

from conftest import P


def weight_rank(w):
    """Rank of {e_a - f_b : (a, b) in L(w)} in Z^n x Z^n, by plain elimination."""
    n = w.n
    rows = []
    for a, b in L(w).cells:
        x = [0] * (2 * n)
        x[a - 1] += 1
        x[n + b - 1] -= 1
        rows.append(x)
    return exact_rank(rows)


def test_graph_examples():
    g = graph_Gw(P("3412"))
    assert g.vertices == (2, 3, 4, Bar(1), Bar(2), Bar(3))
    assert len(g.edges) == 8 and edge_cone_dim(g) == 5
    assert graph_Gw(identity(4)).edges == ()
    g = graph_Gw(P("3142"))
    assert g.vertices == (2, 3, Bar(1), Bar(2)) and len(g.edges) == 4


def test_analyze_3412():
    r = analyze_msv(P("3412"))
    assert (r.dim_ambient_msv, r.dim_Yw, r.cone_dim, r.complexity) == (14, 7, 5, 2)
    assert not r.is_toric and not r.is_toric_by_hooks


def test_analyze_3142_and_4312():
    r = analyze_msv(P("3142"))
    assert r.complexity == 0 and r.is_toric and r.is_toric_by_hooks
    assert analyze_msv(P("4312")).complexity == 3


def test_hooks_predicate():
    assert is_toric_by_hooks(P("3142"))
    assert is_toric_by_hooks(identity(4))
    assert not is_toric_by_hooks(P("3412"))


def test_runtime_3412():
    start = time.perf_counter()
    analyze_msv(P("3412"))
    assert time.perf_counter() - start < 0.01


def test_report_json():
    j = analyze_msv(P("3412")).to_json()
    assert j["w"] == [3, 4, 1, 2]
    assert j["diagrams"]["essential_set"]["cells"] == [[2, 3], [4, 1]]
    assert j["sizes"] == {"rothe": 4, "opposite_rothe": 2, "essential_set": 2, "dominant": 1,
                          "sw_region": 9, "L": 8, "Lprime": 7}
    assert j["hook_classification"] == {"is_disjoint_hooks": False, "hooks": None}
    assert j["free_dim"] == 7


def test_complexity_invariants_s7():
    for n in range(1, 8):
        for w in all_permutations(n):
            r = analyze_msv(w)
            assert r.complexity >= 0
            assert r.complexity != 1, w
            assert r.is_toric_by_hooks == r.is_toric, w
            assert r.dim_Yw == len(r.sw_region) - len(r.opposite_rothe)


def test_graph_invariants_s6():
    for w in all_permutations(6):
        g = graph_Gw(w)
        assert len(g.edges) == len(L(w))
        assert is_acyclic(g)
        assert all(isinstance(a, int) and isinstance(b, Bar) for a, b in g.edges)
        # the cone dimension is the rank of the weights
        assert edge_cone_dim(g) == weight_rank(w)


def test_isolated_vertices_do_not_matter():
    for w in all_permutations(5):
        g = graph_Gw(w)
        full_rows = [x for x in range(1, 6) if x not in g.vertices]
        full_cols = [Bar(k) for k in range(1, 6) if Bar(k) not in g.vertices]
        padded = Digraph(g.vertices + tuple(full_rows) + tuple(full_cols), g.edges)
        assert edge_cone_dim(padded) == edge_cone_dim(g)


def test_direct_sums_s3():
    for a in all_permutations(3):
        for b in all_permutations(3):
            ra, rb, rg = analyze_msv(a), analyze_msv(b), analyze_msv(direct_sum(a, b))
            assert rg.complexity == ra.complexity + rb.complexity
            shifted = {(x + 3, Bar(y.k + 3)) for x, y in rb.graph.edges}
            assert set(rg.graph.edges) == set(ra.graph.edges) | shifted
            assert not set(ra.graph.vertices) & {v for e in shifted for v in e}


def test_complexity_one_absent_but_two_and_three_present():
    hist = {}
    for w in all_permutations(5):
        c = analyze_msv(w).complexity
        hist[c] = hist.get(c, 0) + 1
    assert 1 not in hist and hist[2] >= 1 and hist[3] >= 1
