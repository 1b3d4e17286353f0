"""
Exhaustive sweeps over ``S_n`` and over Bruhat-comparable pairs.

Every sweep is split into shards by the first letter of the one-line word of
``w``; shards run in worker processes and are merged back in shard order, so
the result does not depend on the number of workers.  Random samples, when
requested, are drawn from a seeded generator in the parent process.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations as _itertools_permutations
from typing import Callable, Iterator

from .cone import Cone, exact_rank, extremal_generators, in_cone, root
from .diagram import dominant, opposite_rothe
from .digraph import (Bar, Digraph, edge_cone_dim, has_directed_path, incidence_rank,
                      indecomposable_edges, is_forest, primitive_cycles, weak_components)
from .errors import InconsistencyError, Malformed, SizeTooLarge, UnknownTheorem
from .kl import (analyze_kl, classify_vistransp, classify_visid, extremal_weights,
                 graph_G_by_length, kl_weights)
from .msv import analyze_msv
from .perm import (Permutation, all_permutations, bruhat_leq, direct_sum, hat_w, identity,
                   is_irreducible, length, longest, simple_reflection,
                   simple_reflections_below, subword_bruhat_leq, w0_star_w0)

__all__ = [
    "CensusResult", "THEOREMS", "msv_census", "kl_census", "verify", "comparable_pair_count",
    "hat_candidates", "calibrate_hat", "HAT_REFLECTION", "random_dag",
]

V_CLASSES = ("id", "simple", "all")


@dataclass
class CensusResult:
    task: str
    n: int
    population: str
    v_class: str | None
    count: int
    histogram: dict[str, int]
    violations: list[dict]
    sample_count: int = 0
    seed: int | None = None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_json(self) -> dict:
        """Everything except wall time, so the output is reproducible byte for byte."""
        return {
            "task": self.task,
            "n": self.n,
            "population": self.population,
            "v_class": self.v_class,
            "count": self.count,
            "sample_count": self.sample_count,
            "seed": self.seed,
            "histogram": self.histogram,
            "verdict": self.verdict,
            "violation_count": len(self.violations),
            "first_counterexample": self.violations[0] if self.violations else None,
            "violations": self.violations[:50],
        }


# ---------------------------------------------------------------- populations

def _perms_with_prefix(n: int, prefix: tuple[int, ...]) -> Iterator[Permutation]:
    rest = sorted(set(range(1, n + 1)) - set(prefix))
    for tail in _itertools_permutations(rest):
        yield Permutation(prefix + tail)


def _v_candidates(n: int, v_class: str) -> list[Permutation]:
    if v_class == "id":
        return [identity(n)]
    if v_class == "simple":
        return [simple_reflection(a, n) for a in range(1, n)]
    return list(all_permutations(n))


def _population(kind: str, n: int, prefix: tuple[int, ...], v_class: str):
    if kind == "perms":
        yield from _perms_with_prefix(n, prefix)
    elif kind == "pairs":
        vs = _v_candidates(n, v_class)
        for w in _perms_with_prefix(n, prefix):
            for v in vs:
                if bruhat_leq(v, w):
                    yield (v, w)
    elif kind == "allpairs":
        vs = list(all_permutations(n))
        for w in _perms_with_prefix(n, prefix):
            for v in vs:
                yield (v, w)
    elif kind == "dsum":
        betas = list(all_permutations(n))
        for a in _perms_with_prefix(n, prefix):
            for b in betas:
                yield (a, b)
    else:  # pragma: no cover
        raise ValueError(kind)


def comparable_pair_count(n: int) -> int:
    """Number of pairs ``v <= w`` in ``S_n`` by a plain double loop."""
    ps = list(all_permutations(n))
    return sum(1 for w in ps for v in ps if bruhat_leq(v, w))


def _item_json(kind: str, item) -> dict:
    if kind == "perms":
        return {"w": item.to_json()}
    if kind == "dsum":
        return {"alpha": item[0].to_json(), "beta": item[1].to_json()}
    if kind == "dag":
        return {"vertices": list(item.vertices), "edges": [list(e) for e in item.edges]}
    return {"v": item[0].to_json(), "w": item[1].to_json()}


# ---------------------------------------------------------------- checks
# each check maps an item to (histogram key, violation details or None)

def _msv_complexity(w, _):
    return analyze_msv(w).complexity, None


def _no_complexity_one(w, _):
    c = analyze_msv(w).complexity
    return c, ({"complexity": c} if c == 1 else None)


def _toric_hooks(w, _):
    r = analyze_msv(w)
    if r.is_toric_by_hooks != r.is_toric:
        return r.complexity, {"complexity": r.complexity, "hooks": r.is_toric_by_hooks}
    return r.complexity, None


def _shifted_edges(g: Digraph, shift: int) -> set:
    return {(a + shift, Bar(b.k + shift)) for a, b in g.edges}


def _direct_sum(item, _):
    alpha, beta = item
    ra, rb = analyze_msv(alpha), analyze_msv(beta)
    rg = analyze_msv(direct_sum(alpha, beta))
    bad = {}
    if rg.complexity != ra.complexity + rb.complexity:
        bad["complexity"] = [ra.complexity, rb.complexity, rg.complexity]
    if rg.dim_Yw != ra.dim_Yw + rb.dim_Yw:
        bad["dim_Yw"] = [ra.dim_Yw, rb.dim_Yw, rg.dim_Yw]
    left, right = set(ra.graph.edges), _shifted_edges(rb.graph, alpha.n)
    if set(rg.graph.edges) != left | right:
        bad["graph"] = "G of the sum is not the disjoint union"
    return rg.complexity, (bad or None)


def _kl(v, w):
    return analyze_kl(v, w, binomials=False)


def _kl_complexity(item, _):
    return _kl(*item).complexity, None


def _visid(item, _):
    v, w = item
    c = _kl(v, w).complexity
    p = classify_visid(w)
    return c, ({"complexity": c, "predicted": p} if c != p else None)


def _vistransp(item, _):
    v, w = item
    a = next(i for i in range(1, v.n) if v(i) != i)
    c = _kl(v, w).complexity
    p = classify_vistransp(a, w)
    return c, ({"complexity": c, "predicted": p, "a": a} if c != p else None)


def _extremal_rays(item, _):
    v, w = item
    weights = kl_weights(v, w)
    by_graph = extremal_weights(v, w)
    by_lp = set(extremal_generators(Cone.of(v.n, weights.values())))
    key = len(by_graph)
    if by_graph != by_lp:
        return key, {"by_graph": sorted(map(list, by_graph)), "by_lp": sorted(map(list, by_lp))}
    return key, None


def _directed_paths(g: Digraph, x, y, skip) -> Iterator[list]:
    succ = g.successors()

    def walk(node, path):
        if node == y:
            yield list(path)
            return
        for nxt in succ[node]:
            e = (node, nxt)
            if e == skip:
                continue
            path.append(e)
            yield from walk(nxt, path)
            path.pop()

    yield from walk(x, [])


def _decomposable_parts(item, _):
    v, w = item
    r = _kl(v, w)
    tilde_g = r.G_tilde.edge_set()
    gamma = r.Gamma_tilde
    for e in gamma.edges:
        for path in _directed_paths(gamma, e[0], e[1], e):
            inside = [p in tilde_g for p in path]
            if all(inside) or not any(inside):
                return r.complexity, {"edge": list(e), "decomposition": [list(p) for p in path]}
    return r.complexity, None


def _forest_toric(item, _):
    r = _kl(*item)
    if r.is_forest_certified and (r.complexity != 0 or len(r.weights) != r.kl_dim):
        return r.complexity, {"complexity": r.complexity, "weights": len(r.weights)}
    return r.complexity, None


def _distinct_letters(item, _):
    v, w = item
    r = _kl(v, w)
    if length(w) == len(simple_reflections_below(w)) and r.complexity != 0:
        return r.complexity, {"complexity": r.complexity}
    return r.complexity, None


def _simple_v_affine(item, _):
    r = _kl(*item)
    if r.is_toric and not (r.is_forest_certified and len(r.weights) == r.kl_dim):
        return r.complexity, {"forest": r.is_forest_certified, "weights": len(r.weights),
                              "kl_dim": r.kl_dim}
    return r.complexity, None


def _irreducible_connected(item, v_class):
    v, w = item
    r = _kl(v, w)
    irreducible = is_irreducible(w)
    if v_class == "id":
        connected = len(weak_components(r.G)) == 1
        if irreducible != connected:
            return r.complexity, {"irreducible": irreducible, "G_connected": connected}
        return r.complexity, None
    if irreducible:
        connected = len(weak_components(r.Gamma)) == 1
        nb = r.neighborhood_complexity
        if not connected or nb != length(w) - w.n + 1:
            return r.complexity, {"Gamma_connected": connected, "neighborhood_complexity": nb}
    return r.complexity, None


def _rank_agrees(g: Digraph) -> bool:
    return edge_cone_dim(g) == incidence_rank(g)


def _edge_cone_rank(item, _):
    v, w = item
    r = _kl(v, w)
    graphs = {"G_tilde": r.G_tilde, "G": r.G, "Gamma_tilde": r.Gamma_tilde, "Gamma": r.Gamma}
    if v == identity(v.n):
        graphs["Gw"] = analyze_msv(w).graph
    bad = [k for k, g in graphs.items() if not _rank_agrees(g)]
    return r.complexity, ({"graphs": bad} if bad else None)


def _dag_check(g: Digraph, _):
    bad = {}
    if not _rank_agrees(g):
        bad["rank"] = [edge_cone_dim(g), incidence_rank(g)]
    index = {x: i + 1 for i, x in enumerate(g.vertices)}
    dim = len(g.vertices)
    gens = [root(index[a], index[b], dim) for a, b in g.edges]
    indecomposable = set(indecomposable_edges(g))
    for e, x in zip(g.edges, gens):
        others = Cone.of(dim, [y for y in gens if y != x])
        if (e in indecomposable) == in_cone(x, others):
            bad.setdefault("extremality", []).append(list(e))
    return "dag", (bad or None)


def _graph_consistency(item, _):
    v, w = item
    r = _kl(v, w)  # raises InconsistencyError on disagreement
    if r.G.edge_set() != graph_G_by_length(v, w).edge_set():  # pragma: no cover
        return r.complexity, {"G": "mismatch"}
    return r.complexity, None


def _forest_binomials(item, _):
    v, w = item
    r = analyze_kl(v, w)
    n = v.n
    bad = {}
    if r.is_forest_certified and r.binomials:
        bad["forest_with_cycles"] = len(r.binomials)
    for b in r.binomials:
        lhs = [0] * n
        for a, c in b.plus:
            lhs = [p + q for p, q in zip(lhs, root(a, c, n))]
        rhs = [0] * n
        for a, c in b.minus:
            rhs = [p + q for p, q in zip(rhs, root(a, c, n))]
        if lhs != rhs:
            bad.setdefault("inhomogeneous", []).append(r.binomial_cells()[r.binomials.index(b)])
    if len(primitive_cycles(r.G_tilde)) != len(r.binomials):  # pragma: no cover
        bad["count"] = len(r.binomials)
    return r.complexity, (bad or None)


def _dominant_zeros(item, _):
    v, w = item
    r = _kl(v, w)
    stray = (opposite_rothe(v) & dominant(w)) - r.unexpected_zeros
    return r.complexity, ({"cells": [list(c) for c in stray]} if len(stray) else None)


def _subword(item, _):
    v, w = item
    a, b = bruhat_leq(v, w), subword_bruhat_leq(v, w)
    return ("comparable" if a else "incomparable"), (None if a == b else {"rank": a, "subword": b})


# ---------------------------------------------------------------- hat embedding

def hat_candidates(n: int) -> dict[str, Callable[[Permutation], Permutation]]:
    w0 = longest(n)
    return {
        "w": lambda w: w,
        "w0*w": lambda w: w0 * w,
        "w*w0": lambda w: w * w0,
        "w0*w*w0": lambda w: w0 * w * w0,
    }


def _hat_holds(w: Permutation, into_hat: Callable, for_dom: Callable) -> bool:
    n = w.n
    base, h = w0_star_w0(n), hat_w(into_hat(w))
    if not bruhat_leq(base, h):
        return False
    r = _kl(base, h)
    return (r.kl_dim == n * n - len(opposite_rothe(w))
            and len(r.weights) == n * n - len(dominant(for_dom(w))))


def calibrate_hat(sizes=(2, 3)) -> list[tuple[str, str]]:
    """All (reflection fed to the hat, reflection used for dom) pairs that
    make both dimension counts hold for every ``w`` of the given sizes."""
    names = list(hat_candidates(2))
    good = []
    for a in names:
        for b in names:
            if all(_hat_holds(w, hat_candidates(n)[a], hat_candidates(n)[b])
                   for n in sizes for w in all_permutations(n)):
                good.append((a, b))
    return good


HAT_REFLECTION = ("w0*w", "w")


def _hat_embedding(w, _):
    n = w.n
    cands = hat_candidates(n)
    base, h = w0_star_w0(n), hat_w(cands[HAT_REFLECTION[0]](w))
    r = _kl(base, h)
    bad = {}
    if r.kl_dim != n * n - len(opposite_rothe(w)):
        bad["kl_dim"] = r.kl_dim
    if len(r.weights) != n * n - len(dominant(cands[HAT_REFLECTION[1]](w))):
        bad["weights"] = len(r.weights)
    # the weight cone matches the one of e_a - f_b over cells outside dom(w)
    dom = dominant(w)
    msv_weights = [root(a, n + b, 2 * n) for a in range(1, n + 1) for b in range(1, n + 1)
                   if (a, b) not in dom]
    if exact_rank(msv_weights) != r.cone_dim:
        bad["cone_dim"] = [r.cone_dim, exact_rank(msv_weights)]
    return r.complexity, (bad or None)


# ---------------------------------------------------------------- registry

@dataclass(frozen=True)
class Theorem:
    population: str
    check: Callable
    max_n: int
    v_class: str | None = None
    samples: int = 0
    description: str = ""


THEOREMS: dict[str, Theorem] = {
    "no-complexity-one-msv": Theorem("perms", _no_complexity_one, 8,
                                     description="no matrix Schubert variety has complexity one"),
    "toric-hooks": Theorem("perms", _toric_hooks, 8,
                           description="toric iff L'(w) is a union of disjoint hooks"),
    "direct-sum": Theorem("dsum", _direct_sum, 4,
                          description="complexity and G^w are additive under direct sums"),
    "visid": Theorem("pairs", _visid, 7, v_class="id",
                     description="complexity of KL_{id,w} is l(w) - #{s_i <= w}"),
    "vistransp": Theorem("pairs", _vistransp, 7, v_class="simple",
                         description="complexity of KL_{s_a,w} from w alone"),
    "extremal-rays": Theorem("pairs", _extremal_rays, 5, v_class="all", samples=500,
                             description="length-one cells give exactly the extremal rays"),
    "decomposable-parts": Theorem("pairs", _decomposable_parts, 5, v_class="all",
                                  description="decompositions mix G~ edges and other edges"),
    "forest-toric": Theorem("pairs", _forest_toric, 6, v_class="all",
                            description="G~ a forest implies an affine space"),
    "distinct-letters-toric": Theorem("pairs", _distinct_letters, 6, v_class="all",
                                      description="distinct letters in w implies toric"),
    "simple-v-affine": Theorem("pairs", _simple_v_affine, 7, v_class="simple",
                               description="toric KL_{s_a,w} is an affine space"),
    "irreducible-connected": Theorem("pairs", _irreducible_connected, 7, v_class="id",
                                     description="irreducible w iff G_{id,w} connected; "
                                                 "Gamma connected for all v"),
    "edge-cone-rank": Theorem("pairs", _edge_cone_rank, 6, v_class="all", samples=1000,
                              description="component count equals incidence rank"),
    "hat-embedding": Theorem("perms", _hat_embedding, 4,
                             description="matrix Schubert varieties as KL varieties"),
    "graph-consistency": Theorem("pairs", _graph_consistency, 6, v_class="all",
                                 description="indecomposable edges equal length-one edges"),
    "forest-binomials": Theorem("pairs", _forest_binomials, 6, v_class="all",
                                description="cycle binomials are homogeneous; forests have none"),
    "dominant-zeros": Theorem("pairs", _dominant_zeros, 6, v_class="all",
                              description="coordinates in dom(w) are unexpected zeros"),
    "subword": Theorem("allpairs", _subword, 5,
                       description="rank criterion equals the subword property"),
}

_INTERNAL = {
    "msv-census": Theorem("perms", _msv_complexity, 8),
    "kl-census": Theorem("pairs", _kl_complexity, 7, v_class="all"),
}

# size limits of the kl census by v class
_KL_CAPS = {"id": 7, "simple": 7, "all": 6}
# cap on the all-pairs variants of verifiers that default to a narrower v class
_ALL_PAIRS_CAP = 6


def _lookup(task: str) -> Theorem:
    if task in THEOREMS:
        return THEOREMS[task]
    if task in _INTERNAL:
        return _INTERNAL[task]
    raise UnknownTheorem(task)


# ---------------------------------------------------------------- samples

def random_pair(rng: random.Random, m: int) -> tuple[Permutation, Permutation]:
    """A uniformly random comparable pair ``v <= w`` of ``S_m`` (rejection sampling)."""
    while True:
        v = Permutation(tuple(rng.sample(range(1, m + 1), m)))
        w = Permutation(tuple(rng.sample(range(1, m + 1), m)))
        if bruhat_leq(v, w):
            return v, w
        if bruhat_leq(w, v):
            return w, v


def random_dag(rng: random.Random, max_vertices: int = 8) -> Digraph:
    """Random DAG: edges go forward in a random linear order of the vertices."""
    k = rng.randint(1, max_vertices)
    order = rng.sample(range(1, k + 1), k)
    p = rng.random()
    edges = [(order[i], order[j]) for i in range(k) for j in range(i + 1, k) if rng.random() < p]
    rng.shuffle(edges)
    return Digraph(tuple(range(1, k + 1)), tuple(edges))


def _sample_items(task: str, n: int, count: int, seed: int):
    rng = random.Random(seed)
    if task == "edge-cone-rank":
        return "dag", [random_dag(rng) for _ in range(count)], _dag_check
    if task == "extremal-rays":
        m = min(n + 1, THEOREMS["extremal-rays"].max_n)
        return "pairs", [random_pair(rng, m) for _ in range(count)], _extremal_rays
    return None, [], None


# ---------------------------------------------------------------- driver

def _run_shard(task: str, n: int, prefix: tuple[int, ...], v_class: str | None):
    spec = _lookup(task)
    hist: Counter = Counter()
    violations = []
    count = 0
    for item in _population(spec.population, n, prefix, v_class):
        count += 1
        key, bad = _safe_check(spec.check, item, v_class)
        hist[str(key)] += 1
        if bad is not None:
            violations.append({**_item_json(spec.population, item), **bad})
    return dict(hist), violations, count


def _safe_check(check, item, v_class):
    try:
        return check(item, v_class)
    except InconsistencyError as exc:
        return "inconsistent", {"error": str(exc)}


def _run(task: str, n: int, v_class: str | None, jobs: int, samples: int, seed: int,
         population: str) -> CensusResult:
    spec = _lookup(task)
    start = time.perf_counter()
    shards = [(a,) for a in range(1, n + 1)]
    if jobs <= 1 or len(shards) == 1:
        parts = [_run_shard(task, n, s, v_class) for s in shards]
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(shards))) as pool:
            futures = [pool.submit(_run_shard, task, n, s, v_class) for s in shards]
            parts = [f.result() for f in futures]
    hist: Counter = Counter()
    violations: list[dict] = []
    count = 0
    for h, vs, c in parts:
        hist.update(h)
        violations.extend(vs)
        count += c

    sample_count = 0
    if samples:
        kind, items, check = _sample_items(task, n, samples, seed)
        for item in items:
            sample_count += 1
            key, bad = _safe_check(check, item, v_class)
            hist[f"sample:{key}"] += 1
            if bad is not None:
                violations.append({"sample": True, **_item_json(kind, item), **bad})

    return CensusResult(
        task=task, n=n, population=population, v_class=v_class, count=count,
        histogram=dict(sorted(hist.items())), violations=violations,
        sample_count=sample_count, seed=seed if samples else None,
        elapsed=time.perf_counter() - start,
    )


def _check_n(n: int, cap: int, low: int = 1) -> None:
    if not isinstance(n, int) or n < low:
        raise Malformed(f"n must be an integer >= {low}, got {n!r}")
    if n > cap:
        raise SizeTooLarge(f"n = {n} exceeds the limit {cap} for this sweep")


def _population_name(kind: str, v_class: str | None) -> str:
    if kind == "pairs":
        return f"comparable pairs v <= w, v in class {v_class!r}"
    return {"perms": "all w in S_n", "allpairs": "all ordered pairs (v, w)",
            "dsum": "all (alpha, beta) in S_n x S_n"}[kind]


def msv_census(n: int, jobs: int = 1) -> CensusResult:
    _check_n(n, 8, low=2)
    return _run("msv-census", n, None, jobs, 0, 0, _population_name("perms", None))


def kl_census(n: int, v_class: str = "all", jobs: int = 1) -> CensusResult:
    if v_class not in V_CLASSES:
        raise Malformed(f"v class must be one of {V_CLASSES}")
    _check_n(n, _KL_CAPS[v_class], low=2)
    return _run("kl-census", n, v_class, jobs, 0, 0, _population_name("pairs", v_class))


def verify(theorem_id: str, n: int, jobs: int = 1, samples: int | None = None, seed: int = 0,
           v_class: str | None = None) -> CensusResult:
    """Check one statement over its whole population at size ``n``.

    ``samples`` defaults to the statement's own sample count (random DAGs for
    ``edge-cone-rank``, random comparable pairs of ``S_{min(n+1, 5)}`` for
    ``extremal-rays``); other statements ignore it.
    """
    if theorem_id not in THEOREMS:
        raise UnknownTheorem(f"unknown statement {theorem_id!r}; known: {', '.join(THEOREMS)}")
    spec = THEOREMS[theorem_id]
    if spec.population == "pairs":
        v_class = v_class or spec.v_class
        if v_class not in V_CLASSES:
            raise Malformed(f"v class must be one of {V_CLASSES}")
    else:
        v_class = None
    cap = spec.max_n
    if v_class == "all" and spec.v_class != "all":
        cap = min(cap, _ALL_PAIRS_CAP)
    _check_n(n, cap)
    if samples is None:
        samples = spec.samples
    return _run(theorem_id, n, v_class, jobs, samples, seed,
                _population_name(spec.population, v_class))
