from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from schubtorus.cone import (Cone, cone_combination, cone_dim, exact_rank, extremal_generators,
                             in_cone, root, unit)
from schubtorus.errors import DimensionMismatch, ProportionalGenerators


# --- oracles -----------------------------------------------------------------------------

def solve_exact(cols, x):
    """Unique solution of sum lam_k cols[k] = x for independent cols, or None."""
    m, k = len(x), len(cols)
    rows = [[Fraction(cols[c][r]) for c in range(k)] + [Fraction(x[r])] for r in range(m)]
    piv_row = 0
    pivots = []
    for c in range(k):
        p = next((r for r in range(piv_row, m) if rows[r][c] != 0), None)
        if p is None:
            return None
        rows[piv_row], rows[p] = rows[p], rows[piv_row]
        pv = rows[piv_row][c]
        rows[piv_row] = [a / pv for a in rows[piv_row]]
        for r in range(m):
            if r != piv_row and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[piv_row])]
        pivots.append(c)
        piv_row += 1
    if any(rows[r][k] != 0 for r in range(piv_row, m)):
        return None
    return [rows[i][k] for i in range(k)]


def in_cone_caratheodory(x, gens):
    """x is a nonnegative combination of some linearly independent subset."""
    if not any(x):
        return True
    for size in range(1, len(x) + 1):
        for sub in combinations(gens, size):
            if exact_rank(list(sub)) < size:
                continue
            lam = solve_exact(sub, x)
            if lam is not None and all(t >= 0 for t in lam):
                return True
    return False


def rank_by_fractions(rows):
    if not rows:
        return 0
    m = [[Fraction(a) for a in r] for r in rows]
    rank = 0
    for c in range(len(m[0])):
        p = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if p is None:
            continue
        m[rank], m[p] = m[p], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


vec3 = st.tuples(*[st.integers(-2, 2)] * 3)


# --- rank ------------------------------------------------------------------------------------

def test_rank_examples():
    assert exact_rank([]) == 0
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[1, -1, 0], [0, 1, -1], [1, 0, -1]]) == 2
    assert exact_rank([[0, 0], [0, 0]]) == 0


@given(st.lists(st.tuples(*[st.integers(-50, 50)] * 4), max_size=6))
def test_bareiss_matches_fraction_elimination(rows):
    assert exact_rank(rows) == rank_by_fractions(rows)


# --- cones ------------------------------------------------------------------------------------

def test_cone_normalises_generators():
    c = Cone.of(3, [(1, 0, 0), (1, 0, 0), (0, 0, 0)])
    assert c.generators == ((1, 0, 0),)
    with pytest.raises(DimensionMismatch):
        Cone.of(3, [(1, 0)])


def test_cone_dim_examples():
    c = Cone.of(8, [root(3, 4, 8), root(2, 4, 8), root(2, 6, 8), root(2, 7, 8), root(1, 7, 8)])
    assert cone_dim(c) == 5
    assert cone_dim(Cone.of(4)) == 0


def test_in_cone_examples():
    assert in_cone((0, 0, 0), Cone.of(3))
    c = Cone.of(3, [root(1, 2, 3), root(2, 3, 3)])
    assert in_cone(root(1, 3, 3), c)
    assert not in_cone(root(2, 1, 3), Cone.of(3, [root(1, 2, 3)]))
    lam = cone_combination(root(1, 3, 3), c)
    assert lam == (1, 1)
    with pytest.raises(DimensionMismatch):
        in_cone((1, 0), c)


@settings(max_examples=300)
@given(st.lists(vec3, max_size=5), vec3)
def test_in_cone_matches_caratheodory(gens, x):
    c = Cone.of(3, gens)
    lam = cone_combination(x, c)
    assert (lam is not None) == in_cone_caratheodory(x, list(c.generators))
    if lam is not None:
        assert all(t >= 0 for t in lam)
        assert tuple(sum(l * g[i] for l, g in zip(lam, c.generators)) for i in range(3)) == x


@given(st.lists(vec3, max_size=5))
def test_generators_lie_in_their_cone(gens):
    c = Cone.of(3, gens)
    assert all(in_cone(g, c) for g in c.generators)


@given(st.lists(vec3, max_size=5), st.randoms())
def test_cone_dim_ignores_order_and_duplicates(gens, rnd):
    shuffled = list(gens) + list(gens[:2])
    rnd.shuffle(shuffled)
    assert cone_dim(Cone.of(3, gens)) == cone_dim(Cone.of(3, shuffled))


def test_extremal_examples():
    c = Cone.of(3, [root(1, 2, 3), root(2, 3, 3), root(1, 3, 3)])
    assert extremal_generators(c) == [root(1, 2, 3), root(2, 3, 3)]
    basis = [unit(i, 4) for i in range(1, 5)]
    assert extremal_generators(Cone.of(4, basis)) == basis
    with pytest.raises(ProportionalGenerators):
        extremal_generators(Cone.of(2, [(1, 1), (2, 2)]))
    # opposite vectors span a line; neither is extremal in the pointed sense, but no error
    assert extremal_generators(Cone.of(2, [(1, 0), (-1, 0)])) == [(1, 0), (-1, 0)]
