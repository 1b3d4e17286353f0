"""
Exact polyhedral cone computations over the rationals.

Nothing here uses floating point: ranks come from fraction-free (Bareiss)
elimination on integers and cone membership from a phase-one simplex on
``fractions.Fraction`` with Bland's rule, which cannot cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, ProportionalGenerators

Vector = tuple[int, ...]

__all__ = [
    "Vector", "Cone", "exact_rank", "cone_dim", "cone_combination", "in_cone",
    "extremal_generators", "unit", "root",
]


def unit(i: int, dim: int) -> Vector:
    """The basis vector ``e_i`` (1-indexed) of ``Z^dim``."""
    v = [0] * dim
    v[i - 1] = 1
    return tuple(v)


def root(a: int, b: int, dim: int) -> Vector:
    """``e_a - e_b``."""
    v = [0] * dim
    v[a - 1] += 1
    v[b - 1] -= 1
    return tuple(v)


def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix via Bareiss elimination.

    Every intermediate entry stays an integer: the division by the previous
    pivot is exact.
    """
    m = [list(map(int, r)) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, nrows):
            f = m[i][col]
            row_i, row_r = m[i], m[rank]
            for j in range(col, ncols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


@dataclass(frozen=True)
class Cone:
    """Finitely generated cone; duplicates and the zero vector are dropped."""

    ambient_dim: int
    generators: tuple[Vector, ...]

    def __post_init__(self) -> None:
        seen = []
        for g in self.generators:
            g = tuple(int(x) for x in g)
            if len(g) != self.ambient_dim:
                raise DimensionMismatch(f"generator of length {len(g)} in R^{self.ambient_dim}")
            if any(g) and g not in seen:
                seen.append(g)
        object.__setattr__(self, "generators", tuple(seen))

    @classmethod
    def of(cls, ambient_dim: int, generators: Iterable[Sequence[int]] = ()) -> Cone:
        return cls(ambient_dim, tuple(tuple(g) for g in generators))

    def without(self, g: Vector) -> Cone:
        return Cone(self.ambient_dim, tuple(x for x in self.generators if x != g))


def cone_dim(c: Cone) -> int:
    return exact_rank(c.generators)


def cone_combination(x: Sequence[int], c: Cone) -> tuple[Fraction, ...] | None:
    """Nonnegative coefficients ``lam`` with ``sum lam_i g_i == x``, or ``None``.

    Phase one of the simplex method: one artificial variable per coordinate,
    minimise their sum; ``x`` lies in the cone iff the minimum is zero.
    """
    x = tuple(int(t) for t in x)
    if len(x) != c.ambient_dim:
        raise DimensionMismatch(f"vector of length {len(x)} vs cone in R^{c.ambient_dim}")
    gens = c.generators
    k, m = len(gens), c.ambient_dim
    if not any(x):
        return tuple(Fraction(0) for _ in gens)
    if k == 0:
        return None

    # tableau rows: [A | I | b] with b >= 0; columns 0..k-1 real, k..k+m-1 artificial
    width = k + m
    tab: list[list[Fraction]] = []
    for i in range(m):
        sign = -1 if x[i] < 0 else 1
        row = [Fraction(sign * gens[j][i]) for j in range(k)]
        row += [Fraction(1 if t == i else 0) for t in range(m)]
        row.append(Fraction(sign * x[i]))
        tab.append(row)
    basis = list(range(k, k + m))
    # reduced costs of the phase-one objective (sum of artificials)
    cost = [Fraction(0)] * (width + 1)
    for row in tab:
        for j in range(k):
            cost[j] -= row[j]
        cost[width] -= row[width]

    while True:
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            break
        best = None
        for i, row in enumerate(tab):
            a = row[entering]
            if a > 0:
                ratio = row[width] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # unbounded below cannot happen in phase one
            break
        r = best[1]
        prow = tab[r]
        piv = prow[entering]
        if piv != 1:
            tab[r] = prow = [v / piv for v in prow]
        for i, row in enumerate(tab):
            if i != r and row[entering] != 0:
                f = row[entering]
                tab[i] = [a - f * b for a, b in zip(row, prow)]
        f = cost[entering]
        cost = [a - f * b for a, b in zip(cost, prow)]
        basis[r] = entering

    if cost[width] != 0:
        return None
    lam = [Fraction(0)] * k
    for i, var in enumerate(basis):
        if var < k:
            lam[var] = tab[i][width]
        elif tab[i][width] != 0:
            return None
    return tuple(lam)


def in_cone(x: Sequence[int], c: Cone) -> bool:
    return cone_combination(x, c) is not None


def _positively_proportional(a: Vector, b: Vector) -> bool:
    if exact_rank([a, b]) != 1:
        return False
    return sum(p * q for p, q in zip(a, b)) > 0


def extremal_generators(c: Cone) -> list[Vector]:
    """Generators not in the cone spanned by the others (brute force)."""
    gens = c.generators
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            if _positively_proportional(a, b):
                raise ProportionalGenerators(f"{a} and {b} span the same ray")
    return [g for g in gens if not in_cone(g, c.without(g))]
