"""
Cell sets in the ``n x n`` grid: Rothe diagrams, essential sets and the
regions that split a matrix Schubert variety into ``Y_w x C^d``.

Cells are ``(row, col)`` pairs, 1-indexed, row 1 on top.  Shapes are read in
French notation, i.e. Young diagrams hang off the south-west corner.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import IndexOutOfRange
from .perm import Permutation

Cell = tuple[int, int]

__all__ = [
    "Cell", "CellSet", "rothe", "opposite_rothe", "components", "essential_set",
    "dominant", "sw_region", "L", "Lprime", "is_young", "is_skew", "hooks",
    "is_disjoint_hooks",
]


@dataclass(frozen=True)
class CellSet:
    n: int
    cells: frozenset[Cell]

    def __post_init__(self) -> None:
        cells = frozenset((int(r), int(c)) for r, c in self.cells)
        object.__setattr__(self, "cells", cells)
        for r, c in cells:
            if not (1 <= r <= self.n and 1 <= c <= self.n):
                raise IndexOutOfRange(f"cell {(r, c)} outside the {self.n}x{self.n} grid")

    @classmethod
    def of(cls, n: int, cells: Iterable[Cell] = ()) -> CellSet:
        return cls(n, frozenset(cells))

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(sorted(self.cells))

    def __contains__(self, cell: object) -> bool:
        return cell in self.cells

    def __sub__(self, other: CellSet) -> CellSet:
        return CellSet(self.n, self.cells - other.cells)

    def __or__(self, other: CellSet) -> CellSet:
        return CellSet(self.n, self.cells | other.cells)

    def __and__(self, other: CellSet) -> CellSet:
        return CellSet(self.n, self.cells & other.cells)

    def __le__(self, other: CellSet) -> bool:
        return self.cells <= other.cells

    def sorted(self) -> list[Cell]:
        return sorted(self.cells)

    def to_json(self) -> dict:
        return {"n": self.n, "cells": [list(c) for c in self.sorted()]}


def rothe(w: Permutation) -> CellSet:
    """``D(w) = {(w(j), i) : i < j, w(i) > w(j)}``; one cell per inversion."""
    x = w.images
    n = w.n
    return CellSet.of(n, ((x[j], i + 1) for i in range(n) for j in range(i + 1, n) if x[i] > x[j]))


def opposite_rothe(w: Permutation) -> CellSet:
    """``D°(w) = {(i, j) : w(j) < i, w^{-1}(i) > j}``.

    These are the free entries of the opposite Schubert cell chart, and the
    cells that are neither north nor east of a 1 of the permutation matrix.
    """
    n = w.n
    x = w.images
    inv = w.inverse().images
    return CellSet.of(n, ((i, j) for j in range(1, n + 1) for i in range(x[j - 1] + 1, n + 1)
                          if inv[i - 1] > j))


def components(c: CellSet) -> list[CellSet]:
    """Maximal edge-connected pieces, ordered by their smallest cell."""
    remaining = set(c.cells)
    out = []
    for start in sorted(c.cells):
        if start not in remaining:
            continue
        remaining.discard(start)
        piece = {start}
        stack = [start]
        while stack:
            r, col = stack.pop()
            for nb in ((r - 1, col), (r + 1, col), (r, col - 1), (r, col + 1)):
                if nb in remaining:
                    remaining.discard(nb)
                    piece.add(nb)
                    stack.append(nb)
        out.append(CellSet(c.n, frozenset(piece)))
    return out


def essential_set(w: Permutation) -> CellSet:
    """North-east corners of the components of ``D°(w)``.

    A cell is a corner when neither the cell above nor the cell to its right
    belongs to ``D°(w)``; one component may own several corners.
    """
    d = opposite_rothe(w)
    return CellSet.of(w.n, ((a, b) for a, b in d.cells
                            if (a - 1, b) not in d.cells and (a, b + 1) not in d.cells))


def dominant(w: Permutation) -> CellSet:
    """The component of ``(n, 1)`` in ``D°(w)``, empty if that cell is absent."""
    d = opposite_rothe(w)
    for piece in components(d):
        if (w.n, 1) in piece:
            return piece
    return CellSet.of(w.n)


def sw_region(w: Permutation) -> CellSet:
    """Cells weakly south-west of some essential cell."""
    n = w.n
    cells = set()
    for a, b in essential_set(w).cells:
        cells.update((i, j) for i in range(a, n + 1) for j in range(1, b + 1))
    return CellSet.of(n, cells)


def L(w: Permutation) -> CellSet:
    return sw_region(w) - dominant(w)


def Lprime(w: Permutation) -> CellSet:
    return L(w) - opposite_rothe(w)


def is_young(c: CellSet) -> bool:
    """French-notation Young diagram anchored at the SW corner of its bounding box."""
    if not c.cells:
        return True
    bottom = max(r for r, _ in c.cells)
    left = min(col for _, col in c.cells)
    return all((r2, c2) in c.cells
               for r, col in c.cells
               for r2 in range(r, bottom + 1)
               for c2 in range(left, col + 1))


def is_skew(c: CellSet) -> bool:
    """Skew shape test: convexity in the south-west partial order.

    A set is a difference of two French Young diagrams exactly when, with
    any two of its cells, it contains the whole rectangle they span along a
    SW-to-NE direction.
    """
    cells = c.cells
    for r1, c1 in cells:
        for r2, c2 in cells:
            if r1 >= r2 and c1 <= c2:
                for r in range(r2, r1 + 1):
                    for col in range(c1, c2 + 1):
                        if (r, col) not in cells:
                            return False
    return True


def _line_groups(c: CellSet) -> list[set[Cell]]:
    # cells linked when they share a row or a column
    parent = {cell: cell for cell in c.cells}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_row: dict[int, list[Cell]] = {}
    by_col: dict[int, list[Cell]] = {}
    for cell in c.cells:
        by_row.setdefault(cell[0], []).append(cell)
        by_col.setdefault(cell[1], []).append(cell)
    for group in list(by_row.values()) + list(by_col.values()):
        root = find(group[0])
        for other in group[1:]:
            parent[find(other)] = root
    groups: dict[Cell, set[Cell]] = {}
    for cell in c.cells:
        groups.setdefault(find(cell), set()).add(cell)
    return sorted(groups.values(), key=min)


def hooks(c: CellSet) -> list[CellSet] | None:
    """Split ``c`` into hooks sharing no row or column, or return ``None``.

    A hook has its corner at the south-west: the corner cell, part of the
    column above it and part of the row to its right.
    """
    out = []
    for group in _line_groups(c):
        corner = (max(r for r, _ in group), min(col for _, col in group))
        if corner not in group:
            return None
        if any(r != corner[0] and col != corner[1] for r, col in group):
            return None
        out.append(CellSet(c.n, frozenset(group)))
    return out


def is_disjoint_hooks(c: CellSet) -> bool:
    return hooks(c) is not None
