"""
Torus action on Kazhdan-Lusztig varieties ``KL_{v,w} = X_w ∩ Σ_v``.

The chart ``Σ_v`` has one free coordinate ``z_ij`` per cell of ``D°(v)``, of
weight ``e_{v(j)} - e_i``.  A coordinate keeps its weight on ``KL_{v,w}``
exactly when ``t_{v(j),i} v <= w``; the others are *unexpected zeros*.
Reading each weight ``e_x - e_y`` as an edge ``x -> y`` on ``[n]`` gives the
graphs below, whose edge cone is the weight cone.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cone import Cone, Vector, cone_dim, exact_rank, root
from .diagram import Cell, CellSet, dominant, opposite_rothe
from .digraph import (Binomial, Digraph, cycle_binomial, edge_cone_dim, indecomposable_edges,
                      is_acyclic, is_forest, primitive_cycles, to_dot, weak_components)
from .errors import IndexOutOfRange, InconsistencyError, NotBruhatComparable
from .perm import (Permutation, bruhat_leq, length, simple_reflections_below, transposition,
                   transposition_apply)

__all__ = [
    "KlReport", "kl_weights", "unexpected_zeros", "graph_tilde_G", "graph_G",
    "graph_G_by_length", "graph_tilde_Gamma", "graph_Gamma", "analyze_kl",
    "extremal_weights", "classify_visid", "classify_vistransp", "neighborhood_complexity",
    "cell_of_edge", "edge_of_cell",
]


def _require_leq(v: Permutation, w: Permutation) -> None:
    if not bruhat_leq(v, w):
        raise NotBruhatComparable(f"{v} is not below {w} in Bruhat order")


def edge_of_cell(v: Permutation, cell: Cell) -> tuple[int, int]:
    i, j = cell
    return (v(j), i)


def cell_of_edge(v: Permutation, edge: tuple[int, int]) -> Cell:
    a, i = edge
    return (i, v.inverse()(a))


def _swap(v: Permutation, a: int, b: int) -> Permutation:
    return transposition_apply(min(a, b), max(a, b), v)


@lru_cache(maxsize=1 << 16)
def _cell_data(v: Permutation, w: Permutation) -> tuple[tuple[Cell, bool, int], ...]:
    """Per coordinate cell: (cell, keeps its weight, l(t v) - l(v))."""
    lv = length(v)
    out = []
    for i, j in opposite_rothe(v).sorted():
        u = _swap(v, v(j), i)
        out.append(((i, j), bruhat_leq(u, w), length(u) - lv))
    return tuple(out)


def kl_weights(v: Permutation, w: Permutation) -> dict[Cell, Vector]:
    """Weight-carrying coordinates, ``cell -> e_{v(j)} - e_i``."""
    _require_leq(v, w)
    n = v.n
    return {c: root(v(c[1]), c[0], n) for c, keeps, _ in _cell_data(v, w) if keeps}


def unexpected_zeros(v: Permutation, w: Permutation) -> CellSet:
    _require_leq(v, w)
    return CellSet.of(v.n, (c for c, keeps, _ in _cell_data(v, w) if not keeps))


def _on_vertices(n: int, edges) -> Digraph:
    return Digraph(tuple(range(1, n + 1)), tuple(edges))


def graph_tilde_G(v: Permutation, w: Permutation) -> Digraph:
    _require_leq(v, w)
    return _on_vertices(v.n, (edge_of_cell(v, c) for c, keeps, _ in _cell_data(v, w) if keeps))


def graph_G_by_length(v: Permutation, w: Permutation) -> Digraph:
    """Edges of weight cells whose transposition raises the length by exactly one."""
    _require_leq(v, w)
    return _on_vertices(v.n, (edge_of_cell(v, c) for c, keeps, dl in _cell_data(v, w)
                              if keeps and dl == 1))


def graph_G(v: Permutation, w: Permutation) -> Digraph:
    """Indecomposable edges of ``graph_tilde_G``, cross-checked against the length rule."""
    tilde = graph_tilde_G(v, w)
    g = _on_vertices(v.n, indecomposable_edges(tilde))
    by_length = graph_G_by_length(v, w)
    if g.edge_set() != by_length.edge_set():
        raise InconsistencyError(
            f"indecomposable edges {sorted(g.edges)} != length-one edges "
            f"{sorted(by_length.edges)} for v={v}, w={w}")
    return g


def graph_tilde_Gamma(v: Permutation, w: Permutation) -> Digraph:
    """Edges ``v(i) -> v(j)`` over positions ``i < j`` whose transposition
    stays below ``w`` and changes the length by one."""
    _require_leq(v, w)
    n, lv = v.n, length(v)
    x = v.images
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            u = _swap(v, x[i], x[j])
            if abs(length(u) - lv) == 1 and bruhat_leq(u, w):
                edges.append((x[i], x[j]))
    g = _on_vertices(n, edges)
    if not is_acyclic(g):
        raise InconsistencyError(f"position-ordered graph for v={v}, w={w} has a cycle")
    return g


def graph_Gamma(v: Permutation, w: Permutation) -> Digraph:
    return _on_vertices(v.n, indecomposable_edges(graph_tilde_Gamma(v, w)))


def extremal_weights(v: Permutation, w: Permutation) -> set[Vector]:
    n = v.n
    return {root(a, b, n) for a, b in graph_G(v, w).edges}


def neighborhood_complexity(v: Permutation, w: Permutation) -> int:
    """Complexity of ``v Ω° ∩ X_w``: ``l(w)`` minus the edge-cone dimension of Γ."""
    return length(w) - edge_cone_dim(graph_Gamma(v, w))


def classify_visid(w: Permutation) -> int:
    return length(w) - len(simple_reflections_below(w))


def classify_vistransp(a: int, w: Permutation) -> int:
    """Predicted complexity of ``KL_{s_a, w}`` from ``w`` alone."""
    n = w.n
    if not 1 <= a < n:
        raise IndexOutOfRange(f"s_{a} not in S_{n}")
    _require_leq(transposition(a, a + 1, n), w)
    left = a >= 2 and bruhat_leq(transposition(a - 1, a + 1, n), w)
    right = a + 2 <= n and bruhat_leq(transposition(a, a + 2, n), w)
    base = length(w) - len(simple_reflections_below(w))
    return base - 1 if left or right else base


def _cell_key(c: Cell) -> str:
    return f"{c[0]},{c[1]}"


@dataclass(frozen=True)
class KlReport:
    v: Permutation
    w: Permutation
    coords: CellSet
    weights: dict
    unexpected_zeros: CellSet
    in_dominant_piece: CellSet
    G_tilde: Digraph
    G: Digraph
    Gamma_tilde: Digraph
    Gamma: Digraph
    cone_dim: int
    binomials: tuple[Binomial, ...]

    @property
    def n(self) -> int:
        return self.v.n

    @property
    def kl_dim(self) -> int:
        return length(self.w) - length(self.v)

    @property
    def complexity(self) -> int:
        return self.kl_dim - self.cone_dim

    @property
    def is_toric(self) -> bool:
        return self.complexity == 0

    @property
    def is_forest_certified(self) -> bool:
        return is_forest(self.G_tilde)

    @property
    def neighborhood_complexity(self) -> int:
        return length(self.w) - edge_cone_dim(self.Gamma)

    def binomial_cells(self) -> list[dict]:
        out = []
        for b in self.binomials:
            out.append({
                "plus": [list(cell_of_edge(self.v, e)) for e in b.plus],
                "minus": [list(cell_of_edge(self.v, e)) for e in b.minus],
            })
        return out

    def to_json(self, graphs: bool = True) -> dict:
        out = {
            "kind": "kl",
            "v": self.v.to_json(),
            "w": self.w.to_json(),
            "n": self.n,
            "coords": [list(c) for c in self.coords.sorted()],
            "weights": {_cell_key(c): list(x) for c, x in sorted(self.weights.items())},
            "unexpected_zeros": [list(c) for c in self.unexpected_zeros.sorted()],
            "in_dominant_piece": {_cell_key(c): c in self.in_dominant_piece
                                  for c in self.unexpected_zeros.sorted()},
            "kl_dim": self.kl_dim,
            "cone_dim": self.cone_dim,
            "complexity": self.complexity,
            "is_toric": self.is_toric,
            "is_forest_certified": self.is_forest_certified,
            "primitive_binomials": self.binomial_cells(),
            "neighborhood_complexity": self.neighborhood_complexity,
        }
        if graphs:
            out["graphs"] = {
                "G_tilde": self.G_tilde.to_json()["edges"],
                "G": self.G.to_json()["edges"],
                "Gamma_tilde": self.Gamma_tilde.to_json()["edges"],
                "Gamma": self.Gamma.to_json()["edges"],
            }
        return out

    def dot(self, which: str = "G") -> str:
        g = {"G_tilde": self.G_tilde, "G": self.G,
             "Gamma_tilde": self.Gamma_tilde, "Gamma": self.Gamma}[which]
        return to_dot(g, which)


def analyze_kl(v: Permutation, w: Permutation, binomials: bool = True) -> KlReport:
    _require_leq(v, w)
    n = v.n
    weights = kl_weights(v, w)
    coords = opposite_rothe(v)
    zeros = unexpected_zeros(v, w)
    tilde = graph_tilde_G(v, w)
    g = graph_G(v, w)
    by_components = n - len(weak_components(g))
    by_rank = exact_rank(list(weights.values()))
    if by_components != by_rank:
        raise InconsistencyError(
            f"component count gives {by_components}, weight rank gives {by_rank} for v={v}, w={w}")
    gamma_tilde = graph_tilde_Gamma(v, w)
    bins = tuple(cycle_binomial(tilde, c) for c in primitive_cycles(tilde)) if binomials else ()
    return KlReport(
        v=v, w=w, coords=coords, weights=weights,
        unexpected_zeros=zeros,
        in_dominant_piece=zeros & dominant(w),
        G_tilde=tilde, G=g,
        Gamma_tilde=gamma_tilde,
        Gamma=_on_vertices(n, indecomposable_edges(gamma_tilde)),
        cone_dim=by_components,
        binomials=bins,
    )


def weight_cone(v: Permutation, w: Permutation) -> Cone:
    return Cone.of(v.n, kl_weights(v, w).values())


def weight_cone_dim(v: Permutation, w: Permutation) -> int:
    return cone_dim(weight_cone(v, w))
