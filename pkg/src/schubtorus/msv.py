"""
Torus action on matrix Schubert varieties.

``X_w`` (closure of ``B w B`` in ``n x n`` matrices) splits as ``Y_w x C^d``.
The weight cone of ``T x T`` on ``Y_w`` is the edge cone of a bipartite graph
``G^w`` with one edge ``a -> b̄`` per cell ``(a, b)`` of ``L(w)``, and

    complexity(Y_w) = |L'(w)| - dim(edge cone of G^w).
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import (CellSet, L, Lprime, dominant, essential_set, hooks, opposite_rothe,
                      rothe, sw_region)
from .digraph import Bar, Digraph, edge_cone_dim, to_dot
from .perm import Permutation

__all__ = ["MsvReport", "graph_Gw", "analyze_msv", "is_toric_by_hooks"]


def graph_Gw(w: Permutation) -> Digraph:
    """Bipartite graph of ``L(w)``: rows ``a`` point to barred columns ``b̄``.

    Only rows and columns that meet ``L(w)`` are vertices.
    """
    cells = L(w).sorted()
    rows = sorted({a for a, _ in cells})
    cols = sorted({b for _, b in cells})
    return Digraph(tuple(rows) + tuple(Bar(b) for b in cols),
                   tuple((a, Bar(b)) for a, b in cells))


def is_toric_by_hooks(w: Permutation) -> bool:
    return hooks(Lprime(w)) is not None


@dataclass(frozen=True)
class MsvReport:
    w: Permutation
    rothe: CellSet
    opposite_rothe: CellSet
    essential_set: CellSet
    dominant: CellSet
    sw_region: CellSet
    L: CellSet
    Lprime: CellSet
    graph: Digraph
    cone_dim: int
    hooks: tuple[CellSet, ...] | None

    @property
    def n(self) -> int:
        return self.w.n

    @property
    def dim_ambient_msv(self) -> int:
        return self.n ** 2 - len(self.opposite_rothe)

    @property
    def dim_Yw(self) -> int:
        return len(self.Lprime)

    @property
    def free_dim(self) -> int:
        """``d`` in ``X_w = Y_w x C^d``."""
        return self.n ** 2 - len(self.sw_region)

    @property
    def complexity(self) -> int:
        return self.dim_Yw - self.cone_dim

    @property
    def is_toric(self) -> bool:
        return self.complexity == 0

    @property
    def is_toric_by_hooks(self) -> bool:
        return self.hooks is not None

    def to_json(self, with_dot: bool = False) -> dict:
        diagrams = {
            "rothe": self.rothe, "opposite_rothe": self.opposite_rothe,
            "essential_set": self.essential_set, "dominant": self.dominant,
            "sw_region": self.sw_region, "L": self.L, "Lprime": self.Lprime,
        }
        out = {
            "kind": "msv",
            "w": self.w.to_json(),
            "n": self.n,
            "length": len(self.rothe),
            "dim_ambient_msv": self.dim_ambient_msv,
            "free_dim": self.free_dim,
            "dim_Yw": self.dim_Yw,
            "cone_dim": self.cone_dim,
            "complexity": self.complexity,
            "is_toric": self.is_toric,
            "hook_classification": {
                "is_disjoint_hooks": self.is_toric_by_hooks,
                "hooks": None if self.hooks is None else [h.to_json()["cells"] for h in self.hooks],
            },
            "diagrams": {k: v.to_json() for k, v in diagrams.items()},
            "sizes": {k: len(v) for k, v in diagrams.items()},
            "graph": self.graph.to_json(),
        }
        if with_dot:
            out["dot"] = to_dot(self.graph, "Gw")
        return out


def analyze_msv(w: Permutation) -> MsvReport:
    g = graph_Gw(w)
    lp = Lprime(w)
    hs = hooks(lp)
    report = MsvReport(
        w=w,
        rothe=rothe(w),
        opposite_rothe=opposite_rothe(w),
        essential_set=essential_set(w),
        dominant=dominant(w),
        sw_region=sw_region(w),
        L=L(w),
        Lprime=lp,
        graph=g,
        cone_dim=edge_cone_dim(g),
        hooks=None if hs is None else tuple(hs),
    )
    return report
