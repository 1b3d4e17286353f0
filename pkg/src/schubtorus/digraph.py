"""
Directed graphs and their edge cones.

An edge ``(x -> y)`` contributes the weight ``e_x - e_y`` to the edge cone.
Vertices are plain integers or :class:`Bar` (the barred column vertices of a
bipartite row/column graph).  Vertex and edge order are kept exactly as given
so that DOT output is byte-stable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Union

from .cone import exact_rank
from .errors import CyclicGraph, SchubTorusError

__all__ = [
    "Bar", "Vertex", "Edge", "Digraph", "Binomial", "vertex_key", "vertex_json",
    "weak_components", "edge_cone_dim", "incidence_matrix", "incidence_rank",
    "is_acyclic", "is_forest", "has_directed_path", "indecomposable_edges",
    "primitive_cycles", "cycle_binomial", "to_dot",
]


@dataclass(frozen=True, order=True)
class Bar:
    """Column vertex ``k̄`` of a bipartite graph."""

    k: int

    def __str__(self) -> str:
        return f"b{self.k}"


Vertex = Union[int, Bar]
Edge = tuple[Vertex, Vertex]


def vertex_key(x: Vertex) -> tuple[int, int]:
    """Sort key: unbarred vertices first, then by label."""
    return (1, x.k) if isinstance(x, Bar) else (0, x)


def vertex_json(x: Vertex) -> int | str:
    return str(x) if isinstance(x, Bar) else x


class GraphError(SchubTorusError, ValueError):
    pass


@dataclass(frozen=True)
class Digraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        vs = tuple(self.vertices)
        es = tuple((a, b) for a, b in self.edges)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)
        if len(set(vs)) != len(vs):
            raise GraphError("repeated vertex")
        vset = set(vs)
        for a, b in es:
            if a not in vset or b not in vset:
                raise GraphError(f"edge {(a, b)} has an endpoint outside the vertex list")
            if a == b:
                raise GraphError(f"loop at {a}")
        if len(set(es)) != len(es):
            raise GraphError("multi-edges are not allowed")

    @classmethod
    def of(cls, vertices: Iterable[Vertex], edges: Iterable[Edge]) -> Digraph:
        return cls(tuple(vertices), tuple(edges))

    @classmethod
    def from_edges(cls, edges: Iterable[Edge]) -> Digraph:
        """Vertices are the edge endpoints, sorted."""
        edges = list(edges)
        vs = sorted({x for e in edges for x in e}, key=vertex_key)
        return cls(tuple(vs), tuple(edges))

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def successors(self) -> dict[Vertex, list[Vertex]]:
        out: dict[Vertex, list[Vertex]] = {x: [] for x in self.vertices}
        for a, b in self.edges:
            out[a].append(b)
        return out

    def neighbours(self) -> dict[Vertex, set[Vertex]]:
        out: dict[Vertex, set[Vertex]] = {x: set() for x in self.vertices}
        for a, b in self.edges:
            out[a].add(b)
            out[b].add(a)
        return out

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges, key=lambda e: (vertex_key(e[0]), vertex_key(e[1])))

    def to_json(self) -> dict:
        return {
            "vertices": [vertex_json(x) for x in self.vertices],
            "edges": [[vertex_json(a), vertex_json(b)] for a, b in self.sorted_edges()],
        }


def weak_components(g: Digraph) -> list[list[Vertex]]:
    """Connected components of the underlying undirected graph, in vertex order."""
    nbrs = g.neighbours()
    seen: set[Vertex] = set()
    out = []
    for start in g.vertices:
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in nbrs[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        order = {x: i for i, x in enumerate(g.vertices)}
        out.append(sorted(comp, key=order.__getitem__))
    return out


def edge_cone_dim(g: Digraph) -> int:
    """``|V| - #components``; isolated vertices are their own components."""
    return len(g.vertices) - len(weak_components(g))


def incidence_matrix(g: Digraph) -> list[list[int]]:
    """Vertex-by-edge matrix, ``+1`` at the tail and ``-1`` at the head."""
    index = {x: i for i, x in enumerate(g.vertices)}
    m = [[0] * len(g.edges) for _ in g.vertices]
    for j, (a, b) in enumerate(g.edges):
        m[index[a]][j] = 1
        m[index[b]][j] = -1
    return m


def incidence_rank(g: Digraph) -> int:
    return exact_rank(incidence_matrix(g))


def _topological_order(g: Digraph) -> list[Vertex] | None:
    indeg = {x: 0 for x in g.vertices}
    for _, b in g.edges:
        indeg[b] += 1
    succ = g.successors()
    queue = deque(x for x in g.vertices if indeg[x] == 0)
    order = []
    while queue:
        x = queue.popleft()
        order.append(x)
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    return order if len(order) == len(g.vertices) else None


def is_acyclic(g: Digraph) -> bool:
    return _topological_order(g) is not None


def is_forest(g: Digraph) -> bool:
    """No cycle in the underlying undirected graph."""
    return len(g.edges) == edge_cone_dim(g)


def has_directed_path(g: Digraph, x: Vertex, y: Vertex, skip: Edge | None = None) -> bool:
    """Directed path from ``x`` to ``y`` (length >= 0), optionally avoiding one edge."""
    succ = g.successors()
    seen = {x}
    stack = [x]
    while stack:
        a = stack.pop()
        if a == y:
            return True
        for b in succ[a]:
            if (a, b) != skip and b not in seen:
                seen.add(b)
                stack.append(b)
    return False


def indecomposable_edges(g: Digraph) -> list[Edge]:
    """Edges ``(x -> y)`` with no other directed ``x -> y`` path."""
    if not is_acyclic(g):
        raise CyclicGraph("indecomposable edges need an acyclic graph")
    return [e for e in g.edges if not has_directed_path(g, e[0], e[1], skip=e)]


def primitive_cycles(g: Digraph) -> list[tuple[Vertex, ...]]:
    """Chordless cycles of the underlying undirected graph.

    Each cycle starts at its smallest vertex and continues towards the
    smaller of its two cycle neighbours.  Exhaustive DFS over induced paths.
    """
    nbrs = g.neighbours()
    rank_of = {x: i for i, x in enumerate(sorted(g.vertices, key=vertex_key))}
    found: list[tuple[Vertex, ...]] = []

    def extend(path: list[Vertex], on_path: set[Vertex]) -> None:
        s, last = path[0], path[-1]
        for u in sorted(nbrs[last], key=rank_of.__getitem__):
            if rank_of[u] <= rank_of[s] or u in on_path:
                continue
            if any(u in nbrs[p] for p in path[1:-1]):
                continue
            if s in nbrs[u]:
                if len(path) >= 2 and rank_of[path[1]] < rank_of[u]:
                    found.append(tuple(path + [u]))
                continue
            on_path.add(u)
            path.append(u)
            extend(path, on_path)
            path.pop()
            on_path.discard(u)

    for s in sorted(g.vertices, key=vertex_key):
        for v1 in sorted(nbrs[s], key=rank_of.__getitem__):
            if rank_of[v1] > rank_of[s]:
                extend([s, v1], {s, v1})
    return found


@dataclass(frozen=True)
class Binomial:
    """``prod(plus) - prod(minus)`` over edge variables; empty product is 1."""

    plus: tuple[Edge, ...]
    minus: tuple[Edge, ...]

    def exponents(self, g: Digraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
        index = {e: i for i, e in enumerate(g.edges)}
        p = [0] * len(g.edges)
        q = [0] * len(g.edges)
        for e in self.plus:
            p[index[e]] += 1
        for e in self.minus:
            q[index[e]] += 1
        return tuple(p), tuple(q)


def cycle_binomial(g: Digraph, cycle: tuple[Vertex, ...]) -> Binomial:
    """Split the cycle's edges by agreement with the traversal direction.

    The traversal follows ``cycle`` as listed (see :func:`primitive_cycles`),
    so the binomial is fixed up to a global sign.
    """
    edges = g.edge_set()
    plus, minus = [], []
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        if (a, b) in edges:
            plus.append((a, b))
        elif (b, a) in edges:
            minus.append((b, a))
        else:
            raise GraphError(f"{a} and {b} are not adjacent")
    return Binomial(tuple(plus), tuple(minus))


def _dot_id(x: Vertex) -> str:
    return f'"{x}"'


def to_dot(g: Digraph, name: str = "G") -> str:
    """Graphviz text: one line per vertex, then one per edge, in listed order."""
    lines = [f"digraph {name} {{"]
    for x in g.vertices:
        if isinstance(x, Bar):
            lines.append(f"  {_dot_id(x)} [shape=box];")
        else:
            lines.append(f"  {_dot_id(x)} [shape=circle];")
    for a, b in g.edges:
        lines.append(f"  {_dot_id(a)} -> {_dot_id(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
