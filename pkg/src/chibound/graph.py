"""Immutable simple graphs on vertices 0..n-1 with bitset adjacency."""
from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

from .bits import from_iter, iter_bits, to_tuple
from .errors import GraphError


class Graph:
    """A simple undirected graph.

    ``adj[v]`` is an int whose set bits are the neighbours of ``v``. Instances
    are never mutated after construction, so they can be shared freely.
    """

    __slots__ = ("n", "adj", "edge_count")

    def __init__(self, n: int, adj: Sequence[int]):
        if len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows, expected {n}")
        self.n = n
        self.adj = tuple(adj)
        total = 0
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            if row >> n:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            total += row.bit_count()
        for v, row in enumerate(self.adj):
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"adjacency is not symmetric at ({v}, {u})")
        self.edge_count = total // 2

    def __setattr__(self, name, value):
        if hasattr(self, "edge_count"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"

    @property
    def m(self) -> int:
        return self.edge_count

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        return to_tuple(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def induced_subgraph(self, vertices: Iterable[int] | int) -> tuple["Graph", tuple[int, ...]]:
        """Return ``G[S]`` relabelled to 0..|S|-1 plus the original labels in order."""
        mask = vertices if isinstance(vertices, int) else from_iter(vertices)
        labels = to_tuple(mask)
        index = {v: i for i, v in enumerate(labels)}
        adj = []
        for v in labels:
            row = 0
            for u in iter_bits(self.adj[v] & mask):
                row |= 1 << index[u]
            adj.append(row)
        return Graph(len(labels), adj), labels

    def complement(self) -> "Graph":
        full = self.all_vertices
        return Graph(self.n, [full & ~row & ~(1 << v) for v, row in enumerate(self.adj)])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of 0..n-1")
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def is_clique(self, mask: int) -> bool:
        for v in iter_bits(mask):
            if (self.adj[v] | (1 << v)) & mask != mask:
                return False
        return True

    def is_independent(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in iter_bits(mask))


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from an edge sequence (duplicates are merged)."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    adj = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge {(u, v)} is a self-loop")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


# -- named graphs -------------------------------------------------------------

def path(t: int) -> Graph:
    _need(t >= 1, "path needs t >= 1")
    return build_graph(t, [(i, i + 1) for i in range(t - 1)])


def cycle(t: int) -> Graph:
    _need(t >= 3, "cycle needs t >= 3")
    return build_graph(t, [(i, (i + 1) % t) for i in range(t)])


def complete(t: int) -> Graph:
    _need(t >= 1, "complete needs t >= 1")
    return build_graph(t, [(i, j) for i in range(t) for j in range(i + 1, t)])


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, "complete_bipartite needs a, b >= 1")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def prism(omega: int) -> Graph:
    """K_omega x K_2; vertices 0..omega-1 form one clique row, omega..2*omega-1 the other."""
    _need(omega >= 1, "prism needs omega >= 1")
    return cartesian_product(complete(2), complete(omega))


BULL = ((0, 1), (1, 2), (0, 2), (1, 3), (2, 4))
DIAMOND = ((0, 1), (1, 2), (2, 3), (3, 0), (1, 3))
PAW = ((0, 1), (1, 2), (2, 0), (2, 3))


def grotzsch() -> Graph:
    # 0..4 outer 5-cycle, 5..9 the inner ring (5+i sees outer i-1 and i+1), 10 the hub
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for i in range(5):
        edges += [(5 + i, (i - 1) % 5), (5 + i, (i + 1) % 5), (5 + i, 10)]
    return build_graph(11, edges)


_FIXED = {
    "bull": lambda: build_graph(5, BULL),
    "diamond": lambda: build_graph(4, DIAMOND),
    "paw": lambda: build_graph(4, PAW),
    "grotzsch": grotzsch,
}
_PARAMETRIC = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "prism": (prism, 1),
    "complete_bipartite": (complete_bipartite, 2),
}


def named_graph(name: str, *params: int) -> Graph:
    """Build a named graph.

    ``name`` is one of bull, diamond, paw, grotzsch, path, cycle, complete,
    prism, complete_bipartite. Parameters may be passed positionally or inline,
    so ``named_graph("cycle", 5)`` and ``named_graph("cycle(5)")`` agree.
    """
    match = re.fullmatch(r"\s*([a-z_]+)\s*(?:\(([\d,\s]*)\))?\s*", name.lower())
    if not match:
        raise GraphError(f"cannot parse graph name {name!r}")
    key = match.group(1)
    if key == "groetzsch":
        key = "grotzsch"
    if match.group(2):
        params = tuple(int(p) for p in match.group(2).split(",") if p.strip()) + params
    if key in _FIXED:
        if params:
            raise GraphError(f"{key} takes no parameters")
        return _FIXED[key]()
    if key in _PARAMETRIC:
        builder, arity = _PARAMETRIC[key]
        if len(params) != arity:
            raise GraphError(f"{key} takes {arity} parameter(s), got {len(params)}")
        return builder(*params)
    raise GraphError(f"unknown graph name {key!r}")


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise GraphError(message)


# -- products, components, distances -----------------------------------------

def cartesian_product(G: Graph, H: Graph) -> Graph:
    """G x H with vertex (a, u) stored at index a * |H| + u."""
    if G.n == 0 or H.n == 0:
        raise GraphError("cartesian product needs two non-empty graphs")
    h = H.n
    edges = []
    for a in range(G.n):
        for u, v in H.edges():
            edges.append((a * h + u, a * h + v))
    for a, b in G.edges():
        for u in range(h):
            edges.append((a * h + u, b * h + u))
    return build_graph(G.n * h, edges)


def component_masks(G: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``G[within]`` as bitmasks, ordered by smallest vertex."""
    remaining = G.all_vertices if within is None else within
    out = []
    while remaining:
        frontier = remaining & -remaining
        comp = frontier
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= G.adj[v]
            frontier = grow & remaining & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def connected_components(G: Graph) -> list[tuple[int, ...]]:
    return [to_tuple(c) for c in component_masks(G)]


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(component_masks(G)) == 1


def distance_layers(G: Graph, sources: int) -> list[int]:
    """BFS from a source mask; entry ``i`` is the mask of vertices at distance ``i``."""
    if not sources:
        raise GraphError("BFS needs a non-empty source set")
    layers = [sources]
    seen = sources
    frontier = sources
    while True:
        grow = 0
        for v in iter_bits(frontier):
            grow |= G.adj[v]
        frontier = grow & ~seen
        if not frontier:
            return layers
        seen |= frontier
        layers.append(frontier)


def bfs_layers(G: Graph, S: Iterable[int]) -> list[float]:
    """Distance from the set ``S`` to every vertex; ``math.inf`` if unreachable."""
    mask = from_iter(S)
    if mask >> G.n:
        raise GraphError("source set contains a vertex outside the graph")
    dist: list[float] = [math.inf] * G.n
    for d, layer in enumerate(distance_layers(G, mask)):
        for v in iter_bits(layer):
            dist[v] = d
    return dist


__all__ = [
    "Graph", "build_graph", "named_graph", "cartesian_product", "connected_components",
    "component_masks", "is_connected", "bfs_layers", "distance_layers", "path", "cycle",
    "complete", "complete_bipartite", "prism", "grotzsch",
]
