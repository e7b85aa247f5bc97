"""Exact ground truth: maximum clique, chromatic number, coloring checks.

Everything here is exponential in the worst case and meant for desk-scale
graphs (tens of vertices). ``chromatic_number_exact`` refuses graphs above a
size cap; set ``CHIBOUND_DESK_LIMIT`` or pass ``limit=`` to change it.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .bits import iter_bits, lowest, to_tuple
from .errors import DeskLimitExceeded
from .graph import Graph, component_masks

CHROMATIC_LIMIT = 40
PERFECT_LIMIT = 24


def desk_limit(default: int) -> int:
    value = os.environ.get("CHIBOUND_DESK_LIMIT")
    return int(value) if value else default


@dataclass(frozen=True)
class BoundCertificate:
    """Which result justified a coloring and the bound it promises."""

    theorem: str
    claimed_bound: int
    omega: int
    k_used: int | None = None
    parts: tuple["BoundCertificate", ...] = ()
    extension_fallbacks: int = 0

    def to_dict(self) -> dict:
        out = {"theorem": self.theorem, "claimed_bound": self.claimed_bound,
               "omega": self.omega, "k_used": self.k_used}
        if self.extension_fallbacks:
            out["extension_fallbacks"] = self.extension_fallbacks
        if self.parts:
            out["parts"] = [p.to_dict() for p in self.parts]
        return out


@dataclass(frozen=True)
class Coloring:
    """Colors ``1..palette`` per vertex; 0 marks an uncoloured vertex.

    ``palette`` is the declared number of available colors and is always at
    least the largest color used.
    """

    assignment: tuple[int, ...]
    palette: int
    certificate: BoundCertificate | None = None

    def __post_init__(self):
        top = max(self.assignment, default=0)
        if top > self.palette:
            raise ValueError(f"color {top} used but palette is {self.palette}")
        if any(c < 0 for c in self.assignment):
            raise ValueError("colors must be positive (0 = uncoloured)")

    @classmethod
    def from_colors(cls, colors: Sequence[int] | Mapping[int, int], n: int | None = None,
                    palette: int | None = None, certificate: BoundCertificate | None = None):
        if isinstance(colors, Mapping):
            size = n if n is not None else (max(colors) + 1 if colors else 0)
            assignment = tuple(colors.get(v, 0) for v in range(size))
        else:
            assignment = tuple(colors)
        top = max(assignment, default=0)
        return cls(assignment, top if palette is None else palette, certificate)

    @property
    def num_colors(self) -> int:
        return len({c for c in self.assignment if c})

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def __len__(self):
        return len(self.assignment)


@dataclass
class ColoringCheck:
    monochromatic_edges: list[tuple[int, int]] = field(default_factory=list)
    uncolored: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.monochromatic_edges and not self.uncolored

    def __bool__(self):
        return self.ok


def verify_coloring(G: Graph, coloring: Coloring | Sequence[int]) -> ColoringCheck:
    """List every monochromatic edge and every uncoloured vertex."""
    colors = coloring.assignment if isinstance(coloring, Coloring) else tuple(coloring)
    check = ColoringCheck()
    for v in range(G.n):
        if v >= len(colors) or not colors[v]:
            check.uncolored.append(v)
    for u, v in G.edges():
        if u < len(colors) and v < len(colors) and colors[u] and colors[u] == colors[v]:
            check.monochromatic_edges.append((u, v))
    return check


# -- maximum clique -------------------------------------------------------------

def _color_bound(G: Graph, P: int) -> tuple[list[int], list[int]]:
    """Greedy sequential coloring of P; returns vertices and their color numbers, sorted by color."""
    order, bounds = [], []
    uncolored = P
    k = 0
    while uncolored:
        k += 1
        avail = uncolored
        while avail:
            v = lowest(avail)
            avail &= ~G.adj[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            bounds.append(k)
    return order, bounds


def clique_number(G: Graph, within: int | None = None) -> int:
    """Size of a largest clique of ``G[within]`` (branch and bound with coloring bounds)."""
    P = G.all_vertices if within is None else within
    best = 0

    def expand(size: int, P: int) -> None:
        nonlocal best
        order, bounds = _color_bound(G, P)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order[i]
            Q = P & G.adj[v]
            if Q:
                expand(size + 1, Q)
            elif size + 1 > best:
                best = size + 1
            P &= ~(1 << v)

    if P:
        expand(0, P)
    return best


def _first_clique_of_size(G: Graph, P: int, target: int) -> int:
    """Lexicographically first clique of ``target`` vertices inside P, as a mask (0 if none)."""

    def search(R: int, size: int, P: int) -> int:
        if size == target:
            return R
        while P:
            if size + P.bit_count() < target:
                return 0
            _, bounds = _color_bound(G, P)
            if size + bounds[-1] < target:
                return 0
            v = lowest(P)
            found = search(R | (1 << v), size + 1, P & G.adj[v] & ~((1 << (v + 1)) - 1))
            if found:
                return found
            P &= ~(1 << v)
        return 0

    return search(0, 0, P) if target else 0


def max_clique_mask(G: Graph, within: int | None = None) -> int:
    P = G.all_vertices if within is None else within
    if not P:
        return 0
    return _first_clique_of_size(G, P, clique_number(G, P))


def max_clique(G: Graph) -> tuple[int, ...]:
    """A maximum clique (the lexicographically first one), as a sorted tuple."""
    return to_tuple(max_clique_mask(G))


# -- coloring -------------------------------------------------------------------

def degeneracy_order(G: Graph, within: int | None = None) -> list[int]:
    """Smallest-last order: repeatedly strip a minimum-degree vertex (ties to lower index)."""
    remaining = G.all_vertices if within is None else within
    removed = []
    while remaining:
        v = min(iter_bits(remaining), key=lambda x: ((G.adj[x] & remaining).bit_count(), x))
        removed.append(v)
        remaining &= ~(1 << v)
    return removed[::-1]


def dsatur(G: Graph, within: int | None = None, precolored: Mapping[int, int] | None = None) -> dict[int, int]:
    """DSATUR greedy coloring of ``G[within]``; colors start at 1.

    Picks the uncoloured vertex whose neighbours use the most distinct colors,
    breaking ties by degree in the subgraph and then by index.
    """
    P = G.all_vertices if within is None else within
    color: dict[int, int] = dict(precolored or {})
    todo = P & ~sum(1 << v for v in color)
    forbidden = {v: 0 for v in iter_bits(todo)}
    for v, c in color.items():
        for u in iter_bits(G.adj[v] & todo):
            forbidden[u] |= 1 << c
    while todo:
        v = max(iter_bits(todo), key=lambda x: (forbidden[x].bit_count(),
                                                 (G.adj[x] & P).bit_count(), -x))
        c = 1
        while forbidden[v] >> c & 1:
            c += 1
        color[v] = c
        todo &= ~(1 << v)
        for u in iter_bits(G.adj[v] & todo):
            forbidden[u] |= 1 << c
    return color


def _exact_component(G: Graph, comp: int) -> dict[int, int]:
    """Optimal coloring of one component by DSATUR branch and bound.

    The maximum clique is precoloured 1..omega (symmetry breaking and lower
    bound); remaining vertices are branched in DSATUR order with ties broken
    by degeneracy rank, colors tried smallest first.
    """
    clique = max_clique_mask(G, comp)
    lower = clique.bit_count()
    pre = {v: i + 1 for i, v in enumerate(iter_bits(clique))}
    best = dsatur(G, comp, pre)
    best_k = max(best.values())
    if best_k <= lower:
        return best

    rank = {v: i for i, v in enumerate(degeneracy_order(G, comp))}
    vertices = to_tuple(comp)
    color = dict.fromkeys(vertices, 0)
    count = {v: {} for v in vertices}
    forb = dict.fromkeys(vertices, 0)
    uncolored = comp

    def assign(v, c):
        color[v] = c
        for u in iter_bits(G.adj[v] & comp):
            cnt = count[u].get(c, 0) + 1
            count[u][c] = cnt
            if cnt == 1:
                forb[u] |= 1 << c

    def unassign(v, c):
        color[v] = 0
        for u in iter_bits(G.adj[v] & comp):
            cnt = count[u][c] - 1
            count[u][c] = cnt
            if cnt == 0:
                forb[u] &= ~(1 << c)

    for v, c in pre.items():
        assign(v, c)
        uncolored &= ~(1 << v)

    found = None

    def search(uncolored: int, used: int) -> bool:
        nonlocal best_k, found
        if not uncolored:
            best_k = used
            found = dict(color)
            return best_k <= lower
        v = max(iter_bits(uncolored), key=lambda x: (forb[x].bit_count(), -rank[x]))
        rest = uncolored & ~(1 << v)
        for c in range(1, min(used + 1, best_k - 1) + 1):
            if forb[v] >> c & 1:
                continue
            assign(v, c)
            done = search(rest, max(used, c))
            unassign(v, c)
            if done:
                return True
        return False

    search(uncolored, lower)
    return found if found is not None else best


def chromatic_number_exact(G: Graph, limit: int | None = None) -> tuple[int, Coloring]:
    """Exact chromatic number and an optimal coloring.

    Runtime is exponential; graphs above the desk limit (default 40 vertices)
    are rejected with ``DeskLimitExceeded``.
    """
    cap = limit if limit is not None else desk_limit(CHROMATIC_LIMIT)
    if G.n > cap:
        raise DeskLimitExceeded("chromatic_number_exact", G.n, cap)
    colors = [0] * G.n
    for comp in component_masks(G):
        for v, c in _exact_component(G, comp).items():
            colors[v] = c
    k = max(colors, default=0)
    cert = BoundCertificate("exact", k, clique_number(G))
    return k, Coloring(tuple(colors), k, cert)


def is_k_colorable(G: Graph, k: int, limit: int | None = None) -> bool:
    return chromatic_number_exact(G, limit)[0] <= k


def exact_coloring_of(G: Graph, within: int) -> dict[int, int]:
    """Optimal coloring of ``G[within]`` keyed by original vertex labels (no size cap)."""
    out: dict[int, int] = {}
    for comp in component_masks(G, within):
        out.update(_exact_component(G, comp))
    return out
