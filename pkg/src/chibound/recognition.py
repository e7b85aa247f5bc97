"""Forbidden induced subgraph detection and class membership.

The fast detectors (triangle, diamond, paw, bull, induced paths, holes) work
directly on bitsets; ``contains_induced`` is the generic backtracking search
they are cross-checked against. Witnesses are sorted vertex tuples, except
for holes and paths which are returned in traversal order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .bits import iter_bits, lowest, to_tuple
from .errors import DeskLimitExceeded
from .graph import Graph, component_masks, named_graph
from .oracle import PERFECT_LIMIT, clique_number, desk_limit


def iter_induced(G: Graph, pattern: Graph) -> Iterator[tuple[int, ...]]:
    """Every induced embedding of ``pattern``; ``emb[i]`` is the image of pattern vertex ``i``."""
    k = pattern.n
    if k == 0:
        yield ()
        return
    if k > G.n:
        return
    # visit pattern vertices so each (where possible) has an earlier neighbour
    order = []
    seen = 0
    for comp in component_masks(pattern):
        start = lowest(comp)
        queue = [start]
        seen |= 1 << start
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in iter_bits(pattern.adj[v] & ~seen):
                seen |= 1 << u
                queue.append(u)
    full = G.all_vertices
    image = [0] * k

    def extend(pos: int, used: int) -> Iterator[tuple[int, ...]]:
        if pos == k:
            yield tuple(image)
            return
        p = order[pos]
        cand = full & ~used
        for q in order[:pos]:
            row = G.adj[image[q]]
            cand &= row if pattern.adj[p] >> q & 1 else ~row
            if not cand:
                return
        for v in iter_bits(cand):
            image[p] = v
            yield from extend(pos + 1, used | (1 << v))

    yield from extend(0, 0)


def contains_induced(G: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """Find an induced copy of ``pattern`` in ``G``.

    Returns ``emb`` with ``emb[i]`` the image of pattern vertex ``i``, or None
    when exhaustive search finds no embedding.
    """
    return next(iter_induced(G, pattern), None)


def count_induced(G: Graph, pattern: Graph) -> int:
    """Number of vertex sets inducing a copy of ``pattern``."""
    return len({frozenset(e) for e in iter_induced(G, pattern)})


# -- specialised detectors -----------------------------------------------------

def iter_triangles(G: Graph) -> Iterator[tuple[int, int, int]]:
    for a in range(G.n):
        higher = G.adj[a] >> (a + 1) << (a + 1)
        for b in iter_bits(higher):
            for c in iter_bits(G.adj[a] & G.adj[b] & ~((1 << (b + 1)) - 1)):
                yield a, b, c


def count_triangles(G: Graph) -> int:
    total = 0
    for a in range(G.n):
        higher = G.adj[a] >> (a + 1) << (a + 1)
        for b in iter_bits(higher):
            total += (G.adj[a] & G.adj[b] & ~((1 << (b + 1)) - 1)).bit_count()
    return total


def find_triangle(G: Graph) -> tuple[int, ...] | None:
    return next(iter_triangles(G), None)


def find_diamond(G: Graph) -> tuple[int, ...] | None:
    for u, v in G.edges():
        common = G.adj[u] & G.adj[v]
        for a in iter_bits(common):
            rest = common & ~G.adj[a] & ~((1 << (a + 1)) - 1)
            if rest:
                return tuple(sorted((u, v, a, lowest(rest))))
    return None


def find_paw(G: Graph) -> tuple[int, ...] | None:
    for a, b, c in iter_triangles(G):
        tri = (1 << a) | (1 << b) | (1 << c)
        for x, y, z in ((a, b, c), (b, a, c), (c, a, b)):
            pend = G.adj[x] & ~G.adj[y] & ~G.adj[z] & ~tri
            if pend:
                return tuple(sorted((a, b, c, lowest(pend))))
    return None


def find_bull(G: Graph) -> tuple[int, ...] | None:
    """Triangle {x, y, z} with pendants p at x and q at y, p and q non-adjacent."""
    for a, b, c in iter_triangles(G):
        tri = (1 << a) | (1 << b) | (1 << c)
        for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
            P = G.adj[x] & ~G.adj[y] & ~G.adj[z] & ~tri
            if not P:
                continue
            Q = G.adj[y] & ~G.adj[x] & ~G.adj[z] & ~tri
            for p in iter_bits(P):
                q_ok = Q & ~G.adj[p] & ~(1 << p)
                if q_ok:
                    return tuple(sorted((a, b, c, p, lowest(q_ok))))
    return None


def _induced_paths(G: Graph, t: int) -> Iterator[tuple[int, ...]]:
    """Every induced path on exactly ``t`` vertices, once per direction."""
    path = []

    def grow(last: int, used: int, blocked: int) -> Iterator[tuple[int, ...]]:
        if len(path) == t:
            yield tuple(path)
            return
        for v in iter_bits(G.adj[last] & ~blocked & ~used):
            path.append(v)
            yield from grow(v, used | (1 << v), blocked | G.adj[last] | (1 << last))
            path.pop()

    for s in range(G.n):
        path.append(s)
        yield from grow(s, 1 << s, 0)
        path.pop()


def find_induced_path(G: Graph, t: int) -> tuple[int, ...] | None:
    """An induced path on ``t`` vertices in traversal order, or None."""
    if t <= 0:
        return ()
    return next(_induced_paths(G, t), None)


def longest_induced_path(G: Graph, cap: int) -> tuple[int, tuple[int, ...]]:
    """Largest ``t <= cap`` with an induced P_t, with a witness path."""
    best: tuple[int, ...] = ()
    path: list[int] = []

    def grow(last: int, used: int, blocked: int) -> bool:
        nonlocal best
        if len(path) > len(best):
            best = tuple(path)
            if len(best) >= cap:
                return True
        for v in iter_bits(G.adj[last] & ~blocked & ~used):
            path.append(v)
            if grow(v, used | (1 << v), blocked | G.adj[last] | (1 << last)):
                return True
            path.pop()
        return False

    for s in range(G.n):
        path.append(s)
        if grow(s, 1 << s, 0):
            break
        path.pop()
    return len(best), best


def find_induced_cycle(G: Graph, length: int) -> tuple[int, ...] | None:
    """An induced (chordless) cycle on exactly ``length >= 4`` vertices, in cycle order."""
    if length < 4 or length > G.n:
        return None
    path: list[int] = []

    def grow(start: int, last: int, used: int, blocked: int) -> bool:
        # blocked: closed neighbourhoods of interior vertices (all but start and last)
        size = len(path)
        cand = G.adj[last] & ~used & ~blocked & ~((1 << (start + 1)) - 1)
        if size == length - 1:
            cand &= G.adj[start]
            if cand:
                path.append(lowest(cand))
                return True
            return False
        cand &= ~G.adj[start]
        for v in iter_bits(cand):
            path.append(v)
            inner = blocked | (G.adj[last] | (1 << last) if size > 1 else 0)
            if grow(start, v, used | (1 << v), inner):
                return True
            path.pop()
        return False

    for s in range(G.n):
        path.append(s)
        for v in iter_bits(G.adj[s] & ~((1 << (s + 1)) - 1)):
            path.append(v)
            if grow(s, v, (1 << s) | (1 << v), 0):
                return tuple(path)
            path.pop()
        path.pop()
    return None


def find_odd_hole(G: Graph) -> tuple[int, ...] | None:
    """Shortest odd hole (induced cycle of odd length >= 5), in cycle order."""
    for length in range(5, G.n + 1, 2):
        cyc = find_induced_cycle(G, length)
        if cyc is not None:
            return cyc
    return None


def iter_induced_cycles(G: Graph, min_length: int = 4) -> Iterator[tuple[int, ...]]:
    """Every induced cycle with at least ``min_length`` vertices, once each.

    Each cycle starts at its smallest vertex and is oriented so its second
    vertex is smaller than its last.
    """
    path: list[int] = []

    def grow(start, last, used, blocked):
        size = len(path)
        cand = G.adj[last] & ~used & ~blocked & ~((1 << (start + 1)) - 1)
        for v in iter_bits(cand):
            closes = G.adj[v] >> start & 1
            if closes:
                if size + 1 >= min_length and v > path[1]:
                    yield tuple(path) + (v,)
                continue
            path.append(v)
            inner = blocked | (G.adj[last] | (1 << last) if size > 1 else 0)
            yield from grow(start, v, used | (1 << v), inner)
            path.pop()

    for s in range(G.n):
        path.append(s)
        for v in iter_bits(G.adj[s] & ~((1 << (s + 1)) - 1)):
            path.append(v)
            yield from grow(s, v, (1 << s) | (1 << v), 0)
            path.pop()
        path.pop()


@dataclass(frozen=True)
class PerfectVerdict:
    perfect: bool
    kind: str | None = None  # "odd_hole" or "odd_antihole"
    witness: tuple[int, ...] | None = None

    def __bool__(self):
        return self.perfect


def is_perfect(G: Graph, limit: int | None = None) -> PerfectVerdict:
    """Strong-perfect-graph check: no odd hole in G or in its complement."""
    cap = limit if limit is not None else desk_limit(PERFECT_LIMIT)
    if G.n > cap:
        raise DeskLimitExceeded("is_perfect", G.n, cap)
    hole = find_odd_hole(G)
    if hole is not None:
        return PerfectVerdict(False, "odd_hole", hole)
    antihole = find_odd_hole(G.complement())
    if antihole is not None:
        return PerfectVerdict(False, "odd_antihole", antihole)
    return PerfectVerdict(True)


def is_perfect_within(G: Graph, within: int, limit: int | None = None) -> PerfectVerdict:
    """``is_perfect`` on ``G[within]`` with the witness mapped back to G's labels."""
    H, labels = G.induced_subgraph(within)
    verdict = is_perfect(H, limit)
    if verdict.witness is None:
        return verdict
    return PerfectVerdict(False, verdict.kind, tuple(labels[i] for i in verdict.witness))


def is_complete_multipartite(G: Graph) -> list[tuple[int, ...]] | None:
    """Parts of G if non-adjacency is an equivalence relation, else None."""
    comp = G.complement()
    parts = component_masks(comp)
    for part in parts:
        if not comp.is_clique(part):
            return None
    return [to_tuple(p) for p in parts]


def is_disjoint_union_of_cliques(G: Graph, within: int | None = None) -> bool:
    return all(G.is_clique(c) for c in component_masks(G, within))


# -- class report -------------------------------------------------------------

@dataclass
class ClassReport:
    n: int
    m: int
    bull_free: bool
    diamond_free: bool
    paw_free: bool
    triangle_count: int
    path_probe: int
    pt_free: bool
    longest_induced_path: int
    omega: int
    max_degree: int
    witnesses: dict[str, tuple[int, ...]] = field(default_factory=dict)

    @property
    def triangle_free(self) -> bool:
        return self.triangle_count == 0

    @property
    def bull_diamond_free(self) -> bool:
        return self.bull_free and self.diamond_free

    def free_of_path(self, t: int) -> bool | None:
        """P_t-freeness when decidable from this report, else None."""
        if t <= self.longest_induced_path:
            return False
        if self.longest_induced_path < self.path_probe:
            return True
        return None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "bull_free": self.bull_free,
            "diamond_free": self.diamond_free,
            "paw_free": self.paw_free,
            "triangle_free": self.triangle_free,
            "triangle_count": self.triangle_count,
            "path_probe": self.path_probe,
            "pt_free": self.pt_free,
            "longest_induced_path": self.longest_induced_path,
            "omega": self.omega,
            "max_degree": self.max_degree,
            "witnesses": {k: list(v) for k, v in sorted(self.witnesses.items())},
        }


def classify(G: Graph, path_probe: int = 7) -> ClassReport:
    """Run every detector; ``path_probe`` is the t for which P_t-freeness is decided."""
    if path_probe < 2:
        raise ValueError("path_probe must be at least 2")
    witnesses = {}
    bull = find_bull(G)
    diamond = find_diamond(G)
    paw = find_paw(G)
    tri = find_triangle(G)
    longest, lpath = longest_induced_path(G, path_probe)
    for name, w in (("bull", bull), ("diamond", diamond), ("paw", paw), ("triangle", tri)):
        if w is not None:
            witnesses[name] = tuple(sorted(w))
    if longest >= path_probe:
        witnesses[f"P{path_probe}"] = lpath
    return ClassReport(
        n=G.n, m=G.m,
        bull_free=bull is None, diamond_free=diamond is None, paw_free=paw is None,
        triangle_count=count_triangles(G),
        path_probe=path_probe, pt_free=longest < path_probe, longest_induced_path=longest,
        omega=clique_number(G), max_degree=G.max_degree(), witnesses=witnesses,
    )


PATTERNS = {
    "bull": find_bull,
    "diamond": find_diamond,
    "paw": find_paw,
    "triangle": find_triangle,
}


def find_pattern(G: Graph, name: str) -> tuple[int, ...] | None:
    """Sorted witness for a named forbidden pattern (bull, diamond, paw, triangle, P5, P6, ...)."""
    key = name.lower()
    if key in PATTERNS:
        w = PATTERNS[key](G)
    elif key.startswith("p") and key[1:].isdigit():
        w = find_induced_path(G, int(key[1:]))
    else:
        w = contains_induced(G, named_graph(key))
    return None if w is None else tuple(sorted(w))
