"""Seeded samplers for hereditary classes and hand-built instances.

A sample is an Erdos-Renyi draw repaired to class membership: while some
forbidden pattern is present, delete the lexicographically smallest edge of
the first witness found (patterns are tried in the order given). This is not
uniform over the class. Randomness comes from splitmix64 so any
implementation of the same recipe reproduces the same graphs:

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2^64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB mod 2^64
    output z ^ (z >> 31)

A uniform draw in [0, 1) is ``(output >> 11) * 2^-53``; the edge {u, v},
u < v, is kept when its draw is below p, pairs visited in lexicographic order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bits import iter_bits
from .graph import Graph, build_graph, is_connected, named_graph, prism
from .recognition import count_induced, find_pattern

MASK64 = (1 << 64) - 1
FAMILY_NAMES = ("bull", "diamond", "triangle", "paw", "P5", "P6", "P7")


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * 2.0 ** -53


class SamplingFailed(RuntimeError):
    def __init__(self, spec: "SamplerSpec"):
        self.spec = spec
        super().__init__(f"no acceptable graph after {spec.max_attempts} attempts for {spec}; "
                         f"lower p or n")


def normalize_family(family: Iterable[str] | str) -> tuple[str, ...]:
    if isinstance(family, str):
        family = [f for f in family.split(",") if f.strip()]
    out = []
    for name in family:
        key = name.strip().lower()
        canon = {f.lower(): f for f in FAMILY_NAMES}.get(key)
        if canon is None:
            raise ValueError(f"unknown forbidden pattern {name!r}; choose from {', '.join(FAMILY_NAMES)}")
        if canon not in out:
            out.append(canon)
    return tuple(out)


@dataclass(frozen=True)
class SamplerSpec:
    n: int
    p: float
    family: tuple[str, ...] = ("bull", "diamond")
    seed: int = 0
    max_attempts: int = 100
    connect: bool = False
    clique: int = 0  # plant cliques of this size on random vertices before repair
    clique_count: int = 1
    model: str = "er"  # "er" or "blocks"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("p must lie in [0, 1]")
        if self.model not in ("er", "blocks"):
            raise ValueError(f"unknown model {self.model!r}; use er or blocks")
        if not 0 <= self.clique <= self.n:
            raise ValueError("planted clique size must lie in [0, n]")
        object.__setattr__(self, "family", normalize_family(self.family))


def er_edges(n: int, p: float, rng: SplitMix64) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]


def block_edges(n: int, p: float, max_block: int, rng: SplitMix64) -> list[tuple[int, int]]:
    """Random cliques of 1..max_block vertices glued pairwise with probability p.

    A glued pair gets one edge, or (one time in four) one vertex of the first
    block joined to all of the second. Labels are shuffled at the end.
    """
    blocks, i = [], 0
    while i < n:
        size = 1 + rng.next_u64() % max_block
        blocks.append(list(range(i, min(n, i + size))))
        i += size
    edges = [(u, v) for b in blocks for j, u in enumerate(b) for v in b[j + 1:]]
    for a in range(len(blocks)):
        for b in range(a + 1, len(blocks)):
            if rng.random() >= p:
                continue
            A, B = blocks[a], blocks[b]
            u = A[rng.next_u64() % len(A)]
            if rng.random() < 0.25:
                edges += [(u, v) for v in B]
            else:
                edges.append((u, B[rng.next_u64() % len(B)]))
    perm = list(range(n))
    for j in range(n - 1, 0, -1):
        r = rng.next_u64() % (j + 1)
        perm[j], perm[r] = perm[r], perm[j]
    return [tuple(sorted((perm[u], perm[v]))) for u, v in edges]


def planted_clique_edges(n: int, size: int, rng: SplitMix64) -> list[tuple[int, int]]:
    """Edges of a clique on ``size`` vertices chosen by a partial Fisher-Yates shuffle."""
    pool = list(range(n))
    for i in range(size):
        j = i + rng.next_u64() % (n - i)
        pool[i], pool[j] = pool[j], pool[i]
    chosen = sorted(pool[:size])
    return [(u, v) for i, u in enumerate(chosen) for v in chosen[i + 1:]]


def _witness(G: Graph, family: tuple[str, ...]) -> tuple[str, tuple[int, ...]] | None:
    for name in family:
        w = find_pattern(G, name)
        if w is not None:
            return name, w
    return None


def _smallest_edge(G: Graph, witness: tuple[int, ...]) -> tuple[int, int]:
    for u in witness:
        for v in iter_bits(G.adj[u]):
            if v > u and v in witness:
                return u, v
    raise AssertionError("forbidden pattern witness without edges")


def repair(G: Graph, family: Iterable[str], history: list | None = None) -> Graph:
    """Delete edges until no pattern of ``family`` remains.

    ``history`` (if given) receives one ``(pattern, witness, deleted_edge)``
    entry per round.
    """
    family = normalize_family(family)
    edges = set(G.edges())
    while True:
        found = _witness(G, family)
        if found is None:
            return G
        e = _smallest_edge(G, found[1])
        if history is not None:
            history.append((found[0], found[1], e))
        edges.discard(e)
        G = build_graph(G.n, edges)


def pattern_graph(name: str) -> Graph:
    name = normalize_family([name])[0]
    if name == "triangle":
        return named_graph("complete(3)")
    if name.startswith("P"):
        return named_graph(f"path({name[1:]})")
    return named_graph(name)


def forbidden_count(G: Graph, family: Iterable[str]) -> int:
    """Total number of vertex sets inducing some pattern of ``family``."""
    return sum(count_induced(G, pattern_graph(f)) for f in normalize_family(family))


def sample(spec: SamplerSpec) -> Graph:
    """Draw, repair and verify; deterministic in ``spec``."""
    rng = SplitMix64(spec.seed)
    for _ in range(spec.max_attempts):
        if spec.model == "blocks":
            edges = block_edges(spec.n, spec.p, spec.clique or 4, rng)
        else:
            edges = []
            for _ in range(spec.clique_count if spec.clique else 0):
                edges += planted_clique_edges(spec.n, spec.clique, rng)
            edges += er_edges(spec.n, spec.p, rng)
        G = repair(build_graph(spec.n, edges), spec.family)
        if spec.connect and not is_connected(G):
            continue
        if _witness(G, spec.family) is not None:
            raise AssertionError("repair released a graph outside the class")
        return G
    raise SamplingFailed(spec)


def sample_many(n_range: tuple[int, int], p: float, family, seed: int, count: int,
                connect: bool = True, accept=None, clique_range: tuple[int, int] = (0, 0),
                clique_count: int = 1, model: str = "er") -> list[Graph]:
    """``count`` samples with n (and planted clique size) drawn from the ranges, seeds from ``seed``.

    ``accept`` filters samples; rejected draws are replaced by further draws.
    """
    rng = SplitMix64(seed)
    lo, hi = n_range
    out = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > 50 * count + 100:
            raise RuntimeError(f"only {len(out)} of {count} samples accepted")
        n = lo + rng.next_u64() % (hi - lo + 1)
        q = min(n, clique_range[0] + rng.next_u64() % (clique_range[1] - clique_range[0] + 1))
        spec = SamplerSpec(n, p, family, rng.next_u64(), max_attempts=20, connect=connect, clique=q,
                           clique_count=clique_count, model=model)
        try:
            G = sample(spec)
        except SamplingFailed:
            continue
        if accept is None or accept(G):
            out.append(G)
    return out


# -- planted instances ---------------------------------------------------------------

def _lemma31_two_part() -> Graph:
    # K_3 = {0,1,2}; pendants 3 at v_1 and 4 at v_2, adjacent to each other
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (3, 4)])


def _lemma31_single_part() -> Graph:
    # K_3 = {0,1,2}; N_1 = W_1 = {3,4} (an edge) and {5}; 6 in N_2 below 5
    return build_graph(7, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5), (5, 6)])


def _extension_branch() -> Graph:
    # K_4 = {0..3}; W_1 = {4 (x), 5 (y), 6 (y')}; C = {7, 8, 9} joined to x; x_1 = 9 also sees y, y'
    edges = [(a, b) for a in range(4) for b in range(a + 1, 4)]
    edges += [(0, 4), (0, 5), (0, 6), (7, 8), (7, 9), (8, 9), (4, 7), (4, 8), (4, 9), (9, 5), (9, 6)]
    return build_graph(10, edges)


def extension_partial() -> tuple[int, ...]:
    """Partial 4-coloring of ``extension_branch`` that defeats index-order greedy on C.

    y and y' take colors 3 and 4, so x_1 only has color 1 left, which greedy
    hands to vertex 7 first.
    """
    return (1, 2, 3, 4, 2, 3, 4, 0, 0, 0)


def _p6_case1() -> Graph:
    # K_3 = {0,1,2}; W_1 = {3} and {8,9}; N_2 = {4}; N_3 = edge {5,6} and {7}
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (4, 5), (4, 6), (5, 6), (4, 7),
             (0, 8), (0, 9), (8, 9)]
    return build_graph(10, edges)


def _p6_case2() -> Graph:
    # K_3 = {0,1,2}; W_1 = {3}, W_2 = {4}; N_2 vertex 5 of degree 2 sees both
    return build_graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (3, 4), (3, 5), (4, 5)])


def _p7_layers() -> Graph:
    # K_4 = {0..3}; chain 4 (N_1), 5 (N_2), 6 (N_3); N_4 = triangle {7,8,9} hanging off 6
    edges = [(a, b) for a in range(4) for b in range(a + 1, 4)]
    edges += [(0, 4), (4, 5), (5, 6), (6, 7), (6, 8), (6, 9), (7, 8), (7, 9), (8, 9)]
    return build_graph(10, edges)


PLANTED = {
    "lemma31_case(two_part)": _lemma31_two_part,
    "lemma31_case(single_part)": _lemma31_single_part,
    "lemma31_case(prism)": lambda: prism(3),
    "extension_branch": _extension_branch,
    "p6_case1": _p6_case1,
    "p6_case2": _p6_case2,
    "p7_layers": _p7_layers,
}

# expected layering case and the palette the matching colorer produces
PLANTED_EXPECTED = {
    "lemma31_case(two_part)": ("two_part(1, 2)", 3),
    "lemma31_case(single_part)": ("single_part(1)", 3),
    "lemma31_case(prism)": ("prism_case", 3),
    "extension_branch": ("single_part(1)", 4),
    "p6_case1": ("single_part(1)", 3),
    "p6_case2": ("two_part(1, 2)", 3),
    "p7_layers": ("single_part(1)", 4),
}


def planted_instance(kind: str) -> Graph:
    """Hand-built graph exercising one branch of the layering or the colorers.

    ``kind`` is ``lemma31_case(two_part|single_part|prism)``, ``extension_branch``,
    ``p6_case1``, ``p6_case2`` or ``p7_layers``.
    """
    key = kind.replace(" ", "")
    if key not in PLANTED:
        raise ValueError(f"unknown planted instance {kind!r}; choose from {', '.join(PLANTED)}")
    return PLANTED[key]()
