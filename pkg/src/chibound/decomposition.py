"""Layering of a graph around a maximum clique K.

N_i is the set of vertices at distance exactly i from K and W(i) the
vertices of N_1 whose only neighbour in K is the i-th clique vertex. In a
connected (bull, diamond)-free graph with omega > 2 the W parts partition
N_1 and at most two of them are non-empty unless the graph sits inside the
prism K_omega x K_2; the case tag records which situation applies.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .bits import iter_bits, to_tuple
from .errors import ClassViolation, StructureError
from .graph import Graph, component_masks, distance_layers, is_connected
from .oracle import clique_number, max_clique_mask
from .recognition import find_bull, find_diamond, find_triangle

PRISM = "prism_case"
EMPTY_N1 = "empty_n1"
TWO_PART = "two_part"
SINGLE_PART = "single_part"


@dataclass(frozen=True)
class CliqueLayering:
    K: tuple[int, ...]            # v_1..v_omega in canonical order
    W: dict[int, int]             # 1-based clique index -> mask of W(i)
    layer_masks: tuple[int, ...]  # index 0 is K, index i is N_i
    case: str
    parts: tuple[int, ...] = ()   # (1, 2) for two_part, (1,) for single_part

    @property
    def omega(self) -> int:
        return len(self.K)

    @property
    def K_mask(self) -> int:
        return self.layer_masks[0]

    @property
    def depth(self) -> int:
        """Largest i with N_i non-empty (0 when G is just K)."""
        return len(self.layer_masks) - 1

    @property
    def is_prism(self) -> bool:
        return self.case in (PRISM, EMPTY_N1)

    def layer(self, i: int) -> int:
        return self.layer_masks[i] if i < len(self.layer_masks) else 0

    def N(self, i: int) -> tuple[int, ...]:
        return to_tuple(self.layer(i))

    def W_part(self, i: int) -> tuple[int, ...]:
        return to_tuple(self.W.get(i, 0))

    def case_label(self) -> str:
        if self.parts:
            return f"{self.case}({', '.join(map(str, self.parts))})"
        return self.case

    def to_dict(self) -> dict:
        return {
            "K": list(self.K),
            "W": {str(i): list(to_tuple(m)) for i, m in sorted(self.W.items())},
            "layer_sizes": [m.bit_count() for m in self.layer_masks[1:]],
            "layers": [list(to_tuple(m)) for m in self.layer_masks[1:]],
            "case": self.case_label(),
        }


def _class_witness(G: Graph) -> tuple[str, tuple[int, ...]] | None:
    bull = find_bull(G)
    if bull is not None:
        return "bull", bull
    diamond = find_diamond(G)
    if diamond is not None:
        return "diamond", diamond
    return None


def _structure_failure(G: Graph, claim: str, witness) -> StructureError:
    found = _class_witness(G)
    if found is not None:
        return ClassViolation(found[0], found[1], f"{claim}; graph contains an induced {found[0]} {found[1]}")
    return StructureError(claim, tuple(witness), G)


def clique_layering(G: Graph, K=None, *, check: bool = True) -> CliqueLayering:
    """Compute K, the W partition, the distance layers and the case tag.

    With ``check`` the preconditions (connected, bull- and diamond-free,
    omega > 2, K maximum) are verified and every structural fact the case
    split relies on is asserted; failures raise with a witness.
    """
    if K is None:
        kmask = max_clique_mask(G)
    else:
        kmask = sum(1 << v for v in K)
    if check:
        if not is_connected(G):
            raise ValueError("clique_layering needs a connected graph")
        found = _class_witness(G)
        if found is not None:
            raise ClassViolation(*found)
        if not G.is_clique(kmask):
            raise ValueError(f"K = {to_tuple(kmask)} is not a clique")
        if kmask.bit_count() != clique_number(G):
            raise ValueError(f"K = {to_tuple(kmask)} is not a maximum clique")
        if kmask.bit_count() <= 2:
            raise ValueError("clique_layering needs omega > 2; triangle-free graphs are colored directly")

    layers = distance_layers(G, kmask)
    n1 = layers[1] if len(layers) > 1 else 0
    raw_w = {}
    for v in iter_bits(kmask):
        raw_w[v] = n1 & G.adj[v] & ~_union_adj(G, kmask & ~(1 << v))
    covered = 0
    for m in raw_w.values():
        covered |= m
    if check and covered != n1:
        stray = to_tuple(n1 & ~covered)
        raise _structure_failure(G, "a vertex of N_1 has more than one neighbour in K", stray[:1])

    nonempty = [v for v in sorted(raw_w) if raw_w[v]]
    order = nonempty + [v for v in to_tuple(kmask) if v not in nonempty]
    W = {i + 1: raw_w[v] for i, v in enumerate(order)}

    if not n1:
        case, parts = EMPTY_N1, ()
    elif len(nonempty) >= 3:
        case, parts = PRISM, ()
        if check:
            _assert_prism(G, W, layers)
    elif len(nonempty) == 2:
        case, parts = TWO_PART, (1, 2)
        if check:
            w1, w2 = W[1], W[2]
            for part in (w1, w2):
                if not G.is_independent(part):
                    raise _structure_failure(G, "a W part of N_1 is not independent", to_tuple(part))
            for x in iter_bits(w1):
                if w2 & ~G.adj[x]:
                    y = to_tuple(w2 & ~G.adj[x])[0]
                    raise _structure_failure(G, "[W_1, W_2] is not complete", (x, y))
    else:
        case, parts = SINGLE_PART, (1,)
        if check:
            for comp in component_masks(G, n1):
                if not G.is_clique(comp):
                    raise _structure_failure(G, "G[N_1] is not a disjoint union of cliques", to_tuple(comp))

    return CliqueLayering(tuple(order), W, tuple(layers), case, parts)


def _union_adj(G: Graph, mask: int) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= G.adj[v]
    return out


def _assert_prism(G: Graph, W: dict[int, int], layers: list[int]) -> None:
    for i, part in W.items():
        if part.bit_count() > 1:
            raise _structure_failure(G, f"|W({i})| > 1 with three non-empty W parts", to_tuple(part))
    n12 = layers[1] | (layers[2] if len(layers) > 2 else 0)
    if not G.is_clique(n12):
        raise _structure_failure(G, "N_1 u N_2 is not a clique in the prism case", to_tuple(n12))
    if len(layers) > 3:
        raise _structure_failure(G, "N_3 is not empty in the prism case", to_tuple(layers[3]))


def layer_components(G: Graph, L: CliqueLayering, i: int) -> list[tuple[int, bool]]:
    """Components of G[N_i] as ``(mask, has_triangle)`` pairs."""
    out = []
    for comp in component_masks(G, L.layer(i)):
        sub, _ = G.induced_subgraph(comp)
        out.append((comp, find_triangle(sub) is not None))
    return out


@dataclass
class LayeringReport:
    """Per-clause verdicts; ``failures`` maps clause name to a witness tuple."""

    checked: list[str] = field(default_factory=list)
    failures: dict[str, tuple[int, ...]] = field(default_factory=dict)
    notes: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok

    def fail(self, clause: str, witness, note: str = "") -> None:
        self.failures.setdefault(clause, tuple(witness))
        if note:
            self.notes.setdefault(clause, note)


def verify_lemma31(G: Graph, L: CliqueLayering) -> LayeringReport:
    """Check the layering facts (i)-(iii) on a concrete graph.

    ``precondition``: G is bull- and diamond-free (witness names the pattern).
    ``i``: the W parts partition N_1 and match the case tag.
    ``ii``: each component of G[N_i], i >= 2, is a clique or triangle-free.
    ``iii``: no component of G[N_i], i >= 2, with a triangle has a neighbour in N_{i+1}.
    """
    report = LayeringReport()
    report.checked.append("precondition")
    found = _class_witness(G)
    if found is not None:
        report.fail("precondition", found[1], f"induced {found[0]}")

    report.checked.append("i")
    n1 = L.layer(1)
    union = 0
    for i, part in L.W.items():
        if part & union:
            report.fail("i", to_tuple(part & union), "W parts overlap")
        union |= part
    if union != n1:
        report.fail("i", to_tuple(n1 ^ union), "W parts do not cover N_1")
    nonempty = [i for i, p in L.W.items() if p]
    if L.case == TWO_PART:
        w1, w2 = L.W[1], L.W[2]
        if len(nonempty) != 2 or not G.is_independent(w1) or not G.is_independent(w2):
            report.fail("i", to_tuple(w1 | w2), "two_part parts are not two independent sets")
        for x in iter_bits(w1):
            if w2 & ~G.adj[x]:
                report.fail("i", (x, to_tuple(w2 & ~G.adj[x])[0]), "[W_1, W_2] not complete")
                break
    elif L.case == SINGLE_PART:
        if len(nonempty) != 1:
            report.fail("i", to_tuple(n1), "single_part with several W parts")
        for comp in component_masks(G, n1):
            if not G.is_clique(comp):
                report.fail("i", to_tuple(comp), "G[N_1] component is not a clique")
    elif L.case == PRISM:
        if any(p.bit_count() > 1 for p in L.W.values()):
            report.fail("i", to_tuple(n1), "prism case with a W part of size > 1")
        if not G.is_clique(n1 | L.layer(2)) or L.depth > 2:
            report.fail("i", to_tuple(n1 | L.layer(2)), "prism case without the clique second row")
    elif n1:
        report.fail("i", to_tuple(n1), "empty_n1 tag but N_1 is non-empty")

    report.checked += ["ii", "iii"]
    for i in range(2, L.depth + 1):
        nxt = L.layer(i + 1)
        for comp, has_tri in layer_components(G, L, i):
            if has_tri and not G.is_clique(comp):
                report.fail("ii", to_tuple(comp), f"component of N_{i} neither clique nor triangle-free")
            if has_tri and _union_adj(G, comp) & nxt:
                report.fail("iii", to_tuple(comp), f"triangle component of N_{i} reaches N_{i + 1}")
    return report
