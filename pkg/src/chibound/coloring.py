"""Constructive colorers for (bull, diamond)-free graphs.

Every colorer works component by component. On a connected component with
omega > 2 it roots the layering at a maximum clique K, colors K with 1..omega,
colors N_1 from the W partition, colors the triangle-free components of the
deeper layers from a triangle-free subroutine, and extends the coloring into
the clique components of those layers one at a time.

Structural facts the constructions lean on (N_2 bipartite, N_3 perfect, ...)
are checked as they are used and raise ``StructureError`` with a witness.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Callable, Iterable

from .bits import from_iter, iter_bits, lowest, to_tuple
from .bounds import table_bound
from .decomposition import (SINGLE_PART, TWO_PART, CliqueLayering, clique_layering,
                            layer_components)
from .errors import BudgetExceeded, ClassViolation, StructureError
from .graph import Graph, component_masks
from .oracle import (BoundCertificate, Coloring, chromatic_number_exact, clique_number, dsatur,
                     exact_coloring_of, verify_coloring)
from .recognition import (find_bull, find_diamond, find_induced_path, find_triangle,
                          is_disjoint_union_of_cliques, is_perfect_within, longest_induced_path)

log = logging.getLogger(__name__)

THEOREMS = ("thm32", "cor_p5", "thm_p6_big", "thm_p6_omega3", "cor_p6_omega2", "thm_p7",
            "cor38", "prism", "triangle_free")


@dataclass(frozen=True)
class TriangleFreeColorer:
    """Subroutine used on triangle-free pieces.

    ``exact`` always reaches the chromatic number. ``dsatur_checked`` runs the
    DSATUR heuristic and falls back to ``exact`` when it overshoots
    ``claimed_k``. If ``claimed_k`` is set and even an optimal coloring needs
    more, ``BudgetExceeded`` is raised: the graph is outside the class the
    budget was promised for.
    """

    strategy: str = "exact"
    claimed_k: int | None = None

    def __post_init__(self):
        if self.strategy == "dsatur":
            object.__setattr__(self, "strategy", "dsatur_checked")
        if self.strategy not in ("exact", "dsatur_checked"):
            raise ValueError(f"unknown triangle-free strategy {self.strategy!r}")

    def with_budget(self, k: int | None) -> "TriangleFreeColorer":
        return replace(self, claimed_k=k)

    def color_part(self, G: Graph, within: int) -> dict[int, int]:
        """Color ``G[within]`` (assumed triangle-free) with colors 1, 2, ..."""
        if not within:
            return {}
        col = None
        if self.strategy == "dsatur_checked":
            col = dsatur(G, within)
            if self.claimed_k is not None and max(col.values()) > self.claimed_k:
                col = None
        if col is None:
            col = exact_coloring_of(G, within)
        _assert_proper(G, col)
        used = max(col.values())
        if self.claimed_k is not None and used > self.claimed_k:
            raise BudgetExceeded(used, self.claimed_k, to_tuple(within))
        return col


def _assert_proper(G: Graph, col: dict[int, int]) -> None:
    for v, c in col.items():
        for u in iter_bits(G.adj[v]):
            if col.get(u) == c:
                raise StructureError("subroutine returned an improper coloring", (v, u), G)


def color_triangle_free(G: Graph, c: TriangleFreeColorer = TriangleFreeColorer()) -> Coloring:
    tri = find_triangle(G)
    if tri is not None:
        raise ClassViolation("triangle", tri)
    col = c.color_part(G, G.all_vertices)
    colors = tuple(col.get(v, 0) for v in range(G.n))
    used = max(colors, default=0)
    k = c.claimed_k if c.claimed_k is not None else used
    cert = BoundCertificate("triangle_free", k, clique_number(G), k)
    return Coloring(colors, used, cert)


# -- building blocks ---------------------------------------------------------------

def _union_adj(G: Graph, mask: int) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= G.adj[v]
    return out


def _common_adj(G: Graph, mask: int) -> int:
    out = -1
    for v in iter_bits(mask):
        out &= G.adj[v]
    return out if mask else 0


def _forbidden(G: Graph, col: list[int], v: int) -> int:
    bits = 0
    for u in iter_bits(G.adj[v]):
        if col[u]:
            bits |= 1 << col[u]
    return bits


def _smallest_free(forbidden: int, palette: int) -> int:
    for c in range(1, palette + 1):
        if not forbidden >> c & 1:
            return c
    return 0


def _color_clique_and_n1(G: Graph, L: CliqueLayering, col: list[int]) -> None:
    """v_i gets i; N_1 by case: W_1 -> 2, W_2 -> 1, or per clique of W_1 one vertex 2 and the rest 3.."""
    for i, v in enumerate(L.K):
        col[v] = i + 1
    if L.case == TWO_PART:
        for v in iter_bits(L.W[1]):
            col[v] = 2
        for v in iter_bits(L.W[2]):
            col[v] = 1
    elif L.case == SINGLE_PART:
        for comp in component_masks(G, L.W[1]):
            verts = to_tuple(comp)
            if len(verts) > L.omega - 1:
                raise StructureError("clique of W_1 too large to color from {2..omega}", verts, G)
            col[verts[0]] = 2
            for j, v in enumerate(verts[1:]):
                col[v] = 3 + j


def _two_sides(G: Graph, comp: int) -> tuple[int, int]:
    """Bipartition of a connected piece, smallest vertex on the first side."""
    start = lowest(comp)
    side = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for u in iter_bits(G.adj[v] & comp):
                if u not in side:
                    side[u] = 1 - side[v]
                    nxt.append(u)
                elif side[u] == side[v]:
                    raise StructureError("expected a bipartite piece, found an odd cycle", to_tuple(comp), G)
        frontier = nxt
    first = from_iter(v for v, s in side.items() if s == 0)
    return first, comp & ~first


def _two_color(G: Graph, comp: int, col: list[int], a: int, b: int) -> None:
    first, second = _two_sides(G, comp)
    for v in iter_bits(first):
        col[v] = a
    for v in iter_bits(second):
        col[v] = b


def _greedy(G: Graph, col: list[int], order: Iterable[int], palette: int) -> bool:
    for v in order:
        c = _smallest_free(_forbidden(G, col, v), palette)
        if not c:
            return False
        col[v] = c
    return True


# -- clique-component extension ----------------------------------------------------

def _layer_of(L: CliqueLayering, mask: int) -> int:
    for i, layer in enumerate(L.layer_masks):
        if mask & layer:
            if mask & ~layer:
                raise ValueError(f"{to_tuple(mask)} spans several layers")
            return i
    raise ValueError(f"{to_tuple(mask)} is not inside the layering")


def _extend(G: Graph, L: CliqueLayering, col: list[int], C: int, palette: int,
            trace: list | None = None) -> str:
    """Color the clique component C of N_i in place; returns the branch that succeeded."""
    i = _layer_of(L, C)
    if i < 2:
        raise ValueError("extension applies to components of N_i with i >= 2")
    if C.bit_count() < 3 or not G.is_clique(C):
        raise ValueError(f"{to_tuple(C)} is not a clique with a triangle")
    if _union_adj(G, C) & L.layer(i) & ~C:
        raise ValueError(f"{to_tuple(C)} is not a whole component of N_{i}")
    before = 0
    for j in range(i):
        before |= L.layer(j)
    missing = [v for v in iter_bits(before) if not col[v]]
    if missing:
        raise ValueError(f"layers below N_{i} are not fully colored (e.g. vertex {missing[0]})")
    order = to_tuple(C)

    trial = list(col)
    if _greedy(G, trial, order, palette):
        col[:] = trial
        return _note(trace, "greedy", C)

    prev = L.layer(i - 1)
    A = _common_adj(G, C) & prev
    Y = _union_adj(G, C) & prev & ~A
    owners = [v for v in order if G.adj[v] & Y]
    if A and Y and len(owners) == 1:
        x1 = owners[0]
        x = lowest(A)
        others = [v for v in order if v != x1]
        U = G.adj[x] & L.layer(i - 2) & _common_adj(G, Y)
        for u in iter_bits(U):
            trial = list(col)
            if not _forbidden(G, trial, x1) >> col[u] & 1:
                trial[x1] = col[u]
                if _greedy(G, trial, others, palette):
                    col[:] = trial
                    return _note(trace, "recolor", C)
        # recolor x_1's private neighbours with the color of x, then x_1 first
        trial = list(col)
        ok = True
        for y in iter_bits(Y):
            trial[y] = 0
        for y in iter_bits(Y):
            if _forbidden(G, trial, y) >> col[x] & 1:
                ok = False
                break
            trial[y] = col[x]
        if ok and _greedy(G, trial, [x1] + others, palette):
            col[:] = trial
            return _note(trace, "recolor", C)

    log.warning("extension fell back to exhaustive search for component %s", order)
    if _exhaustive_extend(G, col, C, Y, palette):
        return _note(trace, "fallback", C)
    raise StructureError("no extension of the coloring into a clique component exists", order, G)


def _note(trace, branch, C):
    if trace is not None:
        trace.append((branch, to_tuple(C)))
    return branch


def _exhaustive_extend(G: Graph, col: list[int], C: int, Y: int, palette: int) -> bool:
    free = C | Y
    trial = list(col)
    for v in iter_bits(free):
        trial[v] = 0
    fixed_forb = {v: _forbidden(G, trial, v) for v in iter_bits(free)}
    order = sorted(iter_bits(free), key=lambda v: (-fixed_forb[v].bit_count(), v))

    def search(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        forb = fixed_forb[v]
        for u in iter_bits(G.adj[v] & free):
            if trial[u]:
                forb |= 1 << trial[u]
        for c in range(1, palette + 1):
            if not forb >> c & 1:
                trial[v] = c
                if search(pos + 1):
                    return True
        trial[v] = 0
        return False

    if search(0):
        col[:] = trial
        return True
    return False


def extend_into_clique_component(partial: Coloring, C: Iterable[int], L: CliqueLayering, G: Graph,
                                 trace: list | None = None) -> Coloring:
    """Extend ``partial`` (coloring K and N_1..N_{i-1}) into the clique component C of N_i.

    Tries plain greedy first, then the recoloring around the common neighbour
    x of C (x_1 takes the color of a neighbour u of x one layer further up),
    then an exhaustive search over C and x_1's private neighbours. The
    branch taken is appended to ``trace``.
    """
    col = list(partial.assignment)
    if len(col) != G.n:
        raise ValueError("partial coloring does not match the graph")
    _extend(G, L, col, from_iter(C), partial.palette, trace)
    return Coloring(tuple(col), partial.palette, partial.certificate)


# -- prism case --------------------------------------------------------------------

def _prism_colors(G: Graph, L: CliqueLayering) -> list[int]:
    col = [0] * G.n
    for i, v in enumerate(L.K):
        col[v] = i + 1
    row = []
    for i in sorted(L.W):
        row += [(v, i) for v in iter_bits(L.W[i])]
    row += [(v, 0) for v in iter_bits(L.layer(2))]
    omega = L.omega
    if len(row) > omega or L.depth > 2:
        raise StructureError("graph is not inside K_omega x K_2", to_tuple(G.all_vertices & ~L.K_mask), G)

    def place(pos: int, used: int) -> bool:
        if pos == len(row):
            return True
        v, banned = row[pos]
        for c in range(1, omega + 1):
            if c != banned and not used >> c & 1:
                col[v] = c
                if place(pos + 1, used | (1 << c)):
                    return True
        col[v] = 0
        return False

    if not place(0, 0):
        raise StructureError("no column assignment for the second prism row", tuple(v for v, _ in row), G)
    return col


def color_prism_case(G: Graph, L: CliqueLayering) -> Coloring:
    """omega-coloring of a connected graph inside K_omega x K_2 (v_i gets color i)."""
    if not L.is_prism:
        raise ValueError(f"layering case is {L.case_label()}, not the prism case")
    col = _prism_colors(G, L)
    cert = BoundCertificate("prism", L.omega, L.omega)
    return Coloring(tuple(col), max(col), cert)


# -- drivers -------------------------------------------------------------------------

ComponentColorer = Callable[[Graph], tuple[list[int], BoundCertificate]]


def _by_components(G: Graph, color_component: ComponentColorer, theorem: str | None,
                   top_bound: Callable[[list[BoundCertificate]], int] | None = None) -> Coloring:
    col = [0] * G.n
    certs = []
    for comp in component_masks(G):
        H, labels = G.induced_subgraph(comp)
        hc, cert = color_component(H)
        for i, v in enumerate(labels):
            col[v] = hc[i]
        certs.append(cert)
    if not certs:
        return Coloring((), 0, BoundCertificate(theorem or "triangle_free", 0, 0))
    lead = max(certs, key=lambda c: c.claimed_bound)
    ks = [c.k_used for c in certs if c.k_used is not None]
    cert = BoundCertificate(
        theorem=theorem or lead.theorem,
        claimed_bound=top_bound(certs) if top_bound else lead.claimed_bound,
        omega=max(c.omega for c in certs),
        k_used=max(ks) if ks else None,
        parts=tuple(certs),
        extension_fallbacks=sum(c.extension_fallbacks for c in certs),
    )
    coloring = Coloring(tuple(col), max(col, default=0), cert)
    check = verify_coloring(G, coloring)
    if not check.ok:
        raise StructureError("assembled coloring is not proper",
                             check.monochromatic_edges[:1][0] if check.monochromatic_edges else (), G)
    return coloring


def _require_bull_diamond_free(G: Graph) -> None:
    w = find_bull(G)
    if w is not None:
        raise ClassViolation("bull", w)
    w = find_diamond(G)
    if w is not None:
        raise ClassViolation("diamond", w)


def _require_path_free(G: Graph, t: int) -> None:
    w = find_induced_path(G, t)
    if w is not None:
        raise ClassViolation(f"P{t}", tuple(sorted(w)))


def _fallbacks(trace: list) -> int:
    return sum(1 for branch, _ in trace if branch == "fallback")


def _thm32_component(H: Graph, tf: TriangleFreeColorer, trace: list) -> tuple[list[int], BoundCertificate]:
    omega = clique_number(H)
    if omega <= 2:
        col = tf.color_part(H, H.all_vertices)
        colors = [col[v] for v in range(H.n)]
        k = tf.claimed_k if tf.claimed_k is not None else max(colors)
        return colors, BoundCertificate("triangle_free", max(2 * k, omega), omega, k)
    L = clique_layering(H)
    if L.is_prism:
        return _prism_colors(H, L), BoundCertificate("prism", omega, omega)

    col = [0] * H.n
    _color_clique_and_n1(H, L, col)
    pieces = {i: layer_components(H, L, i) for i in range(2, L.depth + 1)}
    tf_colors = {}
    for i, comps in pieces.items():
        for comp, has_tri in comps:
            if not has_tri:
                tf_colors[comp] = tf.color_part(H, comp)
    needed = max((max(c.values()) for c in tf_colors.values()), default=1)
    # the budget k bounds every triangle-free induced subgraph, so k >= 2 once H has an edge
    k = tf.claimed_k if tf.claimed_k is not None else max(2, needed)
    palette = max(2 * k, omega)
    for i, comps in pieces.items():
        offset = k if i % 2 == 0 else 0
        for comp, has_tri in comps:
            if not has_tri:
                for v, c in tf_colors[comp].items():
                    col[v] = c + offset
        for comp, has_tri in comps:
            if has_tri:
                _extend(H, L, col, comp, palette, trace)
    cert = BoundCertificate("thm32", palette, omega, k, extension_fallbacks=_fallbacks(trace))
    return col, cert


def color_bull_diamond(G: Graph, c: TriangleFreeColorer = TriangleFreeColorer(),
                       trace: list | None = None) -> Coloring:
    """Color a (bull, diamond)-free graph with at most max(2k, omega) colors.

    ``k`` is the triangle-free budget: ``c.claimed_k`` when given, otherwise
    the largest number of colors the subroutine needed on a triangle-free
    piece (at least 2). The certificate records k and the bound.
    """
    _require_bull_diamond_free(G)
    trace = [] if trace is None else trace

    def top(certs):
        k = max((x.k_used for x in certs if x.k_used is not None), default=0)
        return max(2 * k, max(x.omega for x in certs))

    return _by_components(G, lambda H: _thm32_component(H, c, trace), "thm32", top)


# -- P_5 -----------------------------------------------------------------------------

def color_p5(G: Graph, c: TriangleFreeColorer = TriangleFreeColorer()) -> Coloring:
    """(P_5, bull, diamond)-free graphs: 3 colors when triangle-free, else an omega-coloring."""
    _require_bull_diamond_free(G)
    _require_path_free(G, 5)
    tf = c.with_budget(3)

    def component(H):
        omega = clique_number(H)
        bound = table_bound("pt", omega, 5)
        if omega <= 2:
            col = tf.color_part(H, H.all_vertices)
            return [col[v] for v in range(H.n)], BoundCertificate("cor_p5", bound, omega, 3)
        verdict = is_perfect_within(H, H.all_vertices)
        if not verdict:
            raise StructureError(f"graph with a triangle is not perfect ({verdict.kind})", verdict.witness, H)
        k, coloring = chromatic_number_exact(H)
        if k != omega:
            raise StructureError("perfect graph is not omega-colorable", (), H)
        return list(coloring.assignment), BoundCertificate("cor_p5", bound, omega)

    return _by_components(G, component, "cor_p5")


# -- P_6 -----------------------------------------------------------------------------

def _p6_omega3(H: Graph, L: CliqueLayering) -> list[int]:
    col = [0] * H.n
    _color_clique_and_n1(H, L, col)
    n1, n2, n3 = L.layer(1), L.layer(2), L.layer(3)
    for comp in component_masks(H, n2):
        _two_sides(H, comp)  # N_2 bipartite, raises otherwise

    if L.case == SINGLE_PART:
        # N_1 = W_1: one vertex per K_1/K_2 piece colored 2, its partner 3; N_2 from {1, 3}
        if L.depth > 3:
            raise StructureError("N_4 is not empty", L.N(4), H)
        for v in iter_bits(_union_adj(H, n2) & n1):
            if col[v] != 2:
                raise StructureError("N_2 vertex adjacent to an N_1 vertex colored 3", (v,), H)
        for comp in component_masks(H, n2):
            _two_color(H, comp, col, 1, 3)
        for comp in component_masks(H, n3):
            verts = to_tuple(comp)
            if len(verts) == 1:
                col[verts[0]] = 2
                continue
            if len(verts) > 2:
                raise StructureError("G[N_3] is not a union of K_1 and K_2", verts, H)
            ups = {H.adj[v] & n2 for v in verts}
            if len(ups) != 1 or next(iter(ups)).bit_count() != 1:
                raise StructureError("an N_3 edge does not share a single N_2 neighbour", verts, H)
            z = lowest(next(iter(ups)))
            a, b = [x for x in (1, 2, 3) if x != col[z]]
            col[verts[0]], col[verts[1]] = a, b
        return col

    # two_part: W_1 -> 2, W_2 -> 1, N_3 empty
    if L.depth > 2:
        raise StructureError("N_3 is not empty", L.N(3), H)
    w1, w2 = L.W[1], L.W[2]

    def spare(v):
        # the color of a W side v does not touch
        if not H.adj[v] & w1:
            return 2
        if not H.adj[v] & w2:
            return 1
        return 0

    for comp in component_masks(H, n2):
        if comp.bit_count() == 1:
            v = lowest(comp)
            s = spare(v)
            if not s and (H.adj[v] & w1).bit_count() + (H.adj[v] & w2).bit_count() != 2:
                raise StructureError("N_2 vertex seeing both W sides does not have degree 2", (v,), H)
            col[v] = s or 3
            continue
        first, second = _two_sides(H, comp)
        for v in iter_bits(first):
            col[v] = 3
        for v in iter_bits(second):
            s = spare(v)
            if not s:
                raise StructureError("N_2 vertex seeing both W sides has an N_2 neighbour", (v,), H)
            col[v] = s
    return col


def _p6_big(H: Graph, L: CliqueLayering, trace: list) -> list[int]:
    omega = L.omega
    col = [0] * H.n
    _color_clique_and_n1(H, L, col)
    verdict = is_perfect_within(H, L.layer(2))
    if not verdict:
        raise StructureError(f"G[N_2] is not perfect ({verdict.kind})", verdict.witness, H)
    for comp, has_tri in layer_components(H, L, 2):
        if not has_tri:
            _two_color(H, comp, col, 3, 4)
    for comp, has_tri in layer_components(H, L, 2):
        if has_tri:
            _extend(H, L, col, comp, omega, trace)
    if L.depth > 3:
        raise StructureError("N_4 is not empty", L.N(4), H)
    if not is_disjoint_union_of_cliques(H, L.layer(3)):
        raise StructureError("G[N_3] is not a disjoint union of cliques", L.N(3), H)
    for comp, has_tri in layer_components(H, L, 3):
        if not has_tri:
            _two_color(H, comp, col, 1, 2)
    for comp, has_tri in layer_components(H, L, 3):
        if has_tri:
            _extend(H, L, col, comp, omega, trace)
    return col


def color_p6(G: Graph, c: TriangleFreeColorer = TriangleFreeColorer(), trace: list | None = None) -> Coloring:
    """(P_6, bull, diamond)-free graphs: omega colors when omega >= 3, at most 4 when omega = 2."""
    _require_bull_diamond_free(G)
    _require_path_free(G, 6)
    tf = c.with_budget(4)
    trace = [] if trace is None else trace

    def component(H):
        omega = clique_number(H)
        if omega <= 2:
            col = tf.color_part(H, H.all_vertices)
            bound = table_bound("pt", omega, 6)
            return [col[v] for v in range(H.n)], BoundCertificate("cor_p6_omega2", bound, omega, 4)
        L = clique_layering(H)
        if L.is_prism:
            col = _prism_colors(H, L)
        elif omega == 3:
            col = _p6_omega3(H, L)
        else:
            col = _p6_big(H, L, trace)
        tag = "thm_p6_omega3" if omega == 3 else "thm_p6_big"
        return col, BoundCertificate(tag, omega, omega, extension_fallbacks=_fallbacks(trace))

    return _by_components(G, component, None)


# -- P_7 -----------------------------------------------------------------------------

def color_p7(G: Graph, c: TriangleFreeColorer = TriangleFreeColorer(), trace: list | None = None) -> Coloring:
    """(P_7, bull, diamond)-free graphs with at most max(7, omega) colors."""
    _require_bull_diamond_free(G)
    _require_path_free(G, 7)
    tf = c.with_budget(5)
    trace = [] if trace is None else trace

    def component(H):
        omega = clique_number(H)
        bound = table_bound("pt", omega, 7)
        if omega <= 2:
            col = tf.color_part(H, H.all_vertices)
            return [col[v] for v in range(H.n)], BoundCertificate("thm_p7", bound, omega, 5)
        L = clique_layering(H)
        if L.is_prism:
            return _prism_colors(H, L), BoundCertificate("thm_p7", bound, omega)
        palette = bound
        col = [0] * H.n
        _color_clique_and_n1(H, L, col)
        # N_2: triangle-free pieces from {3..7}, cliques by extension
        for comp, has_tri in layer_components(H, L, 2):
            if not has_tri:
                for v, x in tf.color_part(H, comp).items():
                    col[v] = x + 2
        for comp, has_tri in layer_components(H, L, 2):
            if has_tri:
                _extend(H, L, col, comp, palette, trace)
        verdict = is_perfect_within(H, L.layer(3))
        if not verdict:
            raise StructureError(f"G[N_3] is not perfect ({verdict.kind})", verdict.witness, H)
        for comp, has_tri in layer_components(H, L, 3):
            if not has_tri:
                _two_color(H, comp, col, 1, 2)
        for comp, has_tri in layer_components(H, L, 3):
            if has_tri:
                _extend(H, L, col, comp, palette, trace)
        if L.depth > 4:
            raise StructureError("N_5 is not empty", L.N(5), H)
        if not is_disjoint_union_of_cliques(H, L.layer(4)):
            raise StructureError("G[N_4] is not a disjoint union of cliques", L.N(4), H)
        for comp, has_tri in layer_components(H, L, 4):
            if not has_tri:
                _two_color(H, comp, col, 3, 4)
        for comp, has_tri in layer_components(H, L, 4):
            if has_tri:
                _extend(H, L, col, comp, palette, trace)
        return col, BoundCertificate("thm_p7", bound, omega, 5, extension_fallbacks=_fallbacks(trace))

    return _by_components(G, component, "thm_p7")


# -- dispatcher -----------------------------------------------------------------------

SPECIFIC = ((5, color_p5), (6, color_p6), (7, color_p7))


def color_dispatch(G: Graph, c: TriangleFreeColorer = TriangleFreeColorer()) -> Coloring:
    """Pick, per component, the applicable colorer with the smallest claimed bound.

    P_5/P_6/P_7-freeness is probed on each component; ties go to the more
    specific result, and the general layered coloring is the fallback.
    """
    _require_bull_diamond_free(G)

    def component(H):
        longest, _ = longest_induced_path(H, 7)
        best = None
        for t, colorer in SPECIFIC:
            if longest < t:
                best = colorer(H, c)
                break
        if best is None or best.certificate.theorem == "thm_p7":
            general = color_bull_diamond(H, c)
            if best is None or general.certificate.claimed_bound < best.certificate.claimed_bound:
                best = general
        cert = best.certificate
        inner = cert.parts[0] if len(cert.parts) == 1 else cert
        if cert.theorem == "thm32":
            inner = replace(inner, theorem="thm32", claimed_bound=cert.claimed_bound, k_used=cert.k_used)
        return list(best.assignment), inner

    return _by_components(G, component, None)


COLORERS = {
    "auto": color_dispatch,
    "thm32": color_bull_diamond,
    "p5": color_p5,
    "p6": color_p6,
    "p7": color_p7,
}
