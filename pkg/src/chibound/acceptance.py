"""Acceptance battery: eleven named checks over witnesses and seeded samples.

Each ``acN`` function returns a ``CriterionResult``; ``run_suite`` runs them
all. Sample pools are shared between criteria and cached per seed.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .bits import iter_bits
from .bounds import eval_bounds, table_bound
from .coloring import TriangleFreeColorer, color_bull_diamond, color_p5, color_p6, color_p7
from .decomposition import clique_layering, layer_components, verify_lemma31
from .errors import StructureError
from .gen import sample_many
from .graph import (Graph, cartesian_product, component_masks, complete, complete_bipartite, cycle,
                    grotzsch, named_graph, path)
from .oracle import chromatic_number_exact, clique_number, verify_coloring
from .recognition import (classify, is_complete_multipartite, is_perfect, iter_induced_cycles,
                          find_triangle)

DEFAULT_SEED = 20240601
BD = ("bull", "diamond")


@dataclass
class CriterionResult:
    number: int
    title: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, cond: bool, message: str) -> bool:
        self.checked += 1
        if not cond:
            self.failures.append(message)
        return cond

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"; first failure: {self.failures[0]}" if self.failures else ""
        note = f"; {', '.join(self.notes)}" if self.notes else ""
        return (f"AC{self.number:<2} {status}  {self.title} "
                f"({self.checked} checks, {len(self.failures)} failures, {self.seconds:.2f}s{note}){extra}")

    def to_dict(self) -> dict:
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "checked": self.checked, "failures": self.failures[:10],
                "seconds": round(self.seconds, 3), "notes": self.notes}


def _timed(number: int, title: str):
    def wrap(fn):
        def run(seed: int = DEFAULT_SEED) -> CriterionResult:
            res = CriterionResult(number, title)
            start = time.perf_counter()
            try:
                fn(res, seed)
            except Exception as exc:  # a crash is a failed criterion, not a crashed suite
                res.failures.append(f"{type(exc).__name__}: {exc}")
            res.seconds = time.perf_counter() - start
            return res
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


# -- sample pools --------------------------------------------------------------------

def _mixed(n_range, p, family, seed, count, **kw) -> tuple[Graph, ...]:
    """Half Erdos-Renyi draws with a planted clique, half glued-cliques draws."""
    half = count // 2
    er = sample_many(n_range, p, family, seed, half, clique_range=(0, 6), **kw)
    blocks = sample_many(n_range, 0.15, family, seed + 1, count - half, clique_range=(2, 5),
                         model="blocks", **kw)
    return tuple(er + blocks)


@lru_cache(maxsize=4)
def bd_pool(seed: int) -> tuple[Graph, ...]:
    """500 connected (bull, diamond)-free graphs on 5..25 vertices."""
    return _mixed((5, 25), 0.2, BD, seed, 500)


@lru_cache(maxsize=4)
def p5_pool(seed: int) -> tuple[Graph, ...]:
    return _mixed((5, 18), 0.2, ("P5",) + BD, seed + 50, 200, accept=lambda G: clique_number(G) >= 3)


@lru_cache(maxsize=4)
def p6_pool(seed: int) -> tuple[Graph, ...]:
    return _mixed((5, 20), 0.2, ("P6",) + BD, seed + 60, 200)


@lru_cache(maxsize=4)
def p7_pool(seed: int) -> tuple[Graph, ...]:
    return _mixed((5, 22), 0.2, ("P7",) + BD, seed + 70, 200)


@lru_cache(maxsize=4)
def triangle_free_pool(seed: int) -> tuple[Graph, ...]:
    return tuple(sample_many((4, 20), 0.25, ("triangle",), seed + 30, 300, connect=False))


@lru_cache(maxsize=4)
def paw_pool(seed: int) -> tuple[Graph, ...]:
    return tuple(sample_many((4, 12), 0.35, ("paw",), seed + 40, 300, connect=False, clique_range=(0, 5)))


def budget_k(G: Graph) -> int:
    """Triangle-free budget for a connected graph, computed with the oracle.

    omega <= 2: chi(G). Otherwise the largest chi over triangle-free
    components of the layers N_i, i >= 2, and at least 2 (any class
    containing an edge needs two colors).
    """
    if clique_number(G) <= 2:
        return max(2, chromatic_number_exact(G)[0])
    L = clique_layering(G)
    k = 2
    if L.is_prism:
        return k
    for i in range(2, L.depth + 1):
        for comp, has_tri in layer_components(G, L, i):
            if not has_tri:
                k = max(k, chromatic_number_exact(G.induced_subgraph(comp)[0])[0])
    return k


def layer_discipline(G: Graph, colors, k: int) -> list[str]:
    """Violations of: triangle-free pieces of even N_i use {k+1..2k}, odd N_i (i >= 3) use {1..k}."""
    L = clique_layering(G)
    if L.is_prism:
        return []
    bad = []
    for i in range(2, L.depth + 1):
        lo, hi = (k + 1, 2 * k) if i % 2 == 0 else (1, k)
        for comp, has_tri in layer_components(G, L, i):
            if has_tri:
                continue
            for v in iter_bits(comp):
                if not lo <= colors[v] <= hi:
                    bad.append(f"vertex {v} in N_{i} has color {colors[v]} outside {lo}..{hi}")
    return bad


def _edges(G: Graph) -> str:
    return f"n={G.n} edges={G.edges()}"


# -- criteria ----------------------------------------------------------------------------

@_timed(1, "Grotzsch witness: (P6, bull, diamond, triangle)-free, chi = 4, color_p6 <= 4")
def ac1(res: CriterionResult, seed: int) -> None:
    G = grotzsch()
    r = classify(G)
    res.check(r.free_of_path(6) and r.bull_free and r.diamond_free and r.triangle_free,
              f"classify reported {r.to_dict()}")
    res.check(chromatic_number_exact(G)[0] == 4, "chi_exact(grotzsch) != 4")
    c = color_p6(G)
    res.check(verify_coloring(G, c).ok and c.palette <= 4, f"color_p6 palette {c.palette}")


@_timed(2, "C5 witness: chi = 3, color_p5 palette = 3 = max{3, 2}")
def ac2(res: CriterionResult, seed: int) -> None:
    G = cycle(5)
    res.check(chromatic_number_exact(G)[0] == 3, "chi_exact(C5) != 3")
    c = color_p5(G)
    res.check(verify_coloring(G, c).ok and c.palette == 3 == table_bound("pt", 2, 5),
              f"color_p5 palette {c.palette}")


@_timed(3, "Layered coloring: 500 (bull, diamond)-free samples, palette <= max{2k, omega}")
def ac3(res: CriterionResult, seed: int) -> None:
    for G in bd_pool(seed):
        k = budget_k(G)
        c = color_bull_diamond(G, TriangleFreeColorer("exact", k))
        omega = clique_number(G)
        ok = verify_coloring(G, c).ok
        res.check(ok, f"improper coloring on {_edges(G)}")
        res.check(c.palette <= max(2 * k, omega) and c.palette <= c.certificate.claimed_bound,
                  f"palette {c.palette} > max(2*{k}, {omega}) on {_edges(G)}")
        res.check(chromatic_number_exact(G)[0] <= c.palette, f"chi above palette on {_edges(G)}")
    res.notes.append(f"{len(bd_pool(seed))} samples")


@_timed(4, "Layering structure: case split, clauses (i)-(iii), layer color sets on omega > 2 samples")
def ac4(res: CriterionResult, seed: int) -> None:
    used = 0
    for G in bd_pool(seed):
        if clique_number(G) <= 2:
            continue
        used += 1
        try:
            L = clique_layering(G)
        except (StructureError, ValueError) as exc:
            res.check(False, f"case split failed ({exc}) on {_edges(G)}")
            continue
        rep = verify_lemma31(G, L)
        res.check(rep.ok, f"clauses {rep.failures} on {_edges(G)}")
        k = budget_k(G)
        c = color_bull_diamond(G, TriangleFreeColorer("exact", k))
        bad = layer_discipline(G, c.assignment, k)
        res.check(not bad, f"{bad[:1]} on {_edges(G)}")
    res.check(used > 0, "no samples with omega > 2")
    res.notes.append(f"{used} samples with omega > 2")


@_timed(5, "Induced cycles: consecutive vertices of induced cycles of length >= 5 share no neighbour")
def ac5(res: CriterionResult, seed: int) -> None:
    cycles = 0
    for G in bd_pool(seed):
        for C in iter_induced_cycles(G, 5):
            cycles += 1
            on_cycle = sum(1 << v for v in C)
            for a, b in zip(C, C[1:] + C[:1]):
                common = G.adj[a] & G.adj[b] & ~on_cycle
                res.check(not common, f"cycle {C} pair ({a}, {b}) shares neighbours on {_edges(G)}")
    res.check(cycles > 0, "no induced cycles of length >= 5 found")
    res.notes.append(f"{cycles} cycles")


@_timed(6, "P5 perfection: 200 (P5, bull, diamond)-free samples with omega >= 3 are perfect, chi = omega")
def ac6(res: CriterionResult, seed: int) -> None:
    for G in p5_pool(seed):
        res.check(bool(is_perfect(G)), f"not perfect: {is_perfect(G).witness} on {_edges(G)}")
        res.check(chromatic_number_exact(G)[0] == clique_number(G), f"chi != omega on {_edges(G)}")


@_timed(7, "P6 suite: omega = 3 -> 3 colors, omega >= 4 -> omega colors, omega = 2 -> <= 4")
def ac7(res: CriterionResult, seed: int) -> None:
    seen = {"2": 0, "3": 0, ">=4": 0}
    for G in p6_pool(seed):
        omega = clique_number(G)
        c = color_p6(G)
        res.check(verify_coloring(G, c).ok, f"improper on {_edges(G)}")
        if omega <= 2:
            seen["2"] += 1
            res.check(c.palette <= 4, f"omega 2, palette {c.palette} on {_edges(G)}")
        else:
            seen["3" if omega == 3 else ">=4"] += 1
            res.check(c.palette == omega, f"omega {omega}, palette {c.palette} on {_edges(G)}")
    res.check(all(seen.values()), f"some omega bucket is empty: {seen}")
    res.notes.append(f"omega buckets {seen}")


@_timed(8, "P7 suite: 200 samples, color_p7 proper with palette <= max{7, omega}, structural checks hold")
def ac8(res: CriterionResult, seed: int) -> None:
    for G in p7_pool(seed):
        try:
            c = color_p7(G)
        except StructureError as exc:
            res.check(False, f"structural check failed: {exc} on {_edges(G)}")
            continue
        res.check(verify_coloring(G, c).ok, f"improper on {_edges(G)}")
        res.check(c.palette <= max(7, clique_number(G)), f"palette {c.palette} on {_edges(G)}")
        res.check(chromatic_number_exact(G)[0] <= c.palette, f"chi above palette on {_edges(G)}")


@_timed(9, "Bound formulas: triangle-free chi <= Poljak-Tuza and Harris; bull/diamond chi <= max{omega, formula}")
def ac9(res: CriterionResult, seed: int) -> None:
    for G in triangle_free_pool(seed):
        chi = chromatic_number_exact(G)[0]
        b = eval_bounds(G)
        for key in ("poljak_tuza", "harris"):
            if b.values[key] is not None:
                res.check(chi <= b.values[key], f"{key} {b.values[key]:.3f} < chi {chi} on {_edges(G)}")
    for G in bd_pool(seed)[:300]:
        chi = chromatic_number_exact(G)[0]
        b = eval_bounds(G)
        res.check(b.applicable["bull_diamond_nm_or_omega"], "bound not flagged applicable")
        res.check(chi <= b.values["bull_diamond_nm_or_omega"], f"disjunctive bound fails on {_edges(G)}")


def fact1_fixtures() -> list[tuple[str, Graph]]:
    """Named graphs on at most five vertices."""
    out = [(f"complete({t})", complete(t)) for t in range(1, 6)]
    out += [(f"path({t})", path(t)) for t in range(2, 6)]
    out += [(f"cycle({t})", cycle(t)) for t in range(3, 6)]
    out += [("complete_bipartite(1,3)", complete_bipartite(1, 3)),
            ("complete_bipartite(2,3)", complete_bipartite(2, 3))]
    out += [(name, named_graph(name)) for name in ("bull", "diamond", "paw")]
    return out


@_timed(10, "Products and paws: chi(G x H) <= max{chi(G), chi(H)} on fixture pairs; paw-free structure on 300 samples")
def ac10(res: CriterionResult, seed: int) -> None:
    fixtures = fact1_fixtures()
    chi = {name: chromatic_number_exact(G)[0] for name, G in fixtures}
    for (a, G), (b, H) in product(fixtures, repeat=2):
        prod = chromatic_number_exact(cartesian_product(G, H))[0]
        res.check(prod <= max(chi[a], chi[b]), f"chi({a} x {b}) = {prod}")
    for G in paw_pool(seed):
        for comp in component_masks(G):
            H, _ = G.induced_subgraph(comp)
            ok = find_triangle(H) is None or is_complete_multipartite(H) is not None
            res.check(ok, f"paw-free component neither triangle-free nor complete multipartite on {_edges(G)}")


HAND_VALUES = (
    [(f"complete({t})", t) for t in range(1, 7)]
    + [(f"cycle({t})", 3 if t % 2 else 2) for t in range(3, 10)]
    + [("grotzsch", 4), ("bull", 3), ("diamond", 3), ("paw", 3)]
    + [(f"prism({w})", w) for w in range(2, 6)]
)


@_timed(11, "Oracle self-check: chi_exact on named graphs matches hand values")
def ac11(res: CriterionResult, seed: int) -> None:
    for name, expected in HAND_VALUES:
        got = chromatic_number_exact(named_graph(name))[0]
        res.check(got == expected, f"chi({name}) = {got}, expected {expected}")


CRITERIA = (ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10, ac11)


def run_suite(seed: int = DEFAULT_SEED, only: list[int] | None = None) -> list[CriterionResult]:
    return [ac(seed) for i, ac in enumerate(CRITERIA, 1) if only is None or i in only]
