"""Closed-form upper bounds on the chromatic number.

All logarithms are natural. Entries whose logarithm argument is <= 1 are
undefined and reported as None. Degree-based bounds carry an unquantified
o(1) term, so they are tagged ``asymptotic_only`` and never treated as
applicable.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field

from .graph import Graph
from .recognition import ClassReport, classify

ASYMPTOTIC_ONLY = ("molloy_triangle_free", "delta_bull_diamond")


def table_bound(family: str, omega: int, param: int | None = None) -> int:
    """Look up a chi-binding value from the P_t / K_{1,r} / pK_2 / chair tables.

    ``family`` is ``pt``, ``k1r``, ``pk2`` or ``chair``; the parameter can be
    inline (``"pt(7)"``) or passed as ``param``.

    >>> table_bound("pt(7)", 3)
    7
    >>> table_bound("pt", 2, 6)
    4
    """
    m = re.fullmatch(r"\s*([a-z0-9_]+)\s*(?:\(\s*(\d+)\s*\))?\s*", family.lower())
    if not m:
        raise ValueError(f"cannot parse table family {family!r}")
    name = m.group(1)
    if m.group(2) is not None:
        param = int(m.group(2))
    if omega < 0:
        raise ValueError("omega must be non-negative")
    if name == "chair":
        return max(6, omega)
    if param is None:
        raise ValueError(f"{name} needs a parameter")
    if name == "pt":
        if param < 5:
            raise ValueError(f"pt(t) rows start at t = 5, got {param}")
        if param == 5:
            return max(3, omega)
        if param == 6:
            return 4 if omega == 2 else omega
        if param == 7:
            return max(7, omega)
        return max(2 * param - 4, omega)
    if name == "k1r":
        if param < 1:
            raise ValueError("k1r(r) needs r >= 1")
        return max(6, 2 * param, omega)
    if name == "pk2":
        if param < 1:
            raise ValueError("pk2(p) needs p >= 1")
        return max(4 * param - 4, omega)
    raise ValueError(f"unknown table family {name!r}")


def _log_ok(x: float) -> bool:
    return x > 1


def poljak_tuza(n: int, m: int) -> tuple[float | None, float | None]:
    """``4 sqrt(n / ln n)`` and ``14 m^(1/3) / (ln m)^(2/3)`` (None where undefined)."""
    by_n = 4 * math.sqrt(n / math.log(n)) if _log_ok(n) else None
    by_m = 14 * m ** (1 / 3) / math.log(m) ** (2 / 3) if _log_ok(m) else None
    return by_n, by_m


def harris(n: int, triangles: int) -> float:
    return 2 * math.sqrt(n) + (6 * triangles) ** (1 / 3)


def bull_diamond_nm(n: int, m: int) -> tuple[float, float | None, float | None]:
    """The three terms ``4 sqrt(n)``, ``8 sqrt(n / ln n)``, ``28 m^(1/3) / (ln m)^(2/3)``."""
    by_n_log = 8 * math.sqrt(n / math.log(n)) if _log_ok(n) else None
    by_m = 28 * m ** (1 / 3) / math.log(m) ** (2 / 3) if _log_ok(m) else None
    return 4 * math.sqrt(n), by_n_log, by_m


def delta_over_log(delta: int, factor: float = 1.0) -> float | None:
    return factor * delta / math.log(delta) if _log_ok(delta) else None


def path_binding(t: int, omega: int) -> tuple[int, int]:
    """Gyarfas ``(t-1)^(omega-1)`` and Gravier-Hoang-Maffray ``(t-2)^(omega-1)``."""
    e = max(omega - 1, 0)
    return (t - 1) ** e, (t - 2) ** e


def _min_defined(*values):
    defined = [v for v in values if v is not None]
    return min(defined) if defined else None


@dataclass
class BoundReport:
    inputs: dict
    values: dict[str, float | None] = field(default_factory=dict)
    applicable: dict[str, bool] = field(default_factory=dict)

    def asserted(self) -> dict[str, float]:
        """Bounds whose hypotheses hold and whose value is defined."""
        return {k: v for k, v in self.values.items() if self.applicable.get(k) and v is not None}

    def to_dict(self) -> dict:
        return {
            "inputs": self.inputs,
            "values": self.values,
            "applicable": self.applicable,
            "asymptotic_only": [k for k in ASYMPTOTIC_ONLY if k in self.values],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return dumps_fixed(self.to_dict(), indent)


def dumps_fixed(obj, indent: int | None = 2) -> str:
    """JSON with every float written with exactly six decimals."""

    def mark(x):
        if isinstance(x, float):
            return f"\x00{x:.6f}\x00"
        if isinstance(x, dict):
            return {k: mark(v) for k, v in x.items()}
        if isinstance(x, (list, tuple)):
            return [mark(v) for v in x]
        return x

    text = json.dumps(mark(obj), indent=indent)
    return re.sub(r'"\\u0000(-?\d+\.\d{6})\\u0000"', r"\1", text)


def eval_bounds(G: Graph, report: ClassReport | None = None) -> BoundReport:
    """Evaluate every bound for G, flagging which hypotheses G satisfies.

    P_t-dependent entries use the smallest t for which the class report
    proves P_t-freeness (at least 4, or 5 for the t-row table).
    """
    if report is None:
        report = classify(G)
    n, m, tri, delta, omega = G.n, G.m, report.triangle_count, report.max_degree, report.omega
    bd_free = report.bull_diamond_free
    pt_known = report.longest_induced_path < report.path_probe
    t = max(4, report.longest_induced_path + 1)
    inputs = {
        "n": n, "m": m, "triangles": tri, "max_degree": delta, "omega": omega,
        "bull_free": report.bull_free, "diamond_free": report.diamond_free,
        "triangle_free": report.triangle_free, "path_probe": report.path_probe,
        "longest_induced_path": report.longest_induced_path, "pt_free_t": t if pt_known else None,
    }
    out = BoundReport(inputs)
    v, a = out.values, out.applicable

    pt_n, pt_m = poljak_tuza(n, m)
    v["poljak_tuza_n"], v["poljak_tuza_m"] = pt_n, pt_m
    v["poljak_tuza"] = _min_defined(pt_n, pt_m)
    for key in ("poljak_tuza_n", "poljak_tuza_m", "poljak_tuza"):
        a[key] = report.triangle_free

    v["harris"] = harris(n, tri)
    a["harris"] = True

    sq, nl, mm = bull_diamond_nm(n, m)
    v["bull_diamond_sqrt_n"], v["bull_diamond_n_log"], v["bull_diamond_m"] = sq, nl, mm
    formula = _min_defined(sq, nl, mm)
    v["bull_diamond_nm"] = formula
    v["bull_diamond_nm_or_omega"] = max(float(omega), formula)
    for key in ("bull_diamond_sqrt_n", "bull_diamond_n_log", "bull_diamond_m", "bull_diamond_nm"):
        a[key] = False  # only the "omega-colorable or ..." disjunction is a bound
    a["bull_diamond_nm_or_omega"] = bd_free

    v["molloy_triangle_free"] = delta_over_log(delta)
    v["delta_bull_diamond"] = delta_over_log(delta, 2.0)
    a["molloy_triangle_free"] = a["delta_bull_diamond"] = False

    v["path_linear"] = float(max(2 * t - 4, omega))
    a["path_linear"] = bd_free and pt_known
    v["path_table"] = float(table_bound("pt", omega, max(5, t)))
    a["path_table"] = bd_free and pt_known
    gy, gr = path_binding(t, omega)
    v["gyarfas"], v["gravier_hoang_maffray"] = float(gy), float(gr)
    a["gyarfas"] = a["gravier_hoang_maffray"] = pt_known

    v["star_table"] = float(table_bound("k1r", omega, delta + 1))
    a["star_table"] = bd_free
    return out
