"""Command-line entry point: ``chibound <command> ...``.

Every command prints one JSON report (``--plain`` gives a short text form).
Exit codes: 0 success, 1 a check failed, 2 bad usage or malformed input,
3 the graph is outside the required class, 4 a size limit or internal
structural check stopped the run.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import __version__
from .acceptance import DEFAULT_SEED, run_suite
from .bounds import dumps_fixed, eval_bounds
from .coloring import COLORERS, TriangleFreeColorer
from .decomposition import clique_layering, verify_lemma31
from .errors import BudgetExceeded, ClassViolation, DeskLimitExceeded, GraphError, StructureError
from .gen import SamplerSpec, SamplingFailed, sample
from .graph import component_masks
from .io import format_edge_list, read_graph, write_graph
from .oracle import chromatic_number_exact, clique_number, verify_coloring
from .recognition import classify

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_CLASS, EXIT_LIMIT = 0, 1, 2, 3, 4


class _Fail(Exception):
    def __init__(self, code: int, message: str, extra: dict | None = None):
        self.code = code
        self.extra = extra or {}
        super().__init__(message)


def _load(path: str, fmt: str | None):
    try:
        text = Path(path).read_bytes()
    except OSError as exc:
        raise _Fail(EXIT_INPUT, f"cannot read {path}: {exc.strerror}")
    return read_graph(path, fmt), hashlib.sha256(text).hexdigest()


# -- commands: each returns (output dict, plain text, exit code) -----------------------

def cmd_classify(args, G):
    r = classify(G, args.probe)
    d = r.to_dict()
    plain = "\n".join(f"{k}={json.dumps(v)}" for k, v in d.items() if k != "witnesses")
    return d, plain, EXIT_OK


def cmd_decompose(args, G):
    parts = []
    for comp in component_masks(G):
        H, labels = G.induced_subgraph(comp)
        entry = {"vertices": list(labels), "omega": clique_number(H)}
        if entry["omega"] > 2:
            L = clique_layering(H)
            back = {i: v for i, v in enumerate(labels)}
            d = L.to_dict()
            d["K"] = [back[v] for v in d["K"]]
            d["W"] = {i: [back[v] for v in vs] for i, vs in d["W"].items()}
            d["layers"] = [[back[v] for v in layer] for layer in d["layers"]]
            rep = verify_lemma31(H, L)
            d["checks"] = {"ok": rep.ok, "checked": rep.checked,
                           "failures": {k: [back[v] for v in w] for k, w in rep.failures.items()}}
            entry.update(d)
        else:
            entry["case"] = "triangle_free"
        parts.append(entry)
    plain = "\n".join(f"component {p['vertices'][0]}: omega={p['omega']} case={p['case']}"
                      + (f" K={p['K']} layer_sizes={p['layer_sizes']}" if "K" in p else "")
                      for p in parts)
    ok = all(p.get("checks", {}).get("ok", True) for p in parts)
    return {"components": parts}, plain, EXIT_OK if ok else EXIT_CHECK


def cmd_color(args, G):
    colorer = COLORERS[args.theorem]
    c = colorer(G, TriangleFreeColorer(args.tf_strategy, args.k))
    check = verify_coloring(G, c)
    out = {"palette": c.palette, "certificate": c.certificate.to_dict(),
           "assignment": list(c.assignment), "proper": check.ok}
    plain = f"palette={c.palette} theorem={c.certificate.theorem} bound={c.certificate.claimed_bound}\n" \
            + " ".join(map(str, c.assignment))
    return out, plain, EXIT_OK if check.ok else EXIT_CHECK


def cmd_chi(args, G):
    k, c = chromatic_number_exact(G, args.limit)
    out = {"chi": k, "omega": clique_number(G), "assignment": list(c.assignment)}
    return out, str(k), EXIT_OK


def cmd_bounds(args, G):
    rep = eval_bounds(G, classify(G, args.probe))
    d = rep.to_dict()
    lines = [f"{k}={'undefined' if v is None else f'{v:.6f}'}{'' if rep.applicable[k] else ' (not asserted)'}"
             for k, v in rep.values.items()]
    return d, "\n".join(lines), EXIT_OK


def _read_colors(path: str) -> list[int]:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        try:
            return [int(tok) for tok in text.split()]
        except ValueError as exc:
            raise _Fail(EXIT_INPUT, f"{path}: expected JSON or whitespace-separated colors ({exc})")
    if isinstance(data, dict):
        data = data.get("assignment", data.get("output", {}).get("assignment"))
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise _Fail(EXIT_INPUT, f"{path}: no integer color list found")
    return data


def cmd_verify(args, G):
    colors = _read_colors(args.coloring)
    check = verify_coloring(G, colors)
    out = {"proper": check.ok, "monochromatic_edges": [list(e) for e in check.monochromatic_edges],
           "uncolored": check.uncolored, "colors_used": len({c for c in colors if c})}
    plain = "proper" if check.ok else f"improper: {len(check.monochromatic_edges)} monochromatic edges, " \
                                      f"{len(check.uncolored)} uncolored vertices"
    return out, plain, EXIT_OK if check.ok else EXIT_CHECK


def cmd_sample(args):
    spec = SamplerSpec(args.n, args.p, tuple(args.forbid.split(",")), args.seed, args.max_attempts,
                       args.connect, args.clique, model=args.model)
    G = sample(spec)
    out = {"n": G.n, "m": G.m, "family": list(spec.family), "seed": spec.seed}
    if args.out:
        write_graph(G, args.out)
        out["written"] = args.out
        plain = f"wrote {args.out} (n={G.n}, m={G.m})"
    else:
        out["edges"] = [list(e) for e in G.edges()]
        plain = format_edge_list(G).rstrip()
    return out, plain, EXIT_OK


def cmd_suite(args):
    only = [int(x) for x in args.only.split(",")] if args.only else None
    results = run_suite(args.seed, only)
    out = {"seed": args.seed, "passed": all(r.passed for r in results),
           "criteria": [r.to_dict() for r in results]}
    plain = "\n".join(r.line() for r in results)
    return out, plain, EXIT_OK if out["passed"] else EXIT_CHECK


# -- parser -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--plain", action="store_true", help="short text output instead of JSON")
    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("graph", help="graph file (edge list or DIMACS)")
    graph.add_argument("--format", choices=["edges", "dimacs"], default=None,
                       help="input format (sniffed when omitted)")

    p = argparse.ArgumentParser(prog="chibound", description="Recognize, decompose and color "
                                "(bull, diamond)-free graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", parents=[common, graph], help="forbidden-pattern report")
    s.add_argument("--probe", type=int, default=7, help="longest induced path length probed")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("decompose", parents=[common, graph], help="clique layering per component")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("color", parents=[common, graph], help="constructive coloring with certificate")
    s.add_argument("--theorem", choices=sorted(COLORERS), default="auto")
    s.add_argument("--tf-strategy", choices=["exact", "dsatur"], default="exact",
                   help="subroutine for triangle-free pieces")
    s.add_argument("--k", type=int, default=None, help="color budget for triangle-free pieces")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("chi", parents=[common, graph], help="exact chromatic number")
    s.add_argument("--exact", action="store_true", help="accepted for clarity; chi is always exact")
    s.add_argument("--limit", type=int, default=None, help="vertex cap (default 40 or CHIBOUND_DESK_LIMIT)")
    s.set_defaults(func=cmd_chi)

    s = sub.add_parser("bounds", parents=[common, graph], help="closed-form chromatic bounds")
    s.add_argument("--probe", type=int, default=7)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("verify", parents=[common, graph], help="check a coloring file")
    s.add_argument("coloring", help="JSON (list or color output) or whitespace-separated colors")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("sample", parents=[common], help="seeded random class member")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=float, required=True)
    s.add_argument("--forbid", default="bull,diamond", help="comma list from bull,diamond,triangle,paw,P5,P6,P7")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-attempts", type=int, default=100)
    s.add_argument("--connect", action="store_true", help="require a connected graph")
    s.add_argument("--clique", type=int, default=0, help="planted clique size (blocks: max block size)")
    s.add_argument("--model", choices=["er", "blocks"], default="er")
    s.add_argument("--out", default=None, help="write the graph here (.edges, or .col for DIMACS)")
    s.set_defaults(func=cmd_sample, no_graph=True)

    s = sub.add_parser("suite", parents=[common], help="run the acceptance battery")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--only", default=None, help="comma list of criterion numbers")
    s.set_defaults(func=cmd_suite, no_graph=True)
    return p


def run(argv=None) -> tuple[dict, int]:
    """Run one command; returns the report and the exit code (also prints)."""
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    report = {"command": ["chibound"] + list(sys.argv[1:] if argv is None else argv)}
    plain = ""
    try:
        if getattr(args, "no_graph", False):
            out, plain, code = args.func(args)
        else:
            G, digest = _load(args.graph, args.format)
            report["input_digest"] = f"sha256:{digest}"
            out, plain, code = args.func(args, G)
        report["output"] = out
    except _Fail as exc:
        code, report["error"] = exc.code, str(exc)
    except ClassViolation as exc:
        code = EXIT_CLASS
        report["error"] = str(exc)
        report["violation"] = {"pattern": exc.pattern, "witness": list(exc.witness)}
    except (GraphError, ValueError, SamplingFailed) as exc:
        if isinstance(exc, (DeskLimitExceeded, BudgetExceeded)):
            code = EXIT_LIMIT
        else:
            code = EXIT_INPUT
        report["error"] = str(exc)
    except StructureError as exc:
        code, report["error"] = EXIT_LIMIT, f"internal structural check failed: {exc}"
        report["witness"] = list(exc.witness)
    report["seconds"] = round(time.perf_counter() - start, 3)
    report["exit_code"] = code
    if args.plain:
        print(plain if "error" not in report else f"error: {report['error']}",
              file=sys.stdout if "error" not in report else sys.stderr)
    else:
        print(dumps_fixed(report) if args.command == "bounds" else json.dumps(report, indent=2))
    return report, code


def main(argv=None) -> int:
    return run(argv)[1]


if __name__ == "__main__":
    sys.exit(main())
