"""Reading and writing graphs as DIMACS text or plain edge lists.

DIMACS: ``p edge n m`` then ``e u v`` lines with 1-based vertices; ``c`` lines
are comments. Edge list: one ``u v`` pair per line, 0-based, ``#`` starts a
comment. Writers put a ``# n <count>`` header in edge lists so isolated
vertices survive a round trip; the reader honours it when present.
"""
from __future__ import annotations

import re
from pathlib import Path

from .errors import GraphError
from .graph import Graph, build_graph

_N_HEADER = re.compile(r"#\s*n\s*[=:]?\s*(\d+)\s*$")


def _fail(source: str, lineno: int, col: int, message: str):
    raise GraphError(f"{source}:{lineno}:{col}: {message}")


def _int_token(source, lineno, line, token, start=0):
    col = line.index(token, start) + 1
    try:
        return int(token), col
    except ValueError:
        _fail(source, lineno, col, f"expected an integer, found {token!r}")


def parse_dimacs(text: str, source: str = "<dimacs>") -> Graph:
    n = None
    declared_m = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        tokens = stripped.split()
        if tokens[0] == "p":
            if n is not None:
                _fail(source, lineno, 1, "duplicate problem line")
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                _fail(source, lineno, 1, "problem line must read 'p edge <n> <m>'")
            n, _ = _int_token(source, lineno, line, tokens[2], line.index(tokens[1]) + len(tokens[1]))
            declared_m, _ = _int_token(source, lineno, line, tokens[3], line.rindex(tokens[3]))
        elif tokens[0] == "e":
            if n is None:
                _fail(source, lineno, 1, "edge line before the problem line")
            if len(tokens) != 3:
                _fail(source, lineno, 1, "edge line must read 'e <u> <v>'")
            u, cu = _int_token(source, lineno, line, tokens[1], 1)
            v, cv = _int_token(source, lineno, line, tokens[2], cu + len(tokens[1]) - 1)
            for x, col in ((u, cu), (v, cv)):
                if not 1 <= x <= n:
                    _fail(source, lineno, col, f"vertex {x} outside 1..{n}")
            if u == v:
                _fail(source, lineno, cu, f"self-loop at vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            _fail(source, lineno, 1, f"unknown line type {tokens[0]!r}")
    if n is None:
        raise GraphError(f"{source}: missing 'p edge <n> <m>' line")
    G = build_graph(n, edges)
    if declared_m is not None and declared_m not in (G.m, len(edges)):
        raise GraphError(f"{source}: problem line declares {declared_m} edges, found {G.m}")
    return G


def parse_edge_list(text: str, source: str = "<edges>") -> Graph:
    n = None
    edges = []
    top = -1
    for lineno, line in enumerate(text.splitlines(), start=1):
        header = _N_HEADER.match(line.strip())
        if header:
            n = int(header.group(1))
            continue
        body = line.split("#", 1)[0]
        tokens = body.split()
        if not tokens:
            continue
        if len(tokens) != 2:
            _fail(source, lineno, line.index(tokens[0]) + 1, "expected exactly two vertices per line")
        u, cu = _int_token(source, lineno, line, tokens[0])
        v, cv = _int_token(source, lineno, line, tokens[1], cu + len(tokens[0]) - 1)
        for x, col in ((u, cu), (v, cv)):
            if x < 0:
                _fail(source, lineno, col, f"negative vertex {x}")
            if n is not None and x >= n:
                _fail(source, lineno, col, f"vertex {x} outside 0..{n - 1}")
        if u == v:
            _fail(source, lineno, cu, f"self-loop at vertex {u}")
        edges.append((u, v))
        top = max(top, u, v)
    return build_graph(top + 1 if n is None else n, edges)


def looks_like_dimacs(text: str) -> bool:
    for line in text.splitlines():
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            return stripped.startswith(("p ", "c ", "e ")) or stripped in ("c", "p")
    return False


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    """Read a graph file; the format is sniffed from the content unless given."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise GraphError(f"{path}: {exc.strerror}") from exc
    if fmt is None:
        fmt = "dimacs" if looks_like_dimacs(text) else "edges"
    if fmt == "dimacs":
        return parse_dimacs(text, str(path))
    if fmt == "edges":
        return parse_edge_list(text, str(path))
    raise GraphError(f"unknown graph format {fmt!r}")


def format_dimacs(G: Graph) -> str:
    lines = [f"p edge {G.n} {G.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def format_edge_list(G: Graph) -> str:
    lines = [f"# n {G.n}"]
    lines += [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def write_graph(G: Graph, path: str | Path, fmt: str | None = None) -> None:
    path = Path(path)
    if fmt is None:
        fmt = "dimacs" if path.suffix in (".col", ".dimacs") else "edges"
    text = format_dimacs(G) if fmt == "dimacs" else format_edge_list(G)
    path.write_text(text)
