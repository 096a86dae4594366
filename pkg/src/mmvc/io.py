"""Text formats: the edge-list graph format and DIMACS cnf.

Graph files look like::

    c optional comments
    p 4 3
    e 1 2
    e 2 3
    e 3 4

Vertices are 1-indexed on disk and 0-indexed in memory.
"""

from __future__ import annotations

from collections.abc import Iterator
from pathlib import Path

from mmvc.errors import ParseError
from mmvc.graph import Graph
from mmvc.reductions import CnfFormula


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if tokens and tokens[0] != "c":
            yield lineno, tokens


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, tokens in _lines(text):
        head = tokens[0]
        if head == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno)
            args = tokens[1:]
            if args and args[0] == "edge":
                args = args[1:]
            if len(args) != 2:
                raise ParseError("header must be 'p <n> <m>'", lineno)
            n, m = (_int(a, lineno) for a in args)
            if n < 0 or m < 0:
                raise ParseError("negative counts in header", lineno)
        elif head == "e":
            if n is None:
                raise ParseError("edge before header", lineno)
            if len(tokens) != 3:
                raise ParseError("edge line must be 'e <u> <v>'", lineno)
            u, v = (_int(a, lineno) for a in tokens[1:])
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex out of range 1..{n}", lineno)
            if u == v:
                raise ParseError("self-loop", lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(f"duplicate edge {u} {v}", lineno)
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {head!r}", lineno)
    if n is None:
        raise ParseError("missing 'p <n> <m>' header")
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    return Graph(n, edges)


def format_graph(g: Graph, comment: str | None = None) -> str:
    out = [f"c {line}" for line in comment.splitlines()] if comment else []
    out.append(f"p {g.n} {g.m}")
    out += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


def parse_cnf(text: str) -> CnfFormula:
    n = m = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for lineno, tokens in _lines(text):
        if tokens[0] == "%":  # SATLIB trailer
            break
        if tokens[0] == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno)
            if len(tokens) != 4 or tokens[1] != "cnf":
                raise ParseError("header must be 'p cnf <n> <m>'", lineno)
            n, m = _int(tokens[2], lineno), _int(tokens[3], lineno)
            if n < 0 or m < 0:
                raise ParseError("negative counts in header", lineno)
            continue
        if n is None:
            raise ParseError("clause before header", lineno)
        for tok in tokens:
            lit = _int(tok, lineno)
            if lit == 0:
                clauses.append(current)
                current = []
            elif abs(lit) > n:
                raise ParseError(f"literal {lit} exceeds variable count {n}", lineno)
            else:
                current.append(lit)
    if n is None:
        raise ParseError("missing 'p cnf <n> <m>' header")
    if current:
        raise ParseError("last clause is not terminated by 0")
    if len(clauses) != m:
        raise ParseError(f"header declares {m} clauses, found {len(clauses)}")
    return CnfFormula.from_ints(n, clauses)


def format_cnf(cnf: CnfFormula, comment: str | None = None) -> str:
    out = [f"c {line}" for line in comment.splitlines()] if comment else []
    out.append(f"p cnf {cnf.var_count} {cnf.m}")
    out += [" ".join(map(str, c + [0])) for c in cnf.to_ints()]
    return "\n".join(out) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_graph(g, comment))


def read_cnf(path: str | Path) -> CnfFormula:
    return parse_cnf(Path(path).read_text())


def write_cnf(cnf: CnfFormula, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_cnf(cnf, comment))
