"""Digraph TSV, matrix CSV and spectrum JSON formats.

Digraph TSV::

    # comment
    n b
    i j w        (0-based indices, decimal weight)

Numbers are parsed with :class:`fractions.Fraction`, so ``0.3`` is stored as
``3/10`` exactly and no renormalization ever happens.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from .errors import DuplicateArc, GraphError, ParseError
from .graph import WeightedDigraph, new_digraph
from .linalg import Spectrum


def _read_text(path) -> tuple[str, str]:
    return Path(path).read_text(encoding="utf-8"), str(path)


def _number(token: str, line: int, col: int, path, integer=False):
    try:
        if integer:
            return int(token)
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        kind = "integer" if integer else "number"
        raise ParseError(f"expected {kind}, got {token!r}", line, col, path) from None


def _tokens(text: str):
    """Yield (line number, [(column, token), ...]) for non-blank lines."""
    for ln, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        toks = []
        col = 0
        for part in body.replace("\t", " ").split(" "):
            if part:
                toks.append((col + 1, part))
            col += len(part) + 1
        yield ln, toks


def read_digraph(path) -> WeightedDigraph:
    return parse_digraph(*_read_text(path))


def parse_digraph(text: str, path: str | None = None) -> WeightedDigraph:
    """Parse digraph TSV text; ``path`` only decorates error messages."""
    lines = list(_tokens(text))
    if not lines:
        raise ParseError("empty digraph file", None, None, path)
    ln, head = lines[0]
    if len(head) != 2:
        raise ParseError(f"header must be 'n b', got {len(head)} fields", ln, 1, path)
    n = _number(head[0][1], ln, head[0][0], path, integer=True)
    b = _number(head[1][1], ln, head[1][0], path)
    if b.denominator == 1:
        b = int(b)
    arcs = []
    seen = set()
    for ln, toks in lines[1:]:
        if len(toks) != 3:
            raise ParseError(f"arc line needs 'i j w', got {len(toks)} fields", ln, 1, path)
        i = _number(toks[0][1], ln, toks[0][0], path, integer=True)
        j = _number(toks[1][1], ln, toks[1][0], path, integer=True)
        w = _number(toks[2][1], ln, toks[2][0], path)
        arc = (i, j, int(w) if w.denominator == 1 else w)
        try:
            new_digraph(n, [arc], b)
            if (i, j) in seen:
                raise DuplicateArc(f"arc ({i}, {j}) given twice")
        except GraphError as exc:
            raise ParseError(str(exc), ln, None, path) from exc
        seen.add((i, j))
        arcs.append(arc)
    try:
        return new_digraph(n, arcs, b)
    except GraphError as exc:
        raise ParseError(str(exc), None, None, path) from exc


def format_digraph(g: WeightedDigraph) -> str:
    lines = [f"{g.n} {g.b}"]
    lines += [f"{i} {j} {_decimal(w)}" for i, j, w in g.arcs]
    return "\n".join(lines) + "\n"


def _decimal(x) -> str:
    """Decimal text for a weight; Fractions without a finite decimal
    expansion are written as ``p/q``, which :func:`parse_digraph` accepts."""
    if isinstance(x, Fraction):
        d = x.denominator
        for p in (2, 5):
            while d % p == 0:
                d //= p
        if d != 1:
            return f"{x.numerator}/{x.denominator}"
        digits = 0
        while (x * 10 ** digits).denominator != 1:
            digits += 1
        sign = "-" if x < 0 else ""
        scaled = abs(x.numerator) * 10 ** digits // x.denominator
        whole, frac = divmod(scaled, 10 ** digits)
        return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"
    if isinstance(x, float):
        return repr(x)
    return str(x)


def write_digraph(g: WeightedDigraph, path) -> None:
    Path(path).write_text(format_digraph(g), encoding="utf-8")


def read_matrix(path, exact: bool = False) -> np.ndarray:
    text, p = _read_text(path)
    return parse_matrix(text, exact, p)


def parse_matrix(text: str, exact: bool = False, path: str | None = None) -> np.ndarray:
    """Parse CSV text (n lines of n entries); Fractions when ``exact``."""
    rows = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        row = []
        col = 1
        for tok in raw.split(","):
            t = tok.strip()
            try:
                row.append(Fraction(t) if exact else float(t))
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad matrix entry {t!r}", ln, col, path) from None
            col += len(tok) + 1
        rows.append((ln, row))
    if not rows:
        raise ParseError("empty matrix file", None, None, path)
    n = len(rows)
    for ln, row in rows:
        if len(row) != n:
            raise ParseError(f"expected {n} entries, got {len(row)}", ln, None, path)
    if exact:
        out = np.empty((n, n), dtype=object)
        for i, (_, row) in enumerate(rows):
            out[i, :] = row
        return out
    return np.array([r for _, r in rows], dtype=np.float64)


def format_matrix(m) -> str:
    a = np.asarray(getattr(m, "matrix", m))
    return "\n".join(",".join(repr(float(x)) for x in row) for row in a) + "\n"


def write_matrix(m, path) -> None:
    Path(path).write_text(format_matrix(m), encoding="utf-8")


def spectrum_json(spec: Spectrum) -> str:
    return json.dumps(spec.to_records(), indent=2)
