"""The .gsg plain-text format.

A document is::

    GSG 1
    dim 2
    lower 0 0
    conductor 4 4
    0 0
    2 2
    3 3
    4 4

Header lines give the format version, the dimension h, the lower bound and
the conductor bound; each following line is one member of the window
[lower, conductor], in strictly increasing lexicographic order. The conductor
row must be present. Lines starting with ``#`` are comments. Several
documents in one stream are separated by a line ``---``.
"""
from __future__ import annotations

from typing import Iterator, List, Tuple

from .lattice import Point
from .truncated import GoodSemigroupError, TruncatedSet

MAGIC = "GSG"
VERSION = 1
SEPARATOR = "---"


class FormatError(GoodSemigroupError, ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        self.reason = message
        super().__init__(f"line {line}, column {column}: {message}")


def _ints(tokens: List[Tuple[int, str]], lineno: int) -> Point:
    out = []
    for col, tok in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            raise FormatError(f"expected an integer, got {tok!r}", lineno, col) from None
    return tuple(out)


def _tokens(line: str) -> List[Tuple[int, str]]:
    out, col = [], 0
    for part in line.split():
        col = line.index(part, col)
        out.append((col + 1, part))
        col += len(part)
    return out


def parse(text: str, first_line: int = 1) -> TruncatedSet:
    rows = []
    for k, raw in enumerate(text.splitlines()):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        rows.append((first_line + k, line))
    if not rows:
        raise FormatError("empty document", first_line)

    def header(pos: int, key: str):
        if pos >= len(rows):
            raise FormatError(f"missing '{key}' line", rows[-1][0] + 1)
        lineno, line = rows[pos]
        toks = _tokens(line)
        if toks[0][1] != key:
            raise FormatError(f"expected '{key}', got {toks[0][1]!r}", lineno, toks[0][0])
        return lineno, toks[1:]

    lineno, rest = header(0, MAGIC)
    if len(rest) != 1 or rest[0][1] != str(VERSION):
        col = rest[0][0] if rest else len(rows[0][1]) + 1
        raise FormatError(f"unsupported format version (expected {VERSION})", lineno, col)
    lineno, rest = header(1, "dim")
    if len(rest) != 1:
        raise FormatError("'dim' takes one integer", lineno, rest[1][0] if len(rest) > 1 else 4)
    (h,) = _ints(rest, lineno)
    if h < 1:
        raise FormatError("dimension must be >= 1", lineno, rest[0][0])
    bounds = []
    for pos, key in ((2, "lower"), (3, "conductor")):
        lineno, rest = header(pos, key)
        if len(rest) != h:
            raise FormatError(f"'{key}' needs {h} integers, got {len(rest)}", lineno, len(key) + 2)
        bounds.append(_ints(rest, lineno))
    lower, conductor = bounds
    if any(l > c for l, c in zip(lower, conductor)):
        raise FormatError("invariant violated: lower is not <= conductor", rows[3][0])
    points = []
    prev = None
    for lineno, line in rows[4:]:
        toks = _tokens(line)
        if len(toks) != h:
            raise FormatError(f"point needs {h} integers, got {len(toks)}", lineno, toks[min(h, len(toks) - 1)][0])
        p = _ints(toks, lineno)
        if any(x < l or x > c for x, l, c in zip(p, lower, conductor)):
            raise FormatError(f"invariant violated: point {p} outside window", lineno)
        if prev is not None:
            if p == prev:
                raise FormatError(f"invariant violated: duplicate point {p}", lineno)
            if p < prev:
                raise FormatError(f"invariant violated: point {p} out of lexicographic order", lineno)
        points.append(p)
        prev = p
    if not points or points[-1] != conductor:
        raise FormatError("conductor element absent", rows[-1][0])
    return TruncatedSet.from_points(lower, conductor, points)


def parse_many(text: str) -> Iterator[TruncatedSet]:
    chunk: List[str] = []
    start = 1
    for k, line in enumerate(text.splitlines(), start=1):
        if line.strip() == SEPARATOR:
            if any(l.strip() and not l.lstrip().startswith("#") for l in chunk):
                yield parse("\n".join(chunk), start)
            chunk, start = [], k + 1
        else:
            chunk.append(line)
    if any(l.strip() and not l.lstrip().startswith("#") for l in chunk):
        yield parse("\n".join(chunk), start)


def serialize(T: TruncatedSet) -> str:
    lines = [f"{MAGIC} {VERSION}", f"dim {T.dim}",
             "lower " + " ".join(map(str, T.lower)),
             "conductor " + " ".join(map(str, T.conductor))]
    lines += [" ".join(map(str, p)) for p in T.small]
    return "\n".join(lines) + "\n"


def serialize_many(sets) -> str:
    return f"{SEPARATOR}\n".join(serialize(T) for T in sets)


def read(path: str) -> TruncatedSet:
    import sys

    if path == "-":
        return parse(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def write(T: TruncatedSet, path: str) -> None:
    import sys

    text = serialize(T)
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
