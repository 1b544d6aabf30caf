"""Dot-grid pictures of subsets of Z^2.

Members of the base set are drawn as filled dots, members of the overlay that
are not in the base as open dots.
"""
from __future__ import annotations

from typing import Optional, Tuple

from .truncated import GoodSemigroupError, TruncatedSet

SCALE = 24  # pixels per lattice unit
RADIUS = 5
MARGIN = 32

FILLED = "#"
OPEN = "o"
EMPTY = "."


class RenderError(GoodSemigroupError, ValueError):
    pass


def _extent(base: TruncatedSet, overlay: Optional[TruncatedSet], pad: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    if base.dim != 2 or (overlay is not None and overlay.dim != 2):
        raise RenderError("rendering needs h = 2")
    sets = [base] + ([overlay] if overlay is not None else [])
    lo = tuple(min([0] + [T.lower[k] for T in sets]) for k in range(2))
    hi = tuple(max(T.conductor[k] for T in sets) + pad for k in range(2))
    return lo, hi


def markers(base: TruncatedSet, overlay: Optional[TruncatedSet] = None, pad: int = 2):
    """(filled, open) point lists inside the drawing window."""
    lo, hi = _extent(base, overlay, pad)
    filled = base.members(lo, hi)
    opened = []
    if overlay is not None:
        fs = set(filled)
        opened = [p for p in overlay.members(lo, hi) if p not in fs]
    return lo, hi, filled, opened


def render_ascii(base: TruncatedSet, overlay: Optional[TruncatedSet] = None, pad: int = 2) -> str:
    lo, hi, filled, opened = markers(base, overlay, pad)
    fs, os_ = set(filled), set(opened)
    width = max(len(str(lo[1])), len(str(hi[1])))
    lines = []
    for y in range(hi[1], lo[1] - 1, -1):
        cells = []
        for x in range(lo[0], hi[0] + 1):
            p = (x, y)
            cells.append(FILLED if p in fs else OPEN if p in os_ else EMPTY)
        lines.append(f"{y:>{width}} | " + " ".join(cells))
    lines.append(" " * width + " +-" + "--" * (hi[0] - lo[0] + 1))
    labels = " ".join(str(x % 10) for x in range(lo[0], hi[0] + 1))
    lines.append(" " * width + "   " + labels)
    return "\n".join(lines) + "\n"


def render_svg(base: TruncatedSet, overlay: Optional[TruncatedSet] = None, pad: int = 2) -> str:
    lo, hi, filled, opened = markers(base, overlay, pad)
    w = (hi[0] - lo[0]) * SCALE + 2 * MARGIN
    h = (hi[1] - lo[1]) * SCALE + 2 * MARGIN

    def X(x):
        return MARGIN + (x - lo[0]) * SCALE

    def Y(y):
        return h - MARGIN - (y - lo[1]) * SCALE

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
           f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>',
           '<g stroke="#bbbbbb" stroke-width="0.5">']
    for x in range(lo[0], hi[0] + 1):
        out.append(f'<line x1="{X(x)}" y1="{Y(lo[1])}" x2="{X(x)}" y2="{Y(hi[1])}"/>')
    for y in range(lo[1], hi[1] + 1):
        out.append(f'<line x1="{X(lo[0])}" y1="{Y(y)}" x2="{X(hi[0])}" y2="{Y(y)}"/>')
    out.append("</g>")
    out.append('<g stroke="black" stroke-width="1.5">')
    out.append(f'<line x1="{X(lo[0])}" y1="{Y(0)}" x2="{X(hi[0])}" y2="{Y(0)}"/>')
    out.append(f'<line x1="{X(0)}" y1="{Y(lo[1])}" x2="{X(0)}" y2="{Y(hi[1])}"/>')
    out.append("</g>")
    out.append('<g font-family="sans-serif" font-size="10" text-anchor="middle">')
    for x in range(lo[0], hi[0] + 1):
        out.append(f'<text x="{X(x)}" y="{Y(lo[1]) + 16}">{x}</text>')
    for y in range(lo[1], hi[1] + 1):
        out.append(f'<text x="{X(lo[0]) - 14}" y="{Y(y) + 4}">{y}</text>')
    out.append("</g>")
    out.append('<g stroke="black" stroke-width="1">')
    for x, y in filled:
        out.append(f'<circle cx="{X(x)}" cy="{Y(y)}" r="{RADIUS}" fill="black"/>')
    for x, y in opened:
        out.append(f'<circle cx="{X(x)}" cy="{Y(y)}" r="{RADIUS}" fill="white"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
