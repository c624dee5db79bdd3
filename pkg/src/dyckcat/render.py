"""Text and SVG drawings of a path's height profile."""

from __future__ import annotations

from itertools import accumulate

from .paths import Path

__all__ = ["render_ascii", "render_svg"]

CELL = 20
MARGIN = 20


def render_ascii(p: Path) -> str:
    """One column per step, highest row first.

    ``/`` and ``\\`` are unit rises and falls, ``_`` a flat step and a column
    of ``|`` a catastrophe.
    """
    pts = tuple(accumulate(p, initial=0))
    lo = min(pts)
    # a flat step at height h is drawn in row h, so it needs a row above it
    hi = max(max(pts), lo + 1, *(pts[i] + 1 for i, s in enumerate(p) if s == 0))
    grid = [[" "] * len(p) for _ in range(hi - lo)]
    for col, s in enumerate(p):
        h = pts[col]
        if s == 1:
            grid[h - lo][col] = "/"
        elif s == 0:
            grid[h - lo][col] = "_"
        elif s == -1:
            grid[h - 1 - lo][col] = "\\"
        else:
            for row in range(h + s, h):
                grid[row - lo][col] = "|"
    if not p:
        return "\n"
    return "".join("".join(row).rstrip() + "\n" for row in reversed(grid))


def render_svg(p: Path) -> str:
    """A self-contained SVG with a unit grid; catastrophes are labelled ``D_i``."""
    pts = tuple(accumulate(p, initial=0))
    lo = min(pts)
    hi = max(max(pts), lo + 1)
    width = max(len(p), 1)
    w = width * CELL + 2 * MARGIN
    h = (hi - lo) * CELL + 2 * MARGIN

    def xy(i: int, y: int) -> tuple[int, int]:
        return MARGIN + i * CELL, MARGIN + (hi - y) * CELL

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>',
        '<g stroke="#cccccc" stroke-width="1">',
    ]
    for i in range(width + 1):
        x0, y0 = xy(i, hi)
        _, y1 = xy(i, lo)
        out.append(f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}"/>')
    for y in range(lo, hi + 1):
        x0, yy = xy(0, y)
        x1, _ = xy(width, y)
        out.append(f'<line x1="{x0}" y1="{yy}" x2="{x1}" y2="{yy}"/>')
    out.append("</g>")
    ax0, ay = xy(0, 0)
    ax1, _ = xy(width, 0)
    _, ytop = xy(0, hi)
    out.append(f'<line x1="{ax0}" y1="{ay}" x2="{ax1}" y2="{ay}" stroke="black" stroke-width="2"/>')
    out.append(f'<line x1="{ax0}" y1="{ay}" x2="{ax0}" y2="{ytop}" stroke="black" stroke-width="2"/>')
    if p:
        coords = " ".join("%d,%d" % xy(i, y) for i, y in enumerate(pts))
        out.append(f'<polyline points="{coords}" fill="none" stroke="black" stroke-width="3"/>')
        for i, y in enumerate(pts):
            cx, cy = xy(i, y)
            out.append(f'<circle cx="{cx}" cy="{cy}" r="3" fill="black"/>')
        for i, s in enumerate(p):
            if s <= -2:
                tx, ty = xy(i, pts[i])
                out.append(
                    f'<text x="{tx + CELL // 2 + 4}" y="{ty}" font-family="serif" font-size="14">'
                    f'D<tspan baseline-shift="sub" font-size="10">{-s}</tspan></text>'
                )
    out.append("</svg>")
    return "\n".join(out) + "\n"
