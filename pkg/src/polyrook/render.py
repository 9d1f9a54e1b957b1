"""Static ASCII and SVG drawings of polyominoes with optional overlays."""

from __future__ import annotations

from typing import Iterable, Optional

from .errors import OverlayOutOfRange
from .grid import Cell, Point, Polyomino

SVG_SCALE = 24


def _check_overlays(
    p: Polyomino,
    facet_verts: Optional[Iterable[Point]],
    rook_cells: Optional[Iterable[Cell]],
    step_corners: Optional[Iterable[Point]],
):
    fv = [tuple(v) for v in facet_verts] if facet_verts else []
    rc = [tuple(c) for c in rook_cells] if rook_cells else []
    sc = [tuple(v) for v in step_corners] if step_corners else []
    for v in fv:
        if v not in p.vertices:
            raise OverlayOutOfRange(f"facet vertex {v} is not a vertex of P")
    for c in rc:
        if c not in p.cells:
            raise OverlayOutOfRange(f"rook cell {c} is not a cell of P")
    for v in sc:
        if v not in p.vertices:
            raise OverlayOutOfRange(f"step corner {v} is not a vertex of P")
    return fv, rc, sc


def render_ascii(
    p: Polyomino,
    facet_verts: Optional[Iterable[Point]] = None,
    rook_cells: Optional[Iterable[Cell]] = None,
    step_corners: Optional[Iterable[Point]] = None,
) -> str:
    """Cells as boxes, holes blank; facet vertices '*', step corners 'S',
    rooks 'R'."""
    fv, rc, sc = _check_overlays(p, facet_verts, rook_cells, step_corners)
    lo_i = min(i for i, _ in p.vertices)
    hi_i = max(i for i, _ in p.vertices)
    lo_j = min(j for _, j in p.vertices)
    hi_j = max(j for _, j in p.vertices)

    width = 3 * (hi_i - lo_i) + 1
    height = 2 * (hi_j - lo_j) + 1
    art = [[" "] * width for _ in range(height)]

    def vpos(v: Point) -> tuple[int, int]:
        return (2 * (hi_j - v[1]), 3 * (v[0] - lo_i))

    for (a, b) in p.edges:
        (r1, c1), (r2, c2) = vpos(a), vpos(b)
        if r1 == r2:
            for c in range(min(c1, c2) + 1, max(c1, c2)):
                art[r1][c] = "-"
        else:
            art[(r1 + r2) // 2][c1] = "|"
    for v in p.vertices:
        r, c = vpos(v)
        art[r][c] = "+"
    for cell in p.cells:
        r, c = vpos((cell[0], cell[1] + 1))  # upper-left corner
        art[r + 1][c + 1] = art[r + 1][c + 2] = "#"
    for cell in rc:
        r, c = vpos((cell[0], cell[1] + 1))
        art[r + 1][c + 1] = "R"
        art[r + 1][c + 2] = " "
    for v in fv:
        r, c = vpos(v)
        art[r][c] = "*"
    for v in sc:
        r, c = vpos(v)
        art[r][c] = "S"
    return "\n".join("".join(row).rstrip() for row in art)


def render_svg(
    p: Polyomino,
    facet_verts: Optional[Iterable[Point]] = None,
    rook_cells: Optional[Iterable[Cell]] = None,
    step_corners: Optional[Iterable[Point]] = None,
) -> str:
    """Deterministic SVG: one rect per cell, circles for overlay vertices."""
    fv, rc, sc = _check_overlays(p, facet_verts, rook_cells, step_corners)
    lo_i = min(i for i, _ in p.vertices)
    hi_i = max(i for i, _ in p.vertices)
    lo_j = min(j for _, j in p.vertices)
    hi_j = max(j for _, j in p.vertices)
    s = SVG_SCALE
    w = (hi_i - lo_i) * s
    h = (hi_j - lo_j) * s

    def x(i: int) -> int:
        return (i - lo_i) * s

    def y(j: int) -> int:
        return (hi_j - j) * s

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">'
    ]
    for (i, j) in sorted(p.cells):
        lines.append(
            f'<rect x="{x(i)}" y="{y(j + 1)}" width="{s}" height="{s}" '
            f'fill="#dddddd" stroke="#333333" stroke-width="1"/>'
        )
    for (i, j) in sorted(rc):
        lines.append(
            f'<circle cx="{x(i) + s // 2}" cy="{y(j + 1) + s // 2}" r="{s // 3}" '
            f'fill="#aa2222"/>'
        )
    for v in sorted(fv):
        lines.append(
            f'<circle cx="{x(v[0])}" cy="{y(v[1])}" r="{s // 6}" fill="#2244cc"/>'
        )
    for v in sorted(sc):
        lines.append(
            f'<circle cx="{x(v[0])}" cy="{y(v[1])}" r="{s // 4}" fill="none" '
            f'stroke="#cc8800" stroke-width="2"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines)
