"""Exact integer-grid geometry: points, intervals, cells, polyominoes.

Points and cells are plain ``(i, j)`` tuples; a cell is identified by its
lower-left corner, so the cell ``(i, j)`` occupies the unit square with
corners ``(i, j)`` .. ``(i+1, j+1)``. All geometry is exact integer
arithmetic and every public operation is pure.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import TYPE_CHECKING, Iterable, Literal, Optional

from .errors import DisconnectedCells, EmptyCellSet

if TYPE_CHECKING:  # pragma: no cover
    from .families import FrameSpec, NorthEastPath

Point = tuple[int, int]
Cell = tuple[int, int]

Orientation = Literal["horizontal", "vertical"]


def vertex_exceeds(u: Point, v: Point) -> bool:
    """Strict variable order: x_u > x_v iff u sits on a higher row, or on the
    same row further right."""
    return u[1] > v[1] or (u[1] == v[1] and u[0] > v[0])


def vertex_key(v: Point):
    """Sort key compatible with vertex_exceeds (ascending)."""
    return (v[1], v[0])


def cell_corners(c: Cell) -> tuple[Point, Point, Point, Point]:
    """Corners of a cell: lower-left, lower-right, upper-left, upper-right."""
    i, j = c
    return (i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)


def cell_edges(c: Cell) -> tuple[tuple[Point, Point], ...]:
    ll, lr, ul, ur = cell_corners(c)
    return ((ll, lr), (ul, ur), (ll, ul), (lr, ur))


@dataclass(frozen=True)
class GridInterval:
    """Closed interval [lo, hi] of the integer grid, lo <= hi componentwise."""

    lo: Point
    hi: Point

    @property
    def proper(self) -> bool:
        return self.lo[0] < self.hi[0] and self.lo[1] < self.hi[1]

    @property
    def anti_corners(self) -> tuple[Point, Point]:
        """Upper-left and lower-right corners."""
        return (self.lo[0], self.hi[1]), (self.hi[0], self.lo[1])

    def cells(self) -> Iterable[Cell]:
        """Lower-left corners of the cells of the associated cell interval."""
        for i in range(self.lo[0], self.hi[0]):
            for j in range(self.lo[1], self.hi[1]):
                yield (i, j)


@dataclass(frozen=True)
class EdgeInterval:
    lo: Point
    hi: Point
    orientation: Orientation
    maximal: bool = True

    def __contains__(self, v: Point) -> bool:
        return (
            self.lo[0] <= v[0] <= self.hi[0] and self.lo[1] <= v[1] <= self.hi[1]
        )


@dataclass(frozen=True)
class Polyomino:
    """A validated, edge-connected set of cells with derived vertex data.

    Instances are immutable and hashable; construct through build_polyomino
    (or the family constructors), which perform the validation.
    """

    cells: frozenset[Cell]
    vertices: frozenset[Point]
    edges: frozenset[tuple[Point, Point]]
    rank: int
    frame: Optional["FrameSpec"] = None
    parallelogram: Optional[tuple["NorthEastPath", "NorthEastPath"]] = field(
        default=None, compare=False
    )

    @property
    def cells_sorted(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.cells))

    @property
    def vertices_sorted(self) -> tuple[Point, ...]:
        return tuple(sorted(self.vertices))

    def __repr__(self) -> str:  # keep reprs short in test output
        tag = " frame" if self.frame is not None else ""
        return f"Polyomino(rank={self.rank}{tag})"


def _neighbors(c: Cell) -> tuple[Cell, ...]:
    i, j = c
    return ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1))


def build_polyomino(
    cells: Iterable[Cell],
    frame: Optional["FrameSpec"] = None,
    parallelogram=None,
) -> Polyomino:
    """Validate connectivity and derive vertex/edge sets.

    Raises EmptyCellSet on an empty input and DisconnectedCells (naming two
    cells in distinct components) when the cells are not edge-connected.
    """
    cellset = frozenset((int(i), int(j)) for i, j in cells)
    if not cellset:
        raise EmptyCellSet("a polyomino needs at least one cell")

    start = min(cellset)
    seen = {start}
    queue = deque([start])
    while queue:
        c = queue.popleft()
        for nb in _neighbors(c):
            if nb in cellset and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    if len(seen) != len(cellset):
        stray = min(cellset - seen)
        raise DisconnectedCells(start, stray)

    vertices = frozenset(v for c in cellset for v in cell_corners(c))
    edges = frozenset(e for c in cellset for e in cell_edges(c))
    return Polyomino(
        cells=cellset,
        vertices=vertices,
        edges=edges,
        rank=len(cellset),
        frame=frame,
        parallelogram=parallelogram,
    )


def classify_simplicity(p: Polyomino) -> tuple[bool, list[frozenset[Cell]]]:
    """Detect holes: complement components not reaching the outside.

    The complement is explored inside the bounding box padded by one ring of
    cells; any component of complement cells that never touches the ring is a
    hole. Returns (simple, holes) with holes sorted by their minimal cell.
    """
    is_ = [c[0] for c in p.cells]
    js = [c[1] for c in p.cells]
    lo_i, hi_i = min(is_) - 1, max(is_) + 1
    lo_j, hi_j = min(js) - 1, max(js) + 1

    box = {
        (i, j)
        for i in range(lo_i, hi_i + 1)
        for j in range(lo_j, hi_j + 1)
        if (i, j) not in p.cells
    }
    holes: list[frozenset[Cell]] = []
    remaining = set(box)
    while remaining:
        seed = min(remaining)
        comp = {seed}
        queue = deque([seed])
        touches_ring = False
        while queue:
            c = queue.popleft()
            if c[0] in (lo_i, hi_i) or c[1] in (lo_j, hi_j):
                touches_ring = True
            for nb in _neighbors(c):
                if nb in remaining and nb not in comp:
                    comp.add(nb)
                    queue.append(nb)
        remaining -= comp
        if not touches_ring:
            holes.append(frozenset(comp))
    holes.sort(key=lambda h: min(h))
    return (not holes, holes)


@lru_cache(maxsize=None)
def inner_intervals(p: Polyomino) -> tuple[GridInterval, ...]:
    """All proper intervals with corners in V(P) whose cells lie in P,
    sorted by (lo, hi)."""
    verts = p.vertices_sorted
    out = []
    for a in verts:
        for b in verts:
            if a[0] < b[0] and a[1] < b[1]:
                iv = GridInterval(a, b)
                if all(c in p.cells for c in iv.cells()):
                    out.append(iv)
    out.sort(key=lambda iv: (iv.lo, iv.hi))
    return tuple(out)


def maximal_edge_intervals(p: Polyomino, orientation: Orientation) -> list[EdgeInterval]:
    """Maximal runs of collinear unit cell-edges of the given orientation."""
    out: list[EdgeInterval] = []
    if orientation == "horizontal":
        # unit edge ((l, j), (l+1, j)) belongs to cell (l, j) or (l, j-1)
        rows: dict[int, set[int]] = {}
        for (i, j) in p.cells:
            rows.setdefault(j, set()).add(i)
            rows.setdefault(j + 1, set()).add(i)
        for j in sorted(rows):
            for lo, hi in _runs(sorted(rows[j])):
                out.append(EdgeInterval((lo, j), (hi + 1, j), "horizontal"))
    elif orientation == "vertical":
        cols: dict[int, set[int]] = {}
        for (i, j) in p.cells:
            cols.setdefault(i, set()).add(j)
            cols.setdefault(i + 1, set()).add(j)
        for i in sorted(cols):
            for lo, hi in _runs(sorted(cols[i])):
                out.append(EdgeInterval((i, lo), (i, hi + 1), "vertical"))
    else:
        raise ValueError(f"unknown orientation: {orientation!r}")
    return out


def _runs(values: list[int]) -> Iterable[tuple[int, int]]:
    """Maximal runs of consecutive integers, as (first, last) pairs."""
    start = prev = None
    for v in values:
        if start is None:
            start = prev = v
        elif v == prev + 1:
            prev = v
        else:
            yield (start, prev)
            start = prev = v
    if start is not None:
        yield (start, prev)


def edge_interval_through(
    p: Polyomino, v: Point, orientation: Orientation
) -> Optional[EdgeInterval]:
    """The maximal edge interval of the given orientation containing v."""
    for iv in maximal_edge_intervals(p, orientation):
        if v in iv:
            return iv
    return None


def lower_right_cell(p: Polyomino, v: Point) -> Optional[Cell]:
    """The cell of P whose lower-right corner is v, if present."""
    cand = (v[0] - 1, v[1])
    return cand if cand in p.cells else None
