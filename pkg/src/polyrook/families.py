"""Polyomino families: rectangles, parallelograms, frames, lattice chains.

A parallelogram polyomino is the cell region between two north-east paths
with common endpoints, the first lying strictly above the second. A frame is
a rectangle with such a parallelogram removed from its interior.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import (
    EmptyRegion,
    EndpointMismatch,
    NotAFrame,
    NotParallelogram,
    PathsCross,
    SpecViolation,
)
from .grid import Cell, Point, Polyomino, build_polyomino


@dataclass(frozen=True)
class NorthEastPath:
    """A lattice path whose consecutive points step east (1,0) or north (0,1)."""

    points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple((int(i), int(j)) for i, j in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 2:
            raise ValueError("a north-east path needs at least two points")
        for a, b in zip(pts, pts[1:]):
            di, dj = b[0] - a[0], b[1] - a[1]
            if (di, dj) not in ((1, 0), (0, 1)):
                raise ValueError(f"non-unit step {a} -> {b}")

    @property
    def start(self) -> Point:
        return self.points[0]

    @property
    def end(self) -> Point:
        return self.points[-1]

    @property
    def interior(self) -> tuple[Point, ...]:
        return self.points[1:-1]

    def east_step_heights(self) -> dict[int, int]:
        """Column -> height of the east step taken in that column."""
        return {
            a[0]: a[1]
            for a, b in zip(self.points, self.points[1:])
            if b[0] == a[0] + 1
        }

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def lies_above(s1: NorthEastPath, s2: NorthEastPath) -> bool:
    """True iff every interior point of s1 is strictly higher than every
    interior point of s2 in the same column."""
    if s1.start != s2.start or s1.end != s2.end:
        raise EndpointMismatch(
            f"paths must share endpoints: {s1.start}->{s1.end} vs {s2.start}->{s2.end}"
        )
    lows: dict[int, int] = {}
    for (x, y) in s1.interior:
        lows[x] = min(y, lows.get(x, y))
    for (x, y) in s2.interior:
        if x in lows and lows[x] <= y:
            return False
    return True


def build_parallelogram(s1: NorthEastPath, s2: NorthEastPath) -> Polyomino:
    """Cell region bounded above by s1 and below by s2."""
    if not lies_above(s1, s2):
        raise PathsCross("upper path does not lie above the lower path")
    a0, _ = s1.start
    ak, _ = s1.end
    upper = s1.east_step_heights()
    lower = s2.east_step_heights()
    cells: list[Cell] = []
    for i in range(a0, ak):
        u, l = upper[i], lower[i]
        if u <= l:
            raise EmptyRegion(f"no cells between the paths in column {i}")
        cells.extend((i, j) for j in range(l, u))
    if not cells:
        raise EmptyRegion("the paths bound no cells")
    return build_polyomino(cells, parallelogram=(s1, s2))


@dataclass(frozen=True)
class FrameSpec:
    """Rectangle [(1,1),(m,n)] with a parallelogram hole between s1 and s2."""

    m: int
    n: int
    s1: NorthEastPath
    s2: NorthEastPath

    @property
    def a0(self) -> int:
        return self.s1.start[0]

    @property
    def b0(self) -> int:
        return self.s1.start[1]

    @property
    def ak(self) -> int:
        return self.s1.end[0]

    @property
    def bk(self) -> int:
        return self.s1.end[1]


def build_frame(spec: FrameSpec) -> Polyomino:
    """Rectangle cells minus the hole parallelogram; tags the result with spec."""
    if spec.s1.start != spec.s2.start or spec.s1.end != spec.s2.end:
        raise SpecViolation("hole paths must share both endpoints")
    a0, b0, ak, bk = spec.a0, spec.b0, spec.ak, spec.bk
    if not (1 < a0 < ak < spec.m):
        raise SpecViolation(f"need 1 < a0 < ak < m, got a0={a0}, ak={ak}, m={spec.m}")
    if not (1 < b0 < bk < spec.n):
        raise SpecViolation(f"need 1 < b0 < bk < n, got b0={b0}, bk={bk}, n={spec.n}")
    hole = build_parallelogram(spec.s1, spec.s2)
    rect = {
        (i, j) for i in range(1, spec.m) for j in range(1, spec.n)
    }
    return build_polyomino(rect - hole.cells, frame=spec)


@dataclass(frozen=True)
class FrameDecomposition:
    """Two overlapping parallelogram bands covering a frame.

    p1 runs along the left and top outer edges (above the hole's upper path),
    p2 along the bottom and right (below the lower path); their intersection
    q is the pair of corner boxes, which is not itself connected and is kept
    as a bare cell set.
    """

    p1: Polyomino
    p2: Polyomino
    q: frozenset[Cell]


def _path_from_heights(start_col: int, end_col: int, start_y: int, end_y: int,
                       heights: dict[int, int]) -> NorthEastPath:
    """North-east path from (start_col, start_y) to (end_col, end_y) taking
    its east step in column i at heights[i]."""
    pts: list[Point] = [(start_col, start_y)]
    y = start_y
    for i in range(start_col, end_col):
        h = heights[i]
        while y < h:
            y += 1
            pts.append((i, y))
        pts.append((i + 1, y))
    while y < end_y:
        y += 1
        pts.append((end_col, y))
    return NorthEastPath(tuple(pts))


def decompose_frame(p: Polyomino) -> FrameDecomposition:
    if p.frame is None:
        raise NotAFrame("polyomino carries no frame metadata")
    spec = p.frame
    m, n, a0, ak, b0, bk = spec.m, spec.n, spec.a0, spec.ak, spec.b0, spec.bk
    upper = spec.s1.east_step_heights()
    lower = spec.s2.east_step_heights()

    # p1: everything on or above the hole's upper boundary, plus the full
    # columns left of the hole and the top-right corner box.
    p1_floor = {i: 1 for i in range(1, a0)}
    p1_floor.update({i: upper[i] for i in range(a0, ak)})
    p1_floor.update({i: bk for i in range(ak, m)})
    p1 = build_parallelogram(
        _path_from_heights(1, m, 1, n, {i: n for i in range(1, m)}),
        _path_from_heights(1, m, 1, n, p1_floor),
    )

    # p2: everything below the hole's lower boundary, plus the bottom-left
    # corner box and the full columns right of the hole.
    p2_ceil = {i: b0 for i in range(1, a0)}
    p2_ceil.update({i: lower[i] for i in range(a0, ak)})
    p2_ceil.update({i: n for i in range(ak, m)})
    p2 = build_parallelogram(
        _path_from_heights(1, m, 1, n, p2_ceil),
        _path_from_heights(1, m, 1, n, {i: 1 for i in range(1, m)}),
    )

    q = p1.cells & p2.cells
    box1 = {(i, j) for i in range(1, a0) for j in range(1, b0)}
    box2 = {(i, j) for i in range(ak, m) for j in range(bk, n)}
    assert p1.cells | p2.cells == p.cells, "band decomposition must cover the frame"
    assert q == box1 | box2, "band intersection must be the two corner boxes"
    return FrameDecomposition(p1=p1, p2=p2, q=frozenset(q))


def corner_box_low(spec: FrameSpec) -> frozenset[Point]:
    """Vertices of the lower-left corner box [(1,1),(a0,b0)]."""
    return frozenset(
        (i, j) for i in range(1, spec.a0 + 1) for j in range(1, spec.b0 + 1)
    )


def corner_box_high(spec: FrameSpec) -> frozenset[Point]:
    """Vertices of the upper-right corner box [(ak,bk),(m,n)]."""
    return frozenset(
        (i, j)
        for i in range(spec.ak, spec.m + 1)
        for j in range(spec.bk, spec.n + 1)
    )


@dataclass(frozen=True)
class MaximalChain:
    """A monotone vertex path from the lattice minimum to the maximum."""

    points: tuple[Point, ...]
    descent_cells: tuple[Cell, ...]


def column_profile(p: Polyomino) -> dict[int, tuple[int, int]]:
    """Column -> (lowest cell row, highest cell row); raises unless the cells
    form a parallelogram polyomino."""
    cols: dict[int, list[int]] = {}
    for (i, j) in p.cells:
        cols.setdefault(i, []).append(j)
    idx = sorted(cols)
    if idx != list(range(idx[0], idx[-1] + 1)):
        raise NotParallelogram("cell columns are not contiguous")
    prof: dict[int, tuple[int, int]] = {}
    for i in idx:
        rows = sorted(cols[i])
        if rows != list(range(rows[0], rows[-1] + 1)):
            raise NotParallelogram(f"column {i} is not a contiguous run of cells")
        prof[i] = (rows[0], rows[-1])
    prev = None
    for i in idx:
        lo, hi = prof[i]
        if prev is not None:
            plo, phi = prev
            if lo < plo or hi < phi:
                raise NotParallelogram("column intervals must ascend left to right")
            if lo > phi:
                raise NotParallelogram(f"columns {i - 1} and {i} do not overlap")
        prev = prof[i]
    return prof


def parallelogram_paths(p: Polyomino) -> tuple[NorthEastPath, NorthEastPath]:
    """Recover the bounding paths of a parallelogram polyomino from its cells."""
    if p.parallelogram is not None:
        return p.parallelogram
    prof = column_profile(p)
    cols = sorted(prof)
    c0, ck = cols[0], cols[-1] + 1
    y0 = prof[cols[0]][0]
    yk = prof[cols[-1]][1] + 1
    s1 = _path_from_heights(c0, ck, y0, yk, {i: prof[i][1] + 1 for i in cols})
    s2 = _path_from_heights(c0, ck, y0, yk, {i: prof[i][0] for i in cols})
    return s1, s2


def maximal_chains(p: Polyomino) -> list[MaximalChain]:
    """All monotone unit-step vertex paths from the lattice minimum to the
    maximum, with their descent cells (east-then-north corners on a cell)."""
    prof = column_profile(p)  # validates parallelogram shape
    cols = sorted(prof)
    lo = (cols[0], prof[cols[0]][0])
    hi = (cols[-1] + 1, prof[cols[-1]][1] + 1)
    verts = p.vertices

    chains: list[MaximalChain] = []

    def walk(path: list[Point]):
        v = path[-1]
        if v == hi:
            descents = []
            for a, b, c in zip(path, path[1:], path[2:]):
                if b == (a[0] + 1, a[1]) and c == (b[0], b[1] + 1) and a in p.cells:
                    descents.append(a)
            chains.append(MaximalChain(tuple(path), tuple(descents)))
            return
        for step in ((v[0] + 1, v[1]), (v[0], v[1] + 1)):
            if step in verts:
                path.append(step)
                walk(path)
                path.pop()

    walk([lo])
    chains.sort(key=lambda ch: ch.points)
    return chains


def rectangle(m: int, n: int) -> Polyomino:
    """The full rectangle on the vertex interval [(1,1),(m,n)]."""
    if m < 2 or n < 2:
        raise SpecViolation("a rectangle needs m, n >= 2")
    return build_polyomino((i, j) for i in range(1, m) for j in range(1, n))


def enumerate_parallelograms(max_cells: int) -> Iterable[Polyomino]:
    """All translation-normalized parallelogram polyominoes with at most
    max_cells cells, in deterministic order.

    Enumerates monotone column profiles (both bottom and top rows weakly
    ascending, consecutive columns overlapping) anchored at (1,1).
    """
    profiles: list[tuple[tuple[int, int], ...]] = []

    def extend(cols: list[tuple[int, int]], used: int):
        profiles.append(tuple(cols))
        lo, hi = cols[-1]
        for nlo in range(lo, hi + 1):
            for nhi in range(max(nlo, hi), nlo + (max_cells - used)):
                if used + (nhi - nlo + 1) <= max_cells:
                    cols.append((nlo, nhi))
                    extend(cols, used + nhi - nlo + 1)
                    cols.pop()

    for h in range(1, max_cells + 1):
        extend([(1, h)], h)

    profiles.sort()
    for prof in profiles:
        cells = [
            (i + 1, j) for i, (lo, hi) in enumerate(prof) for j in range(lo, hi + 1)
        ]
        yield build_polyomino(cells, parallelogram=None)
