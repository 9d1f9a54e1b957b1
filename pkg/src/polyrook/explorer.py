"""Exhaustive generation of small polyominoes and the conjecture sweep.

Fixed polyominoes (translation-normalized, no rotations or reflections) are
generated by growth from smaller ones with canonical-form deduplication; an
independent bounding-box enumeration is provided as a counting oracle. The
sweep compares the h-polynomial of each Groebner-positive polyomino with its
switching rook polynomial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import BudgetExceeded, EmptyRegion, PathsCross
from .families import FrameSpec, NorthEastPath, build_frame
from .grid import Cell, Polyomino, build_polyomino, classify_simplicity
from .ideal import is_groebner
from .polynomial import IntPolynomial
from .rooks import AttackPolicy, switching_rook_polynomial
from .simplicial import f_vector, facets, h_from_f

DEFAULT_BUDGET = 5_000_000


def normalize_cells(cells: Iterable[Cell]) -> tuple[Cell, ...]:
    """Translate so the bounding-box corner is (1,1); sort for canonical form."""
    cells = list(cells)
    di = 1 - min(i for i, _ in cells)
    dj = 1 - min(j for _, j in cells)
    return tuple(sorted((i + di, j + dj) for i, j in cells))


def enumerate_fixed_polyominoes(
    max_rank: int, budget: int = DEFAULT_BUDGET
) -> Iterator[Polyomino]:
    """Every fixed polyomino of rank <= max_rank exactly once, smaller ranks
    first, canonical order within a rank."""
    if max_rank < 1:
        raise ValueError("max_rank must be at least 1")
    level: set[tuple[Cell, ...]] = {((1, 1),)}
    produced = 0
    for rank in range(1, max_rank + 1):
        for shape in sorted(level):
            produced += 1
            if produced > budget:
                raise BudgetExceeded(produced, budget)
            yield build_polyomino(shape)
        if rank == max_rank:
            break
        nxt: set[tuple[Cell, ...]] = set()
        for shape in level:
            cells = set(shape)
            for (i, j) in shape:
                for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                    if nb not in cells:
                        nxt.add(normalize_cells(cells | {nb}))
        level = nxt


def count_fixed_by_bounding_box(max_rank: int) -> dict[int, int]:
    """Independent counting oracle: enumerate subsets of each exact bounding
    box and keep the connected ones."""

    def connected(cells: frozenset[Cell]) -> bool:
        start = next(iter(cells))
        seen = {start}
        stack = [start]
        while stack:
            i, j = stack.pop()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == len(cells)

    counts: dict[int, int] = {}
    for n in range(1, max_rank + 1):
        total = 0
        for w in range(1, n + 1):
            for h in range(1, n + 1):
                if w * h < n or w + h > n + 1:
                    continue
                grid = [(i, j) for i in range(1, w + 1) for j in range(1, h + 1)]
                for combo in itertools.combinations(grid, n):
                    cells = frozenset(combo)
                    if (
                        min(i for i, _ in cells) == 1
                        and max(i for i, _ in cells) == w
                        and min(j for _, j in cells) == 1
                        and max(j for _, j in cells) == h
                        and connected(cells)
                    ):
                        total += 1
        counts[n] = total
    return counts


def _ne_paths(start, end) -> list[NorthEastPath]:
    """All north-east paths between two comparable points."""
    (x0, y0), (x1, y1) = start, end
    paths = []
    for positions in itertools.combinations(range(x1 - x0 + y1 - y0), x1 - x0):
        pts = [(x0, y0)]
        for t in range(x1 - x0 + y1 - y0):
            x, y = pts[-1]
            pts.append((x + 1, y) if t in positions else (x, y + 1))
        paths.append(NorthEastPath(tuple(pts)))
    return paths


def enumerate_small_frames(max_m: int, max_n: int) -> Iterator[Polyomino]:
    """All frames with 1 < a0 < ak < m <= max_m and 1 < b0 < bk < n <= max_n."""
    seen: set[frozenset[Cell]] = set()
    for m in range(4, max_m + 1):
        for n in range(4, max_n + 1):
            for a0 in range(2, m - 1):
                for ak in range(a0 + 1, m):
                    for b0 in range(2, n - 1):
                        for bk in range(b0 + 1, n):
                            for s1 in _ne_paths((a0, b0), (ak, bk)):
                                for s2 in _ne_paths((a0, b0), (ak, bk)):
                                    try:
                                        frame = build_frame(
                                            FrameSpec(m=m, n=n, s1=s1, s2=s2)
                                        )
                                    except (PathsCross, EmptyRegion):
                                        continue
                                    if frame.cells not in seen:
                                        seen.add(frame.cells)
                                        yield frame


@dataclass(frozen=True)
class ExplorationRecord:
    cells: tuple[Cell, ...]
    rank: int
    simple: bool
    groebner: bool
    dim_used: Optional[int]
    h: Optional[IntPolynomial]
    r_tilde: Optional[IntPolynomial]
    status: str  # match | mismatch | skipped_groebner | skipped_budget

    def payload(self) -> dict:
        return {
            "cells": [list(c) for c in self.cells],
            "rank": self.rank,
            "simple": self.simple,
            "groebner": self.groebner,
            "dim_used": self.dim_used,
            "h": list(self.h.coeffs) if self.h is not None else None,
            "r_tilde": list(self.r_tilde.coeffs) if self.r_tilde is not None else None,
            "status": self.status,
        }


def conjecture_sweep(
    stream: Iterable[Polyomino],
    policy: AttackPolicy = AttackPolicy.COBLOCK,
    budget: int = DEFAULT_BUDGET,
) -> list[ExplorationRecord]:
    """Compare h (f-vector route) with the switching rook polynomial for each
    Groebner-positive polyomino in the stream."""
    records = []
    for p in stream:
        cells = tuple(sorted(p.cells))
        simple, _ = classify_simplicity(p)
        groebner = is_groebner(p)
        r_tilde = h = d = None
        try:
            r_tilde = switching_rook_polynomial(p, policy, budget)
            if not groebner:
                status = "skipped_groebner"
            else:
                fs = facets(p, budget=budget)
                d = max(len(f) for f in fs)
                h = h_from_f(f_vector(p, budget=budget), d)
                status = "match" if h == r_tilde else "mismatch"
        except BudgetExceeded:
            status = "skipped_budget"
        records.append(
            ExplorationRecord(cells, p.rank, simple, groebner, d, h, r_tilde, status)
        )
    return records
