"""Rook configurations, switching moves, and the switching rook polynomial.

Two attack policies are supported. Under the default "coblock" policy two
rooks attack only when every cell between them (in their shared cell row or
column) belongs to the polyomino, so rooks separated by a hole are peaceful.
The "line" policy ignores gaps and compares bounding-box rows and columns.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import (
    BudgetExceeded,
    CellNotInPolyomino,
    InvalidMove,
    LemmaViolation,
    NoCanonicalInClass,
    ResultAttacks,
)
from .grid import Cell, GridInterval, Polyomino
from .polynomial import IntPolynomial

DEFAULT_BUDGET = 5_000_000


class AttackPolicy(Enum):
    COBLOCK = "coblock"
    LINE = "line"


@dataclass(frozen=True)
class RookConfig:
    """A pairwise non-attacking rook placement under a fixed policy."""

    rooks: frozenset[Cell]
    policy: AttackPolicy = AttackPolicy.COBLOCK

    @property
    def k(self) -> int:
        return len(self.rooks)

    @property
    def cells_sorted(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.rooks))


@dataclass(frozen=True)
class SwitchMove:
    """Two rooks on opposite corner cells of a rectangle fully inside P."""

    pair: tuple[Cell, Cell]
    rect: GridInterval
    orientation: str  # "diagonal" | "antidiagonal"


def rooks_attack(p: Polyomino, c1: Cell, c2: Cell, policy: AttackPolicy = AttackPolicy.COBLOCK) -> bool:
    if c1 not in p.cells:
        raise CellNotInPolyomino(f"cell {c1} not in polyomino")
    if c2 not in p.cells:
        raise CellNotInPolyomino(f"cell {c2} not in polyomino")
    if c1 == c2:
        return True
    (i1, j1), (i2, j2) = c1, c2
    if j1 == j2:
        if policy is AttackPolicy.LINE:
            return True
        return all((i, j1) in p.cells for i in range(min(i1, i2), max(i1, i2) + 1))
    if i1 == i2:
        if policy is AttackPolicy.LINE:
            return True
        return all((i1, j) in p.cells for j in range(min(j1, j2), max(j1, j2) + 1))
    return False


@lru_cache(maxsize=None)
def rook_configs(
    p: Polyomino,
    k: int,
    policy: AttackPolicy = AttackPolicy.COBLOCK,
    budget: int = DEFAULT_BUDGET,
) -> tuple[RookConfig, ...]:
    """All k-rook configurations, sorted by their cell lists."""
    if k < 0:
        raise ValueError("rook count must be non-negative")
    cells = sorted(p.cells)
    out: list[RookConfig] = []

    def place(start: int, chosen: list[Cell]):
        if len(chosen) == k:
            out.append(RookConfig(frozenset(chosen), policy))
            if len(out) > budget:
                raise BudgetExceeded(len(out), budget)
            return
        for idx in range(start, len(cells)):
            c = cells[idx]
            if all(not rooks_attack(p, c, r, policy) for r in chosen):
                chosen.append(c)
                place(idx + 1, chosen)
                chosen.pop()

    place(0, [])
    return tuple(out)


def rook_polynomial(
    p: Polyomino,
    policy: AttackPolicy = AttackPolicy.COBLOCK,
    budget: int = DEFAULT_BUDGET,
) -> IntPolynomial:
    """Coefficient k counts the k-rook configurations; degree is the rook number."""
    coeffs = [1]
    k = 1
    while True:
        n = len(rook_configs(p, k, policy, budget))
        if n == 0:
            break
        coeffs.append(n)
        k += 1
    return IntPolynomial(coeffs)


def rook_number(p: Polyomino, policy: AttackPolicy = AttackPolicy.COBLOCK) -> int:
    return rook_polynomial(p, policy).degree


def switching_moves(p: Polyomino, cfg: RookConfig) -> list[SwitchMove]:
    """All rook pairs spanning a rectangle of P, tagged by their position."""
    moves: list[SwitchMove] = []
    rooks = sorted(cfg.rooks)
    for a in range(len(rooks)):
        for b in range(a + 1, len(rooks)):
            (i1, j1), (i2, j2) = rooks[a], rooks[b]
            if i1 == i2 or j1 == j2:
                continue
            lo = (min(i1, i2), min(j1, j2))
            hi = (max(i1, i2) + 1, max(j1, j2) + 1)
            rect = GridInterval(lo, hi)
            if all(c in p.cells for c in rect.cells()):
                orientation = "diagonal" if (j2 > j1) == (i2 > i1) else "antidiagonal"
                moves.append(SwitchMove((rooks[a], rooks[b]), rect, orientation))
    return moves


def apply_switch(p: Polyomino, cfg: RookConfig, move: SwitchMove) -> RookConfig:
    """Replace the pair by the opposite corner cells of its rectangle."""
    if move not in switching_moves(p, cfg):
        raise InvalidMove(f"{move} is not available from this configuration")
    (i1, j1), (i2, j2) = move.pair
    new_pair = {(i1, j2), (i2, j1)}
    rooks = (cfg.rooks - set(move.pair)) | new_pair
    result = RookConfig(frozenset(rooks), cfg.policy)
    for a in result.rooks:
        for b in result.rooks:
            if a < b and rooks_attack(p, a, b, cfg.policy):
                raise ResultAttacks(f"switch produced attacking rooks {a}, {b}")
    return result


def switching_classes(
    p: Polyomino,
    k: int,
    policy: AttackPolicy = AttackPolicy.COBLOCK,
    budget: int = DEFAULT_BUDGET,
) -> list[list[RookConfig]]:
    """Partition the k-rook configurations into switch-connected components,
    ordered by their minimal members."""
    configs = rook_configs(p, k, policy, budget)
    index = {cfg.cells_sorted: i for i, cfg in enumerate(configs)}
    unvisited = set(range(len(configs)))
    classes: list[list[RookConfig]] = []
    for start in range(len(configs)):
        if start not in unvisited:
            continue
        comp = {start}
        unvisited.discard(start)
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for move in switching_moves(p, configs[cur]):
                nxt = index[apply_switch(p, configs[cur], move).cells_sorted]
                if nxt in unvisited:
                    unvisited.discard(nxt)
                    comp.add(nxt)
                    queue.append(nxt)
        classes.append([configs[i] for i in sorted(comp)])
    classes.sort(key=lambda cls: cls[0].cells_sorted)
    return classes


def is_canonical(p: Polyomino, cfg: RookConfig) -> bool:
    """True iff no switching pair of the configuration is anti-diagonal."""
    return all(m.orientation != "antidiagonal" for m in switching_moves(p, cfg))


def canonical_by_class(
    p: Polyomino,
    k: int,
    policy: AttackPolicy = AttackPolicy.COBLOCK,
    budget: int = DEFAULT_BUDGET,
) -> list[list[RookConfig]]:
    """Canonical members of each switching class (class order preserved)."""
    return [
        [cfg for cfg in cls if is_canonical(p, cfg)]
        for cls in switching_classes(p, k, policy, budget)
    ]


def canonical_representatives(
    p: Polyomino,
    k: int,
    policy: AttackPolicy = AttackPolicy.COBLOCK,
    budget: int = DEFAULT_BUDGET,
) -> list[RookConfig]:
    """One canonical configuration per class for frames; all canonical
    members elsewhere.

    On a frame every class must contain exactly one canonical member; zero
    raises NoCanonicalInClass and more than one signals a broken uniqueness
    guarantee.
    """
    per_class = canonical_by_class(p, k, policy, budget)
    if p.frame is not None:
        reps = []
        for idx, members in enumerate(per_class):
            if not members:
                raise NoCanonicalInClass(f"class {idx} at k={k} has no canonical member")
            if len(members) > 1:
                raise LemmaViolation(
                    f"class {idx} at k={k} has {len(members)} canonical members"
                )
            reps.append(members[0])
        return reps
    return [cfg for members in per_class for cfg in members]


def canonicalize_greedy(
    p: Polyomino, cfg: RookConfig, max_iters: int = 1000
) -> RookConfig | None:
    """Repeatedly switch the first anti-diagonal pair; None if the iteration
    cap is hit (fall back to class search in that case)."""
    current = cfg
    for _ in range(max_iters):
        anti = [m for m in switching_moves(p, current) if m.orientation == "antidiagonal"]
        if not anti:
            return current
        current = apply_switch(p, current, anti[0])
    return None


def switching_rook_polynomial(
    p: Polyomino,
    policy: AttackPolicy = AttackPolicy.COBLOCK,
    budget: int = DEFAULT_BUDGET,
) -> IntPolynomial:
    """Coefficient k counts the switching classes of k-rook configurations."""
    coeffs = [1]
    k = 1
    while True:
        classes = switching_classes(p, k, policy, budget)
        if not classes:
            break
        coeffs.append(len(classes))
        k += 1
    return IntPolynomial(coeffs)
