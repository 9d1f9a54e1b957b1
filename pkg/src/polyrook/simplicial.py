"""The simplicial complex of the initial ideal: faces avoid attack pairs.

Vertices are V(P); the minimal non-faces are the anti-diagonal corner pairs
of the inner intervals ("attack pairs"), so faces are independent sets of the
attack graph and facets are the maximal ones. Facet order, steps, shelling
verification and the h-vector computations all live here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    BudgetExceeded,
    CardinalityMismatch,
    InconsistentDimension,
    NotAFacet,
    NotPure,
    NotShellable,
)
from .grid import (
    Point,
    Polyomino,
    edge_interval_through,
    inner_intervals,
    lower_right_cell,
    vertex_exceeds,
    vertex_key,
)
from .polynomial import IntPolynomial

DEFAULT_BUDGET = 5_000_000


@dataclass(frozen=True)
class AttackGraph:
    vertices: tuple[Point, ...]
    edges: frozenset[tuple[Point, Point]]

    def degree(self, v: Point) -> int:
        return sum(1 for e in self.edges if v in e)


@dataclass(frozen=True)
class Facet:
    """A maximal face, with its strictly descending vertex sequence."""

    verts: frozenset[Point]
    sorted_desc: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.verts)


@dataclass(frozen=True)
class Step:
    """An east-then-north corner of a facet whose bend sits on a cell.

    left and corner share a row, corner and top share a column, and no other
    facet vertex lies strictly between either pair.
    """

    left: Point
    corner: Point
    top: Point


@dataclass(frozen=True)
class ShellingReport:
    order: tuple[Facet, ...]
    restriction_counts: tuple[int, ...]
    intersection_ok: tuple[bool, ...]
    h_shelling: IntPolynomial


@lru_cache(maxsize=None)
def attack_graph(p: Polyomino) -> AttackGraph:
    """Anti-diagonal corner pairs of the inner intervals, deduplicated."""
    edges = set()
    for iv in inner_intervals(p):
        c, d = iv.anti_corners
        edges.add(tuple(sorted((c, d))))
    return AttackGraph(vertices=p.vertices_sorted, edges=frozenset(edges))


def _facet_sort_key(f: Facet):
    return tuple(vertex_key(v) for v in f.sorted_desc)


def make_facet(verts) -> Facet:
    vs = frozenset(verts)
    return Facet(vs, tuple(sorted(vs, key=vertex_key, reverse=True)))


@lru_cache(maxsize=None)
def facets(p: Polyomino, budget: int = DEFAULT_BUDGET) -> tuple[Facet, ...]:
    """All maximal independent sets of the attack graph, in shelling order
    (descending lexicographic on the descending vertex sequences)."""
    g = attack_graph(p)
    order = sorted(g.vertices, key=vertex_key, reverse=True)
    idx = {v: i for i, v in enumerate(order)}
    n = len(order)
    full = (1 << n) - 1
    attack = [0] * n
    for a, b in g.edges:
        attack[idx[a]] |= 1 << idx[b]
        attack[idx[b]] |= 1 << idx[a]
    # maximal independent sets = maximal cliques of the complement graph
    comp = [(full & ~attack[i]) & ~(1 << i) for i in range(n)]

    found: list[int] = []

    def bron_kerbosch(r: int, pset: int, x: int):
        if pset == 0 and x == 0:
            found.append(r)
            if len(found) > budget:
                raise BudgetExceeded(len(found), budget)
            return
        pivot_pool = pset | x
        pivot = (pivot_pool & -pivot_pool).bit_length() - 1
        best = -1
        pool = pivot_pool
        while pool:
            v = (pool & -pool).bit_length() - 1
            pool &= pool - 1
            deg = (comp[v] & pset).bit_count()
            if deg > best:
                best, pivot = deg, v
        cand = pset & ~comp[pivot]
        while cand:
            v = (cand & -cand).bit_length() - 1
            bit = 1 << v
            cand &= cand - 1
            bron_kerbosch(r | bit, pset & comp[v], x & comp[v])
            pset &= ~bit
            x |= bit

    bron_kerbosch(0, full, 0)

    result = []
    for mask in found:
        verts = [order[i] for i in range(n) if mask >> i & 1]
        result.append(make_facet(verts))
    result.sort(key=_facet_sort_key, reverse=True)
    return tuple(result)


def is_facet(p: Polyomino, f: Facet) -> bool:
    g = attack_graph(p)
    adj: dict[Point, set[Point]] = {v: set() for v in g.vertices}
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    if any(not f.verts.isdisjoint(adj[v]) for v in f.verts):
        return False
    return all(
        v in f.verts or adj[v] & f.verts for v in g.vertices
    )


def steps_of(p: Polyomino, f: Facet) -> list[Step]:
    """All steps of a facet; at most one per qualifying lower-right corner.

    The nearest facet vertex to the left on the corner's row and the nearest
    above on its column are the step's other two points, so the strict
    betweenness conditions hold by construction. Both arms must run along
    edges of P: the left partner shares the corner's maximal horizontal edge
    interval and the top partner its maximal vertical one, so an arm never
    jumps across a hole.
    """
    if not is_facet(p, f):
        raise NotAFacet("vertex set is not a maximal face")
    by_row: dict[int, list[int]] = {}
    by_col: dict[int, list[int]] = {}
    for (i, j) in f.verts:
        by_row.setdefault(j, []).append(i)
        by_col.setdefault(i, []).append(j)
    steps = []
    for w in sorted(f.verts):
        if lower_right_cell(p, w) is None:
            continue
        i, j = w
        h_iv = edge_interval_through(p, w, "horizontal")
        v_iv = edge_interval_through(p, w, "vertical")
        lefts = [x for x in by_row[j] if x < i and h_iv is not None and (x, j) in h_iv]
        tops = [y for y in by_col[i] if y > j and v_iv is not None and (i, y) in v_iv]
        if lefts and tops:
            steps.append(Step(left=(max(lefts), j), corner=w, top=(i, min(tops))))
    return steps


def facet_precedes(g: Facet, f: Facet) -> bool:
    """True iff g comes strictly earlier in the descending shelling order."""
    if len(g) != len(f):
        raise CardinalityMismatch(f"facet sizes differ: {len(g)} vs {len(f)}")
    for u, v in zip(g.sorted_desc, f.sorted_desc):
        if u != v:
            return vertex_exceeds(u, v)
    return False


def shelling_verify(p: Polyomino, budget: int = DEFAULT_BUDGET) -> ShellingReport:
    """Walk the descending facet order and check the shelling condition.

    For each facet F_j the maximal faces of the intersection with the earlier
    part must all be codimension one in F_j; the report also records whether
    they are exactly the deletions of F_j's step corners, and builds the
    h-vector from the restriction histogram.
    """
    fs = facets(p, budget=budget)
    sizes = {len(f) for f in fs}
    if len(sizes) != 1:
        raise NotPure(f"facet sizes {sorted(sizes)} differ")
    size = sizes.pop()

    counts: list[int] = [0]
    ok: list[bool] = [True]
    for j in range(1, len(fs)):
        fj = fs[j].verts
        inters = {frozenset(fj & fs[i].verts) for i in range(j)}
        inters.discard(frozenset(fj))
        maximal = [
            s for s in inters if not any(s < t for t in inters if t is not s)
        ]
        if not maximal:
            raise NotShellable(f"facet {j} meets the earlier part in nothing")
        if any(len(s) != size - 1 for s in maximal):
            raise NotShellable(
                f"facet {j}: intersection has a maximal face of codimension > 1"
            )
        expected = {
            frozenset(fj - {st.corner}) for st in steps_of(p, fs[j])
        }
        counts.append(len(maximal))
        ok.append(set(maximal) == expected)

    hist: dict[int, int] = {}
    for r in counts:
        hist[r] = hist.get(r, 0) + 1
    return ShellingReport(
        order=fs,
        restriction_counts=tuple(counts),
        intersection_ok=tuple(ok),
        h_shelling=IntPolynomial.from_counts(hist),
    )


def h_from_steps(p: Polyomino, budget: int = DEFAULT_BUDGET) -> IntPolynomial:
    """Histogram of step counts over the facets."""
    hist: dict[int, int] = {}
    for f in facets(p, budget=budget):
        k = len(steps_of(p, f))
        hist[k] = hist.get(k, 0) + 1
    return IntPolynomial.from_counts(hist)


def f_vector(p: Polyomino, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
    """Face counts by cardinality, starting with the empty face: (1, f_0, ...)."""
    g = attack_graph(p)
    order = g.vertices
    n = len(order)
    idx = {v: i for i, v in enumerate(order)}
    attack = [0] * n
    for a, b in g.edges:
        attack[idx[a]] |= 1 << idx[b]
        attack[idx[b]] |= 1 << idx[a]

    counts: list[int] = [0] * (n + 1)
    total = 0

    def rec(cand: int, size: int):
        nonlocal total
        counts[size] += 1
        total += 1
        if total > budget:
            raise BudgetExceeded(total, budget)
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            rec(cand & ~attack[v], size + 1)

    rec((1 << n) - 1, 0)
    top = max(i for i, c in enumerate(counts) if c)
    return tuple(counts[: top + 1])


def h_from_f(f: tuple[int, ...], d: int) -> IntPolynomial:
    """Standard f-to-h transform for a (d-1)-dimensional complex."""
    if d != len(f) - 1:
        raise InconsistentDimension(
            f"dimension {d} inconsistent with f-vector of length {len(f)}"
        )
    h = [
        sum((-1) ** (k - i) * math.comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    ]
    return IntPolynomial(h)
