"""Binomial generators of the polyomino ideal and two independent oracles.

The ideal is generated by one pure binomial per inner interval: the product
of the diagonal corner variables minus the product of the anti-diagonal
corner variables. Under the graded reverse-lexicographic order induced by
vertex_exceeds, the anti-diagonal product always leads.

Two oracles live here. is_groebner runs Buchberger's criterion directly on
the quadratic binomials. hilbert_function counts equivalence classes of
degree-k monomials under the two-variable swaps, which equals the degree-k
dimension of the quotient ring because the generators are pure differences
of monomials; no term-order input enters that computation.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import BudgetExceeded, NotAFrame, OrderContradiction, UnstableTail
from .grid import GridInterval, Point, Polyomino, inner_intervals, vertex_key
from .polynomial import IntPolynomial

DEFAULT_BUDGET = 5_000_000


@dataclass(frozen=True)
class InnerMinor:
    """x_a x_b - x_c x_d for an inner interval with diagonal corners a, b."""

    a: Point
    b: Point
    c: Point
    d: Point
    source: GridInterval


@dataclass(frozen=True)
class Monomial:
    """Multiset of variables, kept sorted ascending in the variable order."""

    vars: tuple[Point, ...]

    def __init__(self, vars):
        object.__setattr__(self, "vars", tuple(sorted(vars, key=vertex_key)))

    @property
    def degree(self) -> int:
        return len(self.vars)


def monomial_exceeds(m1: Monomial, m2: Monomial) -> bool:
    """Graded reverse-lex comparison: m1 > m2.

    For equal degrees the monomial with the smaller exponent on the least
    variable where they differ is the larger one.
    """
    if m1.degree != m2.degree:
        return m1.degree > m2.degree
    e1, e2 = Counter(m1.vars), Counter(m2.vars)
    for v in sorted(set(e1) | set(e2), key=vertex_key):
        if e1[v] != e2[v]:
            return e1[v] < e2[v]
    return False


def generators(p: Polyomino) -> list[InnerMinor]:
    """One binomial generator per inner interval, in interval order."""
    out = []
    for iv in inner_intervals(p):
        c, d = iv.anti_corners
        out.append(InnerMinor(a=iv.lo, b=iv.hi, c=c, d=d, source=iv))
    return out


def leading_monomial(g: InnerMinor) -> Monomial:
    """The anti-diagonal product x_c x_d; cross-checked against the order."""
    lead = Monomial((g.c, g.d))
    trail = Monomial((g.a, g.b))
    if not monomial_exceeds(lead, trail):
        raise OrderContradiction(
            f"anti-diagonal product {lead} does not exceed {trail}"
        )
    return lead


def _normal_form(mono: tuple[Point, ...], rules, cache) -> tuple[Point, ...]:
    """Exhaustively rewrite lead pair -> trail pair, first applicable rule."""
    seen = []
    while True:
        if mono in cache:
            result = cache[mono]
            break
        seen.append(mono)
        for (c, d), (a, b) in rules:
            if c in mono and d in mono:
                items = list(mono)
                items.remove(c)
                items.remove(d)
                items.extend((a, b))
                items.sort(key=vertex_key)
                mono = tuple(items)
                break
        else:
            result = mono
            break
    for m in seen:
        cache[m] = result
    return result


def is_groebner(p: Polyomino) -> bool:
    """Buchberger's criterion on the binomial generators.

    Only S-pairs whose leading monomials share a variable are examined
    (coprime leading terms reduce to zero automatically). Each S-polynomial
    of such a pair is a difference of two degree-3 monomials; both sides are
    normalized by exhaustive rewriting and compared.
    """
    gens = generators(p)
    rules = []
    for g in gens:
        leading_monomial(g)  # order sanity check
        rules.append((tuple(sorted((g.c, g.d), key=vertex_key)),
                      tuple(sorted((g.a, g.b), key=vertex_key))))

    by_var: dict[Point, list[int]] = {}
    for idx, (lead, _) in enumerate(rules):
        for v in lead:
            by_var.setdefault(v, []).append(idx)

    cache: dict[tuple[Point, ...], tuple[Point, ...]] = {}
    pairs = set()
    for indices in by_var.values():
        for ii in range(len(indices)):
            for jj in range(ii + 1, len(indices)):
                pairs.add((indices[ii], indices[jj]))
    for i1, i2 in sorted(pairs):
        lead1, trail1 = rules[i1]
        lead2, trail2 = rules[i2]
        lcm = Counter(lead1) | Counter(lead2)
        m1 = sorted((lcm - Counter(lead1) + Counter(trail1)).elements(), key=vertex_key)
        m2 = sorted((lcm - Counter(lead2) + Counter(trail2)).elements(), key=vertex_key)
        if _normal_form(tuple(m1), rules, cache) != _normal_form(tuple(m2), rules, cache):
            return False
    return True


def hilbert_function(p: Polyomino, k: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of classes of degree-k monomials under the generator swaps.

    Implemented as connected components of the swap graph: nodes are the
    degree-k monomials over V(P) (indexed by combinatorial rank), and each
    generator contributes one edge per degree-(k-2) cofactor.
    """
    if k < 0:
        raise ValueError("degree must be non-negative")
    if k == 0:
        return 1
    varlist = sorted(p.vertices, key=vertex_key)
    index = {v: i for i, v in enumerate(varlist)}
    n = len(varlist)
    total = math.comb(n + k - 1, k)
    if total > budget:
        raise BudgetExceeded(total, budget)
    gens = generators(p)
    if k < 2 or not gens:
        return total

    # colex rank of a sorted multiset (v_0 <= ... <= v_{k-1}):
    # sum of C(v_t + t, t + 1); a bijection onto [0, C(n+k-1, k)).
    table = np.zeros((n + k, k + 1), dtype=np.int64)
    for x in range(n + k):
        for t in range(1, k + 1):
            table[x, t] = math.comb(x, t)
    offsets = np.arange(k, dtype=np.int64)

    def ranks(mat: np.ndarray) -> np.ndarray:
        return table[mat + offsets, offsets + 1].sum(axis=1)

    cof_list = list(itertools.combinations_with_replacement(range(n), k - 2))
    cof = np.array(cof_list, dtype=np.int64).reshape(len(cof_list), k - 2)
    rows_u, rows_v = [], []
    for g in gens:
        ai, bi = index[g.a], index[g.b]
        ci, di = index[g.c], index[g.d]
        lead = np.sort(np.concatenate(
            [cof, np.full((len(cof), 1), ci), np.full((len(cof), 1), di)], axis=1))
        trail = np.sort(np.concatenate(
            [cof, np.full((len(cof), 1), ai), np.full((len(cof), 1), bi)], axis=1))
        rows_u.append(ranks(lead))
        rows_v.append(ranks(trail))
    u = np.concatenate(rows_u)
    v = np.concatenate(rows_v)
    graph = coo_matrix(
        (np.ones(len(u), dtype=np.int8), (u, v)), shape=(total, total)
    )
    n_components, _ = connected_components(graph, directed=False)
    return int(n_components)


def h_from_hilbert(
    p: Polyomino, d: int, maxdeg: int, budget: int = DEFAULT_BUDGET
) -> IntPolynomial:
    """Recover the h-polynomial from Hilbert values: multiply by (1-t)^d.

    Computes h_i for i = 0..maxdeg and insists the last three coefficients
    vanish, which certifies that d and maxdeg were large enough.
    """
    if d < 0:
        raise ValueError("Krull dimension must be non-negative")
    if maxdeg < 2:
        raise ValueError("maxdeg must leave room for a stability window")
    hseq = [hilbert_function(p, j, budget=budget) for j in range(maxdeg + 1)]
    h = [
        sum((-1) ** (i - j) * math.comb(d, i - j) * hseq[j] for j in range(i + 1))
        for i in range(maxdeg + 1)
    ]
    if any(h[maxdeg - 2:]):
        raise UnstableTail(
            f"trailing h coefficients {h[maxdeg - 2:]} are nonzero; "
            "wrong dimension or window too small"
        )
    return IntPolynomial(h)


def krull_dimension_frame(p: Polyomino) -> int:
    """|V(P)| - rank(P) for a frame polyomino."""
    if p.frame is None:
        raise NotAFrame("polyomino carries no frame metadata")
    return len(p.vertices) - p.rank
