import math
from collections import Counter

import pytest

from polyrook.errors import BudgetExceeded, NotAFrame, UnstableTail
from polyrook.explorer import enumerate_fixed_polyominoes, enumerate_small_frames
from polyrook.families import enumerate_parallelograms
from polyrook.grid import build_polyomino, inner_intervals, vertex_key
from polyrook.ideal import (
    Monomial,
    generators,
    h_from_hilbert,
    hilbert_function,
    is_groebner,
    krull_dimension_frame,
    leading_monomial,
    monomial_exceeds,
)
from polyrook.polynomial import IntPolynomial
from polyrook.simplicial import f_vector, facets

from oracles import brute_hilbert, face_count_hilbert


def swap_rules(p):
    return [
        (tuple(sorted((g.c, g.d), key=vertex_key)),
         tuple(sorted((g.a, g.b), key=vertex_key)))
        for g in generators(p)
    ]


class TestGenerators:
    def test_single_cell(self, c1):
        gens = generators(c1)
        assert len(gens) == 1
        g = gens[0]
        assert (g.a, g.b) == ((1, 1), (2, 2))
        assert {g.c, g.d} == {(1, 2), (2, 1)}

    def test_q2_count(self, q2):
        assert len(generators(q2)) == 9

    def test_p4_count_matches_intervals(self, p4):
        assert len(generators(p4)) == len(inner_intervals(p4))


class TestLeadingMonomial:
    def test_single_cell(self, c1):
        lead = leading_monomial(generators(c1)[0])
        assert set(lead.vars) == {(1, 2), (2, 1)}

    def test_q2_full_square(self, q2):
        g = next(
            g for g in generators(q2) if (g.a, g.b) == ((1, 1), (3, 3))
        )
        assert set(leading_monomial(g).vars) == {(1, 3), (3, 1)}

    @pytest.mark.parametrize("fixture", ["c1", "q2", "p4", "p5"])
    def test_degrees_and_order(self, fixture, request):
        # every generator: anti-diagonal product leads, both sides degree 2
        p = request.getfixturevalue(fixture)
        for g in generators(p):
            lead = leading_monomial(g)
            assert lead.degree == 2
            assert monomial_exceeds(lead, Monomial((g.a, g.b)))


class TestMonomialOrder:
    def test_revlex_on_unit_cell(self):
        # anti-diagonal beats diagonal because the smallest variable (1,1)
        # appears only in the diagonal product
        assert monomial_exceeds(
            Monomial(((1, 2), (2, 1))), Monomial(((1, 1), (2, 2)))
        )

    def test_graded(self):
        assert monomial_exceeds(
            Monomial(((1, 1), (1, 1), (1, 1))), Monomial(((5, 5), (5, 5)))
        )

    def test_irreflexive(self):
        m = Monomial(((1, 2), (2, 1)))
        assert not monomial_exceeds(m, m)


class TestGroebner:
    def test_single_cell(self, c1):
        assert is_groebner(c1)

    @pytest.mark.parametrize("fixture", ["q2", "p4", "p5"])
    def test_fixtures(self, fixture, request):
        assert is_groebner(request.getfixturevalue(fixture))

    def test_all_small_frames(self):
        assert all(is_groebner(f) for f in enumerate_small_frames(5, 5))

    def test_all_small_parallelograms(self):
        assert all(is_groebner(p) for p in enumerate_parallelograms(8))

    def test_ascending_staircase_positive(self):
        s = build_polyomino([(1, 1), (2, 1), (2, 2), (3, 2)])
        assert is_groebner(s)

    def test_descending_staircase_negative(self):
        # the mirrored tetromino fails; the swap-class count then disagrees
        # with the face ring of the attack-pair complex, confirming it
        z = build_polyomino([(1, 2), (1, 3), (2, 1), (2, 2)])
        assert not is_groebner(z)
        assert any(
            hilbert_function(z, k) != face_count_hilbert(f_vector(z), k)
            for k in range(5)
        )

    def test_agrees_with_hilbert_face_count(self):
        # positive answers must make the swap-class count match the face ring
        for p in enumerate_fixed_polyominoes(4):
            agree = all(
                hilbert_function(p, k) == face_count_hilbert(f_vector(p), k)
                for k in range(5)
            )
            if is_groebner(p):
                assert agree
            else:
                assert not agree


class TestHilbertFunction:
    def test_degree_zero(self, c1):
        assert hilbert_function(c1, 0) == 1

    def test_degree_one_counts_vertices(self, q2):
        assert hilbert_function(q2, 1) == 9

    def test_unit_cell_degree_two(self, c1):
        # ten degree-2 monomials in four variables, one merged pair
        assert hilbert_function(c1, 2) == 9

    @pytest.mark.parametrize("k", range(5))
    def test_unit_cell_against_bfs_oracle(self, c1, k):
        assert hilbert_function(c1, k) == brute_hilbert(c1, k, swap_rules(c1))

    @pytest.mark.parametrize("k", range(4))
    def test_q2_against_bfs_oracle(self, q2, k):
        assert hilbert_function(q2, k) == brute_hilbert(q2, k, swap_rules(q2))

    @pytest.mark.parametrize("k", range(4))
    def test_p4_against_bfs_oracle(self, p4, k):
        assert hilbert_function(p4, k) == brute_hilbert(p4, k, swap_rules(p4))

    @pytest.mark.parametrize("fixture", ["c1", "q2", "p4", "p5"])
    def test_basic_identities(self, fixture, request):
        p = request.getfixturevalue(fixture)
        assert hilbert_function(p, 0) == 1
        assert hilbert_function(p, 1) == len(p.vertices)

    def test_budget(self, p5):
        with pytest.raises(BudgetExceeded):
            hilbert_function(p5, 6, budget=1000)


class TestHFromHilbert:
    def test_unit_cell(self, c1):
        assert h_from_hilbert(c1, 3, 5) == IntPolynomial((1, 1))

    def test_q2(self, q2):
        assert h_from_hilbert(q2, 5, 6) == IntPolynomial((1, 4, 1))

    def test_wrong_dimension_detected(self, c1):
        with pytest.raises(UnstableTail):
            h_from_hilbert(c1, 2, 5)

    def test_c1_hilbert_values_are_squares(self, c1):
        # (1+t)/(1-t)^3 expands to H(k) = (k+1)^2
        assert [hilbert_function(c1, k) for k in range(6)] == [
            (k + 1) ** 2 for k in range(6)
        ]


class TestKrullDimension:
    def test_p4(self, p4):
        assert krull_dimension_frame(p4) == 16 - 8 == 8

    def test_p5(self, p5):
        assert krull_dimension_frame(p5) == 24 - 12 == 12

    @pytest.mark.parametrize("fixture", ["p4", "p5"])
    def test_equals_max_facet_cardinality(self, fixture, request):
        p = request.getfixturevalue(fixture)
        assert krull_dimension_frame(p) == max(len(f) for f in facets(p))

    def test_not_a_frame(self, q2):
        with pytest.raises(NotAFrame):
            krull_dimension_frame(q2)
