import pytest

from polyrook.errors import (
    EmptyRegion,
    EndpointMismatch,
    NotAFrame,
    NotParallelogram,
    PathsCross,
    SpecViolation,
)
from polyrook.families import (
    FrameSpec,
    NorthEastPath,
    build_frame,
    build_parallelogram,
    column_profile,
    decompose_frame,
    enumerate_parallelograms,
    lies_above,
    maximal_chains,
)
from polyrook.grid import build_polyomino
from polyrook.simplicial import facets, make_facet, steps_of

P4_S1 = NorthEastPath(((2, 2), (2, 3), (3, 3)))
P4_S2 = NorthEastPath(((2, 2), (3, 2), (3, 3)))
P5_S1 = NorthEastPath(((2, 2), (2, 3), (2, 4), (3, 4), (4, 4)))
P5_S2 = NorthEastPath(((2, 2), (3, 2), (4, 2), (4, 3), (4, 4)))


class TestLiesAbove:
    def test_p4_paths(self):
        assert lies_above(P4_S1, P4_S2)

    def test_equal_path_not_above_itself(self):
        path = NorthEastPath(((1, 1), (2, 1), (2, 2)))
        assert not lies_above(path, path)

    def test_p5_paths(self):
        # column-wise ordinate comparison at x = 2, 3, 4
        assert lies_above(P5_S1, P5_S2)
        assert not lies_above(P5_S2, P5_S1)

    def test_endpoint_mismatch(self):
        a = NorthEastPath(((1, 1), (2, 1)))
        b = NorthEastPath(((1, 1), (1, 2)))
        with pytest.raises(EndpointMismatch):
            lies_above(a, b)


class TestBuildParallelogram:
    def test_staircase_pair_gives_square(self, q2):
        s1 = NorthEastPath(((1, 1), (1, 2), (1, 3), (2, 3), (3, 3)))
        s2 = NorthEastPath(((1, 1), (2, 1), (3, 1), (3, 2), (3, 3)))
        assert build_parallelogram(s1, s2).cells == q2.cells

    def test_p5_hole(self):
        hole = build_parallelogram(P5_S1, P5_S2)
        assert hole.cells == {(2, 2), (2, 3), (3, 2), (3, 3)}

    def test_crossing_paths(self):
        s1 = NorthEastPath(((1, 1), (2, 1), (2, 2), (2, 3), (3, 3)))
        s2 = NorthEastPath(((1, 1), (1, 2), (2, 2), (3, 2), (3, 3)))
        with pytest.raises(PathsCross):
            build_parallelogram(s1, s2)

    def test_inverted_pair_has_no_region(self):
        # vacuously non-crossing, but the upper path runs below the lower one
        s1 = NorthEastPath(((1, 1), (2, 1), (2, 2)))
        s2 = NorthEastPath(((1, 1), (1, 2), (2, 2)))
        with pytest.raises(EmptyRegion):
            build_parallelogram(s1, s2)


class TestBuildFrame:
    def test_p4(self, p4):
        assert p4.rank == 8
        assert len(p4.vertices) == 16

    def test_p5_vertex_count(self, p5):
        assert p5.rank == 12
        # |V(rect)| - |V(hole)| + |S1| + |S2| - 2 = 25 - 9 + 5 + 5 - 2
        hole = build_parallelogram(P5_S1, P5_S2)
        expected = 25 - len(hole.vertices) + len(P5_S1.points) + len(P5_S2.points) - 2
        assert len(p5.vertices) == expected == 24

    def test_bounds_enforced(self):
        s1 = NorthEastPath(((1, 2), (1, 3), (2, 3)))
        s2 = NorthEastPath(((1, 2), (2, 2), (2, 3)))
        with pytest.raises(SpecViolation):
            build_frame(FrameSpec(m=4, n=4, s1=s1, s2=s2))

    def test_vertex_identity_all_small_frames(self):
        from polyrook.explorer import enumerate_small_frames

        for frame in enumerate_small_frames(5, 5):
            spec = frame.frame
            hole = build_parallelogram(spec.s1, spec.s2)
            rect_v = spec.m * spec.n
            assert (
                len(frame.vertices)
                == rect_v
                - len(hole.vertices)
                + len(spec.s1.points)
                + len(spec.s2.points)
                - 2
            )
            # |V| - rank decomposes over the removal
            lhs = len(frame.vertices) - frame.rank
            rhs = (
                rect_v
                - (spec.m - 1) * (spec.n - 1)
                - (len(hole.vertices) - hole.rank)
                + len(spec.s1.points)
                + len(spec.s2.points)
                - 2
            )
            assert lhs == rhs


class TestDecomposeFrame:
    def test_p4_bands(self, p4):
        dec = decompose_frame(p4)
        assert dec.q == {(1, 1), (3, 3)}
        assert len(dec.p1.cells) == 5
        assert len(dec.p2.cells) == 5
        assert dec.p1.cells | dec.p2.cells == p4.cells
        assert dec.p1.cells & dec.p2.cells == dec.q

    def test_p5_inclusion_exclusion(self, p5):
        dec = decompose_frame(p5)
        assert len(dec.q) == 2
        assert len(dec.p1.cells) + len(dec.p2.cells) - len(dec.q) == 12

    def test_bands_are_parallelograms(self, p5):
        dec = decompose_frame(p5)
        column_profile(dec.p1)
        column_profile(dec.p2)

    def test_non_frame_rejected(self, c1):
        with pytest.raises(NotAFrame):
            decompose_frame(c1)

    def test_all_small_frames(self):
        from polyrook.explorer import enumerate_small_frames

        for frame in enumerate_small_frames(5, 5):
            dec = decompose_frame(frame)
            assert dec.p1.cells | dec.p2.cells == frame.cells
            assert dec.p1.cells & dec.p2.cells == dec.q


class TestMaximalChains:
    def test_q2_count(self, q2):
        assert len(maximal_chains(q2)) == 6

    def test_north_first_chain_has_no_descent(self, q2):
        target = ((1, 1), (1, 2), (1, 3), (2, 3), (3, 3))
        chain = next(ch for ch in maximal_chains(q2) if ch.points == target)
        assert chain.descent_cells == ()

    def test_zigzag_chain_descents(self, q2):
        target = ((1, 1), (2, 1), (2, 2), (3, 2), (3, 3))
        chain = next(ch for ch in maximal_chains(q2) if ch.points == target)
        assert chain.descent_cells == ((1, 1), (2, 2))

    def test_not_parallelogram(self, p4):
        with pytest.raises(NotParallelogram):
            maximal_chains(p4)

    def test_chains_are_facets_with_matching_histograms(self):
        # on parallelograms, chains with k descents <-> facets with k steps,
        # and each chain's vertex set is itself a facet
        for p in enumerate_parallelograms(7):
            chains = maximal_chains(p)
            facet_sets = {f.verts for f in facets(p)}
            by_descents = {}
            for ch in chains:
                assert frozenset(ch.points) in facet_sets
                k = len(ch.descent_cells)
                by_descents[k] = by_descents.get(k, 0) + 1
            by_steps = {}
            for f in facets(p):
                k = len(steps_of(p, f))
                by_steps[k] = by_steps.get(k, 0) + 1
            assert by_descents == by_steps
            assert len(chains) == len(facet_sets)
