from collections import Counter

import pytest

from polyrook.explorer import (
    conjecture_sweep,
    count_fixed_by_bounding_box,
    enumerate_fixed_polyominoes,
    enumerate_small_frames,
    normalize_cells,
)


class TestFixedEnumeration:
    def test_counts_against_bounding_box_oracle(self):
        by_rank = Counter(p.rank for p in enumerate_fixed_polyominoes(5))
        assert dict(by_rank) == count_fixed_by_bounding_box(5)
        assert dict(by_rank) == {1: 1, 2: 2, 3: 6, 4: 19, 5: 63}

    def test_rank_one(self):
        assert len(list(enumerate_fixed_polyominoes(1))) == 1

    def test_rank_two(self):
        assert len(list(enumerate_fixed_polyominoes(2))) == 3

    def test_translation_normalized_and_unique(self):
        seen = set()
        for p in enumerate_fixed_polyominoes(5):
            canon = normalize_cells(p.cells)
            assert canon == tuple(sorted(p.cells))
            assert min(i for i, _ in canon) == 1
            assert min(j for _, j in canon) == 1
            assert canon not in seen
            seen.add(canon)

    def test_deterministic(self):
        a = [tuple(sorted(p.cells)) for p in enumerate_fixed_polyominoes(4)]
        b = [tuple(sorted(p.cells)) for p in enumerate_fixed_polyominoes(4)]
        assert a == b


class TestFrameEnumeration:
    def test_four_by_four_unique(self, p4):
        frames = list(enumerate_small_frames(4, 4))
        assert len(frames) == 1
        assert frames[0].cells == p4.cells

    def test_three_by_three_empty(self):
        assert list(enumerate_small_frames(3, 3)) == []

    def test_five_by_five_contains_p5(self, p5):
        cells = {f.cells for f in enumerate_small_frames(5, 5)}
        assert p5.cells in cells

    def test_all_tagged_and_distinct(self):
        frames = list(enumerate_small_frames(5, 5))
        assert all(f.frame is not None for f in frames)
        assert len({f.cells for f in frames}) == len(frames)


class TestConjectureSweep:
    def test_rank_three(self):
        records = conjecture_sweep(enumerate_fixed_polyominoes(3))
        assert len(records) == 9
        assert all(r.status == "match" for r in records)

    def test_rank_five(self):
        records = conjecture_sweep(enumerate_fixed_polyominoes(5))
        assert len(records) == 91
        statuses = Counter(r.status for r in records)
        assert statuses["mismatch"] == 0
        assert statuses["match"] + statuses["skipped_groebner"] == 91

    def test_frames_all_match(self):
        records = conjecture_sweep(enumerate_small_frames(5, 5))
        assert all(r.groebner for r in records)
        assert all(r.status == "match" for r in records)

    def test_mismatch_requires_both_polynomials(self):
        for r in conjecture_sweep(enumerate_fixed_polyominoes(4)):
            if r.status == "mismatch":
                assert r.h is not None and r.r_tilde is not None
            if r.status == "skipped_groebner":
                assert r.h is None

    def test_deterministic_records(self):
        a = conjecture_sweep(enumerate_fixed_polyominoes(4))
        b = conjecture_sweep(enumerate_fixed_polyominoes(4))
        assert a == b
