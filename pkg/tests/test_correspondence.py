import pytest

from polyrook.correspondence import psi, verify_bijection, verify_main_theorem
from polyrook.errors import NotAFrame
from polyrook.explorer import enumerate_small_frames
from polyrook.polynomial import IntPolynomial
from polyrook.rooks import canonical_representatives, is_canonical, rook_number
from polyrook.simplicial import facets, steps_of


class TestPsi:
    def test_stepless_facet_maps_to_empty(self, p4):
        cfg, trace = psi(p4, facets(p4)[0])
        assert cfg.rooks == frozenset()
        assert trace.assignments == ()

    def test_one_step_facets_place_on_corner_cell(self, p4):
        for f in facets(p4):
            st = steps_of(p4, f)
            if len(st) == 1:
                cfg, trace = psi(p4, f)
                w = st[0].corner
                assert cfg.rooks == {(w[0] - 1, w[1])}
                assert not trace.assignments[0].relocated

    @pytest.mark.parametrize("fixture", ["p4", "p5"])
    def test_size_matches_step_count_and_image_canonical(self, fixture, request):
        p = request.getfixturevalue(fixture)
        spec = p.frame
        for f in facets(p):
            cfg, trace = psi(p, f)  # non-attacking and canonical asserted inside
            assert cfg.k == len(steps_of(p, f))
            assert is_canonical(p, cfg)
            for a in trace.assignments:
                if a.relocated and a.collision == "horizontal":
                    assert a.cell == (a.corner[0] - 1, spec.b0)
                elif a.relocated and a.collision == "vertical":
                    assert a.cell == (spec.ak - 1, a.corner[1])
                else:
                    assert a.cell == (a.corner[0] - 1, a.corner[1])

    @pytest.mark.parametrize("fixture", ["p4", "p5"])
    def test_no_relocation_without_collision(self, fixture, request):
        p = request.getfixturevalue(fixture)
        for f in facets(p):
            _, trace = psi(p, f)
            for a in trace.assignments:
                if a.collision == "none":
                    assert not a.relocated
                    assert a.cell == (a.corner[0] - 1, a.corner[1])

    def test_total_on_all_small_frames(self):
        # psi must succeed (all internal guarantees hold) on every facet
        for p in enumerate_small_frames(5, 5):
            for f in facets(p):
                psi(p, f)


class TestBijection:
    @pytest.mark.parametrize("fixture", ["p4", "p5"])
    def test_fixtures(self, fixture, request):
        p = request.getfixturevalue(fixture)
        report = verify_bijection(p)
        assert report.bijective
        for row in report.per_k:
            assert row["facets"] == row["canonical"] == row["image"]

    def test_counts_link_the_theorems(self, p4):
        # facets with k steps, switching classes at k, and h_k all agree
        by_steps = {}
        for f in facets(p4):
            k = len(steps_of(p4, f))
            by_steps[k] = by_steps.get(k, 0) + 1
        from polyrook.rooks import switching_classes
        from polyrook.simplicial import h_from_steps

        h = h_from_steps(p4)
        for k, count in by_steps.items():
            assert count == len(switching_classes(p4, k)) == h[k]

    def test_rejects_non_frame(self, q2):
        with pytest.raises(NotAFrame):
            verify_bijection(q2)

    def test_all_small_frames(self):
        for p in enumerate_small_frames(5, 5):
            assert verify_bijection(p).bijective


class TestMainTheorem:
    def test_p4_all_verdicts(self, p4):
        report = verify_main_theorem(p4)
        assert report.all_true
        assert report.groebner
        assert report.h_steps == report.r_tilde

    def test_q2_conjecture_mode(self, q2):
        report = verify_main_theorem(q2)
        assert report.h_steps == report.r_tilde == IntPolynomial((1, 4, 1))
        assert report.verdicts["main_theorem"]

    def test_unit_cell(self, c1):
        report = verify_main_theorem(c1)
        assert report.h_steps == report.r_tilde == IntPolynomial((1, 1))
        assert report.h_steps.degree == rook_number(c1) == 1
        assert report.verdicts["regularity"]

    def test_regularity_is_rook_number(self, p5):
        report = verify_main_theorem(p5)
        assert report.verdicts["regularity"]
        assert report.h_steps.degree == rook_number(p5) == 4
