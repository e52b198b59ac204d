"""Utility functions, axiom verification, ranking, selection, indifference."""

import math

import pytest

from fairuq import (
    DecisionMakerPoint,
    DomainError,
    EmptyInput,
    indifference_points,
    norm_value,
    rank_all,
    register_utility,
    select_optimal,
    topsis_value,
    u_norm,
    u_topsis,
    verify_utility_axioms,
)

SQRT2 = math.sqrt(2.0)


def point(d, s, label=""):
    return DecisionMakerPoint(d, s, label)


class TestTopsisValues:
    def test_corners(self):
        assert topsis_value(0.0, 0.0) == pytest.approx(1.0, abs=1e-12)
        assert topsis_value(0.0, 1.0) == pytest.approx(SQRT2 - 1.0, abs=1e-12)
        assert topsis_value(1.0, 1.0) == pytest.approx(1.0 - SQRT2, abs=1e-12)
        assert topsis_value(1.0, 0.0) == pytest.approx(-1.0, abs=1e-12)

    def test_recruiters(self):
        assert topsis_value(1.0, 0.48) == pytest.approx(-0.629, abs=5e-4)
        assert topsis_value(1.0, 1.0) == pytest.approx(-0.414, abs=5e-4)

    def test_half_disparity_is_exactly_zero(self):
        assert topsis_value(0.5, 0.431) == 0.0
        assert topsis_value(0.5, 0.0) == 0.0
        assert topsis_value(0.5, 1.0) == 0.0

    def test_domain(self):
        with pytest.raises(DomainError):
            topsis_value(1.5, 0.0)
        with pytest.raises(DomainError):
            topsis_value(0.5, -0.1)

    def test_point_wrapper(self):
        value = u_topsis(point(1.0, 0.48))
        assert value.function_id == "topsis"
        assert value.value == topsis_value(1.0, 0.48)


class TestNormValues:
    def test_extremes(self):
        assert norm_value(0.0, 0.0) == pytest.approx(1.0, abs=1e-12)
        assert norm_value(1.0, 0.0) == pytest.approx(0.0, abs=1e-12)

    def test_uncertain_unfair(self):
        assert norm_value(1.0, 1.0) == pytest.approx((2.0 - SQRT2) / 2.0, abs=1e-12)

    def test_wrapper_id(self):
        assert u_norm(point(0.3, 0.3)).function_id == "norm"


class TestAxiomVerification:
    def test_builtin_utilities_pass(self):
        assert verify_utility_axioms(topsis_value).passed
        assert verify_utility_axioms(norm_value).passed

    def test_constant_function_fails_all_six(self):
        report = verify_utility_axioms(lambda d, s: 0.0)
        assert not report.passed
        assert len(report.failures()) == 6

    def test_registration_rejects_bad_candidate(self):
        with pytest.raises(ValueError):
            register_utility("broken", lambda d, s: d)


TABLE3_POINTS = [
    point(0.5, 0.4308035714285714, "LR"),
    point(5 / 6, 0.36607142857142855, "KNN"),
    point(1.0, 0.2879464285714286, "SVM"),
    point(1.0, 0.2879464285714286, "RF"),
]


class TestRanking:
    def test_model_comparison_order_and_tie(self):
        ranking = rank_all(TABLE3_POINTS)
        assert [e.label for e in ranking.entries] == ["LR", "KNN", "SVM", "RF"]
        assert ranking.tie_groups == (("SVM", "RF"),)
        assert ranking.entries[2].utility.value == pytest.approx(-0.753, abs=5e-4)

    def test_recruiter_comparison(self):
        ranking = rank_all([point(1.0, 0.48, "A"), point(1.0, 1.0, "B")])
        assert [e.label for e in ranking.entries] == ["B", "A"]

    def test_single_element(self):
        ranking = rank_all([point(0.2, 0.2, "only")])
        assert ranking.entries[0].rank == 1
        assert ranking.tie_groups == ()

    def test_ranks_are_positional(self):
        ranking = rank_all(TABLE3_POINTS)
        assert [e.rank for e in ranking.entries] == [1, 2, 3, 4]

    def test_stable_for_equal_utilities(self):
        pts = [point(0.4, 0.1, "first"), point(0.4, 0.1, "second")]
        ranking = rank_all(pts)
        assert [e.label for e in ranking.entries] == ["first", "second"]

    def test_tie_key_overrides_input_order(self):
        accuracy = {"SVM": 0.711, "RF": 0.702}
        ranking = rank_all(TABLE3_POINTS, tie_key=lambda p: accuracy.get(p.label, 1.0))
        assert [e.label for e in ranking.entries] == ["LR", "KNN", "SVM", "RF"]
        reversed_acc = {"SVM": 0.1, "RF": 0.9}
        ranking = rank_all(TABLE3_POINTS, tie_key=lambda p: reversed_acc.get(p.label, 1.0))
        assert [e.label for e in ranking.entries] == ["LR", "KNN", "RF", "SVM"]
        # ties are still reported even when a key orders within them
        assert ranking.tie_groups == (("RF", "SVM"),)

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            rank_all([])


class TestSelection:
    def test_prefers_uncertain_recruiter(self):
        label, utility = select_optimal([point(1.0, 0.48, "A"), point(1.0, 1.0, "B")])
        assert label == "B"
        assert utility.value == pytest.approx(1.0 - SQRT2, abs=1e-12)

    def test_single(self):
        label, _ = select_optimal([point(0.9, 0.9, "only")])
        assert label == "only"

    def test_first_of_tie_wins(self):
        label, _ = select_optimal(
            [point(0.1, 0.1, "first"), point(0.1, 0.1, "twin")]
        )
        assert label == "first"

    def test_matches_rank_head(self):
        ranking = rank_all(TABLE3_POINTS)
        label, utility = select_optimal(TABLE3_POINTS)
        assert label == ranking.entries[0].label
        assert utility.value == ranking.entries[0].utility.value

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            select_optimal([])


class TestIndifference:
    def test_zero_target_is_the_half_disparity_line(self):
        points = indifference_points(0.0, samples=11)
        assert len(points) == 11
        assert all(p.disparity == 0.5 for p in points)
        assert [p.uncertainty for p in points] == pytest.approx(
            [i / 10 for i in range(11)]
        )

    def test_maximum_target_only_at_ideal_corner(self):
        points = indifference_points(1.0, samples=11)
        assert len(points) == 1
        assert (points[0].disparity, points[0].uncertainty) == (0.0, 0.0)

    def test_curve_passes_through_uncertain_unfair_corner(self):
        points = indifference_points(1.0 - SQRT2, samples=3)
        assert (1.0, 1.0) in [(p.disparity, p.uncertainty) for p in points]

    def test_solutions_hit_target(self):
        target = -0.25
        for p in indifference_points(target, samples=21):
            assert topsis_value(p.disparity, p.uncertainty) == pytest.approx(
                target, abs=1e-9
            )

    def test_domain(self):
        with pytest.raises(DomainError):
            indifference_points(2.0)
        with pytest.raises(ValueError):
            indifference_points(0.0, samples=0)
