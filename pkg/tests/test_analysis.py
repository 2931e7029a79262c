"""Monotonicity verdicts, Bennett's sequence, convexity and the inequality prober."""

import math

import numpy as np
import pytest

from conebound.analysis import (
    INEQUALITIES,
    Inequality,
    Trend,
    bennett_claim,
    bennett_jameson_mean,
    bennett_jameson_means,
    bennett_sequence,
    condition_4_7,
    condition_sequence,
    f_alpha_p,
    monotonicity_verdict,
    probe,
    second_difference_min,
)
from conebound.engine import s_sequence
from conebound.errors import DivergentSeries, DomainError, SizeError, UnknownInequality
from conebound.families import FamilySpec, generate


class TestMonotonicity:

    @pytest.mark.parametrize("values, verdict", [
        ([1, 2, 3], Trend.INCREASING),
        ([3, 2, 1], Trend.DECREASING),
        ([1, 1, 1], Trend.INCREASING),
        ([1, 1 - 1e-13, 2], Trend.INCREASING),
    ])
    def test_directions(self, values, verdict):
        report = monotonicity_verdict(values)
        assert report.verdict is verdict
        assert report.first_violation_index is None

    def test_neither(self):
        report = monotonicity_verdict([1, 3, 2], claim_citation="Theorem 5")
        assert report.verdict is Trend.NEITHER
        assert report.first_violation_index == 2
        assert report.claim_citation == "Theorem 5"

    def test_direction_is_set_by_the_first_real_move(self):
        assert monotonicity_verdict([5, 5, 4, 6]).first_violation_index == 3

    def test_needs_two_values(self):
        with pytest.raises(SizeError):
            monotonicity_verdict([1.0])


class TestBennett:

    def test_first_term(self):
        """b_1 = 4 (pi^2/3 - 13/4) for alpha = 1, p = 2."""
        assert bennett_sequence(1, 2, 5)[0] == pytest.approx(4 * (math.pi ** 2 / 3 - 13 / 4), rel=1e-9)

    def test_zeta_case(self):
        """alpha = 0 gives b_n = n^(p-1) zeta(p, n+1)."""
        values = bennett_sequence(0, 2, 3)
        expected = [1 * (math.pi ** 2 / 6 - 1), 2 * (math.pi ** 2 / 6 - 1.25), 3 * (math.pi ** 2 / 6 - 1.25 - 1 / 9)]
        np.testing.assert_allclose(values, expected, rtol=1e-9)

    def test_known_increasing_case(self):
        report = monotonicity_verdict(bennett_sequence(1, 2, 100))
        assert report.verdict is Trend.INCREASING

    def test_decreasing_case(self):
        report = monotonicity_verdict(bennett_sequence(2, 0.4, 100))
        assert report.verdict is Trend.DECREASING

    def test_domain(self):
        with pytest.raises(DomainError):
            bennett_sequence(-0.5, 2, 10)
        with pytest.raises(DivergentSeries):
            bennett_sequence(0, 1, 10)
        with pytest.raises(SizeError):
            bennett_sequence(1, 2, 0.5)

    @pytest.mark.parametrize("alpha, p, claim", [
        (0.5, 3, ("Theorem 5", "increasing")),
        (0.1, 8, ("Theorem 6", "increasing")),
        (2, 0.4, ("Theorem 3", "decreasing")),
        (2, 1, ("Known case (alpha >= 1, p >= 1)", "increasing")),
        (0.5, 0.8, ("Known case (0 < alpha <= 1, 1/(1+alpha) < p <= 1)", "decreasing")),
        (4, 0.6, ("Section 5 remark (alpha >= 3, p >= 1/2)", "increasing")),
        (0.5, 0.1, (None, None)),
    ])
    def test_claims(self, alpha, p, claim):
        assert bennett_claim(alpha, p) == claim


class TestCondition:

    @pytest.mark.parametrize("alpha, p, n, expected", [(1, 2, 1, 2.0), (1, 1, 1, 0.0), (0, 1, 4, 0.0)])
    def test_values(self, alpha, p, n, expected):
        assert condition_4_7(alpha, p, n) == pytest.approx(expected, abs=1e-12)

    def test_sequence_matches_pointwise(self):
        values = condition_sequence(0.5, 3, 12)
        assert values.size == 12
        assert values[6] == pytest.approx(condition_4_7(0.5, 3, 7), rel=1e-12)

    def test_index(self):
        with pytest.raises(SizeError):
            condition_4_7(1, 2, 0)


class TestConvexity:

    def test_values(self):
        assert f_alpha_p(1, 1, 0.5) == pytest.approx(2.0)
        assert f_alpha_p(2, 0.4, 0.25) == pytest.approx(15 ** 0.4 + (7 / 9) ** 0.4)

    def test_symmetry(self):
        x = np.linspace(0.05, 0.95, 19)
        np.testing.assert_allclose(f_alpha_p(1.7, 0.6, x), f_alpha_p(1.7, 0.6, 1 - x), rtol=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            f_alpha_p(1, 1, 0.0)
        with pytest.raises(DomainError):
            f_alpha_p(1, 1, [0.5, 1.0])
        with pytest.raises(DomainError):
            f_alpha_p(0, 1, 0.5)

    @pytest.mark.parametrize("alpha, p", [(1, 1), (2, 0.4), (3, 2)])
    def test_convex_cases(self, alpha, p):
        assert second_difference_min(alpha, p, 1000) >= -1e-9

    def test_grid_size(self):
        with pytest.raises(SizeError):
            second_difference_min(1, 1, 2)

    def test_mean(self):
        assert bennett_jameson_mean(1, 1, 1) == pytest.approx(2.0)
        np.testing.assert_allclose(bennett_jameson_means(1, 1, 3)[0], 2.0)

    @pytest.mark.parametrize("alpha, p", [(1.0, 1.0), (1.5, 0.6), (3.0, 0.2)])
    def test_mean_is_twice_the_tail_power_sequence(self, alpha, p):
        s = s_sequence(generate(FamilySpec("tail-power", alpha=alpha), 25), p, p).values
        np.testing.assert_allclose(bennett_jameson_means(alpha, p, 25), 2 * s, rtol=1e-11)


class TestProbe:

    def test_forward_claim_holds(self):
        report = probe("L4_4.25", {"n_max": 40}, grid=5)
        assert report.passed
        assert report.violations == []
        assert report.worst_margin >= -1e-10
        assert report.evaluations == 10 * 40

    def test_reverse_claim_holds(self):
        report = probe("L4_4.25", {"n_max": 40}, grid=5, reverse=True)
        assert report.passed
        assert report.reverse

    def test_continuous_variable(self):
        report = probe("L6_5.14", grid=21)
        assert report.passed
        assert "x in [0, 1]" in report.grid

    def test_pairwise_ratios(self):
        assert probe("L4_4.22", {"n_max": 30, "alpha_min": 0.2, "alpha_max": 0.8}, grid=4).passed

    def test_requested_box(self):
        report = probe("L5_5.15", {"alpha_min": 1.5, "alpha_max": 2.5, "n_max": 20}, grid=3)
        assert "[1.5, 2.5]" in report.grid

    def test_box_outside_the_claim(self):
        with pytest.raises(DomainError):
            probe("L7_5.18", {"alpha_min": 0.0, "alpha_max": 1.0}, grid=3)

    def test_box_across_intervals(self):
        with pytest.raises(DomainError):
            probe("L4_4.22", {"alpha_min": 0.5, "alpha_max": 5.0}, grid=3)

    def test_no_reverse_form(self):
        with pytest.raises(DomainError):
            probe("L10", reverse=True)

    def test_unknown(self):
        with pytest.raises(UnknownInequality):
            probe("L99")

    def test_violations_are_reported(self, monkeypatch):
        def terms(alpha, n_max, **_):
            return np.zeros(n_max), np.ones(n_max), lambda i: {"n": i + 1}

        false_claim = Inequality("FALSE", "none", "0 >= 1", "ge", "n", ((0.0, 1.0),), None, terms)
        monkeypatch.setitem(INEQUALITIES, "FALSE", false_claim)

        report = probe("FALSE", {"n_max": 4}, grid=3)
        assert not report.passed
        assert len(report.violations) == 12
        assert report.worst_margin == pytest.approx(-1.0)
        assert report.violations[0].params == {"alpha": 0.0, "n": 1}
        assert report.violations[0].rhs == 1.0

    def test_threads_do_not_change_the_report(self):
        serial = probe("L10", {"n_max": 50}, grid=6, threads=1)
        parallel = probe("L10", {"n_max": 50}, grid=6, threads=3)
        assert serial.worst_margin == parallel.worst_margin
        assert serial.evaluations == parallel.evaluations
