"""Family descriptors, truncations, enclosed series and published constants."""

import math

import numpy as np
import pytest

from conebound.core import Regime
from conebound.errors import DivergentSeries, DomainError, KindError, NotCovered, RegimeViolation, SizeError
from conebound.families import (
    FamilySpec,
    Kind,
    RowStream,
    asymptotic_constant,
    generate,
    lambda_power_series,
    norlund_row_constant,
    power_sum_tail,
    theorem_range_check,
    weights,
)
from conebound.specfun import zeta


class TestFamilySpec:

    @pytest.mark.parametrize("kind, kwargs", [
        ("tail-power", {"alpha": 0}),
        ("tail-power", {"alpha": 1, "t": 2}),
        ("tail-alpha-k", {"alpha": 0.5}),
        ("log-mean-tail", {"alpha": 2, "beta": 1.5}),
        ("weighted-mean-power", {"alpha": -1}),
        ("weighted-mean-power-diff", {"alpha": 0}),
        ("norlund-power", {"alpha": -0.5}),
        ("norlund-power-sum", {}),
    ])
    def test_constructor_ranges(self, kind, kwargs):
        with pytest.raises(DomainError):
            FamilySpec(kind, **kwargs)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            FamilySpec("hilbert", alpha=1)

    def test_cesaro_ignores_alpha(self):
        assert FamilySpec("cesaro", alpha=3) == FamilySpec(Kind.CESARO)

    def test_defaults_and_label(self):
        spec = FamilySpec("tail-power", alpha=2)
        assert spec.t == 1.0
        assert spec.label == "tail-power alpha=2 t=1"
        assert FamilySpec("log-mean-tail", alpha=2).beta == math.inf

    def test_kind_groups(self):
        assert Kind.TAIL_POWER.is_tail
        assert Kind.CESARO.is_weighted_mean
        assert Kind.NORLUND_POWER_SUM.is_norlund
        assert "weighted-mean-power-diff" in Kind.names()


class TestWeights:

    def test_cesaro(self):
        sequence = weights(FamilySpec("cesaro"), 3)
        np.testing.assert_array_equal(sequence.lambda_, [1, 1, 1])
        np.testing.assert_array_equal(sequence.Lambda, [1, 2, 3])

    def test_power_differences_telescope(self):
        sequence = weights(FamilySpec("weighted-mean-power-diff", alpha=2), 4)
        np.testing.assert_allclose(sequence.lambda_, [1, 3, 5, 7])
        np.testing.assert_allclose(sequence.Lambda, [1, 4, 9, 16])

    def test_norlund_power_sum(self):
        sequence = weights(FamilySpec("norlund-power-sum", alpha=1), 3)
        np.testing.assert_allclose(sequence.lambda_, [1, 3, 6])

    def test_tail_families_have_no_weights(self):
        with pytest.raises(KindError):
            weights(FamilySpec("tail-power", alpha=1), 3)


class TestGenerate:

    def test_cesaro(self):
        np.testing.assert_array_equal(generate(FamilySpec("cesaro"), 2).entries, [[1, 0], [0.5, 0.5]])

    def test_tail_power(self):
        matrix = generate(FamilySpec("tail-power", alpha=1), 2)
        np.testing.assert_allclose(matrix.entries, [[1, 1], [0, 0.5]])

    def test_tail_alpha_k_at_one_is_tail_power(self):
        np.testing.assert_allclose(
            generate(FamilySpec("tail-alpha-k", alpha=1), 6).entries,
            generate(FamilySpec("tail-power", alpha=1), 6).entries,
        )

    def test_constant_norlund_is_cesaro(self):
        np.testing.assert_allclose(
            generate(FamilySpec("norlund-power", alpha=0), 5).entries,
            generate(FamilySpec("cesaro"), 5).entries,
        )

    def test_weighted_means_are_row_stochastic(self):
        matrix = generate(FamilySpec("weighted-mean-power", alpha=0.5), 30)
        np.testing.assert_allclose(matrix.entries.sum(axis=1), 1.0, rtol=1e-13)

    @pytest.mark.parametrize("kind, alpha", [
        ("norlund-power-diff", 0.5), ("norlund-power-diff", 2.5),
        ("norlund-power-sum", 1.0), ("norlund-power", 0.0), ("norlund-power", 2.0),
    ])
    def test_norlund_rows_are_stochastic(self, kind, alpha):
        matrix = generate(FamilySpec(kind, alpha=alpha), 512)
        np.testing.assert_allclose(matrix.entries.sum(axis=1), 1.0, rtol=0, atol=1e-12)

    @pytest.mark.parametrize("alpha", [1.2, 2.0, 3.5])
    def test_tail_alpha_k_is_below_tail_power(self, alpha):
        lower = generate(FamilySpec("tail-alpha-k", alpha=alpha), 80).entries
        upper = generate(FamilySpec("tail-power", alpha=alpha), 80).entries
        assert np.all(lower <= upper * (1 + 1e-12))
        assert np.any(lower < upper)

    def test_extra_tail_rows_are_zero(self):
        matrix = generate(FamilySpec("tail-power", alpha=2), 3, rows=5)
        assert matrix.shape == (5, 3)
        assert not matrix.entries[3:].any()

    @pytest.mark.parametrize("kind, alpha", [
        ("cesaro", None), ("tail-power", 1.5), ("log-mean-tail", 2.0),
        ("weighted-mean-power", 3.0), ("norlund-power-diff", 0.5),
    ])
    def test_blocks_match_the_matrix(self, kind, alpha):
        spec = FamilySpec(kind, alpha=alpha)
        stream = RowStream(spec, 40, rows=50)
        stacked = np.vstack([block for _, block in stream.blocks(16)])
        np.testing.assert_array_equal(stacked, generate(spec, 40, rows=50).entries)

    @pytest.mark.parametrize("size", [0, -3, 2.5])
    def test_bad_sizes(self, size):
        with pytest.raises(SizeError):
            generate(FamilySpec("cesaro"), size)


class TestSeries:

    def test_zeta_case(self):
        value = power_sum_tail(0, 2)
        assert value.value == pytest.approx(math.pi ** 2 / 6, abs=1e-9)
        assert value.est_abs_error < 1e-9

    def test_start_excludes_terms(self):
        assert power_sum_tail(0, 2, start=1).value == pytest.approx(math.pi ** 2 / 6 - 1, abs=1e-9)

    def test_telescoping_case(self):
        """Lambda_k = k(k+1)/2 for alpha = 1, and the sum of 2/(k(k+1)) is 2."""
        assert lambda_power_series(1, 1).value == pytest.approx(2.0, abs=1e-8)

    @pytest.mark.parametrize("alpha, p", [(-0.5, 3), (-0.5, 2.2), (-0.8, 6), (-0.3, 1.6)])
    def test_negative_alpha(self, alpha, p):
        value = power_sum_tail(alpha, p)
        assert value.value > 1.0
        assert value.est_abs_error < 1e-9

        # dropping the first ten terms must remove exactly their sum
        Lambda = np.cumsum(np.arange(1, 11, dtype=float) ** alpha)
        head = math.fsum(Lambda ** -p)
        shifted = power_sum_tail(alpha, p, start=10)
        assert value.value - shifted.value == pytest.approx(head, abs=3e-9)

    def test_divergence(self):
        with pytest.raises(DivergentSeries):
            power_sum_tail(0, 1)

    def test_norlund_constant(self):
        """lambda_j / Lambda_j = 1/j for constant weights."""
        value = norlund_row_constant(FamilySpec("norlund-power", alpha=0), 2)
        assert value.value == pytest.approx(zeta(2), abs=1e-8)

    def test_norlund_guards(self):
        with pytest.raises(KindError):
            norlund_row_constant(FamilySpec("cesaro"), 2)
        with pytest.raises(DivergentSeries):
            norlund_row_constant(FamilySpec("norlund-power", alpha=1), 1)


class TestConstants:

    def test_copson(self):
        known = asymptotic_constant(FamilySpec("tail-power", alpha=2), 2, 2)
        assert known.value == pytest.approx(9.0)
        assert known.citation == "Theorem 1.2"
        assert known.regime is Regime.LOWER
        assert known.lambda_ == pytest.approx(3.0)

    def test_beta_constant(self):
        known = asymptotic_constant(FamilySpec("tail-power", alpha=1), 0.5, 0.5)
        assert known.regime is Regime.UPPER
        assert known.value == pytest.approx(math.pi / 2, rel=1e-10)

    def test_zeta_constant(self):
        known = asymptotic_constant(FamilySpec("weighted-mean-power-diff", alpha=2), 1, 1, "lower")
        assert known.value == pytest.approx(math.pi ** 2 / 6, rel=1e-13)

    def test_pole_constant(self):
        known = asymptotic_constant(FamilySpec("weighted-mean-power-diff", alpha=3), 0.5, 0.5)
        assert known.value == pytest.approx(3.0)
        assert known.lambda_ == pytest.approx(9.0)

    def test_shifted_pole_constant(self):
        known = asymptotic_constant(FamilySpec("weighted-mean-power", alpha=3), 1, 1, "upper")
        assert known.value == pytest.approx(4 / 3)
        assert known.citation == "Theorem 4"

    def test_not_covered(self):
        spec = FamilySpec("weighted-mean-power", alpha=0.5)
        assert not theorem_range_check(spec, 1.5, 1.5).covered
        with pytest.raises(NotCovered):
            asymptotic_constant(spec, 1.5, 1.5)

    def test_regime_filter(self):
        spec = FamilySpec("tail-power", alpha=1)
        assert theorem_range_check(spec, 1, 1, "lower").covered
        with pytest.raises(NotCovered):
            asymptotic_constant(spec, 1, 1, "upper")

    def test_unequal_exponents(self):
        spec = FamilySpec("tail-power", alpha=2)
        assert not theorem_range_check(spec, 2, 1).covered
        with pytest.raises(RegimeViolation):
            asymptotic_constant(spec, 2, 1)

    def test_estimated_errors_are_small(self):
        known = asymptotic_constant(FamilySpec("norlund-power-diff", alpha=0.5), 2, 2)
        assert known.est_abs_error < 1e-8

    @pytest.mark.parametrize("alpha, p", [(-0.5, 3), (-0.5, 2.2), (-0.8, 6)])
    def test_negative_alpha_series(self, alpha, p):
        known = asymptotic_constant(FamilySpec("weighted-mean-power", alpha=alpha), p, p)
        assert known.est_abs_error < 1e-9
        assert known.value == pytest.approx(lambda_power_series(alpha, p).value, abs=1e-9)
