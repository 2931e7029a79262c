"""Exponent regimes, cone vectors, matrices and compensated sums."""

import math

import numpy as np
import pytest

from conebound.core import (
    BoundResult,
    ExponentPair,
    KahanAccumulator,
    MonotoneVector,
    NonNegativeMatrix,
    Regime,
    compensated_cumsum,
    pnorm,
    step_vector,
    validate_regime,
)
from conebound.errors import IndexOutOfRange, MatrixFileError, RegimeViolation, ZeroVector


class TestRegime:

    @pytest.mark.parametrize("p, q, regime", [
        (1.0, 1.0, "lower"),
        (2.0, 0.5, "lower"),
        (1.0, 1.0, "upper"),
        (0.5, 3.0, "upper"),
    ])
    def test_valid_pairs(self, p, q, regime):
        pair = ExponentPair(p, q, regime)
        assert pair.regime is Regime(regime)
        assert pair.is_lower == (regime == "lower")

    @pytest.mark.parametrize("p, q, regime, constraint", [
        (0.5, 0.5, Regime.LOWER, "p >= 1"),
        (2.0, 3.0, Regime.LOWER, "0 < q <= p"),
        (2.0, 2.0, Regime.UPPER, "0 < p <= 1"),
        (0.5, 0.25, Regime.UPPER, "q >= p"),
        (-1.0, 1.0, Regime.UPPER, "p, q > 0"),
        (math.inf, 1.0, Regime.LOWER, "finite"),
    ])
    def test_violations_name_the_constraint(self, p, q, regime, constraint):
        with pytest.raises(RegimeViolation) as caught:
            validate_regime(p, q, regime)
        assert caught.value.constraint == constraint

    def test_parse(self):
        assert Regime.parse("UPPER") is Regime.UPPER
        assert Regime.parse(Regime.LOWER) is Regime.LOWER
        with pytest.raises(ValueError):
            Regime.parse("sideways")

    def test_pairs_compare_by_value(self):
        assert ExponentPair(2, 1, "lower") == ExponentPair(2.0, 1.0, Regime.LOWER)
        assert ExponentPair(1, 1, "lower") != ExponentPair(1, 1, "upper")


class TestMonotoneVector:

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            MonotoneVector([1.0, 2.0])

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            MonotoneVector([1.0, -0.5])

    def test_zero_vector(self):
        with pytest.raises(ZeroVector):
            MonotoneVector([0.0, 0.0])
        assert MonotoneVector.zeros(3).is_zero

    def test_values_are_read_only(self):
        x = MonotoneVector([2.0, 1.0])
        with pytest.raises(ValueError):
            x.values[0] = 5.0

    def test_step_vector(self):
        np.testing.assert_array_equal(step_vector(2, 4).values, [1, 1, 0, 0])
        with pytest.raises(IndexOutOfRange):
            step_vector(0, 3)
        with pytest.raises(IndexOutOfRange):
            step_vector(4, 3)

    def test_pnorm(self):
        assert pnorm([3.0, 4.0], 2) == pytest.approx(5.0)
        # the quasi-norm for p < 1
        assert pnorm(MonotoneVector([1.0, 1.0]), 0.5) == pytest.approx(4.0)
        assert pnorm([0.0, 0.0], 2) == 0.0

    @pytest.mark.parametrize("p", [0.3, 1.0, 2.5])
    @pytest.mark.parametrize("factor", [0.0, 0.2, 7.5])
    def test_pnorm_is_homogeneous(self, p, factor):
        x = MonotoneVector([4.0, 2.5, 2.5, 0.75, 0.1])
        assert pnorm(x.scaled(factor), p) == pytest.approx(factor * pnorm(x, p), rel=1e-12)


class TestNonNegativeMatrix:

    def test_rejects_negative_entries(self):
        with pytest.raises(ValueError, match=r"\(2, 1\)"):
            NonNegativeMatrix([[1.0, 0.0], [-1.0, 0.0]])

    def test_rejects_non_finite_and_empty(self):
        with pytest.raises(ValueError):
            NonNegativeMatrix([[math.nan]])
        with pytest.raises(ValueError):
            NonNegativeMatrix([1.0, 2.0])

    def test_from_csv(self, cesaro_csv):
        matrix = NonNegativeMatrix.from_csv(cesaro_csv)
        assert matrix.shape == (2, 2)
        np.testing.assert_array_equal(matrix.entries, [[1.0, 0.0], [0.5, 0.5]])

    @pytest.mark.parametrize("text", ["1,2\n3\n", "1,x\n", "1,-2\n", ""])
    def test_bad_files(self, tmp_path, text):
        path = tmp_path / "bad.csv"
        path.write_text(text, encoding="utf-8")
        with pytest.raises(MatrixFileError):
            NonNegativeMatrix.from_csv(str(path))

    def test_missing_file(self, tmp_path):
        with pytest.raises(MatrixFileError):
            NonNegativeMatrix.from_csv(str(tmp_path / "absent.csv"))

    def test_identity(self, identity3):
        np.testing.assert_array_equal(identity3.entries, np.eye(3))

    def test_scaled_and_permuted_copies(self, cesaro2):
        np.testing.assert_array_equal(cesaro2.scaled(4).entries, [[4, 0], [2, 2]])
        np.testing.assert_array_equal(cesaro2.permuted_rows([1, 0]).entries, [[0.5, 0.5], [1, 0]])
        np.testing.assert_array_equal(cesaro2.entries, [[1, 0], [0.5, 0.5]])


class TestSummation:

    def test_cumsum_carries_start(self):
        np.testing.assert_array_equal(compensated_cumsum([1.0, 2.0], start=3.0), [4.0, 6.0])

    def test_cumsum_is_compensated(self):
        total = compensated_cumsum(np.full(10, 0.1))[-1]
        assert total == pytest.approx(1.0, abs=1e-15)

    def test_accumulator(self):
        accumulator = KahanAccumulator(2)
        for _ in range(1000):
            accumulator.add(np.array([0.1, 1e-3]))
        np.testing.assert_allclose(accumulator.total, [100.0, 1.0], rtol=1e-15)


def test_bound_result_lambda_pow_p():
    pair = ExponentPair(2.0, 1.0, "lower")
    result = BoundResult(4.0, 4.0, 1, np.array([4.0]), step_vector(1, 1), pair)
    assert result.lambda_pow_p == pytest.approx(16.0)
