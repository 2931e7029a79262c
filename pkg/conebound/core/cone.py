"""Exponent regimes, monotone cone vectors and bound results."""

import math
from collections import namedtuple
from enum import Enum

import numpy as np

from conebound.errors import IndexOutOfRange, RegimeViolation, ZeroVector


class BoundResult(
    namedtuple(
        "BoundResult", ["lambda_", "lambda_pow_q", "optimal_r", "s_values", "extremal", "pair"]
    )
):
    """The sharp constant, where it is attained, and the full s_r trace."""

    __slots__ = ()

    @property
    def lambda_pow_p(self) -> float:
        """The bound raised to p, the form in which published constants are displayed."""
        return self.lambda_pow_q ** (self.pair.p / self.pair.q)


class Regime(Enum):
    """Which side of the inequality the sharp constant bounds."""

    LOWER = "lower"
    UPPER = "upper"

    @classmethod
    def parse(cls, value):
        """Accept a Regime, or its name in any case."""
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"Error! Unknown regime `{value}`. Use `lower` or `upper`.") from None


def validate_regime(p: float, q: float, regime: Regime):
    """
    Check that (p, q) lie in the regime's parameter range.
    Args:
        p (float): The exponent of the domain norm
        q (float): The exponent of the image norm
        regime (Regime): LOWER (p >= 1, 0 < q <= p) or UPPER (0 < p <= 1, q >= p)
    Raises: RegimeViolation naming the first violated constraint
    """
    regime = Regime.parse(regime)

    if not (math.isfinite(p) and math.isfinite(q)):
        raise RegimeViolation("finite", f"Error! p and q must be finite (got p={p}, q={q}).")
    if p <= 0 or q <= 0:
        raise RegimeViolation("p, q > 0", f"Error! p and q must be positive (got p={p}, q={q}).")

    if regime is Regime.LOWER:
        if p < 1:
            raise RegimeViolation("p >= 1", f"Error! The lower regime needs p >= 1 (got p={p}).")
        if q > p:
            raise RegimeViolation(
                "0 < q <= p", f"Error! The lower regime needs 0 < q <= p (got p={p}, q={q})."
            )
    else:
        if p > 1:
            raise RegimeViolation("0 < p <= 1", f"Error! The upper regime needs p <= 1 (got p={p}).")
        if q < p:
            raise RegimeViolation(
                "q >= p", f"Error! The upper regime needs q >= p (got p={p}, q={q})."
            )


class ExponentPair:
    """A validated (p, q) with its regime."""

    def __init__(self, p: float, q: float, regime):
        regime = Regime.parse(regime)
        validate_regime(p, q, regime)

        self.__p = float(p)
        self.__q = float(q)
        self.__regime = regime

    @property
    def p(self) -> float:
        """The domain exponent."""
        return self.__p

    @property
    def q(self) -> float:
        """The image exponent."""
        return self.__q

    @property
    def regime(self) -> Regime:
        """LOWER or UPPER."""
        return self.__regime

    @property
    def is_lower(self) -> bool:
        """True if the pair bounds from below."""
        return self.__regime is Regime.LOWER

    def __eq__(self, other):
        if not isinstance(other, ExponentPair):
            return NotImplemented
        return (self.p, self.q, self.regime) == (other.p, other.q, other.regime)

    def __hash__(self):
        return hash((self.p, self.q, self.regime))

    def __repr__(self):
        return f"ExponentPair(p={self.p!r}, q={self.q!r}, regime={self.regime.value!r})"


class MonotoneVector:
    """An immutable non-increasing, non-negative vector."""

    def __init__(self, values, allow_zero: bool = False):
        """
        Args:
            values (array): x_1 >= x_2 >= ... >= x_n >= 0
            allow_zero (bool): Whether the zero vector is acceptable
        Raises: ValueError if the values leave the cone, ZeroVector if all are zero
        """
        values = np.array(values, dtype=float).reshape(-1)

        if values.size == 0:
            raise ValueError("Error! A cone vector needs at least one entry.")
        if not np.all(np.isfinite(values)):
            raise ValueError("Error! Cone vectors must be finite.")
        if values[-1] < 0:
            raise ValueError("Error! Cone vectors must be non-negative.")
        if np.any(np.diff(values) > 0):
            raise ValueError("Error! Cone vectors must be non-increasing.")
        if not allow_zero and values[0] == 0:
            raise ZeroVector("Error! The zero vector is not allowed here.")

        values.setflags(write=False)
        self.__values = values

    @classmethod
    def zeros(cls, length: int):
        """The explicit zero vector of a given length."""
        return cls(np.zeros(length), allow_zero=True)

    @property
    def values(self) -> np.ndarray:
        """The read-only entries."""
        return self.__values

    @property
    def is_zero(self) -> bool:
        """True if every entry is zero."""
        return self.__values[0] == 0

    def scaled(self, factor: float):
        """Return factor * x for factor >= 0."""
        return MonotoneVector(self.__values * factor, allow_zero=True)

    def __len__(self):
        return self.__values.size

    def __repr__(self):
        return f"MonotoneVector({self.__values.tolist()!r})"


def step_vector(r: int, n: int) -> MonotoneVector:
    """
    The equality vector (1, ..., 1, 0, ..., 0) with r ones.
    Raises: IndexOutOfRange unless 1 <= r <= n
    """
    if not 1 <= r <= n:
        raise IndexOutOfRange(f"Error! Step index must lie in 1..{n} (got {r}).")

    values = np.zeros(n)
    values[:r] = 1.0
    return MonotoneVector(values)


def pnorm(x, p: float) -> float:
    """
    (sum x_i^p)^(1/p); for 0 < p < 1 this is the quasi-norm.
    Args:
        x (MonotoneVector or array): The vector
        p (float): The exponent, p > 0
    Returns (float): The (quasi-)norm, 0 for the zero vector
    """
    if p <= 0:
        raise ValueError(f"Error! The norm exponent must be positive (got {p}).")

    values = x.values if isinstance(x, MonotoneVector) else np.asarray(x, dtype=float)
    total = math.fsum(np.abs(values) ** p)
    if total == 0:
        return 0.0
    return total ** (1 / p)
