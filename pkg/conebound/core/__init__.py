"""Domain types shared by every other module."""

from .cone import (
    BoundResult,
    ExponentPair,
    MonotoneVector,
    Regime,
    pnorm,
    step_vector,
    validate_regime,
)
from .matrix import NonNegativeMatrix
from .summation import KahanAccumulator, compensated_cumsum
