"""Matrix families, their weights, truncations and published constants."""

from .constants import (
    THEOREMS,
    Coverage,
    KnownConstant,
    asymptotic_constant,
    theorem_range_check,
)
from .generate import RowStream, WeightSequence, generate, tail_profile, weights
from .series import lambda_power_series, norlund_row_constant, power_sum_tail
from .spec import FamilySpec, Kind
