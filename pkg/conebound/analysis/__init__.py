"""Numerical probes of the monotonicity claims and scalar inequalities behind the constants."""

from .bennett import bennett_claim, bennett_sequence, condition_4_7, condition_sequence
from .convexity import bennett_jameson_mean, bennett_jameson_means, f_alpha_p, second_difference_min
from .monotonicity import MonotonicityReport, Trend, monotonicity_verdict
from .registry import INEQUALITIES, Inequality, ProbeReport, Violation, probe
