"""Published sharp constants and the parameter ranges that certify them."""

from collections import namedtuple

import numpy as np

from conebound.core import Regime
from conebound.errors import NotCovered, RegimeViolation
from conebound.specfun import SpecialValue, beta, hurwitz_zeta

from .series import lambda_power_series, norlund_row_constant
from .spec import FamilySpec, Kind

Theorem = namedtuple(
    "Theorem", ["kind", "regime", "citation", "validity", "applies", "constant"],
    module="conebound.families",
)
Coverage = namedtuple(
    "Coverage", ["covered", "citation", "regime", "validity"], module="conebound.families"
)


class KnownConstant(
    namedtuple("KnownConstant", ["value", "regime", "citation", "validity", "est_abs_error", "p"])
):
    """A published constant, stated as lambda^p."""

    __slots__ = ()

    @property
    def lambda_(self) -> float:
        """The constant lambda itself."""
        return self.value ** (1 / self.p)


__EPS = np.finfo(float).eps


def __closed(value: float) -> SpecialValue:
    """A closed form evaluated to rounding."""
    return SpecialValue(value, 4 * __EPS * abs(value))


def __beta_constant(spec, p) -> SpecialValue:
    """B(1/alpha - p, p + 1) / alpha."""
    value = beta(1 / spec.alpha - p, p + 1) / spec.alpha
    return SpecialValue(value, 1e-11 * value)


def __copson_constant(spec, p) -> SpecialValue:
    """(2^alpha - 1)^p."""
    return __closed((2 ** spec.alpha - 1) ** p)


def __zeta_constant(spec, p) -> SpecialValue:
    """zeta(alpha p)."""
    return hurwitz_zeta(spec.alpha * p)


def __pole_constant(spec, p) -> SpecialValue:
    """alpha p / (alpha p - 1)."""
    return __closed(spec.alpha * p / (spec.alpha * p - 1))


def __shifted_pole_constant(spec, p) -> SpecialValue:
    """(1 + alpha) p / ((1 + alpha) p - 1)."""
    exponent = (1 + spec.alpha) * p
    return __closed(exponent / (exponent - 1))


def __lambda_series(spec, p) -> SpecialValue:
    """Sum over j of Lambda_j^-p with Lambda_j = 1^alpha + ... + j^alpha."""
    return lambda_power_series(spec.alpha, p, tol=1e-9)


def __norlund_series(spec, p) -> SpecialValue:
    """Sum over j of (lambda_j / Lambda_j)^p."""
    return norlund_row_constant(spec, p, tol=1e-9)


# Order matters: the first entry that applies wins when no regime is requested.
THEOREMS = (
    Theorem(
        Kind.TAIL_POWER, Regime.UPPER, "Theorem 1.2",
        "0 < p < 1, alpha >= 1, alpha p < 1, 0 <= t <= 1",
        lambda s, p: 0 < p < 1 and s.alpha >= 1 and s.alpha * p < 1,
        __beta_constant,
    ),
    Theorem(
        Kind.TAIL_POWER, Regime.UPPER, "Theorem 1.2 (t = 1, 0 < alpha < 1)",
        "t = 1, 0 < alpha < 1, (1 - alpha)/(1 + alpha^2) <= p <= 1",
        lambda s, p: s.t == 1 and 0 < s.alpha < 1 and (1 - s.alpha) / (1 + s.alpha ** 2) <= p <= 1,
        __beta_constant,
    ),
    Theorem(
        Kind.TAIL_POWER, Regime.LOWER, "Theorem 1.2",
        "t = 1, p >= 1, alpha > 0",
        lambda s, p: s.t == 1 and p >= 1,
        __copson_constant,
    ),
    Theorem(
        Kind.TAIL_ALPHA_K, Regime.UPPER, "Corollary 2",
        "0 < p < 1, alpha >= 1, alpha p < 1",
        lambda s, p: 0 < p < 1 and s.alpha * p < 1,
        __beta_constant,
    ),
    Theorem(
        Kind.LOG_MEAN_TAIL, Regime.UPPER, "Corollary 3",
        "0 < p < 1, beta >= alpha >= 2, alpha p < 1",
        lambda s, p: 0 < p < 1 and s.alpha >= 2 and s.alpha * p < 1,
        __beta_constant,
    ),
    Theorem(
        Kind.WEIGHTED_MEAN_POWER_DIFF, Regime.LOWER, "Corollary 4.04",
        "p >= 1, alpha p > 1",
        lambda s, p: p >= 1 and s.alpha * p > 1,
        __zeta_constant,
    ),
    Theorem(
        Kind.WEIGHTED_MEAN_POWER_DIFF, Regime.UPPER, "Corollary 4.04",
        "0 < p <= 1, alpha p > 1",
        lambda s, p: 0 < p <= 1 and s.alpha * p > 1,
        __pole_constant,
    ),
    Theorem(
        Kind.WEIGHTED_MEAN_POWER, Regime.UPPER, "Theorem 4",
        "0 < p <= 1, alpha >= 3, (1 + alpha) p > 2",
        lambda s, p: 0 < p <= 1 and s.alpha >= 3 and (1 + s.alpha) * p > 2,
        __shifted_pole_constant,
    ),
    Theorem(
        Kind.WEIGHTED_MEAN_POWER, Regime.LOWER, "Corollary 4.3",
        "p > 1, -1 < alpha <= 0, (1 + alpha) p > 1",
        lambda s, p: p > 1 and s.alpha <= 0 and (1 + s.alpha) * p > 1,
        __lambda_series,
    ),
    Theorem(
        Kind.WEIGHTED_MEAN_POWER, Regime.LOWER, "Corollary 5.3 (Theorems 5, 6)",
        "p >= 2 and 0.14 <= alpha <= 1, or p >= 8/(1 + alpha) and 0 <= alpha <= 1",
        lambda s, p: (p >= 2 and 0.14 <= s.alpha <= 1) or (p >= 8 / (1 + s.alpha) and 0 <= s.alpha <= 1),
        __lambda_series,
    ),
    Theorem(
        Kind.WEIGHTED_MEAN_POWER, Regime.UPPER, "Theorem 4",
        "1 < alpha <= 3, 1/(1 + alpha) < p <= 1/2",
        lambda s, p: 1 < s.alpha <= 3 and 1 / (1 + s.alpha) < p <= 0.5,
        __lambda_series,
    ),
    Theorem(
        Kind.WEIGHTED_MEAN_POWER, Regime.UPPER, "Corollary 4.3 (reversed)",
        "0 < p <= 1, 0 < alpha <= 1, (1 + alpha) p > 1",
        lambda s, p: 0 < p <= 1 and 0 < s.alpha <= 1 and (1 + s.alpha) * p > 1,
        __lambda_series,
    ),
    Theorem(
        Kind.WEIGHTED_MEAN_POWER, Regime.LOWER, "Section 5 (alpha >= 1, p >= 1)",
        "p >= 1, alpha >= 1",
        lambda s, p: p >= 1 and s.alpha >= 1,
        __lambda_series,
    ),
    Theorem(
        Kind.NORLUND_POWER_DIFF, Regime.LOWER, "Corollary 4",
        "p > 1, alpha > 0",
        lambda s, p: p > 1,
        __norlund_series,
    ),
    Theorem(
        Kind.NORLUND_POWER_SUM, Regime.LOWER, "Lemma 2 (Norlund row formula)",
        "p > 1, alpha >= 0",
        lambda s, p: p > 1,
        __norlund_series,
    ),
    Theorem(
        Kind.NORLUND_POWER, Regime.LOWER, "Corollary 5",
        "p > 1, alpha >= 0",
        lambda s, p: p > 1,
        __norlund_series,
    ),
)


def theorem_range_check(spec: FamilySpec, p: float, q: float, regime=None) -> Coverage:
    """
    Find the published theorem, if any, that certifies a sharp constant.
    Args:
        spec (FamilySpec): The family
        p (float): The domain exponent
        q (float): The image exponent; published constants all have q = p
        regime (Regime): Restrict the search to one regime (needed only at p = 1)
    Returns (Coverage): covered=False when no theorem applies
    """
    if regime is not None:
        regime = Regime.parse(regime)

    if q != p or not p > 0:
        return Coverage(False, None, regime, "published constants need q = p > 0")

    for theorem in THEOREMS:
        if theorem.kind is not spec.kind:
            continue
        if regime is not None and theorem.regime is not regime:
            continue
        if theorem.applies(spec, p):
            return Coverage(True, theorem.citation, theorem.regime, theorem.validity)

    return Coverage(False, None, regime, "no published theorem covers these parameters")


def asymptotic_constant(spec: FamilySpec, p: float, q: float, regime=None) -> KnownConstant:
    """
    The published constant lambda^p for a family, with its citation.
    Raises: RegimeViolation if q != p, NotCovered if no theorem applies
    """
    if q != p:
        raise RegimeViolation(
            "q = p", f"Error! Published constants are stated for q = p (got p={p}, q={q})."
        )

    coverage = theorem_range_check(spec, p, q, regime)
    if not coverage.covered:
        raise NotCovered(f"Error! No published constant covers {spec.label} at p={p}.")

    theorem = next(
        entry for entry in THEOREMS
        if entry.kind is spec.kind and entry.citation == coverage.citation
        and entry.regime is coverage.regime and entry.applies(spec, p)
    )
    value = theorem.constant(spec, p)

    return KnownConstant(
        value.value, theorem.regime, theorem.citation, theorem.validity, value.est_abs_error, p
    )
