"""Enclosed infinite series behind the weighted-mean and Norlund constants."""

import logging
import math

import numpy as np

from conebound.errors import DivergentSeries, KindError
from conebound.specfun import SpecialValue, critical_zeta, hurwitz_zeta

from .spec import FamilySpec, Kind

__FIRST_CHUNK = 4096
__LARGEST_CHUNK = 2 ** 20
__ROUNDING = 16 * np.finfo(float).eps
__BINOMIAL_TERMS = 400


def power_sum_tail(
    alpha: float, p: float, start: int = 0, tol: float = 1e-10, max_terms: int = 2 ** 24
) -> SpecialValue:
    """
    Sum over k > start of Lambda_k^-p, where Lambda_k = 1^alpha + ... + k^alpha.

    Terms are summed directly up to K and the remainder past K is enclosed.
    For alpha >= 0 the enclosure comes from
    k^(1+alpha)/(1+alpha) <= Lambda_k <= (k+1)^(1+alpha)/(1+alpha), with the
    Hurwitz zeta sum of a power law matched to Lambda_K as the value inside it.
    For -1 < alpha < 0 the constant zeta(-alpha) in Lambda_k is not small next
    to k^(1+alpha), so the remainder is expanded around it instead. K grows
    until the enclosure is narrower than tol or K reaches max_terms.
    Args:
        alpha (float): The weight exponent, alpha > -1
        p (float): The power, with (1+alpha) p > 1
        start (int): Terms with k <= start are excluded
        tol (float): Target enclosure width
        max_terms (int): Largest K before giving up on tol
    Returns (SpecialValue): The sum, with the enclosure half-width as its error
    Raises: DivergentSeries if (1+alpha) p <= 1
    """
    exponent = (1 + alpha) * p
    if alpha <= -1 or exponent <= 1:
        raise DivergentSeries(
            f"Error! The sum of Lambda_k^-p diverges unless (1+alpha)p > 1 (got {exponent:g})."
        )

    carry = math.fsum(np.arange(1, start + 1, dtype=float) ** alpha) if start > 0 else 0.0
    partial = 0.0
    compensation = 0.0
    last = start

    for indices, cumulative in __power_sum_chunks(alpha, start, carry, max_terms):
        chunk_sum = float(np.sum(cumulative ** -p))
        corrected = chunk_sum - compensation
        running = partial + corrected
        compensation = (running - partial) - corrected
        partial = running

        last = int(indices[-1])
        carry = float(cumulative[-1])
        lower, upper, estimate = __power_tail_enclosure(alpha, p, last, carry)
        if upper - lower <= tol:
            break
    else:
        logging.warning(
            "Tail of Lambda^-p (alpha=%s, p=%s) stopped at %s terms with width %.3g",
            alpha, p, last, upper - lower,
        )

    value = partial + estimate
    error = max(upper - estimate, estimate - lower) + __ROUNDING * abs(value)
    return SpecialValue(value, error)


def lambda_power_series(alpha: float, p: float, tol: float = 1e-9) -> SpecialValue:
    """Sum over all j >= 1 of (1^alpha + ... + j^alpha)^-p."""
    return power_sum_tail(alpha, p, start=0, tol=tol)


def norlund_row_constant(spec: FamilySpec, p: float, tol: float = 1e-9,
                         max_terms: int = 2 ** 24) -> SpecialValue:
    """
    Sum over j of (lambda_j / Lambda_j)^p for a Norlund family, p > 1.

    The remainder past K is enclosed by power laws C (j + d)^-p on either side,
    with constants particular to each family.
    Raises: KindError for non-Norlund kinds, DivergentSeries for p <= 1
    """
    if not spec.kind.is_norlund:
        raise KindError(f"Error! `{spec.kind.value}` is not a Norlund family.")
    if p <= 1:
        raise DivergentSeries(f"Error! Norlund row constants need p > 1 (got {p}).")

    partial = 0.0
    compensation = 0.0
    last = 0

    for indices, ratios in __norlund_ratio_chunks(spec, max_terms):
        chunk_sum = float(np.sum(ratios ** p))
        corrected = chunk_sum - compensation
        running = partial + corrected
        compensation = (running - partial) - corrected
        partial = running

        last = int(indices[-1])
        lower, upper = __norlund_tail_bounds(spec, p, last)
        if upper - lower <= tol:
            break
    else:
        lower, upper = __norlund_tail_bounds(spec, p, last)
        logging.warning(
            "Norlund constant for %s, p=%s stopped at %s terms with width %.3g",
            spec.label, p, last, upper - lower,
        )

    value = partial + (lower + upper) / 2
    return SpecialValue(value, (upper - lower) / 2 + __ROUNDING * abs(value))


def __chunk_bounds(start: int, max_terms: int):
    """Yield (first, last) index ranges that double in length, starting after start."""
    size = __FIRST_CHUNK
    first = start + 1
    while True:
        last = first + size - 1
        yield first, last
        if last >= max_terms:
            return
        first = last + 1
        size = min(2 * size, __LARGEST_CHUNK)


def __power_sum_chunks(alpha: float, start: int, carry: float, max_terms: int):
    """Yield (k, Lambda_k) arrays for consecutive chunks past start."""
    for first, last in __chunk_bounds(start, max_terms):
        indices = np.arange(first, last + 1, dtype=float)
        cumulative = carry + np.cumsum(indices ** alpha)
        carry = float(cumulative[-1])
        yield indices, cumulative


def __norlund_ratio_chunks(spec: FamilySpec, max_terms: int):
    """Yield (j, lambda_j / Lambda_j) arrays for consecutive chunks."""
    alpha = spec.alpha
    inner = 0.0  # running sum of i^alpha
    outer = 0.0  # running sum of the inner sums

    for first, last in __chunk_bounds(0, max_terms):
        indices = np.arange(first, last + 1, dtype=float)

        if spec.kind is Kind.NORLUND_POWER_DIFF:
            # 1 - (1 - 1/j)^alpha; j = 1 gives exactly 1
            ratios = -np.expm1(alpha * np.log1p(-1 / np.maximum(indices, 2)))
            ratios[indices == 1] = 1.0
        elif spec.kind is Kind.NORLUND_POWER:
            powers = indices ** alpha
            cumulative = inner + np.cumsum(powers)
            inner = float(cumulative[-1])
            ratios = powers / cumulative
        else:
            sums = inner + np.cumsum(indices ** alpha)
            inner = float(sums[-1])
            cumulative = outer + np.cumsum(sums)
            outer = float(cumulative[-1])
            ratios = sums / cumulative

        yield indices, ratios


def __power_tail_enclosure(alpha: float, p: float, last: int, carry: float) -> tuple:
    """(lower, upper, estimate) for the sum over k > last of Lambda_k^-p, given Lambda_last."""
    if alpha < 0:
        return __negative_power_tail(alpha, p, last)

    exponent = (1 + alpha) * p
    scale = (1 + alpha) ** p
    lower = __shifted_zeta_lower(scale, 1, exponent, last)
    upper = __shifted_zeta_upper(scale, 0, exponent, last)

    # Lambda_K = (K + shift)^(1+alpha) / (1+alpha) defines the matched power law
    shift = ((1 + alpha) * carry) ** (1 / (1 + alpha)) - last
    estimate = scale * hurwitz_zeta(exponent, last + 1 + shift).value
    return lower, upper, min(max(estimate, lower), upper)


def __negative_power_tail(alpha: float, p: float, last: int) -> tuple:
    """
    (lower, upper, estimate) for the sum over k > last of Lambda_k^-p, -1 < alpha < 0.

    With u = 1 + alpha and j = k + 1/2, Euler-Maclaurin gives
    Lambda_k = j^u / u + zeta(-alpha) + rho_k with |rho_k| <= |alpha| k^(alpha-1) / 8.
    Expanding (1 + u zeta(-alpha) j^-u)^-p binomially leaves Hurwitz zeta sums
    whose terms are all positive, since zeta(-alpha) < 0, and each term is at
    most decay times the one before. rho_k moves every summand by a factor
    within [(1+eta)^-p, (1-eta)^-p], eta = O(last^-2).
    """
    u = 1 + alpha
    offset = last + 1.5
    pull = -u * critical_zeta(-alpha).value
    decay = pull * offset ** -u
    scale = u ** p

    terms = []
    running = 0.0
    error = 0.0
    remainder = math.inf
    coefficient = 1.0  # (p)_m / m!
    for m in range(__BINOMIAL_TERMS):
        zeta_m = hurwitz_zeta(u * (p + m), offset)
        weight = scale * coefficient * pull ** m
        term = weight * zeta_m.value
        terms.append(term)
        running += term
        error += weight * zeta_m.est_abs_error

        coefficient *= (p + m) / (m + 1)
        growth = max((p + m + 1) / (m + 2), 1.0) * decay
        if growth < 1:
            remainder = term * (p + m) / (m + 1) * decay / (1 - growth)
            if remainder <= __ROUNDING * running:
                break

    total = math.fsum(terms)
    eta = u * abs(alpha) / (8 * (last + 1) ** 2 * (1 - decay))
    lower = total * (1 + eta) ** -p - error
    upper = (total + remainder) * (1 - eta) ** -p + error
    return lower, upper, total


def __norlund_tail_bounds(spec: FamilySpec, p: float, last: int) -> tuple:
    """Enclosure of the sum over j > last of (lambda_j / Lambda_j)^p."""
    alpha = spec.alpha

    if spec.kind is Kind.NORLUND_POWER_DIFF:
        if alpha >= 1:
            # alpha/j (1 - 1/j)^(alpha-1) <= ratio <= alpha/j
            shrink = (1 - 1 / (last + 1)) ** (alpha - 1)
            return (
                __shifted_zeta_lower((alpha * shrink) ** p, 0, p, last),
                __shifted_zeta_upper(alpha ** p, 0, p, last),
            )
        # alpha/j <= ratio <= alpha/(j-1)
        return (
            __shifted_zeta_lower(alpha ** p, 0, p, last),
            __shifted_zeta_upper(alpha ** p, -1, p, last),
        )

    if spec.kind is Kind.NORLUND_POWER:
        # (1+alpha)/(j+1+alpha) <= ratio <= (1+alpha)/j
        return (
            __shifted_zeta_lower((1 + alpha) ** p, 1 + alpha, p, last),
            __shifted_zeta_upper((1 + alpha) ** p, 0, p, last),
        )

    # (2+alpha)/(j + (2+alpha)(3+alpha)) <= ratio <= (2+alpha)/(j-1-alpha)
    return (
        __shifted_zeta_lower((2 + alpha) ** p, (2 + alpha) * (3 + alpha), p, last),
        __shifted_zeta_upper((2 + alpha) ** p, -(1 + alpha), p, last),
    )


def __shifted_zeta_lower(scale: float, shift: float, exponent: float, last: int) -> float:
    """Lower bound of scale * sum over j > last of (j + shift)^-exponent."""
    return scale * (last + 1 + shift) ** (1 - exponent) / (exponent - 1)


def __shifted_zeta_upper(scale: float, shift: float, exponent: float, last: int) -> float:
    """Upper bound of scale * sum over j > last of (j + shift)^-exponent."""
    return scale * (last + shift) ** (1 - exponent) / (exponent - 1)
