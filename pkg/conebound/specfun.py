"""Special functions behind the published constants: log-gamma, beta, zeta and friends."""

import functools
import math
from collections import namedtuple

import numpy as np

from conebound.errors import DomainError

SpecialValue = namedtuple("SpecialValue", ["value", "est_abs_error"], module="conebound.specfun")

# Lanczos approximation, g = 7, n = 9
__LANCZOS_G = 7
__LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# B_2k / (2k)! for k = 1..7; the last one only sizes the truncation error
__BERNOULLI_FACTORS = (
    (1 / 6) / math.factorial(2),
    (-1 / 30) / math.factorial(4),
    (1 / 42) / math.factorial(6),
    (-1 / 30) / math.factorial(8),
    (5 / 66) / math.factorial(10),
    (-691 / 2730) / math.factorial(12),
    (7 / 6) / math.factorial(14),
)
__EULER_MACLAURIN_CUTOFF = 20

ZETA_CACHE_SIZE = 4096


def log_gamma(x: float) -> float:
    """
    Natural log of the gamma function for x > 0.
    Args:
        x (float): The argument
    Returns (float): ln(Gamma(x)), absolute error below 1e-12 on (0, 100]
    Raises: DomainError for x <= 0
    """
    if not x > 0 or not math.isfinite(x):
        raise DomainError(f"Error! log_gamma needs x > 0 (got {x}).")
    return __lanczos_log_gamma(float(x))


def __lanczos_log_gamma(x: float) -> float:
    """Lanczos series, with reflection below 1/2."""
    if x < 0.5:
        return math.log(math.pi / math.sin(math.pi * x)) - __lanczos_log_gamma(1 - x)

    z = x - 1
    series = __LANCZOS[0]
    for index in range(1, len(__LANCZOS)):
        series += __LANCZOS[index] / (z + index)

    t = z + __LANCZOS_G + 0.5
    return 0.5 * math.log(2 * math.pi) + (z + 0.5) * math.log(t) - t + math.log(series)


def beta(x: float, y: float) -> float:
    """
    The beta function B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y).
    Raises: DomainError unless x > 0 and y > 0
    """
    if not (x > 0 and y > 0):
        raise DomainError(f"Error! beta needs positive arguments (got {x}, {y}).")
    return math.exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y))


def hurwitz_zeta(s: float, a: float = 1.0) -> SpecialValue:
    """
    Sum of (n + a)^-s over n >= 0, by Euler-Maclaurin summation.

    The first M = 20 terms are summed directly; the remainder is the integral,
    the half end term and Bernoulli corrections through B_12. The reported
    error is the size of the first omitted correction plus a rounding allowance.
    Args:
        s (float): The exponent, s > 1
        a (float): The shift, a > 0. a = 1 gives the Riemann zeta function;
            a = N + 1 gives the tail past N
    Returns (SpecialValue): The value and its estimated absolute error
    Raises: DomainError for s <= 1 or a <= 0
    """
    if not s > 1 or not math.isfinite(s):
        raise DomainError(f"Error! zeta needs s > 1 (got {s}).")
    if not a > 0:
        raise DomainError(f"Error! The Hurwitz shift must be positive (got {a}).")

    return _euler_maclaurin_zeta(float(s), float(a))


@functools.lru_cache(maxsize=ZETA_CACHE_SIZE)
def _euler_maclaurin_zeta(s: float, a: float) -> SpecialValue:
    """Direct head, integral tail and Bernoulli corrections. Valid for any real s > -1, s != 1."""
    cutoff = __EULER_MACLAURIN_CUTOFF
    head = math.fsum((n + a) ** -s for n in range(cutoff))

    base = cutoff + a
    terms = [head, base ** (1 - s) / (s - 1), 0.5 * base ** -s]

    rising = s  # s (s+1) ... (s+2k-2)
    power = base ** (-s - 1)
    omitted = 0.0
    for k, factor in enumerate(__BERNOULLI_FACTORS, start=1):
        term = factor * rising * power
        if k == len(__BERNOULLI_FACTORS):
            omitted = abs(term)
        else:
            terms.append(term)
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        power /= base * base

    value = math.fsum(terms)
    return SpecialValue(value, omitted + 8 * np.finfo(float).eps * abs(value))


def zeta(s: float) -> float:
    """
    The Riemann zeta function for real s > 1.
    Raises: DomainError for s <= 1
    """
    return hurwitz_zeta(s).value


def critical_zeta(s: float) -> SpecialValue:
    """
    The continued Riemann zeta function on 0 < s < 1, where it is negative.

    The Euler-Maclaurin head and corrections used for s > 1 stay valid past
    the pole, so this is the same sum with a different guard.
    Raises: DomainError outside (0, 1)
    """
    if not 0 < s < 1:
        raise DomainError(f"Error! critical_zeta needs 0 < s < 1 (got {s}).")
    return _euler_maclaurin_zeta(float(s), 1.0)


def sin_constant(p: float) -> float:
    """
    pi p / sin(pi p) for 0 < p < 1.
    Raises: DomainError outside (0, 1)
    """
    if not 0 < p < 1:
        raise DomainError(f"Error! sin_constant needs 0 < p < 1 (got {p}).")

    if p > 0.5:
        return math.pi * p / math.sin(math.pi * (1 - p))
    return math.pi * p / math.sin(math.pi * p)


def generalized_log_mean(r: float, a: float, b: float) -> float:
    """
    L_r(a, b) = ((a^r - b^r) / (r (a - b)))^(1 / (r - 1)); L_inf(a, b) = max(a, b).
    Raises: DomainError for a <= 0, b <= 0, a == b or r in {0, 1}
    """
    if not (a > 0 and b > 0):
        raise DomainError(f"Error! The log mean needs positive arguments (got {a}, {b}).")
    if a == b:
        raise DomainError(f"Error! The log mean needs distinct arguments (got {a} twice).")
    if math.isnan(r) or r in (0, 1) or r == -math.inf:
        raise DomainError(f"Error! The log mean order must avoid 0, 1 and -inf (got {r}).")

    high, low = max(a, b), min(a, b)
    if r == math.inf:
        return high

    ratio = low / high
    inner = -math.expm1(r * math.log(ratio)) / (r * (1 - ratio))
    return high * inner ** (1 / (r - 1))


def power_difference(a, b, s):
    """
    a^s - b^s for a > b >= 0 without cancellation when a and b are close.
    Accepts scalars or numpy arrays; b == 0 gives a^s.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)

    # Direct subtraction is exact enough unless a and b are within a factor of two
    close = b * 2 > a
    safe_b = np.where(close, b, 1.0)
    gap = safe_b ** s * np.expm1(s * np.log1p((a - safe_b) / safe_b))
    with np.errstate(divide="ignore"):
        direct = a ** s - np.where(close, 0.0, b) ** s
    result = np.where(close, gap, direct)

    if result.ndim == 0:
        return float(result)
    return result


def log_mean_weight(r: float, k, exponent: float):
    """
    L_r(k, k-1)^exponent for integers k >= 1, with L_r(1, 0)^(r-1) = 1/r.

    r = inf gives k^exponent exactly. These are the weights of the
    generalized-log-mean tail family.
    """
    k = np.asarray(k, dtype=float)
    if r == math.inf:
        return k ** exponent
    if math.isnan(r) or r in (0, 1):
        raise DomainError(f"Error! The log mean order must avoid 0 and 1 (got {r}).")

    # (k^r - (k-1)^r) / r is L_r(k, k-1)^(r-1)
    inner = power_difference(k, k - 1, r) / r
    return inner ** (exponent / (r - 1))
