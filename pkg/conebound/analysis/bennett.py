"""Bennett's sequence for power-weight means, and the sufficient condition for it to increase."""

import logging

import numpy as np

import conebound
from conebound.core import compensated_cumsum
from conebound.errors import DivergentSeries, DomainError, SizeError
from conebound.families import power_sum_tail

TAIL_WIDTH = 1e-10


def bennett_sequence(alpha: float, p: float, n_max: int = None) -> np.ndarray:
    """
    b_n = Lambda_n^p / n * sum over k > n of Lambda_k^-p, for n = 1..n_max.
    Args:
        alpha (float): The weight exponent, alpha >= 0, with Lambda_n = 1^alpha + ... + n^alpha
        p (float): The power, with (1+alpha) p > 1
        n_max (int): The last index; defaults to the `n_max` setting
    Returns (np.ndarray): b_1 .. b_{n_max}
    Raises: DivergentSeries if (1+alpha) p <= 1
    """
    n_max = n_max or conebound.settings.value("n_max")
    if alpha < 0:
        raise DomainError(f"Error! Bennett's sequence needs alpha >= 0 (got {alpha}).")
    if (1 + alpha) * p <= 1:
        raise DivergentSeries(
            f"Error! Bennett's sequence needs (1+alpha)p > 1 (got {(1 + alpha) * p:g})."
        )
    __check_n(n_max)

    index = np.arange(1, n_max + 1, dtype=float)
    cumulative = compensated_cumsum(index ** alpha)

    tail = power_sum_tail(alpha, p, start=n_max, tol=TAIL_WIDTH)
    logging.debug("Tail past %s: %.17g +/- %.3g", n_max, tail.value, tail.est_abs_error)

    # Sums over k >= n, accumulated from the far end
    from_here = compensated_cumsum((cumulative ** -p)[::-1], start=tail.value)[::-1]
    beyond = np.append(from_here[1:], tail.value)

    return cumulative ** p / index * beyond


def condition_4_7(alpha: float, p: float, n: int) -> float:
    """
    1 + n (Lambda_{n+1}/Lambda_n)^p - (n+1) (Lambda_{n+2}/Lambda_{n+1})^p.
    Non-negative values mean the sufficient condition holds at n.
    """
    __check_n(n)
    return float(condition_sequence(alpha, p, n)[-1])


def condition_sequence(alpha: float, p: float, n_max: int = None) -> np.ndarray:
    """The condition values for n = 1..n_max."""
    n_max = n_max or conebound.settings.value("n_max")
    __check_n(n_max)

    index = np.arange(1, n_max + 3, dtype=float)
    cumulative = compensated_cumsum(index ** alpha)
    growth = (cumulative[1:] / cumulative[:-1]) ** p
    n = index[:n_max]

    return 1 + n * growth[:n_max] - (n + 1) * growth[1 : n_max + 1]


def __check_n(n):
    if int(n) != n or n < 1:
        raise SizeError(f"Error! The index must be a positive integer (got {n}).")


def bennett_claim(alpha: float, p: float) -> tuple:
    """
    The published statement about the direction of Bennett's sequence at (alpha, p), if any.
    Returns (tuple): (citation, "increasing" or "decreasing"), or (None, None)
    """
    if 0.14 <= alpha <= 1 and p >= 2:
        return "Theorem 5", "increasing"
    if 0 <= alpha <= 1 and p >= 8 / (1 + alpha):
        return "Theorem 6", "increasing"
    if 1 < alpha <= 3 and 1 / (1 + alpha) < p <= 0.5:
        return "Theorem 3", "decreasing"
    if alpha >= 1 and p >= 1:
        return "Known case (alpha >= 1, p >= 1)", "increasing"
    if 0 < alpha <= 1 and 1 / (1 + alpha) < p <= 1:
        return "Known case (0 < alpha <= 1, 1/(1+alpha) < p <= 1)", "decreasing"
    if alpha >= 3 and p >= 0.5:
        return "Section 5 remark (alpha >= 3, p >= 1/2)", "increasing"
    return None, None
