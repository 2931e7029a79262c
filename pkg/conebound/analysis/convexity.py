"""The convex function behind the tail-power monotonicity argument, and its Bennett-Jameson means."""

import math

import numpy as np

import conebound
from conebound.errors import DomainError, SizeError


def f_alpha_p(alpha: float, p: float, x):
    """
    f(x) = ((1 - x^alpha) / x^alpha)^p + ((1 - (1-x)^alpha) / (1-x)^alpha)^p on 0 < x < 1.
    Args:
        alpha (float): alpha > 0
        p (float): p > 0
        x (float or array): Points strictly inside (0, 1)
    Returns (float or np.ndarray): f at x
    Raises: DomainError outside the open interval or for non-positive alpha, p
    """
    if not (alpha > 0 and p > 0):
        raise DomainError(f"Error! f needs alpha > 0 and p > 0 (got alpha={alpha}, p={p}).")

    points = np.asarray(x, dtype=float)
    if np.any(~(points > 0)) or np.any(~(points < 1)):
        raise DomainError("Error! f is defined on the open interval (0, 1) only.")

    value = __half(alpha, p, points) + __half(alpha, p, 1 - points)
    if value.ndim == 0:
        return float(value)
    return value


def __half(alpha, p, x):
    """((1 - x^alpha) / x^alpha)^p, stable near x = 1."""
    log_power = alpha * np.log(x)
    return (-np.expm1(log_power) / np.exp(log_power)) ** p


def second_difference_min(alpha: float, p: float, grid_size: int = None) -> float:
    """
    Smallest central second difference f(x-h) - 2 f(x) + f(x+h) over x = h, 2h, .., with h = 1/(grid_size+1).
    Values at or above -1e-9 indicate numerical convexity.
    """
    grid_size = grid_size or conebound.settings.value("grid")
    if grid_size < 3:
        raise SizeError(f"Error! Convexity checks need at least 3 grid points (got {grid_size}).")

    points = np.arange(1, grid_size + 1) / (grid_size + 1)
    values = f_alpha_p(alpha, p, points)
    return float(np.min(values[:-2] - 2 * values[1:-1] + values[2:]))


def bennett_jameson_mean(alpha: float, p: float, n: int) -> float:
    """
    A_n(f) = (1/n) * sum over r = 1..n of f(r / (n+1)).

    For the tail-power family with t = 1 and q = p this equals 2 s_n, where
    s_n is the n-th term of the engine's s_r sequence.
    """
    if int(n) != n or n < 1:
        raise SizeError(f"Error! The mean needs n >= 1 (got {n}).")

    points = np.arange(1, n + 1) / (n + 1)
    return math.fsum(f_alpha_p(alpha, p, points)) / n


def bennett_jameson_means(alpha: float, p: float, n_max: int = None) -> np.ndarray:
    """A_1(f) .. A_{n_max}(f)."""
    n_max = n_max or conebound.settings.value("n_max")
    return np.array([bennett_jameson_mean(alpha, p, n) for n in range(1, n_max + 1)])
