"""Derivative-free search of the monotone cone for adverse ratios."""

import logging

import numpy as np

import conebound
from conebound.core import ExponentPair, MonotoneVector, NonNegativeMatrix

from .sampling import batch_ratios, restart_points

RESTARTS = 5
INITIAL_STEP = 0.5
DECAY = 0.5


def local_search(
    A: NonNegativeMatrix, pair: ExponentPair, x0: MonotoneVector, iters: int = None, seed: int = 0
) -> MonotoneVector:
    """
    Coordinate search for the smallest (lower regime) or largest (upper regime) ratio.

    Each move multiplies one coordinate by exp(+step) or exp(-step) and repairs
    the cone order around it. Only improving moves are accepted. The first
    restart begins at x0, the rest at seeded random cone vectors. The step
    halves every iters/5 moves.
    Args:
        A (NonNegativeMatrix): The matrix
        pair (ExponentPair): Exponents and regime
        x0 (MonotoneVector): A non-zero starting vector
        iters (int): Moves per restart; defaults to the `search_iters` setting
        seed (int): Seed for the move sequence and restart points
    Returns (MonotoneVector): The most adverse vector found, scaled to p-norm 1
    """
    iters = iters or conebound.settings.value("search_iters")
    n = len(x0)
    rng = np.random.default_rng(seed)
    starts = restart_points(n, pair.p, RESTARTS - 1, seed)

    best = np.array(x0.values)
    best_score = __score(A, best, pair)

    for restart in range(RESTARTS):
        x = np.array(x0.values) if restart == 0 else np.array(starts[restart - 1])
        score = __score(A, x, pair)
        step = INITIAL_STEP
        period = max(1, iters // 5)

        for move in range(iters):
            if move and move % period == 0:
                step *= DECAY

            candidate = repair(x, int(rng.integers(n)), float(np.exp(rng.choice((-step, step)))))
            if candidate[0] == 0:
                continue

            if (candidate_score := __score(A, candidate, pair)) < score:
                x, score = candidate, candidate_score

        if score < best_score:
            best, best_score = x, score

    logging.debug("Local search finished at ratio %.17g", __ratio_from_score(best_score, pair))
    return MonotoneVector(best / np.sum(best ** pair.p) ** (1 / pair.p))


def repair(x: np.ndarray, index: int, factor: float) -> np.ndarray:
    """
    Scale one coordinate and restore x_1 >= ... >= x_n.
    Growth lifts the earlier entries to at least the new value; shrinkage lowers the later ones.
    """
    candidate = x.copy()
    candidate[index] *= factor
    if factor > 1:
        candidate[: index + 1] = np.maximum.accumulate(candidate[index::-1])[::-1]
    else:
        candidate[index:] = np.minimum.accumulate(candidate[index:])
    return candidate


def __score(A, x, pair) -> float:
    """Lower is more adverse in both regimes."""
    value = float(batch_ratios(A, x[None, :], pair.p, pair.q)[0])
    return value if pair.is_lower else -value


def __ratio_from_score(score, pair) -> float:
    return score if pair.is_lower else -score
