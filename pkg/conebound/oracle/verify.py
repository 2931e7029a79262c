"""Brute-force checks of the closed-form bound."""

import logging
import math
import time
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
from enum import Enum

import numpy as np

import conebound
from conebound.core import ExponentPair, MonotoneVector, NonNegativeMatrix, step_vector
from conebound.engine import compute_bound
from conebound.errors import DomainError, SizeError

from .sampling import batch_ratios, chunk_count, ratio, sample_chunk
from .search import local_search

# Relative tolerances
FORMULA_TOLERANCE = 1e-12
VIOLATION_TOLERANCE = 1e-9
LEMMA_SLACK = 1e-12


class Verdict(Enum):
    """Outcome of an oracle run."""

    CONSISTENT = "consistent"
    VIOLATION = "violation"


OracleReport = namedtuple(
    "OracleReport",
    [
        "formula_lambda", "step_enum_lambda", "sampled_best", "search_best",
        "worst_vector", "samples", "seed", "verdict", "gap",
    ],
    module="conebound.oracle",
)


def enumerate_steps(A: NonNegativeMatrix, pair: ExponentPair) -> float:
    """
    The regime's min or max of the ratio over every step vector.
    Returns (float): A value that must agree with compute_bound's lambda
    """
    ratios = [ratio(A, step_vector(r, A.cols), pair.p, pair.q) for r in range(1, A.cols + 1)]
    return min(ratios) if pair.is_lower else max(ratios)


def verify(
    A: NonNegativeMatrix,
    pair: ExponentPair,
    samples: int = None,
    seed: int = None,
    iters: int = None,
    threads: int = None,
) -> OracleReport:
    """
    Test the closed-form bound against step enumeration, cone sampling and local search.

    The verdict is CONSISTENT when step enumeration matches the formula to
    1e-12 relative and no sampled or searched vector beats lambda by more than
    1e-9 relative in the regime's adverse direction.
    Args:
        A (NonNegativeMatrix): The matrix
        pair (ExponentPair): Exponents and regime
        samples (int): Cone samples; defaults to the `samples` setting
        seed (int): Sampling seed; defaults to the `seed` setting
        iters (int): Local search moves per restart
        threads (int): Worker threads over sample chunks
    Returns (OracleReport): The report; violations are data, not errors
    """
    samples = samples or conebound.settings.value("samples")
    seed = conebound.settings.value("seed") if seed is None else seed
    threads = threads or conebound.settings.value("threads")
    started = time.perf_counter()

    formula = compute_bound(A, pair).lambda_
    enumerated = enumerate_steps(A, pair)

    def best_of_chunk(index):
        vectors = sample_chunk(A.cols, pair.p, samples, seed, index)
        ratios = batch_ratios(A, vectors, pair.p, pair.q)
        position = int(np.argmin(ratios) if pair.is_lower else np.argmax(ratios))
        return float(ratios[position]), vectors[position]

    chunks = range(chunk_count(samples))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(best_of_chunk, chunks))
    else:
        results = [best_of_chunk(index) for index in chunks]

    sampled_best, sampled_vector = results[0]
    for value, vector in results[1:]:
        if __more_adverse(value, sampled_best, pair):
            sampled_best, sampled_vector = value, vector

    searched = local_search(A, pair, MonotoneVector(sampled_vector), iters, seed)
    search_best = ratio(A, searched, pair.p, pair.q)

    if __more_adverse(search_best, sampled_best, pair):
        worst, worst_vector = search_best, searched
    else:
        worst, worst_vector = sampled_best, MonotoneVector(sampled_vector)

    # Positive gap: some vector beats lambda in the adverse direction
    gap = formula - worst if pair.is_lower else worst - formula
    formula_matches = math.isclose(enumerated, formula, rel_tol=FORMULA_TOLERANCE, abs_tol=1e-300)

    if formula_matches and gap <= VIOLATION_TOLERANCE * formula:
        verdict = Verdict.CONSISTENT
    else:
        verdict = Verdict.VIOLATION
        if not formula_matches:
            gap = abs(enumerated - formula)
        logging.warning("Oracle found a violation of %.3g at lambda=%.17g", gap, formula)

    logging.info(
        "Verified %s x %s matrix with %s samples in %.2fs", A.rows, A.cols, samples,
        time.perf_counter() - started,
    )
    return OracleReport(
        formula, enumerated, sampled_best, search_best, worst_vector, samples, seed, verdict, gap
    )


def __more_adverse(candidate: float, incumbent: float, pair: ExponentPair) -> bool:
    """Strictly smaller in the lower regime, strictly larger in the upper regime."""
    return candidate < incumbent if pair.is_lower else candidate > incumbent


def lemma1_check(a, b, p: float, q: float) -> bool:
    """
    The two-sequence inequality behind the step-vector reduction:
    (sum (a+b)^q)^(p/q - 1) * sum (a+b)^(q-1) a >= (sum a^q)^(p/q),
    reversed when 0 < p <= 1 and q >= p.
    Args:
        a (array): Positive entries
        b (array): Non-negative entries, same length as a
        p (float): The domain exponent
        q (float): The image exponent
    Returns (bool): Whether the inequality holds within 1e-12 relative slack
    Raises: DomainError if (p, q) lies in neither regime
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.size < 1 or a.shape != b.shape:
        raise SizeError("Error! a and b must be non-empty and of equal length.")
    if np.any(a <= 0) or np.any(b < 0):
        raise DomainError("Error! a must be positive and b non-negative.")

    if p >= 1 and 0 < q <= p:
        lower = True
    elif 0 < p <= 1 and q >= p:
        lower = False
    else:
        raise DomainError(f"Error! (p, q) = ({p}, {q}) lies in neither regime.")

    total = a + b
    lhs = math.fsum(total ** q) ** (p / q - 1) * math.fsum(total ** (q - 1) * a)
    rhs = math.fsum(a ** q) ** (p / q)
    slack = LEMMA_SLACK * max(abs(lhs), abs(rhs))

    return lhs >= rhs - slack if lower else lhs <= rhs + slack
