"""The sharp-constant solver: s_r sequences, bounds and convergence studies."""

import logging
import math
import time
from collections import deque, namedtuple
from concurrent.futures import ThreadPoolExecutor

import numpy as np

import conebound
from conebound.core import BoundResult, ExponentPair, KahanAccumulator, NonNegativeMatrix, step_vector
from conebound.errors import DivergentSeries, KindError, NotCovered, RegimeViolation, SizeError
from conebound.families import (
    FamilySpec,
    Kind,
    RowStream,
    asymptotic_constant,
    power_sum_tail,
    weights,
)
from conebound.specfun import hurwitz_zeta

SRSequence = namedtuple("SRSequence", ["values", "p", "q"], module="conebound.engine")
ConvergenceTable = namedtuple(
    "ConvergenceTable",
    ["sizes", "lambdas", "target", "gaps", "extrapolated", "rows"],
    module="conebound.engine",
)

# Prefix sums below this are treated as zero before raising to q
UNDERFLOW = 1e-300


def s_sequence(A: NonNegativeMatrix, p: float, q: float, threads: int = None) -> SRSequence:
    """
    s_r = r^(-q/p) * sum over rows j of (a_{j,1} + ... + a_{j,r})^q, for r = 1..n.
    Args:
        A (NonNegativeMatrix): The matrix
        p (float): The domain exponent
        q (float): The image exponent
        threads (int): Worker threads; defaults to the `threads` setting
    Returns (SRSequence): The sequence and its exponents
    """
    if not (p > 0 and q > 0):
        raise RegimeViolation("p, q > 0", f"Error! p and q must be positive (got p={p}, q={q}).")

    entries = A.entries
    block_rows = __block_rows()

    def make_block(start):
        return entries[start : start + block_rows]

    totals = __reduce_rows(make_block, A.rows, A.cols, q, threads)
    return SRSequence(__scaled(totals, p, q), p, q)


def compute_bound(A: NonNegativeMatrix, pair: ExponentPair, threads: int = None) -> BoundResult:
    """
    The sharp constant of A on the monotone cone for a validated exponent pair.
    Args:
        A (NonNegativeMatrix): The matrix
        pair (ExponentPair): Exponents and regime
    Returns (BoundResult): lambda, lambda^q, the smallest optimal r and the s_r trace
    """
    logging.debug("Computing the %s bound of a %s x %s matrix", pair.regime.value, A.rows, A.cols)
    sequence = s_sequence(A, pair.p, pair.q, threads)
    return bound_from_sequence(sequence, pair)


def family_bound_streamed(
    spec: FamilySpec, size: int, pair: ExponentPair, rows=None, threads: int = None
) -> BoundResult:
    """
    The bound of a family truncation without materializing the matrix.

    With rows = None the truncation is square, and the result matches
    compute_bound(generate(spec, size), pair) bit for bit. An integer keeps
    that many rows. math.inf keeps every row of a weighted-mean family, adding
    the exact contribution of rows past N in closed form.
    Args:
        spec (FamilySpec): The family
        size (int): The column count N
        pair (ExponentPair): Exponents and regime
        rows (int or math.inf): The row count M
        threads (int): Worker threads; defaults to the `threads` setting
    Returns (BoundResult): As compute_bound
    Raises: KindError if infinite rows are requested for a family without a closed-form row tail
    """
    infinite = rows is not None and rows == math.inf
    if infinite and not spec.kind.is_weighted_mean:
        raise KindError(
            f"Error! Infinite rows are only available for weighted means, not `{spec.kind.value}`."
        )

    stream = RowStream(spec, size, None if infinite else rows)
    block_rows = __block_rows()

    def make_block(start):
        return stream.block(start, start + block_rows)

    started = time.perf_counter()
    totals = __reduce_rows(make_block, stream.rows, size, pair.q, threads)

    if infinite:
        cumulative = weights(spec, size).Lambda
        totals = totals + cumulative ** pair.q * __row_tail(spec, size, pair.q)

    logging.debug(
        "%s at N=%s (%s rows) took %.3fs",
        spec.label, size, "all" if infinite else stream.rows, time.perf_counter() - started,
    )

    sequence = SRSequence(__scaled(totals, pair.p, pair.q), pair.p, pair.q)
    return bound_from_sequence(sequence, pair)


def bound_from_sequence(sequence: SRSequence, pair: ExponentPair) -> BoundResult:
    """Take the regime's optimum of an s_r sequence; ties go to the smallest r."""
    values = sequence.values
    index = int(np.argmin(values)) if pair.is_lower else int(np.argmax(values))
    lambda_pow_q = float(values[index])

    return BoundResult(
        lambda_pow_q ** (1 / pair.q),
        lambda_pow_q,
        index + 1,
        values,
        step_vector(index + 1, values.size),
        pair,
    )


def convergence_study(spec, pair: ExponentPair, sizes, rows=None, threads: int = None) -> ConvergenceTable:
    """
    lambda^q(N) over increasing truncation sizes, with the published target when there is one.
    Args:
        spec (FamilySpec or callable): A family, or a function from N to a NonNegativeMatrix
        pair (ExponentPair): Exponents and regime
        sizes (list): Strictly increasing truncation sizes
        rows (int or math.inf): Row count per truncation, as in family_bound_streamed
        threads (int): Worker threads, spread over the sizes
    Returns (ConvergenceTable): The table; target, gaps and extrapolated may be None
    """
    sizes = [int(size) for size in sizes]
    if not sizes or any(later <= earlier for earlier, later in zip(sizes, sizes[1:])):
        raise SizeError(f"Error! Convergence sizes must be strictly increasing (got {sizes}).")

    threads = threads or conebound.settings.value("threads")

    def solve(size):
        if isinstance(spec, FamilySpec):
            return family_bound_streamed(spec, size, pair, rows, threads=1).lambda_pow_q
        return compute_bound(spec(size), pair, threads=1).lambda_pow_q

    started = time.perf_counter()
    if threads > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=min(threads, len(sizes))) as pool:
            lambdas = list(pool.map(solve, sizes))
    else:
        lambdas = [solve(size) for size in sizes]
    logging.info("Convergence study over %s sizes took %.2fs", len(sizes), time.perf_counter() - started)

    target = None
    gaps = None
    if isinstance(spec, FamilySpec):
        try:
            target = asymptotic_constant(spec, pair.p, pair.q, pair.regime)
            gaps = [value - target.value for value in lambdas]
        except (NotCovered, RegimeViolation) as err:
            logging.info("No target for %s: %s", spec.label, err)

    return ConvergenceTable(sizes, lambdas, target, gaps, __extrapolate(lambdas), rows)


def __extrapolate(values):
    """
    Richardson step with an estimated ratio on the last three values.
    Returns None unless the successive differences shrink geometrically with a fixed sign.
    """
    if len(values) < 3:
        return None

    first, second, third = values[-3:]
    earlier, later = second - first, third - second
    if earlier == 0 or later == 0:
        return third

    ratio = later / earlier
    if not 0 < ratio < 1:
        logging.debug("Skipping extrapolation: difference ratio %.3g", ratio)
        return None
    return third + later * ratio / (1 - ratio)


def __row_tail(spec: FamilySpec, size: int, q: float) -> float:
    """Sum over rows j > N of Lambda_j^-q for a weighted-mean family."""
    if spec.kind is Kind.CESARO:
        exponent = q
    elif spec.kind is Kind.WEIGHTED_MEAN_POWER_DIFF:
        exponent = spec.alpha * q
    else:
        exponent = (1 + spec.alpha) * q

    if exponent <= 1:
        raise DivergentSeries(
            f"Error! Rows past N contribute a divergent sum for {spec.label} at q={q}."
        )

    if spec.kind is Kind.WEIGHTED_MEAN_POWER:
        return power_sum_tail(spec.alpha, q, start=size, tol=math.inf).value
    return hurwitz_zeta(exponent, size + 1).value


def __block_rows() -> int:
    """Rows per reduction block. Fixed per run so results never depend on threads."""
    return conebound.settings.value("block_rows")


def __scaled(totals, p: float, q: float) -> np.ndarray:
    """Apply r^(-q/p)."""
    scale = np.arange(1, totals.size + 1, dtype=float) ** (-q / p)
    values = totals * scale
    values.setflags(write=False)
    return values


def __reduce_rows(make_block, rows: int, cols: int, q: float, threads: int = None) -> np.ndarray:
    """
    Sum the column contributions of every row block, in block order.
    Args:
        make_block (callable): Start row -> block of rows
        rows (int): Total row count
        cols (int): Column count
        q (float): The image exponent
        threads (int): Worker threads
    Returns (np.ndarray): sum over j of (prefix_{j,r})^q for r = 1..n
    """
    threads = threads or conebound.settings.value("threads")
    block_rows = __block_rows()
    starts = range(0, rows, block_rows)
    accumulator = KahanAccumulator(cols)

    def work(start):
        return __column_contributions(make_block(start), q)

    if threads == 1:
        for start in starts:
            accumulator.add(work(start))
        return accumulator.total

    # A bounded window of futures keeps memory flat; results merge in block order.
    pending = deque()
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for start in starts:
            pending.append(pool.submit(work, start))
            if len(pending) >= 2 * threads:
                accumulator.add(pending.popleft().result())
        while pending:
            accumulator.add(pending.popleft().result())

    return accumulator.total


def __column_contributions(block: np.ndarray, q: float) -> np.ndarray:
    """
    Column sums of (row prefix sums)^q for one block.

    Columns before the block's first non-zero column contribute nothing, and
    past its last non-zero column every prefix sum equals its row total.
    """
    cols = block.shape[1]
    contribution = np.zeros(cols)

    support = np.flatnonzero(block.any(axis=0))
    if support.size == 0:
        return contribution
    lead, last = int(support[0]), int(support[-1])

    prefix = np.cumsum(block[:, lead : last + 1], axis=1)
    prefix[prefix < UNDERFLOW] = 0.0
    powered = prefix ** q

    contribution[lead : last + 1] = powered.sum(axis=0)
    if last + 1 < cols:
        contribution[last + 1 :] = powered[:, -1].sum()

    return contribution
