"""Truncations of the matrix families and their weight sequences."""

import functools
import logging
from collections import namedtuple

import numpy as np

from conebound.core import NonNegativeMatrix, compensated_cumsum
from conebound.errors import KindError, SizeError
from conebound.specfun import log_mean_weight, power_difference

from .spec import FamilySpec, Kind

WeightSequence = namedtuple("WeightSequence", ["lambda_", "Lambda"], module="conebound.families")

# Weight arrays can be long; keep only the most recent ones
WEIGHT_CACHE_SIZE = 32


def weights(spec: FamilySpec, size: int) -> WeightSequence:
    """
    The generating weights lambda_1..lambda_N and their partial sums Lambda_n.
    Args:
        spec (FamilySpec): A weighted-mean or Norlund family
        size (int): N >= 1
    Returns (WeightSequence): Read-only arrays of length N
    Raises: KindError for tail families, SizeError for N < 1
    """
    if spec.kind.is_tail:
        raise KindError(f"Error! `{spec.kind.value}` is not generated by a weight sequence.")
    _check_size(size)

    return _weight_sequence(spec, int(size))


@functools.lru_cache(maxsize=WEIGHT_CACHE_SIZE)
def _weight_sequence(spec: FamilySpec, size: int) -> WeightSequence:
    index = np.arange(1, size + 1, dtype=float)
    kind = spec.kind

    if kind is Kind.CESARO:
        lam = np.ones(size)
    elif kind in (Kind.WEIGHTED_MEAN_POWER, Kind.NORLUND_POWER):
        lam = index ** spec.alpha
    elif kind in (Kind.WEIGHTED_MEAN_POWER_DIFF, Kind.NORLUND_POWER_DIFF):
        lam = power_difference(index, index - 1, spec.alpha)
    else:  # NORLUND_POWER_SUM: partial sums of i^alpha
        lam = compensated_cumsum(index ** spec.alpha)

    cumulative = compensated_cumsum(lam)
    lam.setflags(write=False)
    cumulative.setflags(write=False)

    return WeightSequence(lam, cumulative)


def tail_profile(spec: FamilySpec, size: int) -> tuple:
    """
    Column weights w_k and row normalizers D_j of a tail family, a_{j,k} = w_k / D_j (k >= j).
    Returns (tuple): (w, D), both of length N
    """
    if not spec.kind.is_tail:
        raise KindError(f"Error! `{spec.kind.value}` is not a tail family.")
    _check_size(size)

    index = np.arange(1, size + 1, dtype=float)
    alpha = spec.alpha

    if spec.kind is Kind.TAIL_POWER:
        column = power_difference(index + spec.t, index + spec.t - 1, alpha)
        row = index ** alpha
    elif spec.kind is Kind.TAIL_ALPHA_K:
        column = alpha * index ** (alpha - 1)
        row = index ** alpha
    else:
        column = log_mean_weight(spec.beta, index, alpha - 1)
        row = compensated_cumsum(column)

    return column, row


class RowStream:
    """
    Produces the rows of a family truncation block by block.

    Row j of an M x N truncation is a function of j alone, so any block of rows
    can be generated independently; blocks are bitwise identical to the
    matching slice of the materialized matrix.
    """

    def __init__(self, spec: FamilySpec, size: int, rows: int = None):
        """
        Args:
            spec (FamilySpec): The family
            size (int): The column count N
            rows (int): The row count M (default N)
        """
        _check_size(size)
        rows = size if rows is None else int(rows)
        _check_size(rows)

        self.spec = spec
        self.size = size
        self.rows = rows

        if spec.kind.is_tail:
            self.__column, self.__row = tail_profile(spec, size)
        else:
            sequence = weights(spec, max(size, rows))
            self.__column = sequence.lambda_
            self.__row = sequence.Lambda

    def block(self, start: int, stop: int) -> np.ndarray:
        """
        Rows start+1 .. stop (1-based) of the truncation.
        Returns (np.ndarray): A (stop - start) x N array
        """
        stop = min(stop, self.rows)
        j = np.arange(start + 1, stop + 1)[:, None]
        k = np.arange(1, self.size + 1)[None, :]
        kind = self.spec.kind

        if kind.is_tail:
            # Rows past N have no support on k >= j
            inside = np.minimum(j, self.size) - 1
            entries = self.__column[None, :] / self.__row[inside]
            return np.where((k >= j) & (j <= self.size), entries, 0.0)

        normalizer = self.__row[j - 1]
        if kind.is_weighted_mean:
            entries = self.__column[None, : self.size] / normalizer
            return np.where(k <= j, entries, 0.0)

        # Norlund: lambda_{j-k+1} / Lambda_j
        lag = np.clip(j - k, 0, None)
        entries = self.__column[lag] / normalizer
        return np.where(k <= j, entries, 0.0)

    def blocks(self, block_rows: int):
        """Yield (start, block) pairs covering every row in order."""
        for start in range(0, self.rows, block_rows):
            yield start, self.block(start, start + block_rows)


def generate(spec: FamilySpec, size: int, rows: int = None) -> NonNegativeMatrix:
    """
    Materialize the truncation of a family.
    Args:
        spec (FamilySpec): The family
        size (int): The column count N >= 1
        rows (int): The row count M >= 1, default N
    Returns (NonNegativeMatrix): The M x N truncation
    Raises: SizeError for N < 1 or M < 1
    """
    stream = RowStream(spec, size, rows)
    logging.debug("Generating %s x %s truncation of %s", stream.rows, size, spec.label)

    return NonNegativeMatrix(stream.block(0, stream.rows), label=spec.label)


def _check_size(size):
    """Truncations need at least one row and column."""
    if not isinstance(size, (int, np.integer)) and not (
        isinstance(size, float) and size.is_integer()
    ):
        raise SizeError(f"Error! Truncation sizes must be positive integers (got {size}).")
    if size < 1:
        raise SizeError(f"Error! Truncation sizes must be positive integers (got {size}).")
