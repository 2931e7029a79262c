"""Random vectors from the monotone cone and the norm ratio they are scored by."""

import math

import numpy as np

from conebound.core import MonotoneVector, NonNegativeMatrix, pnorm
from conebound.errors import SizeError, ZeroVector

# Samples per generator; each chunk owns a spawned seed so output never depends on threads
CHUNK = 1024
# Extra entropy word for restart points; sample chunks are children of the bare seed
RESTART_STREAM = 7


def ratio(A: NonNegativeMatrix, x: MonotoneVector, p: float, q: float) -> float:
    """
    ||Ax||_q / ||x||_p.
    Args:
        A (NonNegativeMatrix): The matrix
        x (MonotoneVector): A non-zero cone vector with A.cols entries
        p (float): The domain exponent
        q (float): The image exponent
    Returns (float): The ratio
    Raises: ZeroVector, SizeError on a dimension mismatch
    """
    values = x.values if isinstance(x, MonotoneVector) else MonotoneVector(x, allow_zero=True).values
    if values.size != A.cols:
        raise SizeError(f"Error! The vector has {values.size} entries but the matrix has {A.cols} columns.")
    if values[0] == 0:
        raise ZeroVector("Error! The ratio is undefined at the zero vector.")

    return pnorm(A.entries @ values, q) / pnorm(values, p)


def batch_ratios(A: NonNegativeMatrix, vectors: np.ndarray, p: float, q: float) -> np.ndarray:
    """Ratios for every row of a (count x n) array of cone vectors."""
    image = vectors @ A.entries.T
    numerators = np.sum(image ** q, axis=1) ** (1 / q)
    denominators = np.sum(vectors ** p, axis=1) ** (1 / p)
    return numerators / denominators


def chunk_count(count: int) -> int:
    """How many chunks cover count samples."""
    return math.ceil(count / CHUNK)


def sample_chunk(n: int, p: float, count: int, seed: int, index: int) -> np.ndarray:
    """
    One chunk of normalized cone vectors.
    Args:
        n (int): Vector length
        p (float): The normalizing exponent
        count (int): Total samples across all chunks
        seed (int): The run seed
        index (int): Which chunk
    Returns (np.ndarray): A (rows x n) array, each row non-increasing with p-norm 1
    """
    child = np.random.SeedSequence(seed).spawn(index + 1)[index]
    return __cone_vectors(np.random.default_rng(child), min(CHUNK, count - index * CHUNK), n, p)


def restart_points(n: int, p: float, count: int, seed: int) -> np.ndarray:
    """Normalized cone vectors for local-search restarts, from a stream no sample chunk shares."""
    stream = np.random.SeedSequence([RESTART_STREAM, seed])
    return __cone_vectors(np.random.default_rng(stream), count, n, p)


def __cone_vectors(rng, rows: int, n: int, p: float) -> np.ndarray:
    """Suffix sums of unit exponentials, scaled to p-norm 1."""
    increments = rng.exponential(1.0, size=(rows, n))
    vectors = np.cumsum(increments[:, ::-1], axis=1)[:, ::-1]
    norms = np.sum(vectors ** p, axis=1) ** (1 / p)
    return vectors / norms[:, None]


def sample_monotone(n: int, p: float, count: int, seed: int):
    """
    Yield count cone vectors built from suffix sums of unit exponential increments.
    The stream is a pure function of (n, p, count, seed).
    """
    if count < 1:
        raise SizeError(f"Error! At least one sample is required (got {count}).")
    if n < 1:
        raise SizeError(f"Error! Vectors need at least one entry (got {n}).")

    for index in range(chunk_count(count)):
        for row in sample_chunk(n, p, count, seed, index):
            yield MonotoneVector(row)
