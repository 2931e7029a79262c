"""Compensated summation helpers shared by the engine, families and analysis."""


import numpy as np


class KahanAccumulator:
    """
    Elementwise Kahan accumulator for equal-length vectors.

    Vectors must be added in a fixed order for the total to be reproducible;
    the engine feeds block contributions in block order.
    """

    def __init__(self, length: int):
        self.total = np.zeros(length)
        self.__compensation = np.zeros(length)

    def add(self, values):
        """Add a vector of values into the running total."""
        corrected = values - self.__compensation
        running = self.total + corrected
        self.__compensation = (running - self.total) - corrected
        self.total = running


def compensated_cumsum(values, start: float = 0.0) -> np.ndarray:
    """
    Kahan running sum of a one-dimensional array.
    Args:
        values (array): The terms to accumulate
        start (float): A value carried in from an earlier chunk
    Returns (np.ndarray): The partial sums, start + values[0], start + values[0] + values[1], ...
    """
    values = np.asarray(values, dtype=float)
    partial = np.empty_like(values)

    total = start
    compensation = 0.0
    for index, value in enumerate(values.tolist()):
        corrected = value - compensation
        running = total + corrected
        compensation = (running - total) - corrected
        total = running
        partial[index] = total

    return partial
