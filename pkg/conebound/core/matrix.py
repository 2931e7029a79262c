"""Dense non-negative matrices and their CSV ingestion."""

import csv
import logging

import numpy as np

from conebound.errors import MatrixFileError


class NonNegativeMatrix:
    """An immutable dense m x n matrix with finite, non-negative entries."""

    def __init__(self, entries, label: str = "matrix"):
        """
        Args:
            entries (array-like): The m x n entries a_{j,k}
            label (str): A short name used in reports
        Raises: ValueError if the entries are not a finite non-negative 2-D array
        """
        entries = np.array(entries, dtype=float)
        if entries.ndim != 2 or 0 in entries.shape:
            raise ValueError(f"Error! A matrix needs at least one row and column (got {entries.shape}).")
        if not np.all(np.isfinite(entries)):
            raise ValueError("Error! Matrix entries must be finite.")
        if np.any(entries < 0):
            row, col = np.argwhere(entries < 0)[0]
            raise ValueError(f"Error! Entry ({row + 1}, {col + 1}) is negative.")

        entries.setflags(write=False)
        self.__entries = entries
        self.label = label

    @classmethod
    def from_csv(cls, path):
        """
        Read a matrix from a header-less CSV file, one row per line.
        Args:
            path (str): The file to read
        Returns (NonNegativeMatrix): The parsed matrix
        Raises: MatrixFileError if the file is unreadable, ragged, negative or non-numeric
        """
        rows = []
        try:
            with open(path, newline="", encoding="utf-8") as handle:
                for line_number, row in enumerate(csv.reader(handle), start=1):
                    if not row or all(not cell.strip() for cell in row):
                        continue
                    try:
                        rows.append([float(cell) for cell in row])
                    except ValueError:
                        raise MatrixFileError(
                            f"Error! Line {line_number} of {path} holds a non-numeric entry."
                        ) from None
                    if len(rows[-1]) != len(rows[0]):
                        raise MatrixFileError(
                            f"Error! Line {line_number} of {path} has {len(rows[-1])} entries;"
                            f" expected {len(rows[0])}."
                        )
        except OSError as err:
            raise MatrixFileError(f"Error! Unable to read {path}: {err.strerror}.") from None

        if not rows:
            raise MatrixFileError(f"Error! {path} contains no rows.")

        try:
            matrix = cls(rows, label=str(path))
        except ValueError as err:
            raise MatrixFileError(f"{err} ({path})") from None

        logging.info("Read a %s x %s matrix from %s", matrix.rows, matrix.cols, path)
        return matrix

    @classmethod
    def identity(cls, size: int):
        """The size x size identity."""
        return cls(np.eye(size), label="identity")

    @property
    def entries(self) -> np.ndarray:
        """The read-only entries."""
        return self.__entries

    @property
    def rows(self) -> int:
        """The row count m."""
        return self.__entries.shape[0]

    @property
    def cols(self) -> int:
        """The column count n."""
        return self.__entries.shape[1]

    @property
    def shape(self) -> tuple:
        """(m, n)"""
        return self.__entries.shape

    def scaled(self, factor: float):
        """Return factor * A for factor >= 0."""
        return NonNegativeMatrix(self.__entries * factor, label=self.label)

    def permuted_rows(self, order):
        """Return A with its rows reordered."""
        return NonNegativeMatrix(self.__entries[np.asarray(order)], label=self.label)

    def __repr__(self):
        return f"NonNegativeMatrix({self.label!r}, shape={self.shape})"
