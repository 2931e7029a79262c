"""Shared fixtures for the test suites."""

import numpy as np
import pytest

import conebound
from conebound.core import NonNegativeMatrix


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test starts from the defaults, whatever the shell environment says."""
    for variable in ("MB_THREADS", "MB_BLOCK_ROWS", "MB_SAMPLES", "MB_SEED",
                     "MB_SEARCH_ITERS", "MB_GRID", "MB_N_MAX", "MB_LOG_LEVEL"):
        monkeypatch.delenv(variable, raising=False)
    conebound.settings.reload()
    yield
    conebound.settings.reload()


@pytest.fixture
def cesaro2():
    """The 2 x 2 Cesaro matrix."""
    return NonNegativeMatrix([[1.0, 0.0], [0.5, 0.5]])


@pytest.fixture
def identity3():
    return NonNegativeMatrix.identity(3)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def cesaro_csv(tmp_path):
    """The 2 x 2 Cesaro matrix as a CSV file."""
    path = tmp_path / "cesaro.csv"
    path.write_text("1,0\n0.5,0.5\n", encoding="utf-8")
    return str(path)
