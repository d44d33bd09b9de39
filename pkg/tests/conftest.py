"""Shared frozen references for the test suite.

The four matrices below are the printed forms of the built-in example
states (interleaved ordering).  They are transcribed as exact rational
literals and never regenerated by package code, so every test that uses
them compares against an independent record.
"""

import numpy as np
import pytest

from gaussbound import Bipartition

EXAMPLE_MATRICES = {
    "example1": np.array(
        [
            [2, 0, 0, 0, 1, 0, 0, 0],
            [0, 1, 0, 0, 0, 0, 0, -1],
            [0, 0, 2, 0, 0, 0, -1, 0],
            [0, 0, 0, 1, 0, -1, 0, 0],
            [1, 0, 0, 0, 2, 0, 0, 0],
            [0, 0, 0, -1, 0, 4, 0, 0],
            [0, 0, -1, 0, 0, 0, 2, 0],
            [0, -1, 0, 0, 0, 0, 0, 4],
        ],
        dtype=float,
    ),
    "example2": np.array(
        [
            [2, 0, 0, 0, 2, 0, 0, 0],
            [0, 2, 0, 0, 0, 0, 0, -1],
            [0, 0, 2, 0, 0, 0, 2, 0],
            [0, 0, 0, 2, 0, 1, 0, 0],
            [2, 0, 0, 0, 7, 0, 0, 0],
            [0, 0, 0, 1, 0, 1, 0, 0],
            [0, 0, 2, 0, 0, 0, 7, 0],
            [0, -1, 0, 0, 0, 0, 0, 1],
        ],
        dtype=float,
    ),
    "example3": np.array(
        [
            [3, 0, 0, 0, 7, 0, 0, 0],
            [0, 6, 0, 0, 0, 0, 0, -2],
            [0, 0, 3, 0, 0, 0, 7, 0],
            [0, 0, 0, 6, 0, 2, 0, 0],
            [7, 0, 0, 0, 23, 0, 0, 0],
            [0, 0, 0, 2, 0, 1, 0, 0],
            [0, 0, 7, 0, 0, 0, 23, 0],
            [0, -2, 0, 0, 0, 0, 0, 1],
        ],
        dtype=float,
    ),
    "example4": np.array(
        [
            [7 / 4, 0, 0, 0, -1 / 2, 0, 0, 0],
            [0, 11 / 2, 0, 0, 0, 0, 0, 3],
            [0, 0, 9 / 2, 0, 0, 0, -3 / 2, 0],
            [0, 0, 0, 1 / 2, 0, -1 / 2, 0, 0],
            [-1 / 2, 0, 0, 0, 2, 0, 0, 0],
            [0, 0, 0, -1 / 2, 0, 3 / 2, 0, 0],
            [0, 0, -3 / 2, 0, 0, 0, 29 / 4, 0],
            [0, 3, 0, 0, 0, 0, 0, 2],
        ],
        dtype=float,
    ),
}


@pytest.fixture(scope="session")
def example_matrices():
    return {name: m.copy() for name, m in EXAMPLE_MATRICES.items()}


@pytest.fixture(scope="session")
def half_partition():
    return Bipartition((1, 2), (3, 4))
