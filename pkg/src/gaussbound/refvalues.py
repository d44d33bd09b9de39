r"""Closed-form reference values for the flagship example state.

The first built-in example admits an exact normal-form decomposition
gamma = T D T^T with D = diag(1, 1, 1, 1, 3, 3, 3, 3) and
T = K (four equal squeezers) L, where K and L are orthogonal symplectic
interferometers with published radical entries.  This module evaluates
those radicals in double precision; they feed the verification command
and anchor the decomposition and circuit test suites.

All 8 x 8 matrices here use the interleaved quadrature ordering; the
4 x 4 complex matrices act on annihilation operators via
a_j = (q_j + i p_j) / sqrt(2).
"""

from __future__ import annotations

from math import sqrt

import numpy as np

__all__ = [
    "SQUEEZE_TAU",
    "STAR_KAPPA",
    "ASYMPTOTE_TAU",
    "thermal_input_diagonal",
    "diagonalizing_symplectic",
    "output_interferometer",
    "input_interferometer",
    "input_unitary",
    "output_unitary",
    "input_mesh_factorization",
    "output_mesh_factorization",
]

# e^{-r} of the four equal squeezers; also the tau coordinate of the
# example in the (kappa, tau) sweep plane, sitting on the bound-to-free
# boundary at kappa = 3.
SQUEEZE_TAU = (sqrt(17.0) + 1.0) / 4.0
STAR_KAPPA = 3.0

# Large-occupation limit of the bound-to-free boundary.
ASYMPTOTE_TAU = 1.5770

_RP = sqrt(5.0 + sqrt(13.0))
_RM = sqrt(5.0 - sqrt(13.0))
_S3 = sqrt(3.0)
_S7 = sqrt(7.0)
_S13 = sqrt(13.0)
_S17 = sqrt(17.0)
_S39 = sqrt(39.0)

# Normalization of the interferometer entries and the off-diagonal
# coupling weight they share.
_NORM = 17.0 - 3.0 * _S17
_G = (_S17 - 3.0) / 2.0

_S_ENTRIES = {
    "s12": ((-_S13 - 3.0) * _RP + (3.0 - _S13) * _RM) / (8.0 * _S13),
    "s14": ((_S39 + 4.0 * _S3) * _RP + (_S39 - 4.0 * _S3) * _RM) / (12.0 * _S13),
    "s16": ((_S39 + 3.0 * _S3) * _RP + (_S39 - 3.0 * _S3) * _RM) / (8.0 * _S7 * _S13),
    "s18": ((4.0 - _S13) * _RP - (4.0 + _S13) * _RM) / (4.0 * _S7 * _S13),
    "s21": ((_S39 - 3.0 * _S3) * _RP + (_S39 + 3.0 * _S3) * _RM) / (8.0 * _S13),
    "s23": ((4.0 - _S13) * _RP - (4.0 + _S13) * _RM) / (4.0 * _S13),
    "s25": ((3.0 - _S13) * _RP - (3.0 + _S13) * _RM) / (8.0 * _S7 * _S13),
    "s27": ((_S13 + 4.0) * _RP + (_S13 - 4.0) * _RM) / (4.0 * _S3 * _S7 * _S13),
    "s52": ((_S39 + _S3) * _RP + (_S39 - _S3) * _RM) / (24.0 * _S13),
    "s54": (_RP - _RM) / (4.0 * _S13),
    "s56": ((7.0 * _S13 - 25.0) * _RP + (7.0 * _S13 + 25.0) * _RM) / (8.0 * _S7 * _S13),
    "s58": (-_S3 * _RP + _S3 * _RM) / (4.0 * _S7 * _S13),
    "s81": (-_S3 * _RP + _S3 * _RM) / (4.0 * _S13),
    "s83": ((-1.0 + _S13) * _RP + (1.0 + _S13) * _RM) / (-8.0 * _S13),
    "s85": (_RP - _RM) / (4.0 * _S7 * _S13),
    "s87": ((-25.0 - 7.0 * _S13) * _RP + (25.0 - 7.0 * _S13) * _RM)
    / (8.0 * _S3 * _S7 * _S13),
}

_L_ENTRIES = {
    "l12": (
        (-(21.0 + 3.0 * _S17) + 3.0 * (1.0 - _S17) * _S13
         + (5.0 - _S17) * _S39 + (5.0 - _S17) * _S3) * _RP
        + ((21.0 + 3.0 * _S17) + 3.0 * (1.0 - _S17) * _S13
           + (5.0 - _S17) * _S39 - (5.0 - _S17) * _S3) * _RM
    ) / (48.0 * _S13),
    "l14": (
        ((30.0 - 6.0 * _S17) + (3.0 + _S17) * _S39 + (7.0 * _S17 - 3.0) * _S3) * _RP
        + (-(30.0 - 6.0 * _S17) + (3.0 + _S17) * _S39 - (7.0 * _S17 - 3.0) * _S3) * _RM
    ) / (48.0 * _S13),
    "l16": (
        ((35.0 - 7.0 * _S17) * _S13 - (125.0 - 25.0 * _S17)
         + (_S17 - 1.0) * _S39 + (7.0 + _S17) * _S3) * _RP
        + ((35.0 - 7.0 * _S17) * _S13 + (125.0 - 25.0 * _S17)
           + (_S17 - 1.0) * _S39 - (7.0 + _S17) * _S3) * _RM
    ) / (16.0 * _S7 * _S13),
    "l18": (
        ((37.0 - 9.0 * _S17) * _S13 + (33.0 * _S17 - 133.0)
         + (2.0 * _S17 - 10.0) * _S3) * _RP
        + ((37.0 - 9.0 * _S17) * _S13 + (133.0 - 33.0 * _S17)
           + (10.0 - 2.0 * _S17) * _S3) * _RM
    ) / (16.0 * _S7 * _S13),
    "l51": (
        ((4.0 * _S17 - 12.0) * _S39 + (10.0 * _S17 - 54.0) * _S3
         + (63.0 - 9.0 * _S17) + (21.0 - 3.0 * _S17) * _S13) * _RP
        + ((4.0 * _S17 - 12.0) * _S39 - (10.0 * _S17 - 54.0) * _S3
           - (63.0 - 9.0 * _S17) + (21.0 - 3.0 * _S17) * _S13) * _RM
    ) / (96.0 * _S13),
    "l53": (
        ((21.0 * _S17 - 51.0) + (3.0 * _S17 - 21.0) * _S13
         + (2.0 * _S17 - 14.0) * _S39 + (8.0 * _S17 - 56.0) * _S3) * _RP
        + ((-21.0 * _S17 + 51.0) + (3.0 * _S17 - 21.0) * _S13
           + (2.0 * _S17 - 14.0) * _S39 - (8.0 * _S17 - 56.0) * _S3) * _RM
    ) / (96.0 * _S13),
    "l55": (
        (-(106.0 + 42.0 * _S17) + (12.0 * _S17 + 28.0) * _S13
         + (_S17 - 7.0) * _S39 + (3.0 * _S17 - 21.0) * _S3) * _RP
        + ((106.0 + 42.0 * _S17) + (28.0 + 12.0 * _S17) * _S13
           + (21.0 - 3.0 * _S17) * _S3 + (_S17 - 7.0) * _S39) * _RM
    ) / (32.0 * _S7 * _S13),
    "l57": (
        ((-56.0 + 8.0 * _S17) + (14.0 - 2.0 * _S17) * _S13
         + (7.0 - _S17) * _S39 + (17.0 - 7.0 * _S17) * _S3) * _RP
        + ((56.0 - 8.0 * _S17) + (14.0 - 2.0 * _S17) * _S13
           + (7.0 - _S17) * _S39 - (17.0 - 7.0 * _S17) * _S3) * _RM
    ) / (32.0 * _S7 * _S13),
}


def thermal_input_diagonal(kappa: float = 3.0) -> np.ndarray:
    """Input covariance diagonal: modes 1, 2 vacuum, modes 3, 4 at kappa."""
    return np.diag([1.0, 1.0, 1.0, 1.0, kappa, kappa, kappa, kappa]).astype(float)


def diagonalizing_symplectic() -> np.ndarray:
    """Symplectic T with T diag(1,1,1,1,3,3,3,3) T^T = the first example."""
    e = _S_ENTRIES
    rows = [
        [0.0, e["s12"], 0.0, e["s14"], 0.0, e["s16"], 0.0, e["s18"]],
        [e["s21"], 0.0, e["s23"], 0.0, e["s25"], 0.0, e["s27"], 0.0],
        [0.0, e["s14"], 0.0, -e["s12"], 0.0, e["s18"], 0.0, -e["s16"]],
        [e["s23"], 0.0, -e["s21"], 0.0, e["s27"], 0.0, -e["s25"], 0.0],
        [0.0, e["s52"], 0.0, e["s54"], 0.0, e["s56"], 0.0, e["s58"]],
        [e["s83"], 0.0, -e["s81"], 0.0, e["s87"], 0.0, -e["s85"], 0.0],
        [0.0, -e["s54"], 0.0, e["s52"], 0.0, -e["s58"], 0.0, e["s56"]],
        [e["s81"], 0.0, e["s83"], 0.0, e["s85"], 0.0, e["s87"], 0.0],
    ]
    return np.array(rows)


def output_interferometer() -> np.ndarray:
    """Orthogonal symplectic mesh applied after the squeezers (8 x 8)."""
    g = _G
    rows = [
        [2.0, 0.0, 0.0, 0.0, 0.0, -g, 0.0, -g],
        [0.0, 2.0, 0.0, 0.0, g, 0.0, g, 0.0],
        [0.0, 0.0, 2.0, 0.0, 0.0, -g, 0.0, g],
        [0.0, 0.0, 0.0, 2.0, g, 0.0, -g, 0.0],
        [g, 0.0, g, 0.0, 0.0, 2.0, 0.0, 0.0],
        [0.0, g, 0.0, g, -2.0, 0.0, 0.0, 0.0],
        [g, 0.0, -g, 0.0, 0.0, 0.0, 0.0, 2.0],
        [0.0, g, 0.0, -g, 0.0, 0.0, -2.0, 0.0],
    ]
    return np.array(rows) / sqrt(_NORM)


def input_interferometer() -> np.ndarray:
    """Orthogonal symplectic mesh applied before the squeezers (8 x 8)."""
    e = _L_ENTRIES
    rows = [
        [0.0, e["l12"], 0.0, e["l14"], 0.0, e["l16"], 0.0, e["l18"]],
        [-e["l12"], 0.0, -e["l14"], 0.0, -e["l16"], 0.0, -e["l18"], 0.0],
        [0.0, e["l14"], 0.0, -e["l12"], 0.0, e["l18"], 0.0, -e["l16"]],
        [-e["l14"], 0.0, e["l12"], 0.0, -e["l18"], 0.0, e["l16"], 0.0],
        [e["l51"], 0.0, e["l53"], 0.0, e["l55"], 0.0, e["l57"], 0.0],
        [0.0, e["l51"], 0.0, e["l53"], 0.0, e["l55"], 0.0, e["l57"]],
        [-e["l53"], 0.0, e["l51"], 0.0, -e["l57"], 0.0, e["l55"], 0.0],
        [0.0, -e["l53"], 0.0, e["l51"], 0.0, -e["l57"], 0.0, e["l55"]],
    ]
    return np.array(rows) / sqrt(_NORM)


def input_unitary() -> np.ndarray:
    """The input mesh on annihilation operators (4 x 4 complex)."""
    e = _L_ENTRIES
    rows = [
        [-1j * e["l12"], -1j * e["l14"], -1j * e["l16"], -1j * e["l18"]],
        [-1j * e["l14"], 1j * e["l12"], -1j * e["l18"], 1j * e["l16"]],
        [e["l51"], e["l53"], e["l55"], e["l57"]],
        [-e["l53"], e["l51"], -e["l57"], e["l55"]],
    ]
    return np.array(rows, dtype=complex) / sqrt(_NORM)


def output_unitary() -> np.ndarray:
    """The output mesh on annihilation operators (4 x 4 complex)."""
    g = _G
    rows = [
        [2.0, 0.0, 1j * g, 1j * g],
        [0.0, 2.0, 1j * g, -1j * g],
        [g, g, -2.0j, 0.0],
        [g, -g, 0.0, -2.0j],
    ]
    return np.array(rows, dtype=complex) / sqrt(_NORM)


def input_mesh_factorization() -> tuple[list[np.ndarray], np.ndarray]:
    """Beam-splitter factors of the input mesh and its leading phase flip.

    Returns (factors, phase) with input_unitary() equal to
    factors[4] @ factors[3] @ factors[2] @ factors[1] @ factors[0] @ phase.
    The phase flips the sign of mode 2; factors[0] mixes the two thermal
    inputs.  Both leave the reference input state invariant, so dropping
    them does not change the prepared state.
    """
    e = _L_ENTRIES
    top = sqrt(e["l12"] ** 2 + e["l14"] ** 2)
    bot = sqrt(e["l51"] ** 2 + e["l53"] ** 2)
    out = sqrt(e["l55"] ** 2 + e["l57"] ** 2)
    root = sqrt(_NORM)

    a0 = np.eye(4, dtype=complex)
    a0[2, 2] = (e["l51"] * e["l55"] + e["l57"] * e["l53"]) / (bot * out)
    a0[2, 3] = (e["l57"] * e["l51"] - e["l53"] * e["l55"]) / (bot * out)
    a0[3, 2] = (e["l53"] * e["l55"] - e["l57"] * e["l51"]) / (bot * out)
    a0[3, 3] = (e["l51"] * e["l55"] + e["l53"] * e["l57"]) / (bot * out)

    a1 = np.eye(4, dtype=complex)
    a1[1, 1] = -1j * top / root
    a1[1, 3] = -1j * bot / root
    a1[3, 1] = -bot / root
    a1[3, 3] = top / root

    a2 = np.eye(4, dtype=complex)
    a2[0, 0] = -1j * top / root
    a2[0, 2] = 1j * bot / root
    a2[2, 0] = bot / root
    a2[2, 2] = top / root

    a3 = np.eye(4, dtype=complex)
    a3[0, 0] = e["l12"] / top
    a3[0, 1] = -e["l14"] / top
    a3[1, 0] = e["l14"] / top
    a3[1, 1] = e["l12"] / top

    a4 = np.eye(4, dtype=complex)
    a4[2, 2] = e["l51"] / bot
    a4[2, 3] = e["l53"] / bot
    a4[3, 2] = -e["l53"] / bot
    a4[3, 3] = e["l51"] / bot

    phase = np.diag([1.0, -1.0, 1.0, 1.0]).astype(complex)
    return [a0, a1, a2, a3, a4], phase


def output_mesh_factorization() -> tuple[list[np.ndarray], np.ndarray]:
    """Beam-splitter factors of the output mesh and its leading phases.

    Returns (factors, phase) with output_unitary() equal to
    factors[3] @ factors[2] @ factors[1] @ factors[0] @ phase, where the
    phase is diag(1, 1, i, -i).
    """
    g2 = (_S17 - 3.0) / sqrt(2.0)
    root = sqrt(_NORM)
    h = sqrt(2.0) / 2.0

    b1 = np.eye(4, dtype=complex)
    b1[2, 2] = -h
    b1[2, 3] = h
    b1[3, 2] = -h
    b1[3, 3] = -h

    b2 = np.eye(4, dtype=complex)
    b2[1, 1] = 2.0 / root
    b2[1, 3] = -g2 / root
    b2[3, 1] = g2 / root
    b2[3, 3] = 2.0 / root

    b3 = np.eye(4, dtype=complex)
    b3[0, 0] = 2.0 / root
    b3[0, 2] = -g2 / root
    b3[2, 0] = g2 / root
    b3[2, 2] = 2.0 / root

    b4 = np.eye(4, dtype=complex)
    b4[2, 2] = h
    b4[2, 3] = h
    b4[3, 2] = h
    b4[3, 3] = -h

    phase = np.diag([1.0, 1.0, 1.0j, -1.0j])
    return [b1, b2, b3, b4], phase
