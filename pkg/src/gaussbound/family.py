r"""A ten-parameter family of four-mode bound entangled Gaussian states.

The construction produces 8 x 8 covariance matrices (modes 1, 2 vs 3, 4)
with a fixed sparsity pattern: diagonal plus exactly four symmetric
off-diagonal couplings q1q3, p1p4, q2q4, p2p3.  Every admissible parameter
choice yields a state that saturates the uncertainty relation, stays PPT
across the 12|34 split, and is nevertheless entangled, which makes the
entanglement bound (undistillable).

Because the pattern has no q-p cross terms, grouping quadratures splits
the matrix into a position block and a momentum block.  The momentum block
has a closed-form inverse, giving a fast PPT test by Schur complement that
is used to cross-check the general eigenvalue route.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import sqrt
from typing import Sequence

import numpy as np

from .core import (
    Bipartition,
    CovarianceMatrix,
    Ordering,
    ordering_permutation,
    partial_transpose,
    symplectic_form,
)
from .errors import (
    IllConditionedParamsWarning,
    InvalidParamsError,
    PatternMismatchError,
    SingularGammaError,
)

__all__ = [
    "FamilyParams",
    "PARAM_SEPARATION",
    "PARAM_WARN_SEPARATION",
    "EXAMPLE_NAMES",
    "example_params",
    "validate_params",
    "construct",
    "has_family_pattern",
    "sign_symmetry",
    "commutes_with_sign_symmetry",
    "block_reduce",
    "momentum_block_inverse",
    "reduced_ppt_margin",
    "is_ppt_reduced",
    "minimality_ranks",
    "is_minimal_bound_entangled",
    "random_admissible_params",
    "family_bipartition",
]

PARAM_SEPARATION = 1e-9
PARAM_WARN_SEPARATION = 1e-4

# Index pairs (0-based, interleaved) of the four off-diagonal couplings.
_COUPLINGS = ((0, 4), (1, 7), (2, 6), (3, 5))


@dataclass(frozen=True)
class FamilyParams:
    """Admissible parameters (beta_1, beta_2, alpha_1..alpha_8).

    Constraints enforced on construction:

    * beta_1 != beta_2 and beta_1 beta_2 != -1 (the couplings stay finite
      and the state stays entangled);
    * alpha_1..alpha_4 nonzero;
    * alpha_5..alpha_8 strictly positive.

    Violations within PARAM_SEPARATION raise InvalidParamsError; margins
    below PARAM_WARN_SEPARATION emit IllConditionedParamsWarning because
    the resulting matrices become numerically extreme.
    """

    beta: tuple[float, float]
    alpha: tuple[float, float, float, float, float, float, float, float]

    def __post_init__(self) -> None:
        beta = tuple(float(b) for b in self.beta)
        alpha = tuple(float(a) for a in self.alpha)
        if len(beta) != 2 or len(alpha) != 8:
            raise InvalidParamsError("expected 2 beta and 8 alpha values")
        margins = {
            "beta_1 - beta_2": abs(beta[0] - beta[1]),
            "beta_1 beta_2 + 1": abs(beta[0] * beta[1] + 1.0),
        }
        for k in range(4):
            margins[f"alpha_{k + 1}"] = abs(alpha[k])
        for k in range(4, 8):
            margins[f"alpha_{k + 1}"] = alpha[k]
        for name, margin in margins.items():
            if margin <= PARAM_SEPARATION:
                raise InvalidParamsError(
                    f"constraint on {name} violated (separation {margin:.3e})"
                )
            if margin < PARAM_WARN_SEPARATION:
                warnings.warn(
                    f"{name} within {margin:.3e} of an excluded surface",
                    IllConditionedParamsWarning,
                    stacklevel=2,
                )
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "alpha", alpha)


def validate_params(
    beta: Sequence[float],
    alpha: Sequence[float],
    separation: float = PARAM_SEPARATION,
) -> list[str]:
    """Names of the violated admissibility constraints; empty iff constructible.

    Diagnostic counterpart of the FamilyParams constructor: never raises,
    and an empty result means FamilyParams accepts the same values.
    """
    try:
        beta = tuple(float(b) for b in beta)
        alpha = tuple(float(a) for a in alpha)
    except (TypeError, ValueError):
        return ["non_numeric_values"]
    if len(beta) != 2 or len(alpha) != 8:
        return ["wrong_arity"]
    found = []
    if abs(beta[0] - beta[1]) <= separation:
        found.append("beta_1_equals_beta_2")
    if abs(beta[0] * beta[1] + 1.0) <= separation:
        found.append("beta_product_equals_minus_one")
    for k in range(4):
        if abs(alpha[k]) <= separation:
            found.append(f"alpha_{k + 1}_zero")
    for k in range(4, 8):
        if alpha[k] <= separation:
            found.append(f"alpha_{k + 1}_not_positive")
    return found


EXAMPLE_NAMES = ("example1", "example2", "example3", "example4")

_S3 = sqrt(3.0) / 3.0
_S2 = sqrt(2.0) / 2.0

_EXAMPLE_PARAMS = {
    "example1": FamilyParams((1.0, 2.0), (_S3, -_S3, _S3, _S3, 4 / 3, 4 / 3, 3.0, 3.0)),
    "example2": FamilyParams((1.0, 3.0), (_S2, _S2, _S2, _S2, 1.0, 1.0, 1.0, 1.0)),
    "example3": FamilyParams(
        (1 / 3, 1 / 2), (1.5, 1.5, 4.0, 4.0, 0.5, 0.5, 0.5, 0.5)
    ),
    "example4": FamilyParams(
        (-sqrt(2.0), 2.0 * sqrt(2.0)),
        (0.5, -_S2, 1 / 3, -_S2, 1.0, 3.0, 2.0, 2 / 9),
    ),
}


def example_params(name: str) -> FamilyParams:
    """Parameters of one of the four built-in example states."""
    try:
        return _EXAMPLE_PARAMS[name]
    except KeyError:
        raise InvalidParamsError(
            f"unknown example {name!r}, expected one of {EXAMPLE_NAMES}"
        ) from None


def family_bipartition() -> Bipartition:
    """The 12|34 split the family is bound entangled across."""
    return Bipartition((1, 2), (3, 4))


def construct(params: FamilyParams) -> CovarianceMatrix:
    """Covariance matrix of the family member with the given parameters.

    Returns the 8 x 8 interleaved matrix.  The twelve independent entries
    are rational in the parameters; everything else is exactly zero.
    """
    b1, b2 = params.beta
    a1, a2, a3, a4, a5, a6, a7, a8 = params.alpha
    db = b1 - b2
    g = np.zeros((8, 8))
    g[0, 0] = a5 + (1.0 + b1 * b1) * a1 * a1
    g[1, 1] = (1.0 + a8) / (a5 * a8)
    g[2, 2] = a6 + (1.0 + b1 * b1) * a2 * a2
    g[3, 3] = (1.0 + a7) / (a6 * a7)
    g[4, 4] = db * db * a2 * a2 * a3 * a3 * (1.0 + a7) / a6 + (1.0 + b2 * b2) * a3 * a3
    g[5, 5] = a6 / (a7 * db * db * a2 * a2 * a3 * a3)
    g[6, 6] = db * db * a1 * a1 * a4 * a4 * (1.0 + a8) / a5 + (1.0 + b2 * b2) * a4 * a4
    g[7, 7] = a5 / (a8 * db * db * a1 * a1 * a4 * a4)
    g[0, 4] = g[4, 0] = (1.0 + b1 * b2) * a1 * a3
    g[1, 7] = g[7, 1] = 1.0 / (db * a1 * a4 * a8)
    g[2, 6] = g[6, 2] = (1.0 + b1 * b2) * a2 * a4
    g[3, 5] = g[5, 3] = -1.0 / (db * a2 * a3 * a7)
    return CovarianceMatrix(g, Ordering.INTERLEAVED)


_SIGN_PATTERN = (1.0, 1.0, -1.0, -1.0, 1.0, -1.0, -1.0, 1.0)


def sign_symmetry() -> np.ndarray:
    """Diagonal involution that commutes with every pattern state.

    Conjugating the symplectic form by it yields minus the A-side
    momentum-flipped form, so for states that commute with it the partial
    transpose is similar to the state itself; that is why validity and
    PPT coincide on the family.
    """
    return np.diag(_SIGN_PATTERN)


def commutes_with_sign_symmetry(gamma: CovarianceMatrix, tol: float = 1e-12) -> bool:
    """Whether an 8 x 8 interleaved state commutes with sign_symmetry()."""
    if gamma.ordering is not Ordering.INTERLEAVED or gamma.n_modes != 4:
        return False
    s = sign_symmetry()
    commutator = s @ gamma.data - gamma.data @ s
    return float(np.max(np.abs(commutator))) <= tol


def _pattern_defect(data: np.ndarray) -> float:
    mask = np.zeros((8, 8), dtype=bool)
    np.fill_diagonal(mask, True)
    for i, j in _COUPLINGS:
        mask[i, j] = mask[j, i] = True
    off = np.where(mask, 0.0, data)
    return float(np.max(np.abs(off)))


def has_family_pattern(gamma: CovarianceMatrix, tol: float = 1e-12) -> bool:
    """Whether gamma has the family sparsity pattern (8 x 8, interleaved)."""
    if gamma.ordering is not Ordering.INTERLEAVED or gamma.n_modes != 4:
        return False
    scale = max(1.0, float(np.max(np.abs(gamma.data))))
    return _pattern_defect(gamma.data) <= tol * scale


def block_reduce(gamma: CovarianceMatrix) -> tuple[np.ndarray, np.ndarray]:
    """Split a pattern state into its position and momentum 4 x 4 blocks.

    Grouping quadratures block-diagonalizes every pattern state because
    the pattern has no q-p couplings.  Raises PatternMismatchError when
    entries outside the pattern are nonzero.
    """
    if not has_family_pattern(gamma):
        raise PatternMismatchError(
            "matrix does not have the family sparsity pattern"
        )
    perm = ordering_permutation(4)
    grouped = perm @ gamma.data @ perm.T
    return grouped[:4, :4].copy(), grouped[4:, 4:].copy()


def momentum_block_inverse(params: FamilyParams) -> np.ndarray:
    """Closed-form inverse of the momentum block of construct(params).

    Used as an independent cross-check of the numerically inverted block.
    """
    b1, b2 = params.beta
    a1, a2, a3, a4, a5, a6, a7, a8 = params.alpha
    db = b1 - b2
    d = np.zeros((4, 4))
    d[0, 0] = a5
    d[1, 1] = a6
    d[2, 2] = db * db * a2 * a2 * a3 * a3 * (1.0 + a7) / a6
    d[3, 3] = db * db * a1 * a1 * a4 * a4 * (1.0 + a8) / a5
    d[0, 3] = d[3, 0] = -db * a1 * a4
    d[1, 2] = d[2, 1] = db * a2 * a3
    return d


def reduced_ppt_margin(gamma: CovarianceMatrix) -> float:
    """PPT margin of a pattern state via the Schur-complement reduction.

    For pattern states the partial transpose across 12|34 is a local
    symplectic image of the state itself, so PPT coincides with validity:
    the momentum block must be positive definite and the position block
    must dominate its inverse.  Returns the smallest eigenvalue of the
    Schur complement, or the momentum block's smallest eigenvalue when
    that is already nonpositive.  The sign agrees with the general
    eigenvalue route; the magnitude is a different functional.
    """
    q_block, p_block = block_reduce(gamma)
    p_eigs = np.linalg.eigvalsh(p_block)
    if p_eigs[0] <= 1e-12 * max(1.0, p_eigs[-1]):
        return float(p_eigs[0])
    schur = q_block - np.linalg.inv(p_block)
    return float(np.linalg.eigvalsh(schur)[0])


def is_ppt_reduced(gamma: CovarianceMatrix, tol: float | None = None) -> tuple[bool, float]:
    """Fast PPT verdict for pattern states; see reduced_ppt_margin."""
    margin = reduced_ppt_margin(gamma)
    if tol is None:
        spectral = float(np.max(np.abs(np.linalg.eigvalsh(gamma.data))))
        tol = 1e-9 * max(1.0, spectral)
    return margin >= -tol, margin


def _rank(matrix: np.ndarray, rank_tol: float) -> int:
    s = np.linalg.svd(matrix, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > rank_tol * s[0]))


def minimality_ranks(
    gamma: CovarianceMatrix,
    part: Bipartition,
    rank_tol: float = 1e-8,
) -> tuple[int, int, int]:
    """Ranks of the two uncertainty defects and of their concatenation.

    The defects are gamma + sigma gamma^{-1} sigma and the analogue with
    the partially transposed form.  A state saturating both relations on
    complementary subspaces has rank(concatenation) equal to the sum,
    which certifies that no smaller covariance matrix sits below gamma.
    """
    if gamma.ordering is not Ordering.INTERLEAVED:
        raise PatternMismatchError("minimality check expects interleaved ordering")
    data = gamma.data
    form = symplectic_form(gamma.n_modes)
    try:
        inv = np.linalg.inv(data)
    except np.linalg.LinAlgError as exc:
        raise SingularGammaError("covariance matrix is numerically singular") from exc
    residual = float(np.max(np.abs(data @ inv - np.eye(data.shape[0]))))
    if residual > 1e-6:
        raise SingularGammaError(
            f"covariance inverse residual {residual:.3e} is too large"
        )
    signs = np.ones(2 * gamma.n_modes)
    for m in part.modes_b:
        signs[2 * m - 1] = -1.0
    flipped = form * np.outer(signs, signs)
    m1 = data + form @ inv @ form
    m2 = data + flipped @ inv @ flipped
    r1 = _rank(m1, rank_tol)
    r2 = _rank(m2, rank_tol)
    r12 = _rank(np.hstack((m1, m2)), rank_tol)
    return r1, r2, r12


def is_minimal_bound_entangled(
    gamma: CovarianceMatrix,
    part: Bipartition,
    rank_tol: float = 1e-8,
) -> bool:
    """Sufficient minimality test: the two defect ranges are independent.

    Returns True when rank([M1 M2]) = rank(M1) + rank(M2) with both ranks
    positive.  This is a sufficient condition only; it can return False
    for minimal states outside the family's rank pattern.
    """
    r1, r2, r12 = minimality_ranks(gamma, part, rank_tol)
    return r1 > 0 and r2 > 0 and r12 == r1 + r2


def random_admissible_params(
    rng: np.random.Generator | None = None,
    beta_range: tuple[float, float] = (-3.0, 3.0),
    beta_separation: float = 0.05,
    alpha_coupling_range: tuple[float, float] = (0.2, 2.0),
    alpha_scale_range: tuple[float, float] = (0.2, 3.0),
) -> FamilyParams:
    """Draw admissible parameters uniformly, away from excluded surfaces.

    beta pairs are redrawn until both |beta_1 - beta_2| and
    |beta_1 beta_2 + 1| exceed beta_separation; alpha_1..alpha_4 get a
    random sign and a magnitude from alpha_coupling_range; alpha_5..alpha_8
    are positive draws from alpha_scale_range.
    """
    rng = np.random.default_rng() if rng is None else rng
    while True:
        b1, b2 = rng.uniform(*beta_range, size=2)
        if abs(b1 - b2) > beta_separation and abs(b1 * b2 + 1.0) > beta_separation:
            break
    couplings = rng.uniform(*alpha_coupling_range, size=4) * rng.choice(
        [-1.0, 1.0], size=4
    )
    scales = rng.uniform(*alpha_scale_range, size=4)
    return FamilyParams((b1, b2), tuple(couplings) + tuple(scales))
