r"""Conventions and checks for Gaussian covariance matrices.

Everything in this package works in natural units (hbar = 1) where the
vacuum covariance matrix is the identity.  A state of n modes is described
by a real symmetric 2n x 2n matrix gamma satisfying the uncertainty
relation gamma + i sigma >= 0, with sigma the symplectic form.

Two quadrature orderings are supported.  The default interleaved ordering
stacks (q1, p1, q2, p2, ...); the grouped ordering stacks
(q1, ..., qn, p1, ..., pn).  All functions state which orderings they
accept; conversions are exact permutations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from .errors import (
    DimensionMismatchError,
    NegativeOccupationError,
    NonSymmetricError,
    NotSymplecticError,
    OrderingMismatchError,
)

__all__ = [
    "Ordering",
    "CovarianceMatrix",
    "SymplecticTransform",
    "Bipartition",
    "SYMMETRY_TOL",
    "SYMPLECTIC_TOL",
    "symplectic_form",
    "ordering_permutation",
    "reorder",
    "vacuum_state",
    "thermal_state",
    "direct_sum",
    "apply_symplectic",
    "is_symplectic",
    "validity_margin",
    "is_valid_covariance",
    "partial_transpose",
    "ppt_margin",
    "is_ppt",
    "random_symplectic",
    "random_valid_covariance",
]

SYMMETRY_TOL = 1e-12
SYMPLECTIC_TOL = 1e-10


class Ordering(str, enum.Enum):
    """Quadrature ordering of rows and columns of 2n x 2n matrices."""

    INTERLEAVED = "interleaved"
    GROUPED = "grouped"


def _as_square_even(data: np.ndarray, what: str) -> np.ndarray:
    arr = np.asarray(data, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] % 2:
        raise DimensionMismatchError(
            f"{what} must be a square 2n x 2n array, got shape {arr.shape}"
        )
    return arr


@dataclass(frozen=True, eq=False)
class CovarianceMatrix:
    """Checked container for a real symmetric covariance matrix.

    Symmetry is enforced on construction to SYMMETRY_TOL relative to the
    largest entry; the stored array is symmetrized and read-only.  Validity
    (the uncertainty relation) is deliberately not enforced here, since
    partial transposes of entangled states violate it.
    """

    data: np.ndarray
    ordering: Ordering = Ordering.INTERLEAVED
    n_modes: int = field(init=False)

    def __post_init__(self) -> None:
        arr = _as_square_even(self.data, "covariance matrix")
        scale = max(1.0, float(np.max(np.abs(arr))))
        skew = float(np.max(np.abs(arr - arr.T)))
        if skew > SYMMETRY_TOL * scale:
            raise NonSymmetricError(
                f"covariance matrix asymmetry {skew:.3e} exceeds "
                f"{SYMMETRY_TOL:.0e} * {scale:.3e}"
            )
        arr = (arr + arr.T) / 2.0
        arr.flags.writeable = False
        object.__setattr__(self, "data", arr)
        object.__setattr__(self, "ordering", Ordering(self.ordering))
        object.__setattr__(self, "n_modes", arr.shape[0] // 2)


@dataclass(frozen=True, eq=False)
class SymplecticTransform:
    """Checked container for a symplectic matrix S with S sigma S^T = sigma.

    The defining identity is enforced on construction to SYMPLECTIC_TOL in
    the max-abs norm.
    """

    data: np.ndarray
    ordering: Ordering = Ordering.INTERLEAVED
    n_modes: int = field(init=False)

    def __post_init__(self) -> None:
        arr = _as_square_even(self.data, "symplectic matrix")
        arr = arr.copy()
        arr.flags.writeable = False
        n = arr.shape[0] // 2
        ordering = Ordering(self.ordering)
        form = symplectic_form(n, ordering)
        defect = float(np.max(np.abs(arr @ form @ arr.T - form)))
        if defect > SYMPLECTIC_TOL:
            raise NotSymplecticError(
                f"symplectic defect {defect:.3e} exceeds {SYMPLECTIC_TOL:.0e}"
            )
        object.__setattr__(self, "data", arr)
        object.__setattr__(self, "ordering", ordering)
        object.__setattr__(self, "n_modes", n)

    @property
    def inverse(self) -> "SymplecticTransform":
        """Inverse computed symplectically as -sigma S^T sigma."""
        form = symplectic_form(self.n_modes, self.ordering)
        return SymplecticTransform(-form @ self.data.T @ form, self.ordering)


@dataclass(frozen=True)
class Bipartition:
    """Split of modes {1..n} into two non-empty groups A and B.

    Modes are numbered from 1, matching the CLI and file formats.  The two
    groups must be disjoint and together cover 1..n with no gaps.
    """

    modes_a: tuple[int, ...]
    modes_b: tuple[int, ...]

    def __post_init__(self) -> None:
        a = tuple(sorted(int(m) for m in self.modes_a))
        b = tuple(sorted(int(m) for m in self.modes_b))
        if not a or not b:
            raise DimensionMismatchError("both parts of a bipartition must be non-empty")
        union = set(a) | set(b)
        if len(union) != len(a) + len(b):
            raise DimensionMismatchError("bipartition parts overlap")
        n = len(union)
        if union != set(range(1, n + 1)):
            raise DimensionMismatchError(
                f"bipartition must cover modes 1..{n} exactly, got {sorted(union)}"
            )
        object.__setattr__(self, "modes_a", a)
        object.__setattr__(self, "modes_b", b)

    @property
    def n_modes(self) -> int:
        return len(self.modes_a) + len(self.modes_b)

    def quadrature_indices(self, modes: Sequence[int]) -> np.ndarray:
        """0-based (q, p) row indices of the given 1-based modes, interleaved."""
        idx = []
        for m in sorted(modes):
            idx.extend((2 * (m - 1), 2 * m - 1))
        return np.asarray(idx, dtype=int)


def symplectic_form(n_modes: int, ordering: Ordering = Ordering.INTERLEAVED) -> np.ndarray:
    """Symplectic form sigma for n modes in the requested ordering.

    Interleaved: direct sum of n blocks [[0, 1], [-1, 0]].
    Grouped: [[0, I], [-I, 0]].
    The returned array is read-only.
    """
    if n_modes < 1:
        raise DimensionMismatchError("n_modes must be at least 1")
    form = np.zeros((2 * n_modes, 2 * n_modes))
    if Ordering(ordering) is Ordering.INTERLEAVED:
        for k in range(n_modes):
            form[2 * k, 2 * k + 1] = 1.0
            form[2 * k + 1, 2 * k] = -1.0
    else:
        form[:n_modes, n_modes:] = np.eye(n_modes)
        form[n_modes:, :n_modes] = -np.eye(n_modes)
    form.flags.writeable = False
    return form


def ordering_permutation(n_modes: int) -> np.ndarray:
    """Permutation P with x_grouped = P x_interleaved.

    P[i, 2i] = 1 maps q_i and P[n+i, 2i+1] = 1 maps p_i.  Conjugation by P
    converts interleaved matrices to grouped ones.
    """
    perm = np.zeros((2 * n_modes, 2 * n_modes))
    for i in range(n_modes):
        perm[i, 2 * i] = 1.0
        perm[n_modes + i, 2 * i + 1] = 1.0
    return perm


MatrixLike = Union[CovarianceMatrix, SymplecticTransform]


def reorder(matrix: MatrixLike, ordering: Ordering) -> MatrixLike:
    """Convert a covariance or symplectic matrix to the given ordering."""
    ordering = Ordering(ordering)
    if matrix.ordering is ordering:
        return matrix
    perm = ordering_permutation(matrix.n_modes)
    if ordering is Ordering.GROUPED:
        data = perm @ matrix.data @ perm.T
    else:
        data = perm.T @ matrix.data @ perm
    return type(matrix)(data, ordering)


def vacuum_state(n_modes: int, ordering: Ordering = Ordering.INTERLEAVED) -> CovarianceMatrix:
    """Vacuum covariance matrix, the identity in these units."""
    if n_modes < 1:
        raise DimensionMismatchError("n_modes must be at least 1")
    return CovarianceMatrix(np.eye(2 * n_modes), Ordering(ordering))


def thermal_state(
    nbar: Union[float, Sequence[float]],
    n_modes: int | None = None,
    ordering: Ordering = Ordering.INTERLEAVED,
) -> CovarianceMatrix:
    """Thermal product state with mean occupation nbar per mode.

    Parameters
    ----------
    nbar:
        Scalar (same occupation for all modes, n_modes required) or one
        occupation per mode.
    n_modes:
        Number of modes when nbar is a scalar.

    Returns
    -------
    CovarianceMatrix
        diag(2 nbar_k + 1) on both quadratures of each mode.
    """
    if np.isscalar(nbar):
        if n_modes is None:
            raise DimensionMismatchError("n_modes is required for scalar nbar")
        occ = np.full(n_modes, float(nbar))
    else:
        occ = np.asarray(nbar, dtype=float)
        if occ.ndim != 1 or occ.size == 0:
            raise DimensionMismatchError("nbar must be a scalar or a 1d sequence")
        if n_modes is not None and n_modes != occ.size:
            raise DimensionMismatchError("n_modes disagrees with len(nbar)")
    if np.any(occ < 0):
        raise NegativeOccupationError(f"negative occupation in {occ.tolist()}")
    diag = np.repeat(2.0 * occ + 1.0, 2)
    gamma = CovarianceMatrix(np.diag(diag), Ordering.INTERLEAVED)
    return reorder(gamma, ordering)


def direct_sum(first: CovarianceMatrix, second: CovarianceMatrix) -> CovarianceMatrix:
    """Covariance matrix of the product state, modes of `first` coming first."""
    if first.ordering is not second.ordering:
        raise OrderingMismatchError("direct sum requires matching orderings")
    ordering = first.ordering
    a = reorder(first, Ordering.INTERLEAVED).data
    b = reorder(second, Ordering.INTERLEAVED).data
    out = np.zeros((a.shape[0] + b.shape[0], a.shape[0] + b.shape[0]))
    out[: a.shape[0], : a.shape[0]] = a
    out[a.shape[0] :, a.shape[0] :] = b
    return reorder(CovarianceMatrix(out, Ordering.INTERLEAVED), ordering)


def apply_symplectic(transform: SymplecticTransform, gamma: CovarianceMatrix) -> CovarianceMatrix:
    """Transform a state by a symplectic matrix: gamma -> S gamma S^T."""
    if transform.ordering is not gamma.ordering:
        raise OrderingMismatchError("transform and state use different orderings")
    if transform.n_modes != gamma.n_modes:
        raise DimensionMismatchError("transform and state have different mode counts")
    s = transform.data
    return CovarianceMatrix(s @ gamma.data @ s.T, gamma.ordering)


def is_symplectic(
    matrix: np.ndarray | SymplecticTransform,
    ordering: Ordering = Ordering.INTERLEAVED,
    tol: float = SYMPLECTIC_TOL,
) -> tuple[bool, float]:
    """Check S sigma S^T = sigma without constructing a checked transform.

    Returns (verdict, defect) with the defect in the max-abs norm.  Accepts
    a raw array or an already-checked SymplecticTransform.
    """
    if isinstance(matrix, SymplecticTransform):
        arr = matrix.data
        ordering = matrix.ordering
    else:
        arr = _as_square_even(matrix, "symplectic matrix")
    form = symplectic_form(arr.shape[0] // 2, Ordering(ordering))
    defect = float(np.max(np.abs(arr @ form @ arr.T - form)))
    return defect <= tol, defect


def _psd_margin(gamma_data: np.ndarray, form: np.ndarray) -> float:
    # lambda_min of the real symmetric embedding of gamma + i sigma
    top = np.hstack((gamma_data, form))
    bottom = np.hstack((form.T, gamma_data))
    embedding = np.vstack((top, bottom))
    return float(np.linalg.eigvalsh(embedding)[0])

def _default_tol(gamma_data: np.ndarray, tol: float | None) -> float:
    if tol is not None:
        return float(tol)
    spectral = float(np.max(np.abs(np.linalg.eigvalsh(gamma_data))))
    return 1e-9 * max(1.0, spectral)


def validity_margin(gamma: CovarianceMatrix) -> float:
    """Smallest eigenvalue of the uncertainty-relation embedding.

    The state satisfies gamma + i sigma >= 0 exactly when this is >= 0.
    States saturating the uncertainty relation sit at exactly zero.
    """
    form = symplectic_form(gamma.n_modes, gamma.ordering)
    return _psd_margin(gamma.data, form)


def is_valid_covariance(gamma: CovarianceMatrix, tol: float | None = None) -> tuple[bool, float]:
    """Check the uncertainty relation gamma + i sigma >= 0.

    Returns (verdict, margin) where margin is the smallest eigenvalue of
    the real embedding and the verdict is margin >= -tol.  The default
    tolerance is 1e-9 scaled by the spectral norm of gamma.
    """
    margin = validity_margin(gamma)
    return margin >= -_default_tol(gamma.data, tol), margin


def _pt_signs(part: Bipartition, n_modes: int) -> np.ndarray:
    signs = np.ones(2 * n_modes)
    for m in part.modes_b:
        signs[2 * m - 1] = -1.0
    return signs


def partial_transpose(gamma: CovarianceMatrix, part: Bipartition) -> CovarianceMatrix:
    """Partial transpose on part B: sign flip of the B momenta.

    The input must be interleaved; the result is again a symmetric matrix
    but generally not a valid state.
    """
    if gamma.ordering is not Ordering.INTERLEAVED:
        raise OrderingMismatchError("partial transpose expects interleaved ordering")
    if part.n_modes != gamma.n_modes:
        raise DimensionMismatchError("bipartition does not match the mode count")
    signs = _pt_signs(part, gamma.n_modes)
    return CovarianceMatrix(gamma.data * np.outer(signs, signs), gamma.ordering)


def ppt_margin(gamma: CovarianceMatrix, part: Bipartition) -> float:
    """Smallest eigenvalue of the uncertainty embedding of the partial transpose."""
    return validity_margin(partial_transpose(gamma, part))


def is_ppt(gamma: CovarianceMatrix, part: Bipartition, tol: float | None = None) -> tuple[bool, float]:
    """Positive-partial-transpose check.

    Returns (verdict, margin): the partially transposed state must satisfy
    the uncertainty relation to margin >= -tol.  A negative verdict
    certifies free (distillable) entanglement.
    """
    margin = ppt_margin(gamma, part)
    return margin >= -_default_tol(gamma.data, tol), margin


def random_symplectic(
    n_modes: int,
    rng: np.random.Generator | None = None,
    scale: float = 1.0,
    ordering: Ordering = Ordering.INTERLEAVED,
) -> SymplecticTransform:
    """Random symplectic matrix exp(sigma H) with H random symmetric.

    `scale` controls the generator norm and with it the squeezing spread.
    """
    from scipy.linalg import expm

    rng = np.random.default_rng() if rng is None else rng
    dim = 2 * n_modes
    h = rng.standard_normal((dim, dim))
    h = (h + h.T) * (scale / (2.0 * np.sqrt(dim)))
    form = symplectic_form(n_modes, Ordering.INTERLEAVED)
    s = SymplecticTransform(expm(form @ h), Ordering.INTERLEAVED)
    return reorder(s, ordering)


def random_valid_covariance(
    n_modes: int,
    rng: np.random.Generator | None = None,
    scale: float = 0.6,
    nbar_max: float = 0.5,
    ordering: Ordering = Ordering.INTERLEAVED,
) -> CovarianceMatrix:
    """Random valid state: a symplectic conjugation of a thermal product."""
    rng = np.random.default_rng() if rng is None else rng
    occ = rng.uniform(0.0, nbar_max, size=n_modes)
    base = thermal_state(occ)
    s = random_symplectic(n_modes, rng, scale)
    return reorder(apply_symplectic(s, base), ordering)
