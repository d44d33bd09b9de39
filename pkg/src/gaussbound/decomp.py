r"""Normal forms of Gaussian states and symplectic matrices.

Two classical decompositions, both in the interleaved ordering:

* Williamson: every positive definite gamma equals S diag(nu) S^T with S
  symplectic and nu the symplectic spectrum (each value on both
  quadratures of one mode).
* Euler (Bloch-Messiah): every symplectic S equals K Sq L with K, L
  orthogonal symplectic (passive interferometers) and Sq a direct sum of
  single-mode squeezers diag(tau, 1/tau).

The squeezing gauge is fixed as tau = e^{-r} >= 1: each squeezer
stretches the position quadrature, matching the sweep module's tau axis.
Modes are sorted by tau descending.  Neither factorization is unique on
degenerate spectra; tests therefore compare reconstructions, not factors.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import schur

from . import refvalues
from .core import (
    CovarianceMatrix,
    Ordering,
    SymplecticTransform,
    reorder,
    symplectic_form,
)
from .errors import (
    DegenerateSpectrumWarning,
    FixtureMismatchError,
    NotPositiveDefiniteError,
    NumericalFailureError,
)

__all__ = [
    "WilliamsonForm",
    "EulerForm",
    "FixtureCheck",
    "FixtureReport",
    "symplectic_eigenvalues",
    "williamson",
    "euler_decompose",
    "verify_reference_values",
]

_DEGENERACY_TOL = 1e-8


def _sym_sqrt(gamma_data: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Symmetric square root and inverse square root of an SPD matrix."""
    w, v = np.linalg.eigh(gamma_data)
    if w[0] <= 0.0:
        raise NotPositiveDefiniteError(
            f"matrix has nonpositive eigenvalue {w[0]:.3e}"
        )
    root = v @ np.diag(np.sqrt(w)) @ v.T
    inv_root = v @ np.diag(1.0 / np.sqrt(w)) @ v.T
    return root, inv_root


def symplectic_eigenvalues(gamma: CovarianceMatrix) -> np.ndarray:
    """Symplectic spectrum of a positive definite state, ascending.

    Computed as the paired singular values of the antisymmetric matrix
    gamma^{1/2} sigma gamma^{1/2}, which is numerically equivalent to the
    modulus of the eigenvalues of sigma gamma.
    """
    gamma = reorder(gamma, Ordering.INTERLEAVED)
    root, _ = _sym_sqrt(gamma.data)
    form = symplectic_form(gamma.n_modes)
    core = root @ form @ root
    sing = np.linalg.svd((core - core.T) / 2.0, compute_uv=False)
    return sing[::2][::-1].copy()


@dataclass(frozen=True)
class WilliamsonForm:
    """Normal form gamma = transform . diag(nu, each twice) . transform^T."""

    transform: SymplecticTransform
    nu: np.ndarray

    def __iter__(self):
        return iter((self.transform, self.nu))

    def diagonal(self) -> np.ndarray:
        return np.diag(np.repeat(self.nu, 2))

    def reconstruct(self) -> CovarianceMatrix:
        data = self.transform.data @ self.diagonal() @ self.transform.data.T
        return CovarianceMatrix(data, Ordering.INTERLEAVED)


def williamson(gamma: CovarianceMatrix) -> WilliamsonForm:
    """Williamson normal form of a positive definite state.

    Returns the diagonalizing symplectic and the symplectic eigenvalues,
    ascending; the pair also unpacks as a (transform, nu) tuple.  Emits
    DegenerateSpectrumWarning when neighbouring symplectic eigenvalues
    are closer than 1e-8 relative, since the symplectic basis within a
    degenerate subspace is then an arbitrary gauge choice.
    """
    gamma = reorder(gamma, Ordering.INTERLEAVED)
    n = gamma.n_modes
    root, inv_root = _sym_sqrt(gamma.data)
    form = symplectic_form(n)
    anti = inv_root @ form @ inv_root
    anti = (anti - anti.T) / 2.0
    t, z = schur(anti, output="real")

    nu = np.empty(n)
    for k in range(n):
        b = t[2 * k, 2 * k + 1]
        if abs(b) < 1e-300:
            raise NumericalFailureError("degenerate symplectic structure")
        if b < 0.0:
            z[:, [2 * k, 2 * k + 1]] = z[:, [2 * k + 1, 2 * k]]
            b = -b
        nu[k] = 1.0 / b

    order = np.argsort(nu)
    nu = nu[order]
    cols = np.empty(2 * n, dtype=int)
    cols[0::2] = 2 * order
    cols[1::2] = 2 * order + 1
    z = z[:, cols]

    gaps = np.diff(nu)
    if n > 1 and np.any(gaps < _DEGENERACY_TOL * np.maximum(1.0, nu[:-1])):
        warnings.warn(
            "symplectic spectrum is (near-)degenerate; the normal-form "
            "basis is gauge dependent",
            DegenerateSpectrumWarning,
            stacklevel=2,
        )

    scale = np.repeat(1.0 / np.sqrt(nu), 2)
    s = root @ z @ np.diag(scale)
    return WilliamsonForm(SymplecticTransform(s, Ordering.INTERLEAVED), nu)


@dataclass(frozen=True)
class EulerForm:
    """Euler factorization S = passive_out . squeezers . passive_in.

    r holds the squeezing parameters with squeezer blocks
    diag(e^{-r_k}, e^{r_k}); in the tau >= 1 gauge every r_k is <= 0 and
    tau = exp(-r) lists the position-stretch factors, sorted descending.
    """

    passive_out: SymplecticTransform
    r: np.ndarray
    passive_in: SymplecticTransform

    @property
    def tau(self) -> np.ndarray:
        return np.exp(-self.r)

    def squeezer_block(self) -> np.ndarray:
        taus = self.tau
        diag = np.empty(2 * taus.size)
        diag[0::2] = taus
        diag[1::2] = 1.0 / taus
        return np.diag(diag)

    def reconstruct(self) -> SymplecticTransform:
        data = self.passive_out.data @ self.squeezer_block() @ self.passive_in.data
        return SymplecticTransform(data, Ordering.INTERLEAVED)


def _pair_passive(basis: np.ndarray, form: np.ndarray) -> list[tuple[np.ndarray, np.ndarray]]:
    """Split an even-dimensional sigma-invariant subspace into mode pairs."""
    pairs = []
    remaining = basis
    while remaining.shape[1] > 0:
        u = remaining[:, 0]
        w = -form @ u
        w = remaining @ (remaining.T @ w)
        norm = np.linalg.norm(w)
        if norm < 0.5:
            raise NumericalFailureError(
                "passive subspace is not symplectically closed"
            )
        w /= norm
        pairs.append((u, w))
        proj = remaining - np.outer(u, u @ remaining) - np.outer(w, w @ remaining)
        q, r = np.linalg.qr(proj)
        keep = np.abs(np.diag(r)) > 1e-10
        remaining = q[:, keep]
    return pairs


def euler_decompose(transform: SymplecticTransform) -> EulerForm:
    """Factor a symplectic matrix into passive-squeeze-passive form.

    The positive polar factor P of S carries the squeezing: its
    eigenvalues come in reciprocal pairs (lambda, 1/lambda) and each
    lambda > 1 eigenvector v gives one mode with tau = lambda through the
    symplectic pair (v, -sigma v).  The lambda = 1 subspace is passive
    and only needs a symplectic pairing.  Eigenvalues within 1e-8 of 1
    (in log) are treated as passive.
    """
    transform = reorder(transform, Ordering.INTERLEAVED)
    n = transform.n_modes
    s = transform.data
    form = symplectic_form(n)

    w, v = np.linalg.eigh(s.T @ s)
    if w[0] <= 0.0:
        raise NumericalFailureError("polar factor is not positive definite")
    log_lam = 0.5 * np.log(w)
    orthogonal = s @ v @ np.diag(np.exp(-log_lam)) @ v.T

    squeezed = np.where(log_lam > _DEGENERACY_TOL)[0]
    mirrored = np.where(log_lam < -_DEGENERACY_TOL)[0]
    passive = np.where(np.abs(log_lam) <= _DEGENERACY_TOL)[0]
    if squeezed.size != mirrored.size or passive.size % 2:
        raise NumericalFailureError(
            "polar spectrum does not split into reciprocal pairs"
        )

    modes: list[tuple[float, np.ndarray, np.ndarray]] = []
    for idx in squeezed:
        vec = v[:, idx]
        modes.append((log_lam[idx], vec, -form @ vec))
    for u, pw in _pair_passive(v[:, passive], form):
        modes.append((0.0, u, pw))
    modes.sort(key=lambda item: -item[0])

    q = np.empty((2 * n, 2 * n))
    r = np.empty(n)
    for k, (ll, a, b) in enumerate(modes):
        q[:, 2 * k] = a
        q[:, 2 * k + 1] = b
        r[k] = -ll

    passive_in = SymplecticTransform(q.T, Ordering.INTERLEAVED)
    passive_out = SymplecticTransform(orthogonal @ q, Ordering.INTERLEAVED)
    return EulerForm(passive_out=passive_out, r=r, passive_in=passive_in)


@dataclass(frozen=True)
class FixtureCheck:
    name: str
    residual: float
    tol: float

    @property
    def ok(self) -> bool:
        return self.residual <= self.tol


@dataclass(frozen=True)
class FixtureReport:
    checks: tuple[FixtureCheck, ...]

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)


def verify_reference_values(strict: bool = True) -> FixtureReport:
    """Check the published closed-form decomposition of the first example.

    Asserts, in max-abs norm: the reference symplectic is symplectic
    (1e-10); both interferometers are orthogonal and symplectic (1e-10);
    the passive-squeeze-passive product reproduces the reference
    symplectic (1e-9); and conjugating the thermal input reproduces the
    first example state (1e-9).  Raises FixtureMismatchError in strict
    mode when any identity fails.
    """
    from .family import construct, example_params

    form = symplectic_form(4)
    eye = np.eye(8)
    s = refvalues.diagonalizing_symplectic()
    k = refvalues.output_interferometer()
    l = refvalues.input_interferometer()
    tau = refvalues.SQUEEZE_TAU
    sq = np.kron(np.eye(4), np.diag([tau, 1.0 / tau]))
    gamma1 = construct(example_params("example1")).data

    def mx(arr: np.ndarray) -> float:
        return float(np.max(np.abs(arr)))

    checks = (
        FixtureCheck("reference symplectic preserves the form", mx(s @ form @ s.T - form), 1e-10),
        FixtureCheck("output interferometer orthogonal", mx(k @ k.T - eye), 1e-10),
        FixtureCheck("output interferometer symplectic", mx(k @ form @ k.T - form), 1e-10),
        FixtureCheck("input interferometer orthogonal", mx(l @ l.T - eye), 1e-10),
        FixtureCheck("input interferometer symplectic", mx(l @ form @ l.T - form), 1e-10),
        FixtureCheck("passive-squeeze-passive product", mx(k @ sq @ l - s), 1e-9),
        FixtureCheck(
            "thermal input conjugates to the first example",
            mx(s @ refvalues.thermal_input_diagonal(3.0) @ s.T - gamma1),
            1e-9,
        ),
    )
    report = FixtureReport(checks)
    if strict and not report.ok:
        failing = ", ".join(c.name for c in checks if not c.ok)
        raise FixtureMismatchError(f"reference identities failed: {failing}")
    return report
