r"""Separability certification via a min-slack semidefinite program.

A Gaussian state gamma is separable across a bipartition exactly when
there is a valid A-side covariance matrix gamma_A with

    gamma_A + i sigma_A >= 0    and    gamma - gamma_A (+) 0_B >= i sigma_B.

Both conditions become real linear matrix inequalities through the usual
symmetric embedding, and feasibility is decided by minimizing a uniform
slack t added to both blocks:

    minimize t  s.t.  block_1(gamma_A) + t I >= 0,
                      block_2(gamma_A) + t I >= 0.

The optimum t* is <= 0 for separable states and strictly positive for
entangled ones; states that saturate the uncertainty relation (every
member of the bound entangled family does) have t* exactly 0 on the
separable side, so verdicts use a small positive threshold.

The solver is the in-house interior-point kernel from `backends`; the
problem always admits a strictly feasible point (large t), so a certified
optimum is the generic outcome.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import backends
from .core import Bipartition, CovarianceMatrix, Ordering, ppt_margin, symplectic_form
from .errors import DimensionMismatchError, InconclusiveError, OrderingMismatchError

__all__ = [
    "SolverStatus",
    "SolverOptions",
    "SeparabilityProblem",
    "SdpSolution",
    "EntanglementClass",
    "EntanglementVerdict",
    "build_problem",
    "solve_min_slack",
    "is_separable",
    "classify",
    "SEPARABILITY_TOL",
]

SEPARABILITY_TOL = 1e-6


class SolverStatus(str, enum.Enum):
    OPTIMAL = "optimal"
    MAX_ITER = "max_iter"
    NUMERICAL_FAILURE = "numerical_failure"


_STATUS_BY_CODE = {
    backends.STATUS_OPTIMAL: SolverStatus.OPTIMAL,
    backends.STATUS_MAX_ITER: SolverStatus.MAX_ITER,
    backends.STATUS_NUMERICAL_FAILURE: SolverStatus.NUMERICAL_FAILURE,
}


@dataclass(frozen=True)
class SolverOptions:
    """Interior-point controls; defaults certify gaps well below 1e-7."""

    max_iter: int = 200
    tol_gap: float = 1e-9
    tol_feas: float = 1e-9


@dataclass(frozen=True)
class SeparabilityProblem:
    """Assembled min-slack program for one state and bipartition."""

    gamma: CovarianceMatrix
    part: Bipartition
    c: np.ndarray
    blocks: list
    var_pairs: tuple[tuple[int, int], ...]
    dim_a: int


@dataclass(frozen=True)
class SdpSolution:
    """Certified solver output.

    t_star is the minimal uniform slack; gamma_a the witnessing A-side
    matrix; gap and primal_residual are the relative convergence measures
    at termination.
    """

    t_star: float
    gamma_a: np.ndarray
    iterations: int
    status: SolverStatus
    gap: float
    primal_residual: float


class EntanglementClass(str, enum.Enum):
    SEPARABLE = "separable"
    BOUND_ENTANGLED = "bound_entangled"
    FREE_ENTANGLED = "free_entangled"


@dataclass(frozen=True)
class EntanglementVerdict:
    """Three-way classification with its certifying numbers.

    separability_slack is None when the PPT check already failed and the
    semidefinite program was skipped.
    """

    classification: EntanglementClass
    ppt_margin: float
    separability_slack: Optional[float]
    iterations: int


def build_problem(gamma: CovarianceMatrix, part: Bipartition) -> SeparabilityProblem:
    """Assemble the two-block min-slack program.

    Variables are the upper triangle of gamma_A (A modes in sorted order,
    interleaved quadratures) followed by the slack t, which carries the
    identity coefficient in both blocks.
    """
    if gamma.ordering is not Ordering.INTERLEAVED:
        raise OrderingMismatchError("separability program expects interleaved ordering")
    if part.n_modes != gamma.n_modes:
        raise DimensionMismatchError("bipartition does not match the mode count")
    n = gamma.n_modes
    idx_a = part.quadrature_indices(part.modes_a)
    idx_b = part.quadrature_indices(part.modes_b)
    dim_a = idx_a.size
    dim_full = 2 * n
    form = symplectic_form(n)
    sigma_a = form[np.ix_(idx_a, idx_a)]
    sigma_b_hat = np.zeros((dim_full, dim_full))
    sigma_b_hat[np.ix_(idx_b, idx_b)] = form[np.ix_(idx_b, idx_b)]

    def embed(top: np.ndarray, cross: np.ndarray) -> np.ndarray:
        d = top.shape[0]
        out = np.zeros((2 * d, 2 * d))
        out[:d, :d] = top
        out[d:, d:] = top
        out[:d, d:] = cross
        out[d:, :d] = cross.T
        return out

    var_pairs = tuple(
        (i, j) for i in range(dim_a) for j in range(i, dim_a)
    )
    m = len(var_pairs) + 1

    stack1 = np.zeros((m, 2 * dim_a, 2 * dim_a))
    stack2 = np.zeros((m, 2 * dim_full, 2 * dim_full))
    for v, (i, j) in enumerate(var_pairs):
        basis = np.zeros((dim_a, dim_a))
        basis[i, j] = basis[j, i] = 1.0
        stack1[v] = embed(basis, np.zeros((dim_a, dim_a)))
        scattered = np.zeros((dim_full, dim_full))
        scattered[np.ix_(idx_a, idx_a)] = basis
        stack2[v] = -embed(scattered, np.zeros((dim_full, dim_full)))
    stack1[-1] = np.eye(2 * dim_a)
    stack2[-1] = np.eye(2 * dim_full)

    m0_1 = embed(np.zeros((dim_a, dim_a)), sigma_a)
    m0_2 = embed(gamma.data, sigma_b_hat)

    c = np.zeros(m)
    c[-1] = 1.0
    return SeparabilityProblem(
        gamma=gamma,
        part=part,
        c=c,
        blocks=[(m0_1, stack1), (m0_2, stack2)],
        var_pairs=var_pairs,
        dim_a=dim_a,
    )


def solve_min_slack(
    problem: SeparabilityProblem,
    options: SolverOptions | None = None,
) -> SdpSolution:
    """Run the interior-point kernel on an assembled program."""
    opts = options or SolverOptions()
    code, y, iterations, gap, rp = backends.solve_min_slack_kernel(
        problem.c,
        problem.blocks,
        max_iter=opts.max_iter,
        tol_gap=opts.tol_gap,
        tol_feas=opts.tol_feas,
    )
    gamma_a = np.zeros((problem.dim_a, problem.dim_a))
    for v, (i, j) in enumerate(problem.var_pairs):
        gamma_a[i, j] = gamma_a[j, i] = y[v]
    return SdpSolution(
        t_star=float(y[-1]),
        gamma_a=gamma_a,
        iterations=iterations,
        status=_STATUS_BY_CODE[code],
        gap=gap,
        primal_residual=rp,
    )


def is_separable(
    gamma: CovarianceMatrix,
    part: Bipartition,
    tol: float = SEPARABILITY_TOL,
    options: SolverOptions | None = None,
) -> tuple[bool, float]:
    """Separability verdict and slack t*.

    Separable means t* <= tol.  Raises InconclusiveError when the solver
    fails to certify an optimum.
    """
    solution = solve_min_slack(build_problem(gamma, part), options)
    if solution.status is not SolverStatus.OPTIMAL:
        raise InconclusiveError(
            f"solver ended with status {solution.status.value} "
            f"(gap {solution.gap:.2e}, primal residual {solution.primal_residual:.2e})"
        )
    return solution.t_star <= tol, solution.t_star


def classify(
    gamma: CovarianceMatrix,
    part: Bipartition,
    tol_sep: float = SEPARABILITY_TOL,
    tol_ppt: float | None = None,
    options: SolverOptions | None = None,
) -> EntanglementVerdict:
    """Three-way classification of a bipartite Gaussian state.

    Free entanglement is read off the PPT margin alone; the semidefinite
    program only runs for PPT states and splits separable from bound
    entangled on the slack threshold.
    """
    margin = ppt_margin(gamma, part)
    if tol_ppt is None:
        spectral = float(np.max(np.abs(np.linalg.eigvalsh(gamma.data))))
        tol_ppt = 1e-9 * max(1.0, spectral)
    if margin < -tol_ppt:
        return EntanglementVerdict(
            classification=EntanglementClass.FREE_ENTANGLED,
            ppt_margin=margin,
            separability_slack=None,
            iterations=0,
        )
    solution = solve_min_slack(build_problem(gamma, part), options)
    if solution.status is not SolverStatus.OPTIMAL:
        raise InconclusiveError(
            f"solver ended with status {solution.status.value} "
            f"(gap {solution.gap:.2e}, primal residual {solution.primal_residual:.2e})"
        )
    if solution.t_star <= tol_sep:
        label = EntanglementClass.SEPARABLE
    else:
        label = EntanglementClass.BOUND_ENTANGLED
    return EntanglementVerdict(
        classification=label,
        ppt_margin=margin,
        separability_slack=solution.t_star,
        iterations=solution.iterations,
    )
