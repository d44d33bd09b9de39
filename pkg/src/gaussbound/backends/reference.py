r"""Pure numpy implementation of the hot numerical kernel.

The kernel solves the small dense semidefinite program

    minimize    c . y
    subject to  M0_k + sum_j y_j M_k[j]  >=  0   for every block k

with a primal-dual interior-point method under Nesterov-Todd scaling.
The last variable is required to enter every block with the identity
coefficient (it is the uniform slack), which supplies an exactly
dual-feasible starting point; dual feasibility is then preserved by
construction throughout, so only the primal residual and the duality gap
have to be driven to zero.

Design choices, shared verbatim by the compiled twin in _speedups.pyx:

* NT scaling point computed from Cholesky factors and one SVD;
* Mehrotra adaptive centering sigma = (mu_aff / mu)^3 without the
  second-order corrector term (robustness over iteration count);
* fraction-to-boundary 0.98, at most 200 iterations by default;
* problem data normalized to unit max-norm, one iterative-refinement
  pass on every Schur solve (both needed to reach 1e-9 feasibility on
  ill-conditioned instances).

Status codes: 0 optimal, 1 iteration limit, 2 numerical failure.
"""

from __future__ import annotations

import numpy as np

__all__ = ["BACKEND_NAME", "solve_min_slack_kernel"]

BACKEND_NAME = "python"

STATUS_OPTIMAL = 0
STATUS_MAX_ITER = 1
STATUS_NUMERICAL_FAILURE = 2

_STEP_FRACTION = 0.98
_MIN_STEP = 1e-10
_MAX_STALLS = 5


def _chol(matrix: np.ndarray) -> np.ndarray | None:
    try:
        return np.linalg.cholesky(matrix)
    except np.linalg.LinAlgError:
        return None


def _nt_scaling(x: np.ndarray, s: np.ndarray) -> np.ndarray | None:
    """Factor G with W = G G^T and W S W = X (the NT scaling point)."""
    lx = _chol(x)
    ls = _chol(s)
    if lx is None or ls is None:
        return None
    u, sing, vt = np.linalg.svd(ls.T @ lx)
    if sing[-1] <= 0.0:
        return None
    return lx @ vt.T @ np.diag(1.0 / np.sqrt(sing))


def _max_step(factor: np.ndarray, direction: np.ndarray) -> float:
    """sup { a : P + a D >= 0 } for P = factor factor^T."""
    n = factor.shape[0]
    half = np.linalg.solve(factor, direction)
    inner = np.linalg.solve(factor, half.T)
    inner = (inner + inner.T) / 2.0
    lam = np.linalg.eigvalsh(inner)[0]
    if lam >= -1e-14:
        return np.inf
    return 1.0 / (-lam)


def solve_min_slack_kernel(
    c: np.ndarray,
    blocks: list[tuple[np.ndarray, np.ndarray]],
    max_iter: int = 200,
    tol_gap: float = 1e-9,
    tol_feas: float = 1e-9,
) -> tuple[int, np.ndarray, int, float, float]:
    """Solve the min-slack SDP; see the module docstring.

    Parameters
    ----------
    c:
        Objective vector, length m.  c[-1] weights the uniform slack.
    blocks:
        List of (M0, Mstack) pairs; M0 has shape (d, d) and Mstack has
        shape (m, d, d) with Mstack[-1] the identity.
    max_iter, tol_gap, tol_feas:
        Iteration cap, relative duality-gap target, relative primal
        feasibility target.

    Returns
    -------
    (status, y, iterations, gap, primal_infeasibility)
    """
    c = np.asarray(c, dtype=float)
    m = c.size
    mats0 = [np.asarray(m0, dtype=float) for m0, _ in blocks]
    stacks = [np.asarray(ms, dtype=float) for _, ms in blocks]
    dims = [m0.shape[0] for m0 in mats0]
    for m0, ms, d in zip(mats0, stacks, dims):
        if ms.shape != (m, d, d):
            raise ValueError("coefficient stack shape mismatch")
        if np.max(np.abs(ms[-1] - np.eye(d))) > 1e-12:
            raise ValueError("last variable must carry the identity coefficient")
    ntot = sum(dims)
    b = -c

    # Normalize the data to unit max-norm so the iterates, the Schur
    # conditioning, and the residual noise floor are scale-free; y is
    # rescaled on every return path.
    theta = max(1.0, max(float(np.max(np.abs(m0))) for m0 in mats0))
    mats0 = [m0 / theta for m0 in mats0]

    # Dual-feasible start: push the slack variable until every block is
    # comfortably positive definite.
    shift = 0.0
    for m0 in mats0:
        shift = max(shift, -float(np.linalg.eigvalsh(m0)[0]))
    y = np.zeros(m)
    y[-1] = shift + 1.0
    svars = [
        m0 + np.tensordot(y, stack, axes=(0, 0)) for m0, stack in zip(mats0, stacks)
    ]
    xvars = [np.eye(d) * (1.0 + y[-1]) for d in dims]

    status = STATUS_MAX_ITER
    iterations = 0
    gap_rel = np.inf
    rp_rel = np.inf
    stalls = 0
    b_scale = 1.0 + float(np.max(np.abs(b)))

    for iterations in range(1, max_iter + 1):
        dot_xs = sum(float(np.tensordot(x, s)) for x, s in zip(xvars, svars))
        mu = dot_xs / ntot
        rp = b - np.array(
            [
                -sum(float(np.tensordot(stack[j], x)) for stack, x in zip(stacks, xvars))
                for j in range(m)
            ]
        )
        pobj = sum(float(np.tensordot(m0, x)) for m0, x in zip(mats0, xvars))
        dobj = float(b @ y)
        rp_rel = float(np.max(np.abs(rp))) / b_scale
        gap_rel = dot_xs / (1.0 + abs(pobj) + abs(dobj))
        if rp_rel <= tol_feas and gap_rel <= tol_gap:
            status = STATUS_OPTIMAL
            iterations -= 1
            break

        scalings = []
        for x, s in zip(xvars, svars):
            g = _nt_scaling(x, s)
            if g is None:
                return STATUS_NUMERICAL_FAILURE, theta * y, iterations, gap_rel, rp_rel
            scalings.append(g)

        # Schur complement matrix from the scaled coefficient stacks.
        schur = np.zeros((m, m))
        tilded = []
        for g, stack in zip(scalings, stacks):
            t = np.einsum("ba,jbc,cd->jad", g, stack, g, optimize=True)
            tilded.append(t)
            flat = t.reshape(m, -1)
            schur += flat @ flat.T
        schur_factor = _chol(schur + np.eye(m) * (1e-14 * np.trace(schur) / m))
        if schur_factor is None:
            return STATUS_NUMERICAL_FAILURE, theta * y, iterations, gap_rel, rp_rel

        x_factors = [_chol(x) for x in xvars]
        s_factors = [_chol(s) for s in svars]
        if any(f is None for f in x_factors) or any(f is None for f in s_factors):
            return STATUS_NUMERICAL_FAILURE, theta * y, iterations, gap_rel, rp_rel

        def solve_direction(rcs: list[np.ndarray]):
            rhs = rp.copy()
            for stack, rc in zip(stacks, rcs):
                rhs += np.tensordot(stack, rc, axes=([1, 2], [0, 1]))
            half = np.linalg.solve(schur_factor, rhs)
            dy = np.linalg.solve(schur_factor.T, half)
            # One iterative-refinement pass against the unjittered Schur
            # matrix; without it the primal residual stalls near 1e-8 on
            # ill-conditioned instances.
            resid = rhs - schur @ dy
            half = np.linalg.solve(schur_factor, resid)
            dy = dy + np.linalg.solve(schur_factor.T, half)
            ds = [np.tensordot(dy, stack, axes=(0, 0)) for stack in stacks]
            dx = [
                rc - g @ (g.T @ d @ g) @ g.T
                for rc, g, d in zip(rcs, scalings, ds)
            ]
            dx = [(v + v.T) / 2.0 for v in dx]
            return dy, ds, dx

        # Predictor: pure Newton step toward complementarity zero.
        rcs_aff = [-x for x in xvars]
        dy_aff, ds_aff, dx_aff = solve_direction(rcs_aff)
        ap = min(1.0, min(_max_step(f, d) for f, d in zip(x_factors, dx_aff)))
        ad = min(1.0, min(_max_step(f, d) for f, d in zip(s_factors, ds_aff)))
        mu_aff = sum(
            float(np.tensordot(x + ap * dx, s + ad * ds))
            for x, s, dx, ds in zip(xvars, svars, dx_aff, ds_aff)
        ) / ntot
        sigma = min(0.999, max(0.0, mu_aff / mu) ** 3)

        # Corrector: recentering toward sigma mu, same factorization.
        rcs = []
        for s_factor, x in zip(s_factors, xvars):
            inv_half = np.linalg.solve(s_factor, np.eye(s_factor.shape[0]))
            s_inv = inv_half.T @ inv_half
            rcs.append(sigma * mu * s_inv - x)
        dy, ds, dx = solve_direction(rcs)

        ap = min(1.0, _STEP_FRACTION * min(
            _max_step(f, d) for f, d in zip(x_factors, dx)
        ))
        ad = min(1.0, _STEP_FRACTION * min(
            _max_step(f, d) for f, d in zip(s_factors, ds)
        ))
        if ap <= _MIN_STEP and ad <= _MIN_STEP:
            stalls += 1
            if stalls >= _MAX_STALLS:
                return STATUS_NUMERICAL_FAILURE, theta * y, iterations, gap_rel, rp_rel
        else:
            stalls = 0

        xvars = [
            (x + ap * d + (x + ap * d).T) / 2.0 for x, d in zip(xvars, dx)
        ]
        y = y + ad * dy
        # S is affine in y; recomputing removes accumulated drift.
        svars = [
            m0 + np.tensordot(y, stack, axes=(0, 0))
            for m0, stack in zip(mats0, stacks)
        ]

    return status, theta * y, iterations, gap_rel, rp_rel
