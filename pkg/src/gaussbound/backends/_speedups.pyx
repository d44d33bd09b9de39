# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
# cython: initializedcheck=False
"""Compiled implementation of the hot numerical kernel.

Algorithmic twin of ``reference.py``: same NT-scaled predictor-corrector
interior-point method, same constants, same status codes and return
tuple.  See the reference module for the algorithm notes.  Here every
matrix lives in a preallocated Fortran-ordered workspace and all dense
linear algebra goes straight to BLAS/LAPACK, which removes the Python
dispatch overhead that dominates at these block sizes (8 to 16).
"""

import numpy as np

from libc.math cimport INFINITY, fabs, sqrt

from scipy.linalg.cython_blas cimport (
    daxpy,
    dcopy,
    ddot,
    dgemm,
    dgemv,
    dscal,
    dsymv,
    dsyrk,
    dtrsm,
    dtrsv,
)
from scipy.linalg.cython_lapack cimport dgesvd, dpotrf, dsyevd

__all__ = ["BACKEND_NAME", "solve_min_slack_kernel"]

BACKEND_NAME = "compiled"

STATUS_OPTIMAL = 0
STATUS_MAX_ITER = 1
STATUS_NUMERICAL_FAILURE = 2

cdef int _C_OPTIMAL = 0
cdef int _C_MAX_ITER = 1
cdef int _C_FAILURE = 2

cdef double _STEP_FRACTION = 0.98
cdef double _MIN_STEP = 1e-10
cdef int _MAX_STALLS = 5
cdef double _BIG_STEP = 1e300

# Per-block square scratch slots, each d*d doubles.
cdef enum:
    SLOT_X = 0
    SLOT_S = 1
    SLOT_LX = 2
    SLOT_LS = 3
    SLOT_G = 4
    SLOT_DSA = 5
    SLOT_DXA = 6
    SLOT_DS = 7
    SLOT_DX = 8
    SLOT_RC = 9
    SLOT_T1 = 10
    SLOT_T2 = 11
    SLOT_VT = 12
    SLOT_W1 = 13
    SLOT_W2 = 14
    NSQ = 15


cdef inline double* _slot(double* sq, Py_ssize_t* sq_off, int k, int dd, int slot) noexcept nogil:
    return sq + sq_off[k] + (<Py_ssize_t>slot) * dd


cdef inline void _transpose(double* src, double* dst, int d) noexcept nogil:
    cdef int i, j
    for j in range(d):
        for i in range(d):
            dst[i * d + j] = src[j * d + i]


cdef inline void _symmetrize(double* a, int d) noexcept nogil:
    cdef int i, j
    cdef double v
    for j in range(d):
        for i in range(j):
            v = 0.5 * (a[j * d + i] + a[i * d + j])
            a[j * d + i] = v
            a[i * d + j] = v


cdef int _chol_lower(double* a, int d) noexcept nogil:
    """In-place lower Cholesky; zeroes the strict upper triangle."""
    cdef char lo = b'L'
    cdef int n = d, lda = d, info = 0
    cdef int i, j
    dpotrf(&lo, &n, a, &lda, &info)
    if info != 0:
        return -1
    for j in range(1, d):
        for i in range(j):
            a[j * d + i] = 0.0
    return 0


cdef double _min_eigenvalue(double* a, int d, double* w,
                            double* work, int lwork,
                            int* iwork, int liwork, int* info) noexcept nogil:
    """Smallest eigenvalue of symmetric a (destroyed)."""
    cdef char jobz = b'N', lo = b'L'
    cdef int n = d, lda = d
    dsyevd(&jobz, &lo, &n, a, &lda, w, work, &lwork, iwork, &liwork, info)
    return w[0]


cdef double _max_step(double* factor, double* direction, int d,
                      double* wa, double* wb, double* w,
                      double* work, int lwork, int* iwork, int liwork) noexcept nogil:
    """sup { a : P + a D >= 0 } for P = factor factor^T; negative on failure."""
    cdef int dd = d * d, one = 1, info = 0, n = d
    cdef double alpha = 1.0, lam
    cdef char side = b'L', lo = b'L', nt = b'N', dg = b'N'
    dcopy(&dd, direction, &one, wa, &one)
    dtrsm(&side, &lo, &nt, &dg, &n, &n, &alpha, factor, &n, wa, &n)
    _transpose(wa, wb, d)
    dtrsm(&side, &lo, &nt, &dg, &n, &n, &alpha, factor, &n, wb, &n)
    _symmetrize(wb, d)
    lam = _min_eigenvalue(wb, d, w, work, lwork, iwork, liwork, &info)
    if info != 0:
        return -1.0
    if lam >= -1e-14:
        return _BIG_STEP
    return 1.0 / (-lam)


cdef int _nt_block(double* x, double* s, double* lx, double* ls, double* g,
                   double* prod, double* vt, double* sing,
                   double* work, int lwork, int d) noexcept nogil:
    """Factor G with W = G G^T and W S W = X; also leaves chol(X), chol(S)."""
    cdef int dd = d * d, one = 1, info = 0, n = d, ldu = 1, j
    cdef double one_d = 1.0, zero = 0.0, udummy = 0.0, scale
    cdef char tt = b'T', nt = b'N', ju = b'N', jvt = b'A'
    dcopy(&dd, x, &one, lx, &one)
    if _chol_lower(lx, d) != 0:
        return -1
    dcopy(&dd, s, &one, ls, &one)
    if _chol_lower(ls, d) != 0:
        return -1
    dgemm(&tt, &nt, &n, &n, &n, &one_d, ls, &n, lx, &n, &zero, prod, &n)
    dgesvd(&ju, &jvt, &n, &n, prod, &n, sing, &udummy, &ldu, vt, &n,
           work, &lwork, &info)
    if info != 0 or sing[d - 1] <= 0.0:
        return -1
    dgemm(&nt, &tt, &n, &n, &n, &one_d, lx, &n, vt, &n, &zero, g, &n)
    for j in range(d):
        scale = 1.0 / sqrt(sing[j])
        dscal(&n, &scale, g + j * d, &one)
    return 0


cdef void _solve_direction(int m, int K, Py_ssize_t* dims,
                           double* stacks, Py_ssize_t* st_off,
                           double* sq, Py_ssize_t* sq_off,
                           double* schur_factor, double* schur_orig,
                           double* rp, double* rhs, double* dy, double* resid,
                           int rc_slot, int ds_slot, int dx_slot) noexcept nogil:
    """Newton direction for given complementarity residuals (in rc_slot)."""
    cdef int k, d, dd, n, i, one = 1
    cdef double one_d = 1.0, zero = 0.0, neg_one = -1.0
    cdef char tt = b'T', nt = b'N', lo = b'L', dg = b'N'
    cdef double *stk
    cdef double *rc
    cdef double *dsb
    cdef double *dxb
    cdef double *g
    cdef double *t1
    cdef double *t2
    dcopy(&m, rp, &one, rhs, &one)
    for k in range(K):
        d = <int>dims[k]
        dd = d * d
        stk = stacks + st_off[k]
        rc = _slot(sq, sq_off, k, dd, rc_slot)
        dgemv(&tt, &dd, &m, &one_d, stk, &dd, rc, &one, &one_d, rhs, &one)
    dcopy(&m, rhs, &one, dy, &one)
    dtrsv(&lo, &nt, &dg, &m, schur_factor, &m, dy, &one)
    dtrsv(&lo, &tt, &dg, &m, schur_factor, &m, dy, &one)
    # One iterative-refinement pass against the unjittered Schur matrix
    # (lower triangle valid); without it the primal residual stalls near
    # 1e-8 on ill-conditioned instances.
    dcopy(&m, rhs, &one, resid, &one)
    dsymv(&lo, &m, &neg_one, schur_orig, &m, dy, &one, &one_d, resid, &one)
    dtrsv(&lo, &nt, &dg, &m, schur_factor, &m, resid, &one)
    dtrsv(&lo, &tt, &dg, &m, schur_factor, &m, resid, &one)
    daxpy(&m, &one_d, resid, &one, dy, &one)
    for k in range(K):
        d = <int>dims[k]
        dd = d * d
        n = d
        stk = stacks + st_off[k]
        rc = _slot(sq, sq_off, k, dd, rc_slot)
        dsb = _slot(sq, sq_off, k, dd, ds_slot)
        dxb = _slot(sq, sq_off, k, dd, dx_slot)
        g = _slot(sq, sq_off, k, dd, SLOT_G)
        t1 = _slot(sq, sq_off, k, dd, SLOT_T1)
        t2 = _slot(sq, sq_off, k, dd, SLOT_T2)
        dgemv(&nt, &dd, &m, &one_d, stk, &dd, dy, &one, &zero, dsb, &one)
        dgemm(&tt, &nt, &n, &n, &n, &one_d, g, &n, dsb, &n, &zero, t1, &n)
        dgemm(&nt, &nt, &n, &n, &n, &one_d, t1, &n, g, &n, &zero, t2, &n)
        dgemm(&nt, &nt, &n, &n, &n, &one_d, g, &n, t2, &n, &zero, t1, &n)
        dgemm(&nt, &tt, &n, &n, &n, &one_d, t1, &n, g, &n, &zero, t2, &n)
        for i in range(dd):
            dxb[i] = rc[i] - t2[i]
        _symmetrize(dxb, d)


cdef int _ipm(int m, int K, Py_ssize_t* dims, int ntot,
              double* m0s, Py_ssize_t* m0_off,
              double* stacks, Py_ssize_t* st_off,
              double* sq, Py_ssize_t* sq_off,
              double* tild, Py_ssize_t* ti_off,
              double* schur, double* schur_orig,
              double* y, double* b, double* rp, double* rhs, double* dy,
              double* resid, double* w, double* sing,
              double* work, int lwork, int* iwork, int liwork,
              int max_iter, double tol_gap, double tol_feas, double b_scale,
              int* out_iter, double* out_gap, double* out_rp) noexcept nogil:
    cdef int it, k, j, i, d, dd, n, one = 1
    cdef double one_d = 1.0, zero = 0.0
    cdef char tt = b'T', nt = b'N', lo = b'L', dg = b'N', side = b'L'
    cdef double dot_xs, mu, pobj, dobj, v, trace, jitter
    cdef double mu_aff, sigma, ap, ad, step
    cdef double gap_rel = INFINITY, rp_rel = INFINITY
    cdef int stalls = 0, iters = 0, fail
    cdef int status = _C_MAX_ITER
    cdef double *xk
    cdef double *sk
    cdef double *lx
    cdef double *ls
    cdef double *g
    cdef double *t1
    cdef double *t2
    cdef double *rc
    cdef double *dsa
    cdef double *dxa
    cdef double *dxb
    cdef double *w1
    cdef double *w2

    for it in range(1, max_iter + 1):
        iters = it

        # Residuals, objectives, convergence test.
        dot_xs = 0.0
        pobj = 0.0
        dcopy(&m, b, &one, rp, &one)
        for k in range(K):
            d = <int>dims[k]
            dd = d * d
            xk = _slot(sq, sq_off, k, dd, SLOT_X)
            sk = _slot(sq, sq_off, k, dd, SLOT_S)
            dot_xs += ddot(&dd, xk, &one, sk, &one)
            pobj += ddot(&dd, m0s + m0_off[k], &one, xk, &one)
            dgemv(&tt, &dd, &m, &one_d, stacks + st_off[k], &dd,
                  xk, &one, &one_d, rp, &one)
        mu = dot_xs / ntot
        dobj = ddot(&m, b, &one, y, &one)
        rp_rel = 0.0
        for j in range(m):
            v = fabs(rp[j])
            if v > rp_rel:
                rp_rel = v
        rp_rel /= b_scale
        gap_rel = dot_xs / (1.0 + fabs(pobj) + fabs(dobj))
        if rp_rel <= tol_feas and gap_rel <= tol_gap:
            status = _C_OPTIMAL
            iters = it - 1
            break

        # NT scaling point per block; Cholesky factors are kept for the
        # step-length computations below.
        fail = 0
        for k in range(K):
            d = <int>dims[k]
            dd = d * d
            if _nt_block(_slot(sq, sq_off, k, dd, SLOT_X),
                         _slot(sq, sq_off, k, dd, SLOT_S),
                         _slot(sq, sq_off, k, dd, SLOT_LX),
                         _slot(sq, sq_off, k, dd, SLOT_LS),
                         _slot(sq, sq_off, k, dd, SLOT_G),
                         _slot(sq, sq_off, k, dd, SLOT_T1),
                         _slot(sq, sq_off, k, dd, SLOT_VT),
                         sing, work, lwork, d) != 0:
                fail = 1
                break
        if fail:
            status = _C_FAILURE
            break

        # Schur complement from the scaled coefficient stacks.
        for i in range(m * m):
            schur[i] = 0.0
        for k in range(K):
            d = <int>dims[k]
            dd = d * d
            n = d
            g = _slot(sq, sq_off, k, dd, SLOT_G)
            t1 = _slot(sq, sq_off, k, dd, SLOT_T1)
            for j in range(m):
                dgemm(&tt, &nt, &n, &n, &n, &one_d, g, &n,
                      stacks + st_off[k] + (<Py_ssize_t>j) * dd, &n,
                      &zero, t1, &n)
                dgemm(&nt, &nt, &n, &n, &n, &one_d, t1, &n, g, &n,
                      &zero, tild + ti_off[k] + (<Py_ssize_t>j) * dd, &n)
            dsyrk(&lo, &tt, &m, &dd, &one_d, tild + ti_off[k], &dd,
                  &one_d, schur, &m)
        for i in range(m * m):
            schur_orig[i] = schur[i]
        trace = 0.0
        for j in range(m):
            trace += schur[j * m + j]
        jitter = 1e-14 * trace / m
        for j in range(m):
            schur[j * m + j] += jitter
        if _chol_lower(schur, m) != 0:
            status = _C_FAILURE
            break

        # Predictor: pure Newton step toward complementarity zero.
        for k in range(K):
            d = <int>dims[k]
            dd = d * d
            xk = _slot(sq, sq_off, k, dd, SLOT_X)
            rc = _slot(sq, sq_off, k, dd, SLOT_RC)
            for i in range(dd):
                rc[i] = -xk[i]
        _solve_direction(m, K, dims, stacks, st_off, sq, sq_off, schur,
                         schur_orig, rp, rhs, dy, resid,
                         SLOT_RC, SLOT_DSA, SLOT_DXA)
        ap = 1.0
        ad = 1.0
        fail = 0
        for k in range(K):
            d = <int>dims[k]
            dd = d * d
            lx = _slot(sq, sq_off, k, dd, SLOT_LX)
            ls = _slot(sq, sq_off, k, dd, SLOT_LS)
            w1 = _slot(sq, sq_off, k, dd, SLOT_W1)
            w2 = _slot(sq, sq_off, k, dd, SLOT_W2)
            step = _max_step(lx, _slot(sq, sq_off, k, dd, SLOT_DXA), d,
                             w1, w2, w, work, lwork, iwork, liwork)
            if step < 0.0:
                fail = 1
                break
            if step < ap:
                ap = step
            step = _max_step(ls, _slot(sq, sq_off, k, dd, SLOT_DSA), d,
                             w1, w2, w, work, lwork, iwork, liwork)
            if step < 0.0:
                fail = 1
                break
            if step < ad:
                ad = step
        if fail:
            status = _C_FAILURE
            break
        mu_aff = 0.0
        for k in range(K):
            d = <int>dims[k]
            dd = d * d
            xk = _slot(sq, sq_off, k, dd, SLOT_X)
            sk = _slot(sq, sq_off, k, dd, SLOT_S)
            dxa = _slot(sq, sq_off, k, dd, SLOT_DXA)
            dsa = _slot(sq, sq_off, k, dd, SLOT_DSA)
            for i in range(dd):
                mu_aff += (xk[i] + ap * dxa[i]) * (sk[i] + ad * dsa[i])
        mu_aff /= ntot
        sigma = mu_aff / mu
        if sigma < 0.0:
            sigma = 0.0
        sigma = sigma * sigma * sigma
        if sigma > 0.999:
            sigma = 0.999

        # Corrector: recentering toward sigma mu, same factorization.
        for k in range(K):
            d = <int>dims[k]
            dd = d * d
            n = d
            xk = _slot(sq, sq_off, k, dd, SLOT_X)
            ls = _slot(sq, sq_off, k, dd, SLOT_LS)
            t1 = _slot(sq, sq_off, k, dd, SLOT_T1)
            t2 = _slot(sq, sq_off, k, dd, SLOT_T2)
            rc = _slot(sq, sq_off, k, dd, SLOT_RC)
            for i in range(dd):
                t1[i] = 0.0
            for i in range(d):
                t1[i * d + i] = 1.0
            dtrsm(&side, &lo, &nt, &dg, &n, &n, &one_d, ls, &n, t1, &n)
            dgemm(&tt, &nt, &n, &n, &n, &one_d, t1, &n, t1, &n, &zero, t2, &n)
            for i in range(dd):
                rc[i] = sigma * mu * t2[i] - xk[i]
        _solve_direction(m, K, dims, stacks, st_off, sq, sq_off, schur,
                         schur_orig, rp, rhs, dy, resid,
                         SLOT_RC, SLOT_DS, SLOT_DX)
        ap = _BIG_STEP
        ad = _BIG_STEP
        fail = 0
        for k in range(K):
            d = <int>dims[k]
            dd = d * d
            lx = _slot(sq, sq_off, k, dd, SLOT_LX)
            ls = _slot(sq, sq_off, k, dd, SLOT_LS)
            w1 = _slot(sq, sq_off, k, dd, SLOT_W1)
            w2 = _slot(sq, sq_off, k, dd, SLOT_W2)
            step = _max_step(lx, _slot(sq, sq_off, k, dd, SLOT_DX), d,
                             w1, w2, w, work, lwork, iwork, liwork)
            if step < 0.0:
                fail = 1
                break
            if step < ap:
                ap = step
            step = _max_step(ls, _slot(sq, sq_off, k, dd, SLOT_DS), d,
                             w1, w2, w, work, lwork, iwork, liwork)
            if step < 0.0:
                fail = 1
                break
            if step < ad:
                ad = step
        if fail:
            status = _C_FAILURE
            break
        ap = _STEP_FRACTION * ap
        if ap > 1.0:
            ap = 1.0
        ad = _STEP_FRACTION * ad
        if ad > 1.0:
            ad = 1.0
        if ap <= _MIN_STEP and ad <= _MIN_STEP:
            stalls += 1
            if stalls >= _MAX_STALLS:
                status = _C_FAILURE
                break
        else:
            stalls = 0

        for k in range(K):
            d = <int>dims[k]
            dd = d * d
            xk = _slot(sq, sq_off, k, dd, SLOT_X)
            dxb = _slot(sq, sq_off, k, dd, SLOT_DX)
            for i in range(dd):
                xk[i] += ap * dxb[i]
            _symmetrize(xk, d)
        daxpy(&m, &ad, dy, &one, y, &one)
        # S is affine in y; recomputing removes accumulated drift.
        for k in range(K):
            d = <int>dims[k]
            dd = d * d
            sk = _slot(sq, sq_off, k, dd, SLOT_S)
            dcopy(&dd, m0s + m0_off[k], &one, sk, &one)
            dgemv(&nt, &dd, &m, &one_d, stacks + st_off[k], &dd,
                  y, &one, &one_d, sk, &one)

    out_iter[0] = iters
    out_gap[0] = gap_rel
    out_rp[0] = rp_rel
    return status


def solve_min_slack_kernel(c, blocks, int max_iter=200, double tol_gap=1e-9,
                           double tol_feas=1e-9):
    """Solve the min-slack SDP; same contract as the reference kernel.

    Returns (status, y, iterations, gap, primal_infeasibility).
    """
    cvec = np.asarray(c, dtype=np.float64).ravel()
    cdef int m = <int>cvec.size
    mats0 = [np.asarray(m0, dtype=np.float64) for m0, _ in blocks]
    stacks_in = [np.asarray(ms, dtype=np.float64) for _, ms in blocks]
    dims_list = [int(m0.shape[0]) for m0 in mats0]
    for m0, ms, d in zip(mats0, stacks_in, dims_list):
        if ms.shape != (m, d, d):
            raise ValueError("coefficient stack shape mismatch")
        if np.max(np.abs(ms[-1] - np.eye(d))) > 1e-12:
            raise ValueError("last variable must carry the identity coefficient")
    cdef int K = len(blocks)
    cdef int ntot = sum(dims_list)
    cdef int dmax = max(dims_list) if dims_list else 1

    bvec = -cvec
    # Normalize the data to unit max-norm so the iterates, the Schur
    # conditioning, and the residual noise floor are scale-free; y is
    # rescaled on return.
    cdef double theta = max(1.0, max(float(np.max(np.abs(m0))) for m0 in mats0))
    mats0 = [m0 / theta for m0 in mats0]
    shift = 0.0
    for m0 in mats0:
        shift = max(shift, -float(np.linalg.eigvalsh(m0)[0]))
    y0 = np.zeros(m)
    y0[m - 1] = shift + 1.0
    cdef double b_scale = 1.0 + float(np.max(np.abs(bvec)))

    # Flat Fortran-order workspaces with per-block offsets.
    sizes = np.asarray(dims_list, dtype=np.intp)
    dd_sizes = sizes * sizes
    m0_off = np.concatenate(([0], np.cumsum(dd_sizes)))[:K].astype(np.intp)
    st_off = np.concatenate(([0], np.cumsum(dd_sizes * m)))[:K].astype(np.intp)
    sq_off = np.concatenate(([0], np.cumsum(dd_sizes * NSQ)))[:K].astype(np.intp)
    m0buf = np.zeros(int(np.sum(dd_sizes)), dtype=np.float64)
    stackbuf = np.zeros(int(np.sum(dd_sizes * m)), dtype=np.float64)
    sqbuf = np.zeros(int(np.sum(dd_sizes * NSQ)), dtype=np.float64)
    tilbuf = np.zeros(int(np.sum(dd_sizes * m)), dtype=np.float64)
    for k in range(K):
        d = dims_list[k]
        dd = d * d
        m0buf[m0_off[k]:m0_off[k] + dd] = mats0[k].ravel(order="F")
        for j in range(m):
            start = st_off[k] + j * dd
            stackbuf[start:start + dd] = stacks_in[k][j].ravel(order="F")
        x0 = np.eye(d) * (1.0 + y0[m - 1])
        s0 = mats0[k] + np.tensordot(y0, stacks_in[k], axes=(0, 0))
        sqbuf[sq_off[k] + SLOT_X * dd:sq_off[k] + SLOT_X * dd + dd] = x0.ravel(order="F")
        sqbuf[sq_off[k] + SLOT_S * dd:sq_off[k] + SLOT_S * dd + dd] = s0.ravel(order="F")

    schur = np.zeros(m * m, dtype=np.float64)
    schur_orig = np.zeros(m * m, dtype=np.float64)
    yv = y0.copy()
    rpv = np.zeros(m, dtype=np.float64)
    rhsv = np.zeros(m, dtype=np.float64)
    dyv = np.zeros(m, dtype=np.float64)
    residv = np.zeros(m, dtype=np.float64)
    wv = np.zeros(dmax, dtype=np.float64)
    singv = np.zeros(dmax, dtype=np.float64)
    cdef int lwork = 1 + 6 * dmax + 2 * dmax * dmax + 8 * dmax
    cdef int liwork = 3 + 5 * dmax
    workv = np.zeros(lwork, dtype=np.float64)
    iworkv = np.zeros(liwork, dtype=np.int32)

    cdef double[::1] m0_mv = m0buf
    cdef double[::1] st_mv = stackbuf
    cdef double[::1] sq_mv = sqbuf
    cdef double[::1] ti_mv = tilbuf
    cdef double[::1] schur_mv = schur
    cdef double[::1] schur_orig_mv = schur_orig
    cdef double[::1] y_mv = yv
    cdef double[::1] b_mv = np.ascontiguousarray(bvec)
    cdef double[::1] rp_mv = rpv
    cdef double[::1] rhs_mv = rhsv
    cdef double[::1] dy_mv = dyv
    cdef double[::1] resid_mv = residv
    cdef double[::1] w_mv = wv
    cdef double[::1] sing_mv = singv
    cdef double[::1] work_mv = workv
    cdef int[::1] iwork_mv = iworkv
    cdef Py_ssize_t[::1] dims_mv = sizes
    cdef Py_ssize_t[::1] m0_off_mv = m0_off
    cdef Py_ssize_t[::1] st_off_mv = st_off
    cdef Py_ssize_t[::1] sq_off_mv = sq_off
    cdef Py_ssize_t[::1] ti_off_mv = st_off

    cdef int out_iter = 0
    cdef double out_gap = 0.0, out_rp = 0.0
    cdef int status
    cdef int c_max_iter = max_iter
    cdef double c_tol_gap = tol_gap, c_tol_feas = tol_feas
    with nogil:
        status = _ipm(m, K, &dims_mv[0] if K else NULL, ntot,
                      &m0_mv[0] if m0_mv.shape[0] else NULL,
                      &m0_off_mv[0] if K else NULL,
                      &st_mv[0] if st_mv.shape[0] else NULL,
                      &st_off_mv[0] if K else NULL,
                      &sq_mv[0] if sq_mv.shape[0] else NULL,
                      &sq_off_mv[0] if K else NULL,
                      &ti_mv[0] if ti_mv.shape[0] else NULL,
                      &ti_off_mv[0] if K else NULL,
                      &schur_mv[0], &schur_orig_mv[0],
                      &y_mv[0], &b_mv[0], &rp_mv[0], &rhs_mv[0], &dy_mv[0],
                      &resid_mv[0], &w_mv[0], &sing_mv[0],
                      &work_mv[0], lwork, &iwork_mv[0], liwork,
                      c_max_iter, c_tol_gap, c_tol_feas, b_scale,
                      &out_iter, &out_gap, &out_rp)
    return int(status), theta * yv, int(out_iter), float(out_gap), float(out_rp)
