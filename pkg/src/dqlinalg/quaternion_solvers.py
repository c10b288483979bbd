"""Eigen- and singular value decompositions of plain quaternion matrices.

Hermitian eigenproblems go through the complex adjoint: the 2m x 2m
complex Hermitian matrix is diagonalized by cyclic Jacobi, each
eigenvalue appears twice, and one quaternion eigenvector is recovered per
pair. The SVD is a one-sided (Hestenes) Jacobi iteration that works
directly on quaternion columns.

Every returned eigen/singular vector is gauge fixed: the column is
right-multiplied by the unit quaternion that makes its largest-magnitude
component real and nonnegative (lowest index on ties).
"""

from __future__ import annotations

import functools

import numpy as np

from .errors import ConvergenceFailure, DimensionMismatch, NotHermitian
from .quaternion import (
    column_to_complex,
    complex_adjoint,
    complex_partner,
    complex_to_column,
    conj_transpose,
    qabs_arr,
    qconj_arr,
    qeye,
    qfro,
    qmul_arr,
)

_EPS = np.finfo(float).eps


def _check_matrix(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.ndim != 3 or a.shape[2] != 4:
        raise DimensionMismatch(f"expected a quaternion matrix of shape (m, n, 4), got {a.shape}")
    return a


@functools.lru_cache(maxsize=None)
def round_robin_schedule(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Disjoint index pairs covering every ``p < q`` once per sweep.

    Circle-method tournament: ``n - 1`` rounds (``n`` rounds for odd
    ``n``), each a set of disjoint pairs that can be rotated together.
    """
    players = list(range(n + (n % 2)))
    size = len(players)
    rounds = []
    for _ in range(size - 1):
        ps, qs = [], []
        for i in range(size // 2):
            a, b = players[i], players[size - 1 - i]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        if ps:
            rounds.append((np.array(ps), np.array(qs)))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


@functools.lru_cache(maxsize=None)
def _flat_schedule(n: int) -> tuple[tuple[np.ndarray, ...], ...]:
    """Round-robin rounds as flat indices of (p,q), (q,p), (p,p), (q,q)."""
    return tuple((p * n + q, q * n + p, p * (n + 1), q * (n + 1)) for p, q in round_robin_schedule(n))


def _jacobi_tangent(zeta: np.ndarray) -> np.ndarray:
    """Smaller root ``t`` of ``t**2 + 2 zeta t - 1 = 0``."""
    sign = np.where(zeta >= 0, 1.0, -1.0)
    return sign / (np.abs(zeta) + np.sqrt(1.0 + zeta * zeta))


def complex_hermitian_eig(
    m: np.ndarray, tol: float = 1e-13, max_sweeps: int = 64
) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi for a complex Hermitian matrix.

    Returns ``(lambdas, Q)`` with eigenvalues nonascending and
    ``M = Q diag(lambdas) Q^H``. Iterates until the off-diagonal Frobenius
    norm is at most ``tol * ||M||_F``. Pairs are visited in round-robin
    order so each round's disjoint rotations are applied as one unitary.
    """
    a = np.array(m, dtype=complex)
    n = a.shape[0]
    if a.ndim != 2 or a.shape != (n, n):
        raise DimensionMismatch(f"matrix of shape {a.shape} is not square")
    if np.max(np.abs(a - a.conj().T), initial=0.0) > 1e-10 * max(1.0, np.linalg.norm(a)):
        raise NotHermitian("complex_hermitian_eig needs a Hermitian matrix")
    a = 0.5 * (a + a.conj().T)
    q = np.eye(n, dtype=complex)
    target = tol * float(np.linalg.norm(a))
    skip = _EPS * target / max(n, 1)
    eye = np.eye(n, dtype=complex).ravel()
    offdiag = ~np.eye(n, dtype=bool)

    polished = False
    for _ in range(max_sweeps + 1):
        off = float(np.linalg.norm(a[offdiag]))
        if off <= target:
            # one extra sweep is nearly free under quadratic convergence and
            # takes the residual from tol*||M|| down to rounding level
            if polished or off == 0.0:
                break
            polished = True
        for pq, qp, pp, qq in _flat_schedule(n):
            flat = a.ravel()
            c = flat[pq]
            mag = np.abs(c)
            active = mag > skip
            if not active.all():
                if not active.any():
                    continue
                pq, qp, pp, qq, c, mag = pq[active], qp[active], pp[active], qq[active], c[active], mag[active]
            t = _jacobi_tangent((flat[qq].real - flat[pp].real) / (2.0 * mag))
            cs = 1.0 / np.sqrt(1.0 + t * t)
            sn = t * cs
            d = c.conj() / mag
            # at these sizes one dense product beats updating rows and columns
            r = eye.copy()
            r[pp] = cs
            r[pq] = sn
            r[qp] = -sn * d
            r[qq] = cs * d
            rot = r.reshape(n, n)
            a = rot.conj().T @ a @ rot
            flat = a.ravel()
            flat[pq] = 0.0
            flat[qp] = 0.0
            q = q @ rot
        a.ravel()[:: n + 1] = a.ravel()[:: n + 1].real
    else:
        if float(np.linalg.norm(a[offdiag])) > target:
            raise ConvergenceFailure(f"complex Jacobi did not converge in {max_sweeps} sweeps")

    lambdas = np.diag(a).real.copy()
    order = np.argsort(-lambdas, kind="stable")
    return lambdas[order], q[:, order]


def gauge_fix_columns(u: np.ndarray, cols=None) -> tuple[np.ndarray, np.ndarray]:
    """Right-multiply columns so their largest component is real and nonnegative.

    Returns the fixed matrix and the unit quaternion applied to each column.
    """
    u = np.array(u, dtype=float)
    ncols = u.shape[1]
    phases = np.zeros((ncols, 4))
    phases[:, 0] = 1.0
    cols = np.arange(ncols) if cols is None else np.asarray(list(cols), dtype=int)
    if cols.size == 0 or u.shape[0] == 0:
        return u, phases
    mags = qabs_arr(u[:, cols])
    top = mags.max(axis=0)
    cols, mags, top = cols[top > 0.0], mags[:, top > 0.0], top[top > 0.0]
    # first entry within rounding of the largest, so ties resolve by position
    rows = np.argmax(mags >= top * (1.0 - 1e-12), axis=0)
    g = qconj_arr(u[rows, cols]) / mags[rows, np.arange(cols.size)][:, None]
    u[:, cols] = qmul_arr(u[:, cols], g[None])
    u[rows, cols, 1:] = 0.0
    phases[cols] = g
    return u, phases


def _greedy_quaternion_basis(
    basis: np.ndarray, candidates: np.ndarray, count: int
) -> tuple[np.ndarray, list[np.ndarray]]:
    """Pick ``count`` quaternion directions from complex candidate vectors.

    ``basis`` holds the complex images (pairs of columns) of quaternion
    vectors already chosen. Each step takes the candidate with the largest
    component orthogonal to the current span, so a 2p-dimensional
    quaternion-invariant subspace yields p well-conditioned directions.
    """
    chosen = []
    used = np.zeros(candidates.shape[1], dtype=bool)
    for _ in range(count):
        resid = candidates - basis @ (basis.conj().T @ candidates) if basis.shape[1] else candidates.copy()
        norms = np.linalg.norm(resid, axis=0)
        norms[used] = -1.0
        j = int(np.argmax(norms))
        if norms[j] <= 1e-8:
            raise ConvergenceFailure("could not extract an independent quaternion vector")
        used[j] = True
        v = resid[:, j] / norms[j]
        if basis.shape[1]:
            v = v - basis @ (basis.conj().T @ v)
            v = v / np.linalg.norm(v)
        basis = np.column_stack([basis, v, complex_partner(v)])
        chosen.append(complex_to_column(v))
    return basis, chosen


def complete_unitary(cols: np.ndarray, m: int) -> np.ndarray:
    """Extend orthonormal quaternion columns ``(m, k, 4)`` to an m x m unitary."""
    k = cols.shape[1]
    if k == m:
        return cols.copy()
    basis = np.zeros((2 * m, 0), dtype=complex)
    for j in range(k):
        c = column_to_complex(cols[:, j])
        basis = np.column_stack([basis, c, complex_partner(c)])
    _, extra = _greedy_quaternion_basis(basis, np.eye(2 * m, dtype=complex), m - k)
    out = np.zeros((m, m, 4))
    out[:, :k] = cols
    for j, x in enumerate(extra):
        out[:, k + j] = x
    return out


def quat_hermitian_eig(
    h: np.ndarray, tol: float | None = None, max_sweeps: int = 64
) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition ``H = U diag(lambdas) U*`` of a quaternion Hermitian matrix.

    ``lambdas`` are real and nonascending; ``U`` is unitary and gauge fixed.
    ``tol`` bounds the allowed Hermitian deviation (default
    ``1e-10 * max(1, ||H||_F)``).
    """
    h = _check_matrix(h)
    m = h.shape[0]
    if h.shape[1] != m:
        raise DimensionMismatch(f"matrix of shape {h.shape[:2]} is not square")
    hnorm = qfro(h)
    tol = 1e-10 * max(1.0, hnorm) if tol is None else tol
    hh = conj_transpose(h)
    dev = float(np.max(np.abs(h - hh)))
    if dev > tol:
        raise NotHermitian(f"quaternion matrix is not Hermitian (deviation {dev:.3g})")
    h = 0.5 * (h + hh)
    if m == 1:
        return h[0, 0, :1].copy(), qeye(1)

    vals, vecs = complex_hermitian_eig(complex_adjoint(h), max_sweeps=max_sweeps)
    pair_tol = 1e-9 * (1.0 + hnorm)
    gaps = np.abs(vals[0::2] - vals[1::2])
    if np.any(gaps > pair_tol):
        raise ConvergenceFailure(
            f"complex adjoint spectrum is not paired (worst split {gaps.max():.3g})"
        )
    mu = 0.5 * (vals[0::2] + vals[1::2])
    # eigenvectors are shared only across numerically equal values; a wider
    # grouping would trade residual accuracy for nothing
    group_tol = 1e3 * _EPS * (1.0 + hnorm)

    basis = np.zeros((2 * m, 0), dtype=complex)
    columns = []
    start = 0
    while start < m:
        stop = start + 1
        while stop < m and mu[stop - 1] - mu[stop] <= group_tol:
            stop += 1
        basis, chosen = _greedy_quaternion_basis(
            basis, vecs[:, 2 * start : 2 * stop], stop - start
        )
        columns.extend(chosen)
        start = stop
    u = np.stack(columns, axis=1)
    u, _ = gauge_fix_columns(u)
    return mu, u


def quat_svd(
    a: np.ndarray, tol: float | None = None, max_sweeps: int = 64
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Full SVD ``A = U Sigma V*`` by one-sided Jacobi on quaternion columns.

    Returns ``(U, sigmas, V)`` with ``U`` m x m, ``V`` n x n unitary and
    ``min(m, n)`` nonnegative sigmas in nonascending order.
    """
    a = _check_matrix(a)
    m, n = a.shape[:2]
    if m < n:
        v, sigmas, u = quat_svd(conj_transpose(a), tol, max_sweeps)
        return u, sigmas, v
    tol = n * _EPS if tol is None else tol
    w = a.copy()
    v = qeye(n)
    for _ in range(max_sweeps):
        rotated = False
        for ps, qs in round_robin_schedule(n):
            wp, wq = w[:, ps], w[:, qs]
            alpha = np.sum(wp * wp, axis=(0, 2))
            beta = np.sum(wq * wq, axis=(0, 2))
            gamma = qmul_arr(qconj_arr(wp), wq).sum(axis=0)
            g = np.sqrt(np.sum(gamma * gamma, axis=-1))
            active = (g > 0.0) & (g > tol * np.sqrt(alpha * beta))
            if not np.any(active):
                continue
            rotated = True
            ps, qs = ps[active], qs[active]
            wp, wq, vp = wp[:, active], wq[:, active], v[:, ps]
            alpha, beta, gamma, g = alpha[active], beta[active], gamma[active], g[active]
            # rotate each column q so that <w_p, w_q> becomes the real number g
            phase = qconj_arr(gamma) / g[:, None]
            wq, vq = np.split(qmul_arr(np.concatenate([wq, v[:, qs]]), phase[None]), [m])
            t = _jacobi_tangent((beta - alpha) / (2.0 * g))
            cs = (1.0 / np.sqrt(1.0 + t * t))[None, :, None]
            sn = t[None, :, None] * cs
            w[:, ps], w[:, qs] = cs * wp - sn * wq, sn * wp + cs * wq
            v[:, ps], v[:, qs] = cs * vp - sn * vq, sn * vp + cs * vq
        if not rotated:
            break
    else:
        raise ConvergenceFailure(f"one-sided Jacobi did not converge in {max_sweeps} sweeps")

    sigmas = np.sqrt(np.sum(w * w, axis=(0, 2)))
    order = np.argsort(-sigmas, kind="stable")
    sigmas, w, v = sigmas[order], w[:, order], v[:, order]
    rank_tol = max(m, n) * _EPS * (sigmas[0] if n else 0.0)
    rank = int(np.sum(sigmas > rank_tol)) if sigmas.size and sigmas[0] > 0 else 0

    v, phases = gauge_fix_columns(v)
    u_cols = w[:, :rank] / sigmas[:rank][None, :, None]
    u_cols = qmul_arr(u_cols, phases[None, :rank])
    u = complete_unitary(u_cols, m)
    u, _ = gauge_fix_columns(u, range(rank, m))
    return u, sigmas, v
