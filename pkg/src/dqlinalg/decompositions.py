"""Dual quaternion Hermitian eigendecomposition, SVD and spectral norm.

Both decompositions start from a decomposition of the standard part and
then fix the infinitesimal part:

* the standard spectrum is split into clusters of (numerically) equal
  values; inside a cluster the standard factor is free up to a unitary,
  which is spent diagonalizing the matching block of the transformed
  infinitesimal part;
* coupling between different clusters is removed by a first-order
  correction ``U = U0 (I + X eps)`` with skew-Hermitian ``X``, which is
  exactly unitary because ``eps**2 == 0``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dual_scalar import DualNumber
from .errors import IllConditionedGap, NotHermitian, NotSquare
from .matrix import DQMatrix, conj_transpose, diag_dual, frobenius_norm, matmul, part_residuals
from .quaternion import conj_transpose as qH
from .quaternion import qeye, qfro, qmatmul, qmul_arr
from .quaternion_solvers import gauge_fix_columns, quat_hermitian_eig, quat_svd

_EPS = np.finfo(float).eps


@dataclass
class BlockStructure:
    """Intermediate data of a dual decomposition.

    ``sizes`` are the cluster sizes of the standard spectrum (for an SVD
    the trailing zero cluster is listed last when present), ``transformed``
    is the infinitesimal part after all block rotations (``C'`` or ``B'``),
    ``x``/``y`` the skew-Hermitian left/right corrections and
    ``block_values`` the infinitesimal eigen/singular values per block.
    """

    sizes: list[int]
    transformed: np.ndarray
    x: np.ndarray
    y: np.ndarray | None
    block_values: list[np.ndarray]


@dataclass
class HermEig:
    U: DQMatrix
    lambdas: list[DualNumber]
    structure: BlockStructure

    def reconstruct(self) -> DQMatrix:
        return matmul(matmul(self.U, diag_dual(self.lambdas)), conj_transpose(self.U))


@dataclass
class DualSVD:
    U: DQMatrix
    sigmas: list[DualNumber]
    V: DQMatrix
    appreciable_rank: int
    rank: int
    structure: BlockStructure

    @property
    def s(self) -> int:
        return len(self.sigmas)

    def sigma_matrix(self) -> DQMatrix:
        return diag_dual(self.sigmas, self.U.rows, self.V.rows)

    def reconstruct(self) -> DQMatrix:
        return matmul(matmul(self.U, self.sigma_matrix()), conj_transpose(self.V))


def _clusters(values: np.ndarray, tol: float) -> list[tuple[int, int]]:
    """Split a nonascending sequence into runs whose consecutive gaps are <= tol."""
    out = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i - 1] - values[i] > tol:
            out.append((start, i))
            start = i
    return out


def _check_gaps(means: list[float], scale: float) -> None:
    floor = 1e3 * _EPS * scale
    for hi, lo in zip(means, means[1:]):
        if hi - lo < floor:
            raise IllConditionedGap(
                f"clusters at {hi!r} and {lo!r} are closer than {floor:.3g}; raise cluster_tol"
            )


def _cluster_ids(clusters, size: int) -> np.ndarray:
    ids = np.empty(size, dtype=int)
    for k, (a, b) in enumerate(clusters):
        ids[a:b] = k
    return ids


def _herm(q: np.ndarray) -> np.ndarray:
    return 0.5 * (q + qH(q))


def _block_diag_rotate(q0: np.ndarray, r: np.ndarray, corr: np.ndarray, phases: np.ndarray) -> DQMatrix:
    """``Q0 R (I + corr eps)`` with each column right-multiplied by its phase."""
    w = qmatmul(q0, r)
    st = qmul_arr(w, phases[None])
    in_ = qmul_arr(qmatmul(w, corr), phases[None])
    return DQMatrix(st, in_)


def dq_hermitian_eig(a: DQMatrix, cluster_tol: float | None = None, tol: float | None = None) -> HermEig:
    """Eigendecomposition ``A = U diag(lambdas) U*`` of a dual quaternion Hermitian matrix.

    Eigenvalues are dual numbers in nonascending total order. Standard
    eigenvalues whose gaps are at most ``cluster_tol`` (default
    ``1e-8 * max(1, ||A_st||_2)``) are treated as one multiple eigenvalue
    and reported with their common mean.
    """
    m, n = a.shape
    if m != n:
        raise NotSquare(f"matrix of shape {a.shape} is not square")
    scale_f = max(1.0, frobenius_norm(a).st)
    tol = 1e-10 * scale_f if tol is None else tol
    dev = max(float(np.max(np.abs(a.st - qH(a.st)))), float(np.max(np.abs(a.in_ - qH(a.in_)))))
    if dev > tol:
        raise NotHermitian(f"dual quaternion matrix is not Hermitian (deviation {dev:.3g})")
    a_st, a_in = _herm(a.st), _herm(a.in_)

    d, u0 = quat_hermitian_eig(a_st)
    scale = max(1.0, float(np.max(np.abs(d))))
    cluster_tol = 1e-8 * scale if cluster_tol is None else cluster_tol
    clusters = _clusters(d, cluster_tol)
    means = [float(np.mean(d[i:j])) for i, j in clusters]
    _check_gaps(means, scale)
    dbar = np.concatenate([np.full(j - i, mu) for (i, j), mu in zip(clusters, means)])

    c = _herm(qmatmul(qmatmul(qH(u0), a_in), u0))
    r = qeye(m)
    lam_in = np.zeros(m)
    block_values = []
    for i, j in clusters:
        vals, vi = quat_hermitian_eig(_herm(c[i:j, i:j]))
        r[i:j, i:j] = vi
        lam_in[i:j] = vals
        block_values.append(vals)
    cp = qmatmul(qmatmul(qH(r), c), r)

    ids = _cluster_ids(clusters, m)
    off = ids[:, None] != ids[None, :]
    x = np.zeros((m, m, 4))
    gap = dbar[None, :] - dbar[:, None]
    x[off] = cp[off] / gap[off][:, None]

    _, phases = gauge_fix_columns(qmatmul(u0, r))
    u = _block_diag_rotate(u0, r, x, phases)
    lambdas = [DualNumber(dbar[k], lam_in[k]) for k in range(m)]
    structure = BlockStructure([j - i for i, j in clusters], cp, x, None, block_values)
    return HermEig(u, lambdas, structure)


def dq_svd(a: DQMatrix, cluster_tol: float | None = None) -> DualSVD:
    """Singular value decomposition ``A = U [Sigma_t 0; 0 0] V*``.

    The ``min(m, n)`` dual singular values come out appreciable first,
    then positive infinitesimal, then zero, each group nonascending.
    Standard singular values at most ``cluster_tol`` (default
    ``1e-8 * max(1, ||A_st||_2)``) count as zero; positive ones closer than
    ``cluster_tol`` are merged into one multiple value.
    """
    m, n = a.shape
    s = min(m, n)
    u0, sig, v0 = quat_svd(a.st)
    scale = max(1.0, float(sig[0]))
    cluster_tol = 1e-8 * scale if cluster_tol is None else cluster_tol
    r0 = int(np.sum(sig > cluster_tol))
    clusters = _clusters(sig[:r0], cluster_tol)
    means = [float(np.mean(sig[i:j])) for i, j in clusters]
    _check_gaps(means + [0.0], scale)
    sbar = np.zeros(s)
    for (i, j), mu in zip(clusters, means):
        sbar[i:j] = mu

    b = qmatmul(qmatmul(qH(u0), a.in_), v0)
    ru, rv = qeye(m), qeye(n)
    inf_vals = np.zeros(s)
    block_values = []
    for i, j in clusters:
        # the common block rotation can only make the Hermitian part diagonal;
        # the skew-Hermitian remainder is absorbed by the right correction
        vals, ri = quat_hermitian_eig(_herm(b[i:j, i:j]))
        ru[i:j, i:j] = ri
        rv[i:j, i:j] = ri
        inf_vals[i:j] = vals
        block_values.append(vals)
    if r0 < m and r0 < n:
        pz, cz, qz = quat_svd(b[r0:, r0:])
        zero_tol = 1e3 * _EPS * (qfro(a.st) + qfro(a.in_))
        cz = np.where(cz > zero_tol, cz, 0.0)
        ru[r0:, r0:] = pz
        rv[r0:, r0:] = qz
        inf_vals[r0:s] = cz
        block_values.append(cz)
    bp = qmatmul(qmatmul(qH(ru), b), rv)

    x = np.zeros((m, m, 4))
    y = np.zeros((n, n, 4))
    if r0:
        sp = sbar[:r0]
        ids = _cluster_ids(clusters, r0)
        same = ids[:, None] == ids[None, :]
        bpp = bp[:r0, :r0]
        b1 = -bpp
        b2 = -qH(bpp)
        with np.errstate(divide="ignore", invalid="ignore"):
            den = (sp[:, None] ** 2 - sp[None, :] ** 2)[..., None]
            y_pp = (sp[:, None, None] * b1 + sp[None, :, None] * b2) / den
            x_pp = (sp[None, :, None] * b1 + sp[:, None, None] * b2) / den
        y_pp[same] = (-(bpp - qH(bpp)) / (2.0 * sp[:, None, None]))[same]
        x_pp[same] = 0.0
        x[:r0, :r0] = x_pp
        y[:r0, :r0] = y_pp
        if r0 < n:
            y[:r0, r0:] = -bp[:r0, r0:] / sp[:, None, None]
            y[r0:, :r0] = -qH(y[:r0, r0:])
        if r0 < m:
            x[r0:, :r0] = bp[r0:, :r0] / sp[None, :, None]
            x[:r0, r0:] = -qH(x[r0:, :r0])

    # one gauge per singular pair, taken from the right vector
    _, phases_v = gauge_fix_columns(qmatmul(v0, rv))
    _, phases_u = gauge_fix_columns(qmatmul(u0, ru), range(s, m))
    phases_u[:s] = phases_v[:s]
    u = _block_diag_rotate(u0, ru, x, phases_u)
    v = _block_diag_rotate(v0, rv, y, phases_v)

    sigmas = [DualNumber(sbar[k], inf_vals[k]) for k in range(s)]
    rank = r0 + int(np.sum(inf_vals[r0:s] > 0.0))
    sizes = [j - i for i, j in clusters] + ([s - r0] if r0 < s else [])
    structure = BlockStructure(sizes, bp, x, y, block_values)
    return DualSVD(u, sigmas, v, r0, rank, structure)


def spectral_norm(a: DQMatrix, cluster_tol: float | None = None) -> DualNumber:
    """Largest dual singular value, which equals the induced 2-norm."""
    return dq_svd(a, cluster_tol).sigmas[0]


def eigenvalues(a: DQMatrix, cluster_tol: float | None = None) -> list[DualNumber]:
    return dq_hermitian_eig(a, cluster_tol).lambdas


def singular_values(a: DQMatrix, cluster_tol: float | None = None) -> list[DualNumber]:
    return dq_svd(a, cluster_tol).sigmas


def decomposition_residuals(a: DQMatrix, dec) -> dict[str, float]:
    """Reconstruction and unitarity residuals (Frobenius) per part."""
    rec_st, rec_in = part_residuals(a, dec.reconstruct())
    out = {"reconstruction_st": rec_st, "reconstruction_in": rec_in}
    factors = [("U", dec.U)] + ([("V", dec.V)] if isinstance(dec, DualSVD) else [])
    for name, f in factors:
        gram = matmul(conj_transpose(f), f)
        u_st, u_in = part_residuals(gram, DQMatrix.identity(f.cols))
        out[f"unitarity_{name}_st"] = u_st
        out[f"unitarity_{name}_in"] = u_in
    return out
