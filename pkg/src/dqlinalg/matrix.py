"""Dense dual quaternion vectors and matrices.

Both parts are stored as float arrays with a trailing quaternion axis:
a vector holds ``st`` and ``in_`` of shape ``(m, 4)``, a matrix of shape
``(m, n, 4)``. Instances are treated as immutable.
"""

from __future__ import annotations

import numpy as np

from .dual_quaternion import DualQuaternion
from .dual_scalar import DualNumber
from .errors import DimensionMismatch, NotSquare
from .quaternion import (
    conj_transpose as q_conj_transpose,
    qconj_arr,
    qeye,
    qfro,
    qmatmul,
    qmul_arr,
)


def _as_quat_array(a, ndim: int) -> np.ndarray:
    a = np.array(a, dtype=float)
    if a.ndim != ndim or a.shape[-1] != 4:
        raise DimensionMismatch(f"expected an array with {ndim} axes ending in 4, got {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("non-finite entries")
    return a


class DQVector:
    __slots__ = ("st", "in_")

    def __init__(self, st, in_=None):
        st = _as_quat_array(st, 2)
        in_ = np.zeros_like(st) if in_ is None else _as_quat_array(in_, 2)
        if st.shape != in_.shape:
            raise DimensionMismatch("standard and infinitesimal parts differ in shape")
        if st.shape[0] < 1:
            raise DimensionMismatch("vectors need at least one entry")
        self.st = st
        self.in_ = in_

    @classmethod
    def from_entries(cls, entries) -> "DQVector":
        arr = np.array([DualQuaternion.to_array(e) for e in entries])
        return cls(arr[:, :4], arr[:, 4:])

    def __len__(self):
        return self.st.shape[0]

    def __getitem__(self, i) -> DualQuaternion:
        return DualQuaternion.from_array(np.concatenate([self.st[i], self.in_[i]]))

    def entries(self) -> list[DualQuaternion]:
        return [self[i] for i in range(len(self))]

    def __add__(self, other: "DQVector") -> "DQVector":
        return DQVector(self.st + other.st, self.in_ + other.in_)

    def __sub__(self, other: "DQVector") -> "DQVector":
        return DQVector(self.st - other.st, self.in_ - other.in_)

    def right_mul(self, alpha: DualQuaternion) -> "DQVector":
        """The right scalar multiple ``x alpha``."""
        a_st, a_in = alpha.st.to_array(), alpha.in_.to_array()
        return DQVector(qmul_arr(self.st, a_st), qmul_arr(self.in_, a_st) + qmul_arr(self.st, a_in))

    def scale(self, d: DualNumber) -> "DQVector":
        return DQVector(self.st * d.st, self.in_ * d.st + self.st * d.in_)

    def is_appreciable(self) -> bool:
        return bool(np.any(self.st != 0.0))

    def as_matrix(self) -> "DQMatrix":
        return DQMatrix(self.st[:, None, :], self.in_[:, None, :])


class DQMatrix:
    __slots__ = ("st", "in_")

    def __init__(self, st, in_=None):
        st = _as_quat_array(st, 3)
        in_ = np.zeros_like(st) if in_ is None else _as_quat_array(in_, 3)
        if st.shape != in_.shape:
            raise DimensionMismatch("standard and infinitesimal parts differ in shape")
        if st.shape[0] < 1 or st.shape[1] < 1:
            raise DimensionMismatch(f"degenerate matrix shape {st.shape[:2]}")
        self.st = st
        self.in_ = in_

    @classmethod
    def from_entries(cls, rows) -> "DQMatrix":
        arr = np.array([[e.to_array() for e in row] for row in rows], dtype=float)
        return cls(arr[..., :4], arr[..., 4:])

    @classmethod
    def identity(cls, m: int) -> "DQMatrix":
        return cls(qeye(m))

    @classmethod
    def zeros(cls, m: int, n: int) -> "DQMatrix":
        return cls(np.zeros((m, n, 4)))

    @classmethod
    def from_real(cls, st_real, in_real=None) -> "DQMatrix":
        """Matrix with real standard (and optional real infinitesimal) entries."""
        st_real = np.atleast_2d(np.asarray(st_real, dtype=float))
        st = np.zeros(st_real.shape + (4,))
        st[..., 0] = st_real
        in_ = np.zeros_like(st)
        if in_real is not None:
            in_[..., 0] = np.asarray(in_real, dtype=float)
        return cls(st, in_)

    @property
    def shape(self) -> tuple[int, int]:
        return self.st.shape[0], self.st.shape[1]

    @property
    def rows(self) -> int:
        return self.st.shape[0]

    @property
    def cols(self) -> int:
        return self.st.shape[1]

    @property
    def standard_part(self) -> np.ndarray:
        return self.st

    @property
    def infinitesimal_part(self) -> np.ndarray:
        return self.in_

    def __getitem__(self, ij) -> DualQuaternion:
        i, j = ij
        return DualQuaternion.from_array(np.concatenate([self.st[i, j], self.in_[i, j]]))

    def column(self, j: int) -> DQVector:
        return DQVector(self.st[:, j], self.in_[:, j])

    def __add__(self, other: "DQMatrix") -> "DQMatrix":
        _same_shape(self, other)
        return DQMatrix(self.st + other.st, self.in_ + other.in_)

    def __sub__(self, other: "DQMatrix") -> "DQMatrix":
        _same_shape(self, other)
        return DQMatrix(self.st - other.st, self.in_ - other.in_)

    def __neg__(self) -> "DQMatrix":
        return DQMatrix(-self.st, -self.in_)

    def __mul__(self, alpha: float) -> "DQMatrix":
        return DQMatrix(self.st * alpha, self.in_ * alpha)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, DQVector):
            return matvec(self, other)
        return matmul(self, other)

    def conj_transpose(self) -> "DQMatrix":
        return conj_transpose(self)

    @property
    def H(self) -> "DQMatrix":
        return conj_transpose(self)

    def is_appreciable(self) -> bool:
        return bool(np.any(self.st != 0.0))

    def allclose(self, other: "DQMatrix", atol: float = 1e-12) -> bool:
        return self.shape == other.shape and max_abs_diff(self, other) <= atol

    def __repr__(self):
        return f"DQMatrix(shape={self.shape})"


def _same_shape(a: DQMatrix, b: DQMatrix) -> None:
    if a.shape != b.shape:
        raise DimensionMismatch(f"shape {a.shape} vs {b.shape}")


def max_abs_diff(a: DQMatrix, b: DQMatrix) -> float:
    return float(max(np.max(np.abs(a.st - b.st)), np.max(np.abs(a.in_ - b.in_))))


def part_residuals(a: DQMatrix, b: DQMatrix) -> tuple[float, float]:
    """Frobenius distances between standard parts and between infinitesimal parts."""
    _same_shape(a, b)
    return qfro(a.st - b.st), qfro(a.in_ - b.in_)


def inner_product(u: DQVector, v: DQVector) -> DualQuaternion:
    """``<u, v> = sum_i conj(v_i) u_i``."""
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} and {len(v)}")
    vs, vi = qconj_arr(v.st), qconj_arr(v.in_)
    st = qmul_arr(vs, u.st).sum(axis=0)
    in_ = (qmul_arr(vi, u.st) + qmul_arr(vs, u.in_)).sum(axis=0)
    return DualQuaternion.from_array(np.concatenate([st, in_]))


def _dual_l2(st: np.ndarray, in_: np.ndarray) -> DualNumber:
    if not np.any(st != 0.0):
        return DualNumber(0.0, float(np.sqrt(np.sum(in_ * in_))))
    n = float(np.sqrt(np.sum(st * st)))
    return DualNumber(n, float(np.sum(st * in_)) / n)


def vec_norm2(u: DQVector) -> DualNumber:
    """Dual-number 2-norm; infinitesimal vectors get ``(0, ||u_in||)``."""
    return _dual_l2(u.st, u.in_)


def frobenius_norm(a: DQMatrix) -> DualNumber:
    return _dual_l2(a.st, a.in_)


def matmul(a: DQMatrix, b: DQMatrix) -> DQMatrix:
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return DQMatrix(qmatmul(a.st, b.st), qmatmul(a.st, b.in_) + qmatmul(a.in_, b.st))


def matvec(a: DQMatrix, x: DQVector) -> DQVector:
    if a.cols != len(x):
        raise DimensionMismatch(f"cannot multiply {a.shape} by vector of length {len(x)}")
    out = matmul(a, x.as_matrix())
    return DQVector(out.st[:, 0], out.in_[:, 0])


def conj_transpose(a: DQMatrix) -> DQMatrix:
    return DQMatrix(q_conj_transpose(a.st), q_conj_transpose(a.in_))


def _require_square(a: DQMatrix) -> None:
    if a.rows != a.cols:
        raise NotSquare(f"matrix of shape {a.shape} is not square")


def trace(a: DQMatrix) -> DualQuaternion:
    _require_square(a)
    idx = np.arange(a.rows)
    return DualQuaternion.from_array(
        np.concatenate([a.st[idx, idx].sum(axis=0), a.in_[idx, idx].sum(axis=0)])
    )


def default_tol(a: DQMatrix) -> float:
    return 1e-10 * max(1.0, frobenius_norm(a).st)


def hermitian_deviation(a: DQMatrix) -> float:
    _require_square(a)
    return max_abs_diff(a, conj_transpose(a))


def is_hermitian(a: DQMatrix, tol: float | None = None) -> bool:
    tol = default_tol(a) if tol is None else tol
    return hermitian_deviation(a) <= tol


def is_partially_unitary(a: DQMatrix, tol: float | None = None) -> bool:
    if a.cols > a.rows:
        raise DimensionMismatch(f"partially unitary needs cols <= rows, got {a.shape}")
    tol = 1e-10 if tol is None else tol
    gram = matmul(conj_transpose(a), a)
    return max_abs_diff(gram, DQMatrix.identity(a.cols)) <= tol


def is_unitary(a: DQMatrix, tol: float | None = None) -> bool:
    _require_square(a)
    return is_partially_unitary(a, tol)


def orthonormal_check(vectors, tol: float = 1e-10) -> bool:
    vectors = list(vectors)
    if not vectors:
        return True
    m = len(vectors[0])
    if any(len(v) != m for v in vectors):
        raise DimensionMismatch("vectors of different lengths")
    for i, u in enumerate(vectors):
        for j, v in enumerate(vectors):
            target = np.zeros(8)
            if i == j:
                target[0] = 1.0
            if np.max(np.abs(inner_product(u, v).to_array() - target)) > tol:
                return False
    return True


def has_full_column_rank_st(a: DQMatrix, tol: float | None = None) -> bool:
    """Sufficient test for right linear independence of the columns.

    Full quaternion column rank of the standard part implies the columns
    are right linearly independent over the dual quaternions. The converse
    is not claimed.
    """
    from .quaternion_solvers import quat_svd

    if a.cols > a.rows:
        return False
    _, sigmas, _ = quat_svd(a.st)
    tol = 1e-12 * max(1.0, float(sigmas[0])) if tol is None else tol
    return bool(sigmas[-1] > tol)


def diag_dual(values, m: int | None = None, n: int | None = None) -> DQMatrix:
    """Rectangular diagonal matrix from a sequence of dual numbers."""
    values = list(values)
    m = len(values) if m is None else m
    n = len(values) if n is None else n
    out = DQMatrix.zeros(m, n)
    st, in_ = out.st.copy(), out.in_.copy()
    for i, v in enumerate(values):
        st[i, i, 0] = v.st
        in_[i, i, 0] = v.in_
    return DQMatrix(st, in_)


def hermitian_part(a: DQMatrix) -> DQMatrix:
    """``(A* + A) / 2``."""
    _require_square(a)
    return (conj_transpose(a) + a) * 0.5

