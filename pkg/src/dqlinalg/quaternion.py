"""Quaternions ``w + x i + y j + z k``.

Scalars are :class:`Quaternion` values. Quaternion vectors and matrices
are plain float arrays whose trailing axis holds ``(w, x, y, z)``, so an
m x n quaternion matrix has shape ``(m, n, 4)``. Matrix products go
through the complex-pair form ``A = A1 + A2 j`` with ``A1 = w + x i`` and
``A2 = y + z i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_CONJ = np.array([1.0, -1.0, -1.0, -1.0])


@dataclass(frozen=True)
class Quaternion:
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        for name in ("w", "x", "y", "z"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"non-finite quaternion component {name}={v}")
            object.__setattr__(self, name, v)

    @classmethod
    def from_array(cls, a) -> "Quaternion":
        w, x, y, z = (float(v) for v in a)
        return cls(w, x, y, z)

    def to_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])

    @classmethod
    def coerce(cls, value) -> "Quaternion":
        if isinstance(value, Quaternion):
            return value
        return cls(float(value))

    def __add__(self, other):
        o = Quaternion.coerce(other)
        return Quaternion(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __sub__(self, other):
        o = Quaternion.coerce(other)
        return Quaternion(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)

    def __rsub__(self, other):
        return Quaternion.coerce(other) - self

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return qmul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self * other
        return NotImplemented

    def __truediv__(self, scalar: float):
        return Quaternion(self.w / scalar, self.x / scalar, self.y / scalar, self.z / scalar)

    def conj(self) -> "Quaternion":
        return qconj(self)

    def norm(self) -> float:
        return qnorm(self)

    def real(self) -> float:
        return self.w

    def imag(self) -> "Quaternion":
        return Quaternion(0.0, self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return self.w == 0.0 and self.x == 0.0 and self.y == 0.0 and self.z == 0.0

    def inverse(self) -> "Quaternion":
        n2 = self.w**2 + self.x**2 + self.y**2 + self.z**2
        if n2 == 0.0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return self.conj() / n2

    def __str__(self):
        return f"{self.w:+g}{self.x:+g}i{self.y:+g}j{self.z:+g}k"


I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def qmul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product ``p q``."""
    return Quaternion(
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    )


def qconj(q: Quaternion) -> Quaternion:
    return Quaternion(q.w, -q.x, -q.y, -q.z)


def qnorm(q: Quaternion) -> float:
    # hypot rescales internally, so tiny nonzero quaternions keep a nonzero norm
    return math.hypot(q.w, q.x, q.y, q.z)


def qdot(p: Quaternion, q: Quaternion) -> float:
    """Real inner product of coefficient vectors, ``Re(p conj(q))``."""
    return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z


# ----------------------------------------------------------------------
# array helpers, trailing axis = (w, x, y, z)


# flat index i*4+j of the a_i b_j terms for each output component, with
# signs, listed in the order they are summed
_MUL_IDX = np.array([[0, 5, 10, 15], [1, 4, 11, 14], [2, 7, 8, 13], [3, 6, 9, 12]])
_MUL_SGN = np.array([[1.0, -1, -1, -1], [1, 1, 1, -1], [1, -1, 1, 1], [1, 1, -1, 1]])


def qmul_arr(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise Hamilton product with broadcasting.

    Pure elementwise arithmetic (no BLAS), so results are reproducible
    bit for bit and match the scalar product.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    o = a[..., :, None] * b[..., None, :]
    t = o.reshape(o.shape[:-2] + (16,))[..., _MUL_IDX] * _MUL_SGN
    return t[..., 0] + t[..., 1] + t[..., 2] + t[..., 3]


def qconj_arr(a: np.ndarray) -> np.ndarray:
    return np.asarray(a, dtype=float) * _CONJ


def qabs_arr(a: np.ndarray) -> np.ndarray:
    return np.sqrt(np.sum(np.square(a), axis=-1))


def qeye(m: int) -> np.ndarray:
    out = np.zeros((m, m, 4))
    out[np.arange(m), np.arange(m), 0] = 1.0
    return out


def qzeros(m: int, n: int) -> np.ndarray:
    return np.zeros((m, n, 4))


def qreal_diag(values) -> np.ndarray:
    """Square quaternion matrix with the given real diagonal."""
    values = np.asarray(values, dtype=float)
    out = qzeros(len(values), len(values))
    out[np.arange(len(values)), np.arange(len(values)), 0] = values
    return out


def conj_transpose(a: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(np.swapaxes(qconj_arr(a), 0, 1))


def to_complex_pair(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(a, dtype=float)
    return a[..., 0] + 1j * a[..., 1], a[..., 2] + 1j * a[..., 3]


def from_complex_pair(a1: np.ndarray, a2: np.ndarray) -> np.ndarray:
    return np.stack([a1.real, a1.imag, a2.real, a2.imag], axis=-1)


def qmatmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Quaternion matrix product for shapes (m, k, 4) @ (k, n, 4)."""
    a1, a2 = to_complex_pair(a)
    b1, b2 = to_complex_pair(b)
    # j z = conj(z) j for complex z
    return from_complex_pair(a1 @ b1 - a2 @ b2.conj(), a1 @ b2 + a2 @ b1.conj())


def qmatvec(a: np.ndarray, x: np.ndarray) -> np.ndarray:
    return qmatmul(a, x[:, None, :])[:, 0, :]


def qfro(a: np.ndarray) -> float:
    return float(np.sqrt(np.sum(np.square(a))))


def complex_adjoint(a: np.ndarray) -> np.ndarray:
    """The 2m x 2n complex matrix ``[[A1, A2], [-conj(A2), conj(A1)]]``."""
    a1, a2 = to_complex_pair(a)
    return np.block([[a1, a2], [-a2.conj(), a1.conj()]])


def from_complex_adjoint(m: np.ndarray, tol: float | None = None) -> np.ndarray:
    """Inverse of :func:`complex_adjoint`.

    When ``tol`` is given the block symmetry is checked first.
    """
    rows, cols = m.shape
    if rows % 2 or cols % 2:
        raise ValueError("complex adjoint must have even dimensions")
    p, q = rows // 2, cols // 2
    a1, a2 = m[:p, :q], m[:p, q:]
    if tol is not None:
        dev = max(
            np.max(np.abs(m[p:, :q] + a2.conj()), initial=0.0),
            np.max(np.abs(m[p:, q:] - a1.conj()), initial=0.0),
        )
        if dev > tol:
            raise ValueError(f"matrix lacks complex-adjoint block symmetry (deviation {dev:.3g})")
    return from_complex_pair(a1, a2)


def column_to_complex(x: np.ndarray) -> np.ndarray:
    """First column of the complex adjoint of a quaternion column vector."""
    return np.concatenate([x[:, 0] + 1j * x[:, 1], -x[:, 2] + 1j * x[:, 3]])


def complex_to_column(c: np.ndarray) -> np.ndarray:
    m = c.shape[0] // 2
    a, b = c[:m], c[m:]
    return np.stack([a.real, a.imag, -b.real, b.imag], axis=-1)


def complex_partner(c: np.ndarray) -> np.ndarray:
    """Second adjoint column ``[-conj(b); conj(a)]`` paired with ``[a; b]``."""
    m = c.shape[0] // 2
    return np.concatenate([-c[m:].conj(), c[:m].conj()])
