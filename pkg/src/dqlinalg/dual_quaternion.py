"""Dual quaternions ``st + in*eps`` with quaternion parts."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dual_scalar import DualNumber
from .errors import Singular
from .quaternion import Quaternion, qconj, qdot, qmul, qnorm


@dataclass(frozen=True)
class DualQuaternion:
    st: Quaternion = field(default_factory=Quaternion)
    in_: Quaternion = field(default_factory=Quaternion)

    @classmethod
    def from_array(cls, a) -> "DualQuaternion":
        """Build from the 8 reals ``st.w st.x st.y st.z in.w in.x in.y in.z``."""
        a = np.asarray(a, dtype=float).reshape(8)
        return cls(Quaternion.from_array(a[:4]), Quaternion.from_array(a[4:]))

    @classmethod
    def from_dual(cls, d: DualNumber) -> "DualQuaternion":
        return cls(Quaternion(d.st), Quaternion(d.in_))

    def to_array(self) -> np.ndarray:
        return np.concatenate([self.st.to_array(), self.in_.to_array()])

    def __add__(self, other: "DualQuaternion"):
        return DualQuaternion(self.st + other.st, self.in_ + other.in_)

    def __sub__(self, other: "DualQuaternion"):
        return DualQuaternion(self.st - other.st, self.in_ - other.in_)

    def __neg__(self):
        return DualQuaternion(-self.st, -self.in_)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return DualQuaternion(self.st * other, self.in_ * other)
        if isinstance(other, DualNumber):
            other = DualQuaternion.from_dual(other)
        if not isinstance(other, DualQuaternion):
            return NotImplemented
        return dqmul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self * other
        if isinstance(other, DualNumber):
            return dqmul(DualQuaternion.from_dual(other), self)
        return NotImplemented

    def conj(self) -> "DualQuaternion":
        return dqconj(self)

    def is_appreciable(self) -> bool:
        return dq_is_appreciable(self)

    def imag_residue(self) -> float:
        """Largest imaginary coefficient magnitude over both parts."""
        return max(abs(self.st.x), abs(self.st.y), abs(self.st.z),
                   abs(self.in_.x), abs(self.in_.y), abs(self.in_.z))

    def real_part(self) -> DualNumber:
        return DualNumber(self.st.w, self.in_.w)


def dqmul(p: DualQuaternion, q: DualQuaternion) -> DualQuaternion:
    return DualQuaternion(qmul(p.st, q.st), qmul(p.in_, q.st) + qmul(p.st, q.in_))


def dqconj(q: DualQuaternion) -> DualQuaternion:
    return DualQuaternion(qconj(q.st), qconj(q.in_))


def dq_is_appreciable(q: DualQuaternion) -> bool:
    return not q.st.is_zero()


def magnitude(q: DualQuaternion) -> DualNumber:
    """Dual-number magnitude of a dual quaternion.

    For appreciable ``q`` the infinitesimal part is
    ``(q_st conj(q_in) + q_in conj(q_st)) / (2|q_st|)``, which is the real
    number ``Re(q_st conj(q_in)) / |q_st|``.
    """
    if q.st.is_zero():
        return DualNumber(0.0, qnorm(q.in_))
    n = qnorm(q.st)
    dot = qdot(q.st, q.in_)
    if __debug__:
        sym = qmul(q.st, qconj(q.in_)) + qmul(q.in_, qconj(q.st))
        scale = 1.0 + n * qnorm(q.in_)
        assert max(abs(sym.x), abs(sym.y), abs(sym.z)) <= 1e-13 * scale
        assert abs(sym.w - 2.0 * dot) <= 1e-13 * scale
    # normalise before the dot product so tiny parts do not underflow
    unit = Quaternion.from_array(q.st.to_array() / n)
    return DualNumber(n, qdot(unit, q.in_))


def dqinverse(q: DualQuaternion) -> DualQuaternion:
    if q.st.is_zero():
        raise Singular("infinitesimal dual quaternion is not invertible")
    inv = q.st.inverse()
    return DualQuaternion(inv, -qmul(qmul(inv, q.in_), inv))
