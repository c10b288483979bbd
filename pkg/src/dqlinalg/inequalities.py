"""Checkable trace and perturbation inequalities for dual quaternion matrices.

Every check returns an :class:`InequalityReport` whose sides are dual
numbers. Floating-point rounding is absorbed by :func:`compare_tolerant`;
nothing is clamped, so a genuine violation shows up as ``holds=False``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .decompositions import HermEig, DualSVD, dq_hermitian_eig, dq_svd
from .dual_quaternion import magnitude
from .dual_scalar import ZERO, DualNumber, Ordering, dual_sum, sort_desc
from .errors import BadK, DimensionMismatch, NotHermitian, NotSquare, PreconditionViolated
from .matrix import (
    DQMatrix,
    DQVector,
    conj_transpose,
    default_tol,
    hermitian_deviation,
    hermitian_part,
    inner_product,
    matmul,
    trace,
    vec_norm2,
)
from .quaternion import qfro

ETA_ST = 1e-10
ETA_IN = 1e-8


@dataclass
class InequalityReport:
    """``lhs <= rhs`` evaluated in dual arithmetic.

    ``scale_st``/``scale_in`` are the magnitudes the tolerances are
    relative to; ``holds`` is ``compare_tolerant(slack, 0)`` at those scales.
    """

    name: str
    lhs: DualNumber
    rhs: DualNumber
    holds: bool
    slack: DualNumber
    condition_met: bool = True
    note: str = ""
    scale_st: float = 1.0
    scale_in: float = 1.0

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": list(self.lhs.as_tuple()),
            "rhs": list(self.rhs.as_tuple()),
            "slack": list(self.slack.as_tuple()),
            "holds": self.holds,
            "condition_met": self.condition_met,
            "note": self.note,
        }


def compare_tolerant(
    p: DualNumber,
    q: DualNumber,
    eta_st: float = ETA_ST,
    eta_in: float = ETA_IN,
    scale_st: float | None = None,
    scale_in: float | None = None,
) -> Ordering:
    """Total-order comparison that treats nearly equal parts as ties.

    Standard parts are tied when they differ by at most ``eta_st * scale_st``
    (default scale ``max(1, |p_st|, |q_st|)``); the infinitesimal parts then
    decide with tolerance ``eta_in`` on the analogous scale.
    """
    if scale_st is None:
        scale_st = max(1.0, abs(p.st), abs(q.st))
    d = p.st - q.st
    if abs(d) > eta_st * scale_st:
        return Ordering.GREATER if d > 0 else Ordering.LESS
    if scale_in is None:
        scale_in = max(1.0, abs(p.in_), abs(q.in_))
    d = p.in_ - q.in_
    if abs(d) > eta_in * scale_in:
        return Ordering.GREATER if d > 0 else Ordering.LESS
    return Ordering.EQUAL


def _report(name, lhs, rhs, condition_met=True, note="", eta_st=ETA_ST, eta_in=ETA_IN) -> InequalityReport:
    slack = rhs - lhs
    scale_st = max(1.0, abs(lhs.st), abs(rhs.st))
    scale_in = max(1.0, abs(lhs.in_), abs(rhs.in_))
    order = compare_tolerant(slack, ZERO, eta_st, eta_in, scale_st, scale_in)
    return InequalityReport(
        name, lhs, rhs, order is not Ordering.LESS, slack, condition_met, note, scale_st, scale_in
    )


def _dot(x, y) -> DualNumber:
    return dual_sum(a * b for a, b in zip(x, y))


def _snapped_norm(values, scale: float, eta_st: float = ETA_ST) -> DualNumber:
    """2-norm of a dual-number vector, zeroing standard parts that are only rounding."""
    st = np.array([v.st for v in values])
    in_ = np.array([v.in_ for v in values])
    st[np.abs(st) <= eta_st * scale] = 0.0
    if not np.any(st):
        return DualNumber(0.0, math.sqrt(math.fsum(in_ * in_)))
    n = math.sqrt(math.fsum(st * st))
    return DualNumber(n, math.fsum(st * in_) / n)


def _diff_norm(a: DQMatrix, b: DQMatrix, scale: float, eta_st: float = ETA_ST) -> DualNumber:
    """``||A - B||_F`` with a rounding-level standard part treated as zero."""
    st = qfro(a.st - b.st)
    in_ = a.in_ - b.in_
    if st <= eta_st * scale:
        return DualNumber(0.0, qfro(in_))
    return DualNumber(st, float(np.sum((a.st - b.st) * in_)) / st)


def _require_hermitian(a: DQMatrix, label: str = "A") -> None:
    if a.rows != a.cols:
        raise NotSquare(f"{label} of shape {a.shape} is not square")
    if hermitian_deviation(a) > default_tol(a):
        raise NotHermitian(f"{label} is not Hermitian")


def _same_shape(a: DQMatrix, b: DQMatrix) -> None:
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes {a.shape} and {b.shape} differ")


def _real_trace(t, scale: float) -> DualNumber:
    """Dual-number value of a trace known to be real, after checking the residue."""
    if t.imag_residue() > 1e-10 * scale:
        raise ValueError(f"trace has imaginary residue {t.imag_residue():.3g}")
    return t.real_part()


# ----------------------------------------------------------------------
# majorization lemmas


def weak_majorization_check(z, y, eta_st: float = ETA_ST, eta_in: float = ETA_IN) -> bool:
    """``z`` is weakly majorized by ``y``: sorted prefix sums bounded, totals equal."""
    z, y = list(z), list(y)
    if len(z) != len(y):
        raise DimensionMismatch(f"lengths {len(z)} and {len(y)}")
    zs, ys = sort_desc(z), sort_desc(y)
    pz = py = ZERO
    for s in range(len(z)):
        pz, py = pz + zs[s], py + ys[s]
        order = compare_tolerant(pz, py, eta_st, eta_in)
        if s < len(z) - 1 and order is Ordering.GREATER:
            return False
    return compare_tolerant(pz, py, eta_st, eta_in) is Ordering.EQUAL


def _nonascending(x) -> bool:
    return all(compare_tolerant(a, b) is not Ordering.LESS for a, b in zip(x, x[1:]))


def ordered_product_dominance(x, y, z) -> InequalityReport:
    """``sum x_i z_i <= sum x_i y_i`` for nonascending x, y and z majorized by y."""
    x, y, z = list(x), list(y), list(z)
    if not len(x) == len(y) == len(z):
        raise DimensionMismatch("x, y and z must have equal lengths")
    if not (_nonascending(x) and _nonascending(y)):
        raise PreconditionViolated("x and y must be nonascending")
    if not weak_majorization_check(z, y):
        raise PreconditionViolated("z is not weakly majorized by y")
    return _report("ordered_product_dominance", _dot(x, z), _dot(x, y))


def _hermitian_diagonal(a: DQMatrix) -> list[DualNumber]:
    tol = default_tol(a)
    out = []
    for i in range(a.rows):
        d = a[i, i]
        if d.imag_residue() > tol:
            raise NotHermitian(f"diagonal entry {i} is not a dual number")
        out.append(d.real_part())
    return out


def ky_fan_partial_trace_check(a: DQMatrix, k: int, eig: HermEig | None = None) -> InequalityReport:
    """Sum of the first ``k`` diagonal entries against the ``k`` largest eigenvalues."""
    _require_hermitian(a)
    if not 1 <= k <= a.rows:
        raise BadK(f"k={k} outside 1..{a.rows}")
    eig = dq_hermitian_eig(a) if eig is None else eig
    diag = _hermitian_diagonal(a)
    return _report(f"ky_fan[k={k}]", dual_sum(diag[:k]), dual_sum(eig.lambdas[:k]))


def ky_fan_all(a: DQMatrix) -> list[InequalityReport]:
    eig = dq_hermitian_eig(a)
    return [ky_fan_partial_trace_check(a, k, eig) for k in range(1, a.rows + 1)]


def hermitian_part_vs_singular(a: DQMatrix, svd: DualSVD | None = None) -> list[InequalityReport]:
    """``lambda_i((A* + A)/2) <= sigma_i(A)`` for every index."""
    if a.rows != a.cols:
        raise NotSquare(f"matrix of shape {a.shape} is not square")
    lam = dq_hermitian_eig(hermitian_part(a)).lambdas
    sig = (dq_svd(a) if svd is None else svd).sigmas
    return [_report(f"hermitian_part_vs_singular[{i}]", l, s) for i, (l, s) in enumerate(zip(lam, sig))]


# ----------------------------------------------------------------------
# trace inequalities


def von_neumann_check(a: DQMatrix, b: DQMatrix) -> InequalityReport:
    """``trace(A* B + B* A) <= 2 sum sigma_i(A) sigma_i(B)``."""
    _same_shape(a, b)
    m = matmul(conj_transpose(a), b)
    scale = max(1.0, qfro(a.st) * qfro(b.st))
    lhs = _real_trace(trace(m + conj_transpose(m)), scale)
    rhs = 2.0 * _dot(dq_svd(a).sigmas, dq_svd(b).sigmas)
    return _report("von_neumann", lhs, rhs)


def hermitian_trace_check(a: DQMatrix, b: DQMatrix) -> InequalityReport:
    """``trace(AB + BA) <= 2 sum lambda_i(A) lambda_i(B)`` for Hermitian A, B."""
    _same_shape(a, b)
    _require_hermitian(a, "A")
    _require_hermitian(b, "B")
    scale = max(1.0, qfro(a.st) * qfro(b.st))
    lhs = _real_trace(trace(matmul(a, b) + matmul(b, a)), scale)
    rhs = 2.0 * _dot(dq_hermitian_eig(a).lambdas, dq_hermitian_eig(b).lambdas)
    return _report("hermitian_trace", lhs, rhs)


# ----------------------------------------------------------------------
# Hoffman-Wielandt type bounds


def hoffman_wielandt_singular(a: DQMatrix, b: DQMatrix, eta_st: float = ETA_ST) -> InequalityReport:
    """``||sigma(A) - sigma(B)||_2 <= ||A - B||_F``.

    The bound is established when ``A - B`` is appreciable, and when ``A``
    and ``B`` are both infinitesimal (it then reduces to the quaternion
    bound on the infinitesimal parts). Otherwise ``condition_met`` is false
    and both sides are still recorded.
    """
    _same_shape(a, b)
    scale = max(1.0, qfro(a.st), qfro(b.st))
    if qfro(a.st - b.st) > eta_st * scale:
        condition, note = True, "appreciable difference"
    elif not a.is_appreciable() and not b.is_appreciable():
        condition, note = True, "both infinitesimal"
    else:
        condition, note = False, "infinitesimal difference of appreciable matrices"
    sa, sb = dq_svd(a).sigmas, dq_svd(b).sigmas
    lhs = _snapped_norm([p - q for p, q in zip(sa, sb)], scale, eta_st)
    rhs = _diff_norm(a, b, scale, eta_st)
    return _report("hoffman_wielandt_singular", lhs, rhs, condition, note)


def hoffman_wielandt_hermitian(a: DQMatrix, b: DQMatrix, eta_st: float = ETA_ST) -> InequalityReport:
    """``||lambda(A) - lambda(B)||_2 <= ||A - B||_F`` for Hermitian A, B (unconditional)."""
    _same_shape(a, b)
    _require_hermitian(a, "A")
    _require_hermitian(b, "B")
    scale = max(1.0, qfro(a.st), qfro(b.st))
    la, lb = dq_hermitian_eig(a).lambdas, dq_hermitian_eig(b).lambdas
    lhs = _snapped_norm([p - q for p, q in zip(la, lb)], scale, eta_st)
    rhs = _diff_norm(a, b, scale, eta_st)
    return _report("hoffman_wielandt_hermitian", lhs, rhs)


def cauchy_schwarz_check(u: DQVector, v: DQVector) -> InequalityReport:
    """``|<u, v>| <= ||u||_2 ||v||_2``."""
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} and {len(v)}")
    return _report("cauchy_schwarz", magnitude(inner_product(u, v)), vec_norm2(u) * vec_norm2(v))
