import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from dqlinalg.dual_quaternion import DualQuaternion, dq_is_appreciable, dqconj, dqinverse, dqmul, magnitude
from dqlinalg.dual_scalar import DualNumber, dual_abs
from dqlinalg.errors import Singular
from dqlinalg.quaternion import I, J, K, Quaternion, qnorm

DQ = DualQuaternion
Q = Quaternion
ZQ = Q()
dq = arrays(float, 8, elements=st.floats(-10, 10)).map(DQ.from_array)


def as_matrix(q):
    """Oracle: st + in eps as the 4x4 complex block matrix [[chi(st), chi(in)], [0, chi(st)]]."""
    def chi(x):
        a, b = complex(x.w, x.x), complex(x.y, x.z)
        return np.array([[a, b], [-b.conjugate(), a.conjugate()]])
    z = np.zeros((2, 2))
    return np.block([[chi(q.st), chi(q.in_)], [z, chi(q.st)]])


def test_product_examples():
    assert dqmul(DQ(I, ZQ), DQ(J, ZQ)) == DQ(K, ZQ)
    assert dqmul(DQ(ZQ, I), DQ(ZQ, J)) == DQ(ZQ, ZQ)
    q = DQ(Q(1, 2, 3, 4), Q(-1, 0, 5, 2))
    assert DQ(Q(1.0), ZQ) * q == q


def test_conj_examples():
    assert dqconj(DQ(I, J)) == DQ(-I, -J)
    assert dqconj(DQ(Q(1.0), ZQ)) == DQ(Q(1.0), ZQ)


@given(dq, dq)
def test_conj_reverses_products(p, q):
    np.testing.assert_allclose(dqconj(p * q).to_array(), (dqconj(q) * dqconj(p)).to_array(), atol=1e-11)


@given(dq, dq)
def test_product_matches_block_representation(p, q):
    np.testing.assert_allclose(as_matrix(p * q), as_matrix(p) @ as_matrix(q), atol=1e-11)


def test_magnitude_examples():
    assert magnitude(DQ(I, J)) == DualNumber(1.0, 0.0)
    assert magnitude(DQ(Q(2.0), Q(2.0))) == DualNumber(2.0, 2.0)
    assert magnitude(DQ(ZQ, Q(0, 3, 0, 0))) == DualNumber(0.0, 3.0)


@given(st.floats(-10, 10), st.floats(-10, 10))
def test_magnitude_reduces_to_dual_abs(a, b):
    assert magnitude(DQ(Q(a), Q(b))) == dual_abs(DualNumber(a, b))


@given(arrays(float, 4, elements=st.floats(-10, 10)))
def test_magnitude_reduces_to_quaternion_norm(x):
    q = Q.from_array(x)
    assert magnitude(DQ(q, ZQ)) == DualNumber(qnorm(q), 0.0)


@given(dq)
def test_magnitude_squared_is_conj_product(q):
    # |q|^2 = q conj(q) in dual arithmetic for appreciable q
    if q.st.is_zero():
        return
    m = magnitude(q)
    sq = (q * dqconj(q)).to_array()
    assert (m * m).st == pytest.approx(sq[0], rel=1e-12)
    assert (m * m).in_ == pytest.approx(sq[4], rel=1e-10, abs=1e-10)
    assert np.max(np.abs(sq[[1, 2, 3, 5, 6, 7]])) < 1e-10


def test_inverse_examples():
    assert dqinverse(DQ(I, ZQ)) == DQ(-I, ZQ)
    assert dqinverse(DQ(Q(1.0), J)) == DQ(Q(1.0), -J)
    with pytest.raises(Singular):
        dqinverse(DQ(ZQ, Q(1.0)))


@given(dq)
def test_inverse_is_two_sided(q):
    if qnorm(q.st) < 1e-2:
        return
    inv = dqinverse(q)
    one = np.zeros(8)
    one[0] = 1
    scale = 1 + (qnorm(q.in_) / qnorm(q.st)) ** 2
    np.testing.assert_allclose((q * inv).to_array(), one, atol=1e-12 * scale)
    np.testing.assert_allclose((inv * q).to_array(), one, atol=1e-12 * scale)


def test_appreciable_examples():
    assert dq_is_appreciable(DQ(I, ZQ))
    assert not dq_is_appreciable(DQ(ZQ, K))
    assert not dq_is_appreciable(DQ())


def test_dual_number_scaling():
    q = DQ(I, J)
    assert q * DualNumber(2.0, 1.0) == DQ(I * 2.0, J * 2.0 + I)
    assert DualNumber(2.0, 1.0) * q == q * DualNumber(2.0, 1.0)
