import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from conftest import rand_q
from dqlinalg.quaternion import (
    I,
    J,
    K,
    Quaternion,
    complex_adjoint,
    conj_transpose,
    from_complex_adjoint,
    qconj,
    qconj_arr,
    qdot,
    qmatmul,
    qmul,
    qmul_arr,
    qnorm,
)

Q = Quaternion
ONE = Q(1.0)
quat = arrays(float, 4, elements=st.floats(-10, 10)).map(Q.from_array)


def chi(q):
    """Oracle: the 2x2 complex matrix of a quaternion."""
    a, b = complex(q.w, q.x), complex(q.y, q.z)
    return np.array([[a, b], [-b.conjugate(), a.conjugate()]])


def test_multiplication_table():
    table = {
        (I, I): -ONE, (J, J): -ONE, (K, K): -ONE,
        (I, J): K, (J, K): I, (K, I): J,
        (J, I): -K, (K, J): -I, (I, K): -J,
    }
    for (a, b), c in table.items():
        assert a * b == c
    for u in (ONE, I, J, K):
        assert ONE * u == u == u * ONE
    assert I * J * K == -ONE


def test_conj_norm_inverse():
    q = Q(1, 2, -2, 4)
    assert qconj(q) == Q(1, -2, 2, -4)
    assert qnorm(q) == 5.0
    prod = q * q.inverse()
    assert np.allclose(prod.to_array(), [1, 0, 0, 0], atol=1e-15)
    with pytest.raises(ZeroDivisionError):
        Q().inverse()


@given(quat, quat)
def test_real_symmetric_product(p, q):
    s = qmul(p, qconj(q)) + qmul(q, qconj(p))
    assert max(abs(s.x), abs(s.y), abs(s.z)) < 1e-13 * (1 + qnorm(p) * qnorm(q))
    assert s.w == pytest.approx(2 * qdot(p, q), rel=1e-12, abs=1e-12)


@given(quat, quat)
def test_product_matches_complex_representation(p, q):
    np.testing.assert_allclose(chi(p * q), chi(p) @ chi(q), atol=1e-12)


@given(quat, quat)
def test_conj_reverses_products_and_norm_is_multiplicative(p, q):
    np.testing.assert_allclose(qconj(p * q).to_array(), (qconj(q) * qconj(p)).to_array(), atol=1e-12)
    assert qnorm(p * q) == pytest.approx(qnorm(p) * qnorm(q), rel=1e-12, abs=1e-12)


def test_array_product_matches_scalar(rng):
    a, b = rng.normal(size=(50, 4)), rng.normal(size=(50, 4))
    got = qmul_arr(a, b)
    for i in range(50):
        assert np.array_equal(got[i], qmul(Q.from_array(a[i]), Q.from_array(b[i])).to_array())


def test_complex_adjoint_examples():
    j = np.array([[[0.0, 0.0, 1.0, 0.0]]])
    np.testing.assert_array_equal(complex_adjoint(j), [[0, 1], [-1, 0]])
    eye = np.zeros((3, 3, 4))
    eye[range(3), range(3), 0] = 1
    np.testing.assert_array_equal(complex_adjoint(eye), np.eye(6))


def test_complex_adjoint_is_multiplicative_and_invertible(rng):
    a, b = rand_q(rng, 3, 4), rand_q(rng, 4, 2)
    assert np.max(np.abs(complex_adjoint(qmatmul(a, b)) - complex_adjoint(a) @ complex_adjoint(b))) < 1e-12
    np.testing.assert_array_equal(from_complex_adjoint(complex_adjoint(a), tol=0.0), a)
    with pytest.raises(ValueError):
        from_complex_adjoint(np.ones((4, 4), dtype=complex), tol=1e-12)


def test_matrix_product_matches_entrywise_sums(rng):
    a, b = rand_q(rng, 3, 5), rand_q(rng, 5, 2)
    got = qmatmul(a, b)
    for i in range(3):
        for j in range(2):
            acc = Q()
            for k in range(5):
                acc = acc + Q.from_array(a[i, k]) * Q.from_array(b[k, j])
            np.testing.assert_allclose(got[i, j], acc.to_array(), atol=1e-14)


def test_conj_transpose(rng):
    a = rand_q(rng, 2, 3)
    h = conj_transpose(a)
    assert h.shape == (3, 2, 4)
    np.testing.assert_array_equal(h[2, 1], qconj_arr(a[1, 2]))
