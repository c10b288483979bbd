import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import np_eigvals, np_singvals, rand_dq, rand_herm_dq, rand_herm_q, rand_q, worked_pair
from dqlinalg import generators as gen
from dqlinalg.decompositions import (
    decomposition_residuals,
    dq_hermitian_eig,
    dq_svd,
    eigenvalues,
    singular_values,
    spectral_norm,
)
from dqlinalg.dual_scalar import DualNumber, Ordering, compare, dual_sum
from dqlinalg.errors import IllConditionedGap, NotHermitian, NotSquare
from dqlinalg.inequalities import compare_tolerant
from dqlinalg.matrix import DQMatrix, DQVector, conj_transpose, frobenius_norm, matmul, matvec, trace, vec_norm2
from dqlinalg.quaternion import complex_adjoint, qreal_diag
from dqlinalg.rng import stream

D = DualNumber
seeds = st.integers(0, 2**32 - 1)


def _groups(vals, tol=1e-7):
    out, start = [], 0
    for i in range(1, len(vals) + 1):
        if i == len(vals) or vals[i - 1] - vals[i] > tol:
            out.append((start, i))
            start = i
    return out


def oracle_eig(a):
    """First-order perturbation of the complex adjoint spectrum, via numpy only."""
    vals, q = np.linalg.eigh(complex_adjoint(a.st))
    vals, q = vals[::-1], q[:, ::-1]
    c = complex_adjoint(a.in_)
    out = []
    for i, j in _groups(vals):
        p = q[:, i:j]
        inf = np.linalg.eigvalsh(p.conj().T @ c @ p)[::-1][::2]
        out += [(float(np.mean(vals[i:j])), float(x)) for x in inf]
    return out


def oracle_svd(a):
    m, n = a.shape
    s = min(m, n)
    u, sv, vh = np.linalg.svd(complex_adjoint(a.st))
    v = vh.conj().T
    b = complex_adjoint(a.in_)
    r = int(np.sum(sv[::2][:s] > 1e-7))
    out = []
    for i, j in _groups(sv[: 2 * r]):
        blk = u[:, i:j].conj().T @ b @ v[:, i:j]
        inf = np.linalg.eigvalsh(0.5 * (blk + blk.conj().T))[::-1][::2]
        out += [(float(np.mean(sv[i:j])), float(x)) for x in inf]
    if r < s:
        c = np.linalg.svd(u[:, 2 * r :].conj().T @ b @ v[:, 2 * r :], compute_uv=False)[::2][: s - r]
        out += [(0.0, float(x)) for x in c]
    return out


def as_pairs(values):
    return sorted(((v.st, v.in_) for v in values), reverse=True)


def assert_values(got, expected, atol=1e-8):
    expected = sorted(expected, reverse=True)
    got = as_pairs(got)
    assert len(got) == len(expected)
    for (gs, gi), (es, ei) in zip(got, expected):
        assert abs(gs - es) <= atol * (1 + abs(es))
        assert abs(gi - ei) <= atol * (1 + abs(ei))


def assert_small_residuals(a, dec, bound=1e-8):
    fro = frobenius_norm(a)
    scale = 1 + fro.st + abs(fro.in_)
    res = decomposition_residuals(a, dec)
    for key, val in res.items():
        limit = bound * scale if key.startswith("reconstruction") else bound
        assert val <= limit, (key, val)


def is_nonascending(values):
    return all(compare(x, y) is not Ordering.LESS for x, y in zip(values, values[1:]))


def test_worked_hermitian_example():
    a = worked_pair()
    # the infinitesimal block [[0, i], [-i, 0]] has eigenvalues +-1
    np.testing.assert_allclose(np_eigvals(a.in_), [1.0, -1.0], atol=1e-15)
    dec = dq_hermitian_eig(a)
    assert_values(dec.lambdas, [(1.0, 1.0), (1.0, -1.0)], atol=1e-15)
    assert dec.structure.sizes == [2]
    assert_small_residuals(a, dec, 1e-14)


def test_diagonal_standard_hermitian():
    dec = dq_hermitian_eig(DQMatrix(qreal_diag([3.0, 1.0])))
    assert dec.lambdas == [D(3.0, 0.0), D(1.0, 0.0)]
    np.testing.assert_array_equal(dec.U.st, qreal_diag([1.0, 1.0]))
    assert not np.any(dec.U.in_)


def test_infinitesimal_hermitian_matches_quaternion_oracle(rng):
    b = rand_herm_q(rng, 5)
    dec = dq_hermitian_eig(DQMatrix(np.zeros_like(b), b))
    np.testing.assert_array_equal([x.st for x in dec.lambdas], np.zeros(5))
    np.testing.assert_allclose([x.in_ for x in dec.lambdas], np_eigvals(b), atol=1e-12)


def test_hermitian_errors(rng):
    with pytest.raises(NotSquare):
        dq_hermitian_eig(rand_dq(rng, 2, 3))
    with pytest.raises(NotHermitian):
        dq_hermitian_eig(rand_dq(rng, 3, 3))
    h = rand_herm_dq(rng, 3)
    bad = DQMatrix(h.st, h.in_ + rand_q(rng, 3, 3))
    with pytest.raises(NotHermitian):
        dq_hermitian_eig(bad)


def test_svd_diagonal_example():
    a = DQMatrix.from_real(np.diag([2.0, 0.0]), np.diag([0.0, 1.0]))
    dec = dq_svd(a)
    assert dec.sigmas == [D(2.0, 0.0), D(0.0, 1.0)]
    assert (dec.appreciable_rank, dec.rank, dec.s) == (1, 2, 2)


def test_svd_infinitesimal_matches_quaternion_oracle(rng):
    b = rand_q(rng, 4, 3)
    dec = dq_svd(DQMatrix(np.zeros_like(b), b))
    assert dec.appreciable_rank == 0 and dec.rank == 3
    np.testing.assert_array_equal([x.st for x in dec.sigmas], np.zeros(3))
    np.testing.assert_allclose([x.in_ for x in dec.sigmas], np_singvals(b), atol=1e-12)


def test_svd_of_quaternion_matrix(rng):
    a = rand_q(rng, 3, 5)
    dec = dq_svd(DQMatrix(a))
    np.testing.assert_allclose([x.st for x in dec.sigmas], np_singvals(a), atol=1e-12)
    assert max(abs(x.in_) for x in dec.sigmas) < 1e-13
    assert dec.appreciable_rank == dec.rank == 3


def test_zero_matrix():
    dec = dq_svd(DQMatrix.zeros(3, 2))
    assert dec.sigmas == [D(0.0, 0.0)] * 2
    assert dec.appreciable_rank == dec.rank == 0
    assert_small_residuals(DQMatrix.zeros(3, 2), dec, 1e-15)
    assert spectral_norm(DQMatrix.zeros(2, 2)) == D(0.0, 0.0)


def test_spectral_norm_examples(rng):
    a = DQMatrix.from_real(np.diag([3.0, 1.0]), np.diag([0.0, 5.0]))
    assert spectral_norm(a) == D(3.0, 0.0)
    b = rand_q(rng, 3, 3)
    got = spectral_norm(DQMatrix(np.zeros_like(b), b))
    assert got.st == 0.0
    assert got.in_ == pytest.approx(np_singvals(b)[0], rel=1e-12)
    u = gen.random_dual_unitary(stream(3, 9), 5, 2)
    n = spectral_norm(u)
    assert n.st == pytest.approx(1.0, abs=1e-13) and abs(n.in_) < 1e-12


def test_delegating_projections(rng):
    h = rand_herm_dq(rng, 4)
    assert eigenvalues(h) == dq_hermitian_eig(h).lambdas
    a = rand_dq(rng, 3, 4)
    assert singular_values(a) == dq_svd(a).sigmas


def test_close_clusters_are_rejected():
    a = DQMatrix(qreal_diag([1.0 + 1e-13, 1.0]))
    with pytest.raises(IllConditionedGap):
        dq_hermitian_eig(a, cluster_tol=1e-15)
    with pytest.raises(IllConditionedGap):
        dq_svd(a, cluster_tol=1e-15)
    # with the default tolerance the two values form one block
    assert dq_hermitian_eig(a).structure.sizes == [2]


def hermitian_inputs(seed, m, kind):
    rs = stream(seed, 1)
    if kind == "clustered":
        return gen.clustered_hermitian(rs, m)
    if kind == "infinitesimal":
        return gen.infinitesimal(rs, m, m, herm=True)
    return gen.hermitian(rs, m)


def general_inputs(seed, m, n, kind):
    rs = stream(seed, 2)
    if kind == "clustered":
        return gen.clustered_general(rs, m, n)
    if kind == "infinitesimal":
        return gen.infinitesimal(rs, m, n)
    return gen.general(rs, m, n)


herm_kinds = st.sampled_from(["random", "clustered", "infinitesimal"])


@given(seeds, st.integers(1, 8), herm_kinds)
def test_hermitian_eig_contract(seed, m, kind):
    a = hermitian_inputs(seed, m, kind)
    dec = dq_hermitian_eig(a)
    assert is_nonascending(dec.lambdas)
    assert_values(dec.lambdas, oracle_eig(a))
    assert_small_residuals(a, dec)
    x = dec.structure.x
    np.testing.assert_allclose(x, -conj_transpose(DQMatrix(x)).st, atol=1e-14)
    assert sum(dec.structure.sizes) == m
    # trace identity in both parts
    t = trace(a).to_array()
    total = dual_sum(dec.lambdas)
    assert abs(t[0] - total.st) <= 1e-8 * (1 + abs(total.st))
    assert abs(t[4] - total.in_) <= 1e-8 * (1 + abs(total.in_))


@given(seeds, st.integers(1, 8), st.integers(1, 8), herm_kinds)
def test_svd_contract(seed, m, n, kind):
    a = general_inputs(seed, m, n, kind)
    dec = dq_svd(a)
    s, r, t = dec.s, dec.appreciable_rank, dec.rank
    assert s == min(m, n) and 0 <= r <= t <= s
    assert all(x.st > 0 for x in dec.sigmas[:r])
    assert all(x.st == 0 and x.in_ > 0 for x in dec.sigmas[r:t])
    assert all(x == D(0.0, 0.0) for x in dec.sigmas[t:])
    assert is_nonascending(dec.sigmas)
    assert_values(dec.sigmas, oracle_svd(a))
    assert_small_residuals(a, dec)
    for c in (dec.structure.x, dec.structure.y):
        np.testing.assert_allclose(c, -conj_transpose(DQMatrix(c)).st, atol=1e-14)
    np.testing.assert_allclose([x.st for x in dec.sigmas], np_singvals(a.st), atol=1e-9)
    # ||A||_F^2 = sum sigma_i^2 in dual arithmetic
    f = frobenius_norm(a)
    sq = dual_sum(x * x for x in dec.sigmas)
    assert abs((f * f).st - sq.st) <= 1e-8 * (1 + sq.st)
    assert abs((f * f).in_ - sq.in_) <= 1e-8 * (1 + abs(sq.in_))


@given(seeds, st.integers(1, 7), herm_kinds)
def test_eigenvalues_unitarily_invariant(seed, m, kind):
    a = hermitian_inputs(seed, m, kind)
    w = DQMatrix(gen.random_unitary(stream(seed, 5), m))
    b = matmul(matmul(w, a), conj_transpose(w))
    assert_values(dq_hermitian_eig(b).lambdas, as_pairs(dq_hermitian_eig(a).lambdas))


@given(seeds, st.integers(1, 6), st.integers(1, 6))
def test_spectral_norm_bounds_unit_vectors(seed, m, n):
    a = general_inputs(seed, m, n, "random")
    dec = dq_svd(a)
    sigma1 = dec.sigmas[0]
    rng = np.random.default_rng(seed)
    for _ in range(50):
        x = rng.normal(size=(n, 4))
        x /= np.linalg.norm(x)
        y = rng.normal(size=(n, 4))
        # make <x_st, x_in> real part zero so that ||x|| = (1, 0)
        y -= np.sum(x * y) * x
        nx = vec_norm2(matvec(a, DQVector(x, y)))
        assert compare_tolerant(nx, sigma1) is not Ordering.GREATER
    v1 = dec.V.column(0)
    assert vec_norm2(v1).st == pytest.approx(1.0, abs=1e-12)
    got = vec_norm2(matvec(a, v1))
    assert abs(got.st - sigma1.st) <= 1e-8 * (1 + sigma1.st)
    assert abs(got.in_ - sigma1.in_) <= 1e-8 * (1 + abs(sigma1.in_))


def test_spectral_norm_of_scaled_identity():
    a = DQMatrix.from_real(np.eye(3) * 2.0, np.eye(3) * -1.0)
    assert spectral_norm(a) == D(2.0, -1.0)
    assert math.isclose(frobenius_norm(a).st, 2 * math.sqrt(3))
