"""Seeded random dual quaternion matrices.

Generators use only elementwise arithmetic and small reductions so that a
fixed seed gives the same bits everywhere (no BLAS calls).
"""

from __future__ import annotations

import numpy as np

from .matrix import DQMatrix
from .quaternion import qconj_arr, qmul_arr
from .rng import RandomStream

KINDS = ("general", "hermitian", "infinitesimal", "eps-perturb-pair", "clustered-herm-pair")
PAIR_KINDS = ("eps-perturb-pair", "clustered-herm-pair")


def _qmm(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Quaternion matrix product by explicit elementwise sums."""
    return qmul_arr(a[:, :, None, :], b[None, :, :, :]).sum(axis=1)


def _qH(a: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(np.swapaxes(qconj_arr(a), 0, 1))


def _herm(a: np.ndarray) -> np.ndarray:
    return 0.5 * (a + _qH(a))


def random_quaternion_matrix(rs: RandomStream, m: int, n: int) -> np.ndarray:
    return rs.uniform((m, n, 4))


def random_hermitian_quaternion(rs: RandomStream, m: int) -> np.ndarray:
    return _herm(rs.uniform((m, m, 4)))


def random_unitary(rs: RandomStream, m: int, k: int | None = None) -> np.ndarray:
    """Quaternion matrix with ``k`` (default m) orthonormal columns, via Gram-Schmidt."""
    k = m if k is None else k
    a = rs.uniform((m, k, 4))
    q = np.zeros((m, k, 4))
    for j in range(k):
        v = a[:, j].copy()
        for _ in range(2):  # re-orthogonalize once
            for i in range(j):
                # v <- v - q_i <q_i, v>  with <x, y> = sum conj(x) y
                c = qmul_arr(qconj_arr(q[:, i]), v).sum(axis=0)
                v = v - qmul_arr(q[:, i], c[None])
        q[:, j] = v / np.sqrt(np.sum(v * v))
    return q


def random_skew_hermitian(rs: RandomStream, m: int) -> np.ndarray:
    a = rs.uniform((m, m, 4))
    return 0.5 * (a - _qH(a))


def random_dual_unitary(rs: RandomStream, m: int, k: int | None = None) -> DQMatrix:
    """``U0 (I + X eps)`` restricted to the first ``k`` columns, X skew-Hermitian."""
    k = m if k is None else k
    u0 = random_unitary(rs, m)
    x = random_skew_hermitian(rs, m)
    return DQMatrix(u0[:, :k], _qmm(u0, x)[:, :k])


def general(rs: RandomStream, m: int, n: int) -> DQMatrix:
    return DQMatrix(rs.uniform((m, n, 4)), rs.uniform((m, n, 4)))


def hermitian(rs: RandomStream, m: int) -> DQMatrix:
    return DQMatrix(random_hermitian_quaternion(rs, m), random_hermitian_quaternion(rs, m))


def infinitesimal(rs: RandomStream, m: int, n: int, herm: bool = False) -> DQMatrix:
    in_ = random_hermitian_quaternion(rs, m) if herm else rs.uniform((m, n, 4))
    return DQMatrix(np.zeros_like(in_), in_)


def block_sizes(rs: RandomStream, m: int, max_block: int = 4) -> list[int]:
    sizes = []
    while sum(sizes) < m:
        sizes.append(min(rs.integers(1, max_block), m - sum(sizes)))
    return sizes


def _distinct_levels(rs: RandomStream, count: int, low: float) -> np.ndarray:
    """``count`` descending values with gaps of at least 0.1."""
    steps = 0.1 + rs.uniform01((count,))
    return low + np.cumsum(steps)[::-1]


def clustered_hermitian_standard(rs: RandomStream, m: int, max_block: int = 4) -> tuple[np.ndarray, list[int]]:
    """``W diag(lambda_i I_{k_i}) W*`` with distinct levels and random unitary W."""
    sizes = block_sizes(rs, m, max_block)
    levels = _distinct_levels(rs, len(sizes), -1.0)
    diag = np.concatenate([np.full(k, lev) for k, lev in zip(sizes, levels)])
    w = random_unitary(rs, m)
    return _herm(_qmm(w * diag[None, :, None], _qH(w))), sizes


def clustered_hermitian(rs: RandomStream, m: int, max_block: int = 4) -> DQMatrix:
    st, _ = clustered_hermitian_standard(rs, m, max_block)
    return DQMatrix(st, random_hermitian_quaternion(rs, m))


def clustered_general(rs: RandomStream, m: int, n: int, max_block: int = 4) -> DQMatrix:
    """Standard part ``U diag(sigma) V*`` with repeated singular values.

    The last block is zero with probability one half, which exercises the
    zero cluster of the SVD.
    """
    s = min(m, n)
    sizes = block_sizes(rs, s, max_block)
    levels = _distinct_levels(rs, len(sizes), 0.0)
    if len(sizes) > 1 and rs.uniform01() < 0.5:
        levels[-1] = 0.0
    sig = np.concatenate([np.full(k, lev) for k, lev in zip(sizes, levels)])
    u = random_unitary(rs, m, s)
    v = random_unitary(rs, n, s)
    st = _qmm(u * sig[None, :, None], _qH(v))
    return DQMatrix(st, rs.uniform((m, n, 4)))


def eps_perturb_pair(rs: RandomStream, m: int) -> tuple[DQMatrix, DQMatrix]:
    """Hermitian ``A`` and ``B = A + E eps`` with Hermitian E."""
    a = hermitian(rs, m)
    e = random_hermitian_quaternion(rs, m)
    return a, DQMatrix(a.st.copy(), a.in_ + e)


def eps_perturb_general_pair(rs: RandomStream, m: int, n: int) -> tuple[DQMatrix, DQMatrix]:
    a = general(rs, m, n)
    return a, DQMatrix(a.st.copy(), a.in_ + rs.uniform((m, n, 4)))


def clustered_herm_pair(rs: RandomStream, m: int, max_block: int = 4) -> tuple[DQMatrix, DQMatrix]:
    """Hermitian pair sharing a standard part with repeated eigenvalue blocks."""
    st, _ = clustered_hermitian_standard(rs, m, max_block)
    return (
        DQMatrix(st, random_hermitian_quaternion(rs, m)),
        DQMatrix(st.copy(), random_hermitian_quaternion(rs, m)),
    )


def generate(kind: str, rs: RandomStream, m: int, n: int | None = None) -> list[DQMatrix]:
    """Matrices for a named kind; pair kinds return two square Hermitian matrices."""
    n = m if n is None else n
    if kind == "general":
        return [general(rs, m, n)]
    if kind == "hermitian":
        return [hermitian(rs, m)]
    if kind == "infinitesimal":
        return [infinitesimal(rs, m, n)]
    if kind == "eps-perturb-pair":
        return list(eps_perturb_pair(rs, m))
    if kind == "clustered-herm-pair":
        return list(clustered_herm_pair(rs, m))
    raise ValueError(f"unknown generator kind {kind!r}; choose from {', '.join(KINDS)}")
