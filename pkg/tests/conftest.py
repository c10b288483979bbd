import numpy as np
import pytest
from hypothesis import settings

from dqlinalg.matrix import DQMatrix
from dqlinalg.quaternion import complex_adjoint

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# filled by test_acceptance, printed at the end of the session
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def rand_q(rng, m, n):
    return rng.uniform(-1.0, 1.0, (m, n, 4))


def rand_herm_q(rng, m):
    a = rand_q(rng, m, m)
    return 0.5 * (a + np.swapaxes(a * np.array([1.0, -1.0, -1.0, -1.0]), 0, 1))


def rand_dq(rng, m, n):
    return DQMatrix(rand_q(rng, m, n), rand_q(rng, m, n))


def rand_herm_dq(rng, m):
    return DQMatrix(rand_herm_q(rng, m), rand_herm_q(rng, m))


def np_eigvals(h):
    """Oracle: quaternion Hermitian eigenvalues, descending, via numpy on the complex adjoint."""
    vals = np.linalg.eigvalsh(complex_adjoint(h))[::-1]
    return 0.5 * (vals[0::2] + vals[1::2])


def np_singvals(a):
    vals = np.linalg.svd(complex_adjoint(a), compute_uv=False)
    return 0.5 * (vals[0::2] + vals[1::2])


def worked_pair():
    """``[[1, i eps], [-i eps, 1]]``."""
    st = np.zeros((2, 2, 4))
    st[0, 0, 0] = st[1, 1, 0] = 1.0
    in_ = np.zeros((2, 2, 4))
    in_[0, 1, 1] = 1.0
    in_[1, 0, 1] = -1.0
    return DQMatrix(st, in_)
