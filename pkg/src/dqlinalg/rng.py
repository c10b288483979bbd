"""Seeded random streams.

Every stream is a Philox4x64 counter-based generator keyed by the pair
``(seed, stream)``, starting at counter zero. A uniform double on
``[-1, 1)`` is produced from each raw 64-bit output ``r`` as
``2 * (r >> 11) * 2**-53 - 1``, which is exact in binary64 and therefore
identical on every platform.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1


class RandomStream:
    def __init__(self, seed: int, stream: int = 0):
        key = np.array([seed & _MASK, stream & _MASK], dtype=np.uint64)
        self.seed = seed
        self.stream = stream
        self._bits = np.random.Philox(key=key)

    def raw(self, size: int) -> np.ndarray:
        return self._bits.random_raw(size)

    def uniform01(self, shape=()) -> np.ndarray | float:
        n = int(np.prod(shape, dtype=np.int64)) if shape != () else 1
        u = (self.raw(n) >> np.uint64(11)).astype(np.float64) * 2.0**-53
        return float(u[0]) if shape == () else u.reshape(shape)

    def uniform(self, shape=()) -> np.ndarray | float:
        """Uniform on ``[-1, 1)``."""
        u = self.uniform01(shape)
        return 2.0 * u - 1.0

    def integers(self, low: int, high: int) -> int:
        """Integer in ``[low, high]`` (inclusive)."""
        span = high - low + 1
        return low + int(self.uniform01() * span)

    def choice(self, options):
        return options[self.integers(0, len(options) - 1)]

    def permutation(self, n: int) -> np.ndarray:
        # sort by random keys, ties impossible in practice and broken by index
        return np.argsort(self.uniform01((n,)), kind="stable")


def stream(seed: int, *labels: int) -> RandomStream:
    """Stream for ``seed`` split by a sequence of small integer labels."""
    sid = 0
    for lab in labels:
        sid = (sid * 1_000_003 + lab + 1) & _MASK
    return RandomStream(seed, sid)
