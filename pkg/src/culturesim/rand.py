"""Seeded deterministic random number generation.

A small 64-bit linear congruential generator is used for every seeded
decision in the package (corpus synthesis, bootstrap sampling, weight
initialization, noise injection) so that identical seeds reproduce
identical artifacts on any platform, independent of interpreter or
library RNG internals.
"""

from __future__ import annotations

_MULT = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1


def mix_seed(seed: int, *salts: int) -> int:
    """Derive an independent child seed from a base seed and salt values."""
    h = seed & _MASK
    for salt in salts:
        h = (h ^ (salt & _MASK)) * 0x9E3779B97F4A7C15 & _MASK
        h ^= h >> 29
    return h


class Lcg:
    """64-bit LCG (MMIX constants); top 53 bits feed the float stream."""

    def __init__(self, seed: int):
        self._state = mix_seed(seed)
        self._next()  # discard first output so nearby seeds decorrelate

    def _next(self) -> int:
        self._state = (self._state * _MULT + _INC) & _MASK
        return self._state

    def random(self) -> float:
        """Uniform float in [0, 1)."""
        return (self._next() >> 11) / float(1 << 53)

    def randint(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        if n <= 0:
            raise ValueError("randint requires n >= 1")
        return int(self.random() * n)

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def choice(self, seq):
        if not seq:
            raise ValueError("choice from empty sequence")
        return seq[self.randint(len(seq))]

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample_indices(self, n: int, k: int) -> list[int]:
        """k distinct indices drawn from range(n), order randomized."""
        if k > n:
            raise ValueError("sample larger than population")
        idx = list(range(n))
        self.shuffle(idx)
        return idx[:k]
