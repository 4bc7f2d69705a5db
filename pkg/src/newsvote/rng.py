"""Seeded pseudo-randomness shared across the toolkit.

All shuffling and sampling in this package runs on a splitmix64 stream so
that splits, bootstraps and feature draws are reproducible from a single
64-bit seed, independent of numpy's generator internals.
"""

from __future__ import annotations

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """splitmix64 finalizer: one avalanche pass over a 64-bit value."""
    z = z & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


class SplitMix64:
    """splitmix64 PRNG: state advances by a fixed odd constant, output is
    the avalanche of the state.  Tiny, fast, and trivially portable."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return mix64(self._state)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n). Uses modulo reduction; the bias is
        below 2**-64 * n and irrelevant for the sizes used here."""
        if n <= 0:
            raise ValueError("below() needs n >= 1")
        return self.next_u64() % n

    def unit(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0 ** -53

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle driven by this stream."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def derive_seed(seed: int, index: int) -> int:
    """Deterministic child seed for substream `index` (e.g. per-tree seeds)."""
    return mix64(mix64(seed) ^ mix64(_GOLDEN ^ (index + 1)))
