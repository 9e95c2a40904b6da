"""Reproducible integer random streams.

Stream ``i`` of seed ``s`` starts from ``splitmix64(s + (i + 1) * 0x9E3779B97F4A7C15)``
(replaced by 1 if zero) and advances with xorshift64*::

    x ^= x >> 12; x ^= x << 25; x ^= x >> 27
    out = x * 0x2545F4914F6CDD1D            (mod 2^64)

A three-way choice is ``(out >> 32) % 3``.  All arithmetic is on unsigned
64-bit words, so any language reproduces the same choices.
"""

from __future__ import annotations

import numpy as np

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_STAR = np.uint64(0x2545F4914F6CDD1D)
_MASK64 = (1 << 64) - 1


def _u(k: int) -> np.uint64:
    return np.uint64(k)


def splitmix64(x: np.ndarray) -> np.ndarray:
    z = x.astype(np.uint64, copy=True)
    z = (z ^ (z >> _u(30))) * _MIX1
    z = (z ^ (z >> _u(27))) * _MIX2
    return z ^ (z >> _u(31))


class XorShiftStreams:
    """``count`` independent xorshift64* streams advanced in lockstep."""

    def __init__(self, seed: int, count: int):
        idx = np.arange(1, count + 1, dtype=np.uint64)
        base = np.uint64(seed & _MASK64)
        state = splitmix64(base + idx * _GOLDEN)
        state[state == 0] = np.uint64(1)
        self.state = state

    def next_u64(self) -> np.ndarray:
        x = self.state
        x ^= x >> _u(12)
        x ^= x << _u(25)
        x ^= x >> _u(27)
        self.state = x
        return x * _STAR

    def choice3(self) -> np.ndarray:
        return ((self.next_u64() >> _u(32)) % _u(3)).astype(np.intp)
