"""Portable, bit-exact pseudo-random streams.

SplitMix64: the i-th output (i = 1, 2, ...) of a stream seeded with ``s`` is
``mix(s + i * 0x9E3779B97F4A7C15 mod 2**64)`` where ``mix`` is

    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z =  z ^ (z >> 31)

Uniform doubles take the top 53 bits: ``(u >> 11) * 2**-53`` in [0, 1).
Normals use Box-Muller on consecutive uniform pairs ``(u1, u2)``:
``sqrt(-2 ln(1 - u1)) * cos(2 pi u2)`` and the matching ``sin`` term.
"""

from __future__ import annotations

import numpy as np

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_MASK = (1 << 64) - 1


def _mix(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _M1
    z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def derive_seed(seed: int, stream: int) -> int:
    """Independent child seed for sub-stream ``stream`` of ``seed``."""
    z = np.array([(seed + (stream + 1) * 0x9E3779B97F4A7C15) & _MASK], dtype=np.uint64)
    z = _mix(_mix(z) ^ np.uint64(stream & _MASK))
    return int(z[0])


class SplitMix64:
    def __init__(self, seed: int):
        self.state = int(seed) & _MASK

    def integers(self, n: int) -> np.ndarray:
        idx = np.arange(1, n + 1, dtype=np.uint64)
        with np.errstate(over="ignore"):
            z = np.uint64(self.state) + idx * _GAMMA
            out = _mix(z)
        self.state = (self.state + n * 0x9E3779B97F4A7C15) & _MASK
        return out

    def random(self, n: int) -> np.ndarray:
        return (self.integers(n) >> np.uint64(11)).astype(np.float64) * 2.0**-53

    def uniform(self, low: float, high: float, n: int) -> np.ndarray:
        return low + (high - low) * self.random(n)

    def normal(self, n: int) -> np.ndarray:
        m = (n + 1) // 2
        u = self.random(2 * m)
        u1, u2 = u[0::2], u[1::2]
        rad = np.sqrt(-2.0 * np.log1p(-u1))
        out = np.empty(2 * m)
        out[0::2] = rad * np.cos(2 * np.pi * u2)
        out[1::2] = rad * np.sin(2 * np.pi * u2)
        return out[:n]
