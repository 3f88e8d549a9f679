"""Deterministic pseudo-random generator shared by every module.

All randomness in the engine flows through :class:`Rng` so that datasets,
shuffles, and weight initialization replay bit-identically from a seed,
here and in any other implementation of the same schedule.  The generator
is xorshift32 (https://en.wikipedia.org/wiki/Xorshift): tiny, portable,
and plenty for toy-scale data.  Not cryptographic.

Every method documents exactly how many raw draws it consumes; callers that
need alignable streams (dataset generators, weight init) rely on that.
"""

import math

_MASK32 = 0xFFFFFFFF

# Substitute seed for 0, which xorshift would map to itself forever.
_ZERO_SEED_REPLACEMENT = 0x9E3779B9

_TWO_POW_32 = 4294967296.0
_MIN_UNIFORM = 2.0 ** -32


class Rng:
    """xorshift32 stream.  Single-owner mutable state; never share one
    instance between concurrent activities."""

    def __init__(self, seed: int):
        state = seed & _MASK32
        if state == 0:
            state = _ZERO_SEED_REPLACEMENT
        self.state = state

    def next_float(self) -> float:
        """Advance one step and return a float in [0, 1).  One draw."""
        x = self.state
        x ^= (x << 13) & _MASK32
        x ^= x >> 17
        x ^= (x << 5) & _MASK32
        self.state = x
        return x / _TWO_POW_32

    def uniform(self, lo: float, hi: float) -> float:
        """Uniform float in [lo, hi).  One draw."""
        return lo + (hi - lo) * self.next_float()

    def next_gaussian(self, mean: float = 0.0, stddev: float = 1.0) -> float:
        """Normal draw via the cosine branch of Box-Muller.

        Always consumes exactly two draws, even when stddev == 0, so
        streams stay alignable.  u1 is clamped away from 0 to keep the
        log finite.
        """
        u1 = max(self.next_float(), _MIN_UNIFORM)
        u2 = self.next_float()
        return mean + stddev * math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)
