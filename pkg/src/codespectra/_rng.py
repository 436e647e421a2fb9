"""Deterministic 64-bit sampling stream (SplitMix64).

All randomness in the package flows through this generator so that results
are reproducible across platforms and library versions.  Constants are the
standard SplitMix64 ones (Steele, Lea, Flood 2014):

    increment 0x9E3779B97F4A7C15, mixers 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB.

Per-trial streams are decorrelated by running the master seed and trial
counter through one avalanche pass before seeding the stream.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_INCREMENT = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

DEFAULT_SEED = 0x5EED_C0DE


def avalanche(x: int) -> int:
    """SplitMix64 finalizer: a bijective 64-bit bit mixer."""
    x &= _MASK64
    x ^= x >> 30
    x = (x * _MIX1) & _MASK64
    x ^= x >> 27
    x = (x * _MIX2) & _MASK64
    x ^= x >> 31
    return x


def trial_seed(master_seed: int, trial_id: int) -> int:
    """The sub-stream seed for one trial; fully determined by its inputs."""
    return avalanche((master_seed + (trial_id + 1) * _INCREMENT) & _MASK64)


class SplitMix64:
    """Sequential SplitMix64 stream with unbiased bounded draws."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next64(self) -> int:
        self._state = (self._state + _INCREMENT) & _MASK64
        return avalanche(self._state)

    def bits(self, nbits: int) -> int:
        out = 0
        got = 0
        while got < nbits:
            out = (out << 64) | self.next64()
            got += 64
        return out >> (got - nbits)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection; bound may exceed 2^64."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        if bound == 1:
            return 0
        nbits = (bound - 1).bit_length()
        while True:
            v = self.bits(nbits)
            if v < bound:
                return v
