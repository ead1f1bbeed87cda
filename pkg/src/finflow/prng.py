"""Reproducible random numbers, independent of any library RNG.

The generator is xorshift64*: from a nonzero 64-bit state ``x``,

    x ^= x >> 12;  x ^= x << 25 (mod 2**64);  x ^= x >> 27

and the output is ``x * 0x2545F4914F6CDD1D mod 2**64``.  A given seed
produces the same stream on every platform and Python version, which is
what the fixed-seed corpora in the test suite rely on.
"""

MASK64 = (1 << 64) - 1

_MULTIPLIER = 0x2545F4914F6CDD1D
_ZERO_SEED_STATE = 0x9E3779B97F4A7C15  # state must never be zero


class Xorshift64Star:
    __slots__ = ("_state",)

    def __init__(self, seed=0):
        self._state = (seed & MASK64) or _ZERO_SEED_STATE

    def next_u64(self):
        x = self._state
        x ^= x >> 12
        x = (x ^ (x << 25)) & MASK64
        x ^= x >> 27
        self._state = x
        return (x * _MULTIPLIER) & MASK64

    def next_float(self):
        """Uniform in [0, 1) with 53-bit resolution."""
        return (self.next_u64() >> 11) * 2.0**-53

    def next_int(self, upper):
        """Integer in [0, upper); the tiny modulo bias does not matter here."""
        return self.next_u64() % upper
