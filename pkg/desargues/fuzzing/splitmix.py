#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
# SplitMix64 pseudo random generator.  Fixed algorithm so trial records reproduce across runs,
# platforms and implementations.
#
from fractions import Fraction

from desargues import translate_gettext as _

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """ SplitMix64 output finalizer. """
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """
    Seed of trial `index`: the (index + 1)th output of a SplitMix64 stream started at `seed`.
    """
    return mix64(seed + GAMMA * (index + 1))


class SplitMix64:
    """ Deterministic 64-bit generator with integer and rational helpers. """
    __slots__ = ('state',)

    def __init__(self, seed: int):
        if not 0 <= seed <= MASK64:
            raise ValueError(_('Seed must be an unsigned 64-bit integer.'))
        self.state = seed

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        return mix64(self.state)

    def randint(self, low: int, high: int) -> int:
        """ Uniform integer in [low, high], rejection sampled so there is no modulo bias. """
        if high < low:
            raise ValueError(_('Empty integer range.'))
        span = high - low + 1
        limit = ((MASK64 + 1) // span) * span
        while True:
            value = self.next_u64()
            if value < limit:
                return low + value % span

    def nonzero_int(self, bound: int) -> int:
        value = self.randint(-bound, bound - 1)
        return value if value != 0 else bound

    def rational(self, bound: int, max_denominator: int = None) -> Fraction:
        """ Rational n/d with |n| <= bound and 1 <= d <= max_denominator (default bound). """
        return Fraction(self.randint(-bound, bound), self.randint(1, max_denominator or bound))
