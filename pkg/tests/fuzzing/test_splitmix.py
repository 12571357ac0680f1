#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
from fractions import Fraction
from unittest import TestCase

from hypothesis import given, strategies as st

from desargues.fuzzing import SplitMix64, derive_seed, mix64
from desargues.fuzzing.splitmix import MASK64

class SplitMix64Test(TestCase):

    def test_reference_outputs(self):
        rng = SplitMix64(0)
        self.assertEqual([rng.next_u64() for _i in range(3)],
                         [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F])

    def test_derived_seeds_follow_the_stream(self):
        for seed in (0, 42, MASK64):
            rng = SplitMix64(seed)
            self.assertEqual([derive_seed(seed, i) for i in range(5)], [rng.next_u64() for _i in range(5)])

    def test_seed_range(self):
        with self.assertRaises(ValueError):
            SplitMix64(-1)
        with self.assertRaises(ValueError):
            SplitMix64(MASK64 + 1)
        with self.assertRaises(ValueError):
            SplitMix64(1).randint(3, 2)

    def test_determinism(self):
        a, b = SplitMix64(99), SplitMix64(99)
        self.assertEqual([a.randint(-10, 10) for _i in range(100)], [b.randint(-10, 10) for _i in range(100)])
        self.assertEqual(mix64(MASK64 + 5), mix64(4))

    def test_nonzero_int_covers_both_ends(self):
        rng = SplitMix64(5)
        values = {rng.nonzero_int(3) for _i in range(500)}
        self.assertEqual(values, {-3, -2, -1, 1, 2, 3})

    @given(st.integers(0, MASK64), st.integers(-1000, 1000), st.integers(0, 1000))
    def test_randint_in_range(self, seed, low, width):
        value = SplitMix64(seed).randint(low, low + width)
        self.assertTrue(low <= value <= low + width)

    @given(st.integers(0, MASK64), st.integers(1, 50))
    def test_rational_bounds(self, seed, bound):
        value = SplitMix64(seed).rational(bound)
        self.assertIsInstance(value, Fraction)
        self.assertLessEqual(abs(value), bound)
