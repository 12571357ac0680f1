#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
from fractions import Fraction
from unittest import TestCase

from desargues.exceptions import GeometryError, IdealPointError, CoincidentPointsError, CoincidentLinesError, \
    NotCollinearError, CoincidentWithEndpointError
from desargues.fuzzing import SplitMix64
from desargues.geometry import ProjPoint, ProjLine, LINE_AT_INFINITY, AffineMap, canonical_triple, det3, \
    from_affine, to_affine, join, meet, incident, collinear, concurrent, eq_projective, midpoint, point_along, \
    signed_ratio
from tests.helpers import pt

# Number of generated cases for each algebraic identity below.
SWEEP_CASES = 10000
SWEEP_BOUND = 20


class CanonicalFormTest(TestCase):

    def test_gcd_and_sign(self):
        self.assertEqual(canonical_triple((2, 4, -6)), (1, 2, -3))
        self.assertEqual(canonical_triple((-2, -4, 6)), (1, 2, -3))
        self.assertEqual(canonical_triple((0, -3, 6)), (0, 1, -2))
        self.assertEqual(canonical_triple((0, 0, -5)), (0, 0, 1))

    def test_rationals_are_cleared(self):
        self.assertEqual(canonical_triple((Fraction(1, 2), Fraction(1, 3), 1)), (3, 2, 6))

    def test_all_zero_is_refused(self):
        with self.assertRaises(GeometryError):
            canonical_triple((0, 0, 0))
        with self.assertRaises(ValueError):
            canonical_triple((1, 2))

    def test_projective_equality(self):
        self.assertEqual(ProjPoint(2, 4, 2), ProjPoint(1, 2, 1))
        self.assertEqual(hash(ProjPoint(2, 4, 2)), hash(ProjPoint(-1, -2, -1)))
        # A point and a line with the same triple are different values.
        self.assertNotEqual(ProjPoint(1, 2, 3), ProjLine(1, 2, 3))

    def test_immutable(self):
        p = ProjPoint(1, 2, 1)
        with self.assertRaises(AttributeError):
            p.coords = (0, 0, 1)

    def test_negative_z_affine(self):
        # The first nonzero entry is made positive, so z may end up negative.
        p = ProjPoint(1, 0, -2)
        self.assertEqual(p.coords, (1, 0, -2))
        self.assertEqual(to_affine(p), (Fraction(-1, 2), Fraction(0)))

    def test_from_affine(self):
        self.assertEqual(from_affine(Fraction(1, 2), 3).coords, (1, 6, 2))
        self.assertEqual(to_affine(from_affine(Fraction(-7, 3), 5)), (Fraction(-7, 3), Fraction(5)))

    def test_ideal(self):
        p = ProjPoint(1, -1, 0)
        self.assertTrue(p.is_ideal)
        with self.assertRaises(IdealPointError):
            to_affine(p)
        self.assertTrue(LINE_AT_INFINITY.is_infinity)

    def test_str(self):
        self.assertEqual(str(ProjLine(2, 0, -5)), '[2:0:-5]')
        self.assertEqual(repr(ProjPoint(0, 0, 1)), 'ProjPoint[0:0:1]')


class IncidenceTest(TestCase):

    def test_join_and_meet(self):
        self.assertEqual(join(pt(0, 0), pt(4, 0)), ProjLine(0, 1, 0))
        self.assertEqual(meet(ProjLine(1, 0, -1), ProjLine(0, 1, -2)), pt(1, 2))

    def test_parallel_lines_meet_at_infinity(self):
        l = join(pt(0, 0), pt(1, 0))
        m = join(pt(0, 1), pt(1, 1))
        p = meet(l, m)
        self.assertEqual(p, ProjPoint(1, 0, 0))
        self.assertTrue(incident(p, LINE_AT_INFINITY))

    def test_ideal_points_join_to_infinity(self):
        self.assertEqual(join(ProjPoint(1, 0, 0), ProjPoint(1, 3, 0)), LINE_AT_INFINITY)

    def test_degenerate_operations(self):
        with self.assertRaises(CoincidentPointsError):
            join(pt(1, 1), ProjPoint(2, 2, 2))
        with self.assertRaises(CoincidentLinesError):
            meet(ProjLine(1, 1, 1), ProjLine(-2, -2, -2))

    def test_eq_projective(self):
        self.assertTrue(eq_projective(ProjPoint(3, 6, 3), pt(1, 2)))
        self.assertTrue(eq_projective(ProjLine(-2, 0, 5), ProjLine(2, 0, -5)))
        self.assertFalse(eq_projective(pt(1, 2), pt(2, 1)))
        self.assertFalse(eq_projective(ProjPoint(1, 2, 3), ProjLine(1, 2, 3)))

    def test_collinear_and_concurrent(self):
        self.assertTrue(collinear(pt(0, 0), pt(1, 1), pt(-3, -3)))
        self.assertFalse(collinear(pt(0, 0), pt(1, 1), pt(1, 0)))
        self.assertTrue(concurrent(ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(1, -1, 0)))
        self.assertEqual(det3((1, 0, 0), (0, 1, 0), (0, 0, 1)), 1)


class AffineHelpersTest(TestCase):

    def test_midpoint(self):
        self.assertEqual(midpoint(pt(0, 0), pt(3, 1)), pt('3/2', '1/2'))
        self.assertEqual(midpoint(pt(2, 5), pt(2, 5)), pt(2, 5))
        with self.assertRaises(IdealPointError):
            midpoint(pt(0, 0), ProjPoint(1, 0, 0))

    def test_point_along(self):
        a, b = pt(0, 0), pt(4, 2)
        self.assertEqual(point_along(a, b, 0), a)
        self.assertEqual(point_along(a, b, 1), b)
        self.assertEqual(point_along(a, b, Fraction(-1, 2)), pt(-2, -1))

    def test_signed_ratio(self):
        a, b = pt(0, 0), pt(4, 0)
        self.assertEqual(signed_ratio(pt(2, 0), a, b), -1)
        self.assertEqual(signed_ratio(pt(6, 0), a, b), 3)
        self.assertEqual(signed_ratio(pt(1, 0), a, b), Fraction(-1, 3))
        # Vertical line, the x differences are zero.
        self.assertEqual(signed_ratio(pt(0, -2), pt(0, 4), pt(0, 0)), 3)

    def test_signed_ratio_errors(self):
        a, b = pt(0, 0), pt(4, 0)
        with self.assertRaises(NotCollinearError):
            signed_ratio(pt(1, 1), a, b)
        with self.assertRaises(CoincidentWithEndpointError):
            signed_ratio(a, a, b)
        with self.assertRaises(CoincidentWithEndpointError):
            signed_ratio(b, a, b)
        with self.assertRaises(CoincidentPointsError):
            signed_ratio(pt(1, 0), a, a)
        with self.assertRaises(IdealPointError):
            signed_ratio(ProjPoint(1, 0, 0), a, b)

    def test_affine_map(self):
        shift = AffineMap.translation(1, -2)
        self.assertEqual(shift.apply(pt(3, 3)), pt(4, 1))
        # Ideal points only see the linear part.
        self.assertEqual(shift.apply(ProjPoint(1, 1, 0)), ProjPoint(1, 1, 0))
        self.assertEqual(shift.apply_line(ProjLine(0, 1, 0)), ProjLine(0, 1, 2))
        self.assertEqual(shift.apply_line(LINE_AT_INFINITY), LINE_AT_INFINITY)
        with self.assertRaises(GeometryError):
            AffineMap(1, 2, 2, 4)


class ProjectiveIdentitySweepTest(TestCase):
    """ Algebraic identities over deterministic pseudo random integer inputs. """

    def setUp(self):
        self.rng = SplitMix64(20240601)

    def point(self):
        # Mix in ideal points, z in {-1, 0, 1, 2}.
        while True:
            coords = (self.rng.randint(-SWEEP_BOUND, SWEEP_BOUND), self.rng.randint(-SWEEP_BOUND, SWEEP_BOUND),
                      self.rng.randint(-1, 2))
            if any(coords):
                return ProjPoint(coords)

    def distinct_points(self, count):
        points = list()
        while len(points) < count:
            p = self.point()
            if p not in points:
                points.append(p)
        return points

    def test_join_is_incident_with_both_points(self):
        for _i in range(SWEEP_CASES):
            p, q = self.distinct_points(2)
            l = join(p, q)
            self.assertTrue(incident(p, l))
            self.assertTrue(incident(q, l))
            self.assertEqual(l, join(q, p))

    def test_meet_of_joins_through_a_point(self):
        for _i in range(SWEEP_CASES):
            p, q, r = self.distinct_points(3)
            if collinear(p, q, r):
                continue
            self.assertEqual(meet(join(p, q), join(p, r)), p)

    def test_duality(self):
        # Point-line incidence reads the same with the roles of the triples swapped.
        for _i in range(SWEEP_CASES):
            p, q = self.distinct_points(2)
            self.assertEqual(incident(p, ProjLine(q.coords)), incident(q, ProjLine(p.coords)))

    def test_affine_maps_preserve_incidence(self):
        for _i in range(SWEEP_CASES // 10):
            while True:
                coeffs = [self.rng.randint(-5, 5) for _j in range(6)]
                if coeffs[0] * coeffs[3] - coeffs[1] * coeffs[2] != 0:
                    break
            f = AffineMap(*coeffs)
            p, q, r = self.distinct_points(3)
            l = join(p, q)
            self.assertTrue(incident(f.apply(p), f.apply_line(l)))
            self.assertEqual(collinear(p, q, r), collinear(f.apply(p), f.apply(q), f.apply(r)))

    def triple(self):
        while True:
            v = tuple(self.rng.randint(-SWEEP_BOUND, SWEEP_BOUND) for _j in range(3))
            if any(v):
                return v

    def finite_point(self):
        return from_affine(self.rng.rational(SWEEP_BOUND), self.rng.rational(SWEEP_BOUND))

    def test_canonical_form_is_scale_invariant(self):
        for _i in range(SWEEP_CASES):
            v = self.triple()
            k = self.rng.rational(SWEEP_BOUND)
            if k == 0:
                continue
            self.assertEqual(canonical_triple(tuple(k * c for c in v)), canonical_triple(v))

    def test_canonical_form_is_idempotent(self):
        for _i in range(SWEEP_CASES):
            c = canonical_triple(self.triple())
            self.assertEqual(canonical_triple(c), c)

    def test_midpoint_commutes_with_translation(self):
        for _i in range(SWEEP_CASES):
            p, q = self.finite_point(), self.finite_point()
            shift = AffineMap.translation(self.rng.rational(SWEEP_BOUND), self.rng.rational(SWEEP_BOUND))
            self.assertEqual(midpoint(shift.apply(p), shift.apply(q)), shift.apply(midpoint(p, q)))

    def test_signed_ratio_reciprocal(self):
        for _i in range(SWEEP_CASES):
            a, b = self.finite_point(), self.finite_point()
            t = self.rng.rational(SWEEP_BOUND)
            if a == b or t in (0, 1):
                continue
            x = point_along(a, b, t)
            self.assertEqual(signed_ratio(x, a, b) * signed_ratio(x, b, a), 1)
