#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
from fractions import Fraction
from unittest import TestCase

from desargues.exceptions import GeometryError, DegenerateTriangleError, DegenerateTransversalError, \
    IdealFootError
from desargues.geometry import ProjPoint, ProjLine, LINE_AT_INFINITY, Triangle, TransversalFeet, feet_on_sides, \
    transversal_feet, menelaus_product, is_menelaus_transversal, midpoint, concurrency_verdict, \
    collinearity_verdict
from tests.helpers import pt


class MenelausTest(TestCase):

    def setUp(self):
        self.tri = Triangle(pt(0, 0), pt(4, 0), pt(0, 4))
        # x - y - 2 = 0
        self.line = ProjLine(1, -1, -2)

    def test_feet(self):
        feet = transversal_feet(self.tri, self.line)
        self.assertEqual(feet, TransversalFeet(pt(2, 0), pt(3, 1), pt(0, -2)))

    def test_product_is_one(self):
        feet = transversal_feet(self.tri, self.line)
        self.assertEqual(menelaus_product(self.tri, feet), 1)
        self.assertTrue(is_menelaus_transversal(self.tri, feet))

    def test_moved_foot(self):
        feet = feet_on_sides(self.tri, pt(1, 0), pt(3, 1), pt(0, -2))
        self.assertEqual(menelaus_product(self.tri, feet), Fraction(1, 3))
        self.assertFalse(is_menelaus_transversal(self.tri, feet))

    def test_side_midpoints(self):
        a, b, c = self.tri.vertices
        feet = feet_on_sides(self.tri, midpoint(a, b), midpoint(b, c), midpoint(c, a))
        self.assertEqual(menelaus_product(self.tri, feet), -1)
        self.assertFalse(is_menelaus_transversal(self.tri, feet))

    def test_ideal_foot(self):
        # y = 1 is parallel to AB.
        feet = transversal_feet(self.tri, ProjLine(0, 1, -1))
        self.assertTrue(feet.N.is_ideal)
        with self.assertRaises(IdealFootError):
            menelaus_product(self.tri, feet)
        self.assertTrue(is_menelaus_transversal(self.tri, feet))

    def test_degenerate_transversals(self):
        with self.assertRaises(DegenerateTransversalError):
            transversal_feet(self.tri, ProjLine(0, 1, 0))
        with self.assertRaises(DegenerateTransversalError):
            # Through vertex A.
            transversal_feet(self.tri, ProjLine(1, -1, 0))
        with self.assertRaises(DegenerateTransversalError):
            feet_on_sides(self.tri, pt(1, 1), pt(3, 1), pt(0, -2))
        with self.assertRaises(DegenerateTransversalError):
            feet_on_sides(self.tri, pt(0, 0), pt(3, 1), pt(0, -2))

    def test_line_at_infinity_feet(self):
        feet = transversal_feet(self.tri, LINE_AT_INFINITY)
        self.assertTrue(all(f.is_ideal for f in feet))
        self.assertTrue(is_menelaus_transversal(self.tri, feet))

    def test_rotation_keeps_product(self):
        feet = transversal_feet(self.tri, self.line)
        rotated = self.tri.rotated()
        rotated_feet = TransversalFeet(feet.M, feet.P, feet.N)
        self.assertEqual(menelaus_product(rotated, rotated_feet), 1)

    def test_degenerate_triangle(self):
        with self.assertRaises(DegenerateTriangleError):
            Triangle(pt(0, 0), pt(1, 1), pt(2, 2))
        with self.assertRaises(DegenerateTriangleError):
            Triangle(pt(0, 0), pt(0, 0), pt(2, 1))
        self.assertIsInstance(DegenerateTriangleError('x'), GeometryError)


class VerdictTest(TestCase):

    def test_concurrent_at_infinity(self):
        lines = [ProjLine(1, -3, 0), ProjLine(1, -3, 3), ProjLine(1, -3, -7)]
        verdict = concurrency_verdict(lines)
        self.assertTrue(verdict)
        self.assertEqual(verdict.witness, ProjPoint(3, 1, 0))

    def test_not_concurrent(self):
        verdict = concurrency_verdict([ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(1, 1, -1)])
        self.assertFalse(verdict.holds)
        self.assertIsNone(verdict.witness)
        self.assertEqual(verdict.counterexample, (pt(0, 0), pt(0, 1)))

    def test_repeated_values(self):
        line = ProjLine(1, 2, 3)
        verdict = concurrency_verdict([line, line, line])
        self.assertTrue(verdict.holds)
        self.assertIsNone(verdict.witness)
        verdict = collinearity_verdict([pt(1, 1), pt(1, 1), pt(2, 3)])
        self.assertTrue(verdict.holds)
        self.assertEqual(verdict.witness, ProjLine(2, -1, -1))

    def test_collinear_with_ideal_point(self):
        self.assertTrue(collinearity_verdict([pt(0, 0), pt(1, 1), ProjPoint(1, 1, 0)]))
        verdict = collinearity_verdict([pt(0, 0), pt(1, 1), ProjPoint(1, 0, 0)])
        self.assertFalse(verdict)
        self.assertEqual(verdict.counterexample, (ProjLine(1, -1, 0), ProjPoint(1, 0, 0)))

    def test_too_few_values(self):
        with self.assertRaises(GeometryError):
            concurrency_verdict([ProjLine(1, 0, 0)])
        with self.assertRaises(GeometryError):
            collinearity_verdict([])
