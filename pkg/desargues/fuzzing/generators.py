#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
# Constructive configuration generators.  Each generator either returns a configuration that meets
# its theorem's hypothesis exactly or raises a GeometryError for the caller to count as a rejection.
#
from fractions import Fraction
from typing import NamedTuple, Tuple

from desargues import translate_gettext as _
from desargues.exceptions import GeometryError, CoincidentPointsError, DegenerateTransversalError
from desargues.fuzzing.splitmix import SplitMix64
from desargues.geometry import ProjPoint, ProjLine, Triangle, TrianglePair, TransversalFeet, from_affine, \
    to_affine, join, point_along, perspective_center, transversal_feet
from desargues.geometry import quadrilateral as quad


def integer_point(rng: SplitMix64, bound: int) -> ProjPoint:
    """ Finite point with integer coordinates in [-bound, bound]. """
    return from_affine(rng.randint(-bound, bound), rng.randint(-bound, bound))


def triangle(rng: SplitMix64, bound: int) -> Triangle:
    return Triangle(integer_point(rng, bound), integer_point(rng, bound), integer_point(rng, bound))


def proper_parameter(rng: SplitMix64, bound: int) -> Fraction:
    """ Rational parameter outside {0, 1}, so a point placed with it is neither end point. """
    t = rng.rational(bound)
    if t in (0, 1):
        raise GeometryError(t, _('Parameter lands on a segment end point.'))
    return t


class PerspectivePair(NamedTuple):
    pair: TrianglePair
    center: ProjPoint
    params: Tuple[Fraction, Fraction, Fraction]


def perspective_pair(rng: SplitMix64, bound: int) -> PerspectivePair:
    """
    Triangle pair in perspective from O by construction: A1 = O + ta·(A − O), likewise B1 and C1.
    """
    first = triangle(rng, bound)
    center = integer_point(rng, bound)
    if center in first.vertices:
        raise CoincidentPointsError(center, _('Perspective center is a triangle vertex.'))
    params = tuple(proper_parameter(rng, bound) for _i in range(3))
    second = Triangle(*(point_along(center, v, t) for v, t in zip(first.vertices, params)))
    pair = TrianglePair(first, second)
    # Coincident vertex joins only happen with O on a side line, refuse those here.
    perspective_center(pair)
    return PerspectivePair(pair, center, params)


def perturb_vertex(rng: SplitMix64, bound: int, pair: TrianglePair) -> TrianglePair:
    """ Move one vertex of the second triangle by a nonzero integer offset. """
    index = rng.randint(0, 2)
    dx, dy = rng.nonzero_int(bound), rng.randint(-bound, bound)
    x, y = to_affine(pair.second.vertices[index])
    moved = from_affine(x + dx, y + dy)
    vertices = list(pair.second.vertices)
    vertices[index] = moved
    return TrianglePair(pair.first, Triangle(*vertices))


class TransversalSample(NamedTuple):
    triangle: Triangle
    line: ProjLine
    feet: TransversalFeet


def transversal(rng: SplitMix64, bound: int) -> TransversalSample:
    """ Triangle and a line through two sampled points, cutting all three sides at finite feet. """
    tri = triangle(rng, bound)
    line = join(integer_point(rng, bound), integer_point(rng, bound))
    feet = transversal_feet(tri, line)
    if any(foot.is_ideal for foot in feet):
        raise DegenerateTransversalError(line, _('Transversal is parallel to a side.'))
    return TransversalSample(tri, line, feet)


def perturb_foot(rng: SplitMix64, bound: int, sample: TransversalSample) -> Tuple[int, TransversalFeet]:
    """
    Replace a single foot with another finite point of the same side line.
    :return: index of the moved foot and the new feet.
    """
    index = rng.randint(0, 2)
    start, end = sample.triangle.vertices[index], sample.triangle.vertices[(index + 1) % 3]
    moved = point_along(start, end, proper_parameter(rng, bound))
    if moved == sample.feet[index]:
        raise GeometryError(moved, _('Perturbed foot equals the original foot.'))
    feet = list(sample.feet)
    feet[index] = moved
    return index, TransversalFeet(*feet)


def _turns(points) -> Tuple[Fraction, ...]:
    xy = [to_affine(p) for p in points]
    turns = list()
    for i in range(len(xy)):
        (ax, ay), (bx, by), (cx, cy) = xy[i], xy[(i + 1) % len(xy)], xy[(i + 2) % len(xy)]
        turns.append((bx - ax) * (cy - by) - (by - ay) * (cx - bx))
    return tuple(turns)


def is_convex(points) -> bool:
    """ True when the closed polygon turns the same way, strictly, at every vertex. """
    turns = _turns(points)
    return all(t > 0 for t in turns) or all(t < 0 for t in turns)


def quadrilateral(rng: SplitMix64, bound: int, convex: bool = False) -> quad.CompleteQuadrilateral:
    """
    Four integer points, refused by build() when the complete quadrilateral degenerates.
    :param convex: also refuse samples where ABCD is not a convex quadrilateral.
    """
    points = [integer_point(rng, bound) for _i in range(4)]
    if convex and not is_convex(points):
        raise GeometryError(tuple(points), _('Quadrilateral ABCD is not convex.'))
    return quad.build(*points)


def parallelogram_config(rng: SplitMix64, bound: int) -> quad.Problem1Config:
    """
    Parallelogram A, A + u, A + u + v, A + v with independent integer u, v, then the concurrent
    point Pc on BD and A1, B1 placed with rational parameters.
    """
    a = integer_point(rng, bound)
    ux, uy = rng.randint(-bound, bound), rng.randint(-bound, bound)
    vx, vy = rng.randint(-bound, bound), rng.randint(-bound, bound)
    x, y = to_affine(a)
    b = from_affine(x + ux, y + uy)
    c = from_affine(x + ux + vx, y + uy + vy)
    d = from_affine(x + vx, y + vy)
    pt, ta, tb = (proper_parameter(rng, bound) for _i in range(3))
    return quad.build_problem1_config(a, b, c, d, pt, ta, tb)
