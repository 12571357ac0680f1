#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
# Menelaus transversals: feet on the side lines, signed ratio products and the collinearity
# criterion both Desargues proofs rely on.
#
import logging
from fractions import Fraction
from typing import NamedTuple, Tuple

from desargues import translate_gettext as _
from desargues.exceptions import DegenerateTriangleError, DegenerateTransversalError, IdealFootError
from desargues.geometry._projective import ProjPoint, ProjLine, join, meet, incident, collinear, \
    signed_ratio

_logger = logging.getLogger('desargues')


class Triangle:
    """
    Ordered triangle (A, B, C).  Vertex order is semantic: it fixes the side names
    AB, BC, CA and the correspondence with a second triangle.
    """
    __slots__ = ('vertices',)

    def __init__(self, a: ProjPoint, b: ProjPoint, c: ProjPoint):
        if collinear(a, b, c):
            raise DegenerateTriangleError((a, b, c))
        self.vertices = (a, b, c)

    @property
    def A(self) -> ProjPoint:
        return self.vertices[0]

    @property
    def B(self) -> ProjPoint:
        return self.vertices[1]

    @property
    def C(self) -> ProjPoint:
        return self.vertices[2]

    @property
    def sides(self) -> Tuple[ProjLine, ProjLine, ProjLine]:
        """ Side lines (AB, BC, CA). """
        a, b, c = self.vertices
        return join(a, b), join(b, c), join(c, a)

    def rotated(self, steps: int = 1) -> 'Triangle':
        """ Same triangle with the vertex labels shifted cyclically. """
        k = steps % 3
        return Triangle(*(self.vertices[k:] + self.vertices[:k]))

    def __eq__(self, other):
        return isinstance(other, Triangle) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __repr__(self):
        return 'Triangle(' + ', '.join(str(v) for v in self.vertices) + ')'


class TransversalFeet(NamedTuple):
    """ Feet of a transversal: N on AB, M on BC, P on CA. """
    N: ProjPoint
    M: ProjPoint
    P: ProjPoint


def feet_on_sides(tri: Triangle, n: ProjPoint, m: ProjPoint, p: ProjPoint) -> TransversalFeet:
    """
    Check that three points are admissible feet: each on its side line and none at a vertex.
    """
    feet = TransversalFeet(n, m, p)
    for foot, side in zip(feet, tri.sides):
        if not incident(foot, side):
            raise DegenerateTransversalError(foot, _('Foot is not on its side line.'))
        if foot in tri.vertices:
            raise DegenerateTransversalError(foot, _('Foot coincides with a triangle vertex.'))
    return feet


def transversal_feet(tri: Triangle, l: ProjLine) -> TransversalFeet:
    """
    Intersect a transversal with the three side lines.
    :param tri: Triangle object.
    :param l: cutting line, distinct from every side and through no vertex.
    """
    sides = tri.sides
    if l in sides:
        raise DegenerateTransversalError(l, _('Transversal coincides with a side line.'))
    if any(incident(v, l) for v in tri.vertices):
        raise DegenerateTransversalError(l, _('Transversal passes through a vertex.'))
    return TransversalFeet(*(meet(l, side) for side in sides))


def menelaus_product(tri: Triangle, feet: TransversalFeet) -> Fraction:
    """
    Product signed_ratio(N;A,B)·signed_ratio(M;B,C)·signed_ratio(P;C,A).  Exactly 1 when the feet
    are collinear.  Ideal feet are refused, callers fall back to is_menelaus_transversal().
    """
    ideal = [foot for foot in feet if foot.is_ideal]
    if ideal:
        raise IdealFootError(ideal[0])

    a, b, c = tri.vertices
    return signed_ratio(feet.N, a, b) * signed_ratio(feet.M, b, c) * signed_ratio(feet.P, c, a)


def is_menelaus_transversal(tri: Triangle, feet: TransversalFeet) -> bool:
    """ Determinant criterion, total over ideal feet. """
    return collinear(*feet)
