#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
# Homological (perspective) triangle pairs and executable checks of Desargues' theorem and its
# reciprocal.
#
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from desargues import translate_gettext as _
from desargues.exceptions import GeometryError, DegeneratePairError, NotPerspectiveError, AxisMissingError, \
    AxisUndeterminedError, TheoremFalsifiedError
from desargues.geometry._projective import ProjPoint, ProjLine, join, meet, concurrent, collinear
from desargues.geometry.menelaus import Triangle, transversal_feet, menelaus_product, TransversalFeet

_logger = logging.getLogger('desargues')


class TrianglePair:
    """
    Two triangles whose vertices correspond by index: A <-> A1, B <-> B1, C <-> C1.
    """
    __slots__ = ('first', 'second')

    def __init__(self, first: Triangle, second: Triangle):
        for v, w in zip(first.vertices, second.vertices):
            if v == w:
                raise DegeneratePairError((v, w), _('Corresponding vertices coincide.'))
        for l, m in zip(first.sides, second.sides):
            if l == m:
                raise DegeneratePairError((l, m), _('Corresponding side lines coincide.'))
        self.first = first
        self.second = second

    def swapped(self) -> 'TrianglePair':
        return TrianglePair(self.second, self.first)

    def rotated(self, steps: int = 1) -> 'TrianglePair':
        """ Shift both vertex triples together, the correspondence is unchanged. """
        return TrianglePair(self.first.rotated(steps), self.second.rotated(steps))

    @property
    def vertex_joins(self) -> Tuple[ProjLine, ProjLine, ProjLine]:
        """ Lines AA1, BB1, CC1. """
        return tuple(join(v, w) for v, w in zip(self.first.vertices, self.second.vertices))

    def dump(self) -> dict:
        """ Exact coordinates of both triangles, for falsification reports. """
        names = ('A', 'B', 'C')
        data = {n: str(v) for n, v in zip(names, self.first.vertices)}
        data.update({f'{n}1': str(v) for n, v in zip(names, self.second.vertices)})
        return data

    def __repr__(self):
        return f'TrianglePair({self.first!r}, {self.second!r})'


@dataclass(frozen=True)
class HomologyReport:
    """ Center O, side points (N, M, P) and axis of a triangle pair. """
    center: Optional[ProjPoint]
    side_points: Tuple[ProjPoint, ProjPoint, ProjPoint]
    axis: Optional[ProjLine]

    @property
    def is_homological(self) -> bool:
        return self.center is not None


@dataclass(frozen=True)
class MenelausTrace:
    """
    Ratio products of the forward proof: Menelaus in (O,A,B), (O,B,C), (O,C,A) for the
    transversals A1B1, B1C1, C1A1, then in ABC for the side points.  Missing values mark
    sub-configurations with a degenerate or ideal foot.
    """
    sub_products: Tuple[Optional[Fraction], Optional[Fraction], Optional[Fraction]]
    main_product: Optional[Fraction]

    @property
    def complete(self) -> bool:
        return self.main_product is not None and all(p is not None for p in self.sub_products)

    @property
    def consistent(self) -> bool:
        """ Every present product equals 1. """
        values = [p for p in self.sub_products + (self.main_product,) if p is not None]
        return all(v == 1 for v in values)


def side_intersections(pair: TrianglePair) -> Tuple[ProjPoint, ProjPoint, ProjPoint]:
    """ N = AB ∩ A1B1, M = BC ∩ B1C1, P = CA ∩ C1A1, ideal points allowed. """
    try:
        return tuple(meet(l, m) for l, m in zip(pair.first.sides, pair.second.sides))
    except GeometryError as e:
        raise DegeneratePairError(pair, e.message)


def perspective_center(pair: TrianglePair) -> Optional[ProjPoint]:
    """
    Common point of AA1, BB1, CC1 when they are concurrent, otherwise None.
    """
    joins = pair.vertex_joins
    for i, j in ((0, 1), (1, 2), (0, 2)):
        if joins[i] == joins[j]:
            raise DegeneratePairError(pair, _('Two vertex-join lines coincide, the center is ill-defined.'))
    if not concurrent(*joins):
        return None
    return meet(joins[0], joins[1])


def homology_axis(pair: TrianglePair) -> Optional[ProjLine]:
    """
    Line through N, M, P when they are collinear, otherwise None.
    """
    points = side_intersections(pair)
    if not collinear(*points):
        return None
    distinct = [p for p in points[1:] if p != points[0]]
    if not distinct:
        raise AxisUndeterminedError(points[0], _('Corresponding sides all meet in one point.'))
    return join(points[0], distinct[0])


def classify(pair: TrianglePair) -> HomologyReport:
    """
    Report center and axis without asserting either theorem.
    """
    return HomologyReport(center=perspective_center(pair), side_points=side_intersections(pair),
                          axis=homology_axis(pair))


def check_forward(pair: TrianglePair) -> HomologyReport:
    """
    Desargues: a pair in perspective from a point is in perspective from a line.
    """
    center = perspective_center(pair)
    if center is None:
        raise NotPerspectiveError(pair)
    points = side_intersections(pair)
    axis = homology_axis(pair)
    if axis is None:
        dump = pair.dump()
        dump.update({'O': str(center), 'N': str(points[0]), 'M': str(points[1]), 'P': str(points[2])})
        raise TheoremFalsifiedError('desargues', dump)
    _logger.debug(f'forward check: center {center}, axis {axis}')
    return HomologyReport(center=center, side_points=points, axis=axis)


def check_reciprocal(pair: TrianglePair) -> HomologyReport:
    """
    Reciprocal: a pair whose corresponding sides meet in collinear points is homological.
    """
    points = side_intersections(pair)
    axis = homology_axis(pair)
    if axis is None:
        raise AxisMissingError(pair)
    center = perspective_center(pair)
    if center is None:
        dump = pair.dump()
        dump.update({'axis': str(axis), 'N': str(points[0]), 'M': str(points[1]), 'P': str(points[2])})
        raise TheoremFalsifiedError('reciprocal', dump)
    _logger.debug(f'reciprocal check: center {center}, axis {axis}')
    return HomologyReport(center=center, side_points=points, axis=axis)


def _sub_product(center: ProjPoint, u: ProjPoint, v: ProjPoint, u1: ProjPoint, v1: ProjPoint):
    try:
        tri = Triangle(center, u, v)
        return menelaus_product(tri, transversal_feet(tri, join(u1, v1)))
    except GeometryError:
        return None


def menelaus_trace(pair: TrianglePair, center: ProjPoint) -> MenelausTrace:
    """
    Recompute the ratio products of the forward proof for a homological pair.
    :param pair: TrianglePair object.
    :param center: perspective center O of the pair.
    """
    (a, b, c), (a1, b1, c1) = pair.first.vertices, pair.second.vertices
    subs = (_sub_product(center, a, b, a1, b1),
            _sub_product(center, b, c, b1, c1),
            _sub_product(center, c, a, c1, a1))
    try:
        main = menelaus_product(pair.first, TransversalFeet(*side_intersections(pair)))
    except GeometryError:
        main = None
    return MenelausTrace(sub_products=subs, main_product=main)
