#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
# Exact projective plane primitives.  Points and lines are homogeneous integer triples kept in
# canonical form, so every predicate reduces to an exact integer dot product or determinant.
#
import logging
import math
from fractions import Fraction
from typing import Tuple, Union

from desargues import translate_gettext as _
from desargues.exceptions import GeometryError, IdealPointError, CoincidentPointsError, \
    CoincidentLinesError, NotCollinearError, CoincidentWithEndpointError

_logger = logging.getLogger('desargues')

Rational = Fraction
Triple = Tuple[int, int, int]


def canonical_triple(values) -> Triple:
    """
    Clear denominators, divide by the gcd and make the first nonzero entry positive.
    :param values: three integers or rationals, not all zero.
    :return: tuple of three integers.
    """
    values = [Fraction(v) for v in values]
    if len(values) != 3:
        raise ValueError(_('Homogeneous coordinates need exactly three values.'))
    if not any(values):
        raise GeometryError(tuple(values), _('All homogeneous coordinates are zero.'))

    scale = math.lcm(*(v.denominator for v in values))
    ints = [int(v * scale) for v in values]
    divisor = math.gcd(*ints)
    ints = [i // divisor for i in ints]

    if next(i for i in ints if i != 0) < 0:
        ints = [-i for i in ints]
    return ints[0], ints[1], ints[2]


class _Homogeneous:
    """ Immutable canonical homogeneous triple, shared by points and lines. """
    __slots__ = ('coords',)

    def __init__(self, *values):
        if len(values) == 1:
            values = tuple(values[0])
        object.__setattr__(self, 'coords', canonical_triple(values))

    def __setattr__(self, key, value):
        raise AttributeError(_('Homogeneous values are immutable.'))

    def __eq__(self, other):
        return type(self) is type(other) and self.coords == other.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

    def __str__(self):
        return '[' + ':'.join(str(c) for c in self.coords) + ']'

    def __repr__(self):
        return f'{type(self).__name__}{self}'

    def __reduce__(self):
        return type(self), self.coords


class ProjPoint(_Homogeneous):
    """ Point [x : y : z] of the projective plane. """
    __slots__ = ()

    @property
    def is_ideal(self) -> bool:
        return self.coords[2] == 0


class ProjLine(_Homogeneous):
    """ Line [a : b : c], the set of points with a·x + b·y + c·z = 0. """
    __slots__ = ()

    @property
    def is_infinity(self) -> bool:
        return self.coords[0] == 0 and self.coords[1] == 0


LINE_AT_INFINITY = ProjLine(0, 0, 1)


def _cross(u, v) -> Triple:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def _dot(u, v) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def det3(u, v, w) -> int:
    """ Exact determinant of the 3x3 matrix with rows u, v, w. """
    return _dot(u, _cross(v, w))


def from_affine(x, y) -> ProjPoint:
    """
    Lift an affine point to the projective plane.
    :param x: rational or integer.
    :param y: rational or integer.
    """
    return ProjPoint(Fraction(x), Fraction(y), 1)


def to_affine(p: ProjPoint) -> Tuple[Fraction, Fraction]:
    """
    Return the affine coordinates (x/z, y/z) of a finite point.
    """
    x, y, z = p.coords
    if z == 0:
        raise IdealPointError(p)
    return Fraction(x, z), Fraction(y, z)


def is_ideal(p: ProjPoint) -> bool:
    return p.is_ideal


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """ Line through two distinct points. """
    if p == q:
        raise CoincidentPointsError((p, q))
    return ProjLine(_cross(p.coords, q.coords))


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    """ Common point of two distinct lines, ideal when the lines are parallel. """
    if l == m:
        raise CoincidentLinesError((l, m))
    return ProjPoint(_cross(l.coords, m.coords))


def incident(p: ProjPoint, l: ProjLine) -> bool:
    return _dot(p.coords, l.coords) == 0


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    return det3(p.coords, q.coords, r.coords) == 0


def concurrent(l: ProjLine, m: ProjLine, n: ProjLine) -> bool:
    return det3(l.coords, m.coords, n.coords) == 0


def eq_projective(u: Union[ProjPoint, ProjLine], v: Union[ProjPoint, ProjLine]) -> bool:
    return u == v


def midpoint(p: ProjPoint, q: ProjPoint) -> ProjPoint:
    """ Affine midpoint of two finite points. """
    (px, py), (qx, qy) = to_affine(p), to_affine(q)
    return from_affine((px + qx) / 2, (py + qy) / 2)


def point_along(p: ProjPoint, q: ProjPoint, t) -> ProjPoint:
    """
    Finite point p + t·(q − p) on the line pq.
    :param t: rational parameter, 0 gives p and 1 gives q.
    """
    t = Fraction(t)
    (px, py), (qx, qy) = to_affine(p), to_affine(q)
    return from_affine(px + t * (qx - px), py + t * (qy - py))


def signed_ratio(x: ProjPoint, a: ProjPoint, b: ProjPoint) -> Fraction:
    """
    Return t with directed segment XA = t·XB.  All three points must be finite and collinear,
    with x distinct from both a and b.
    """
    (xx, xy), (ax, ay), (bx, by) = to_affine(x), to_affine(a), to_affine(b)
    if a == b:
        raise CoincidentPointsError((a, b))
    if not collinear(x, a, b):
        raise NotCollinearError((x, a, b))
    if x == a or x == b:
        raise CoincidentWithEndpointError((x, a, b))

    ux, uy = ax - xx, ay - xy
    vx, vy = bx - xx, by - xy
    return ux / vx if vx != 0 else uy / vy


class AffineMap:
    """
    Invertible rational affine map (x, y) -> (a·x + b·y + e, c·x + d·y + f).
    Ideal points are carried by the linear part.
    """
    __slots__ = ('a', 'b', 'c', 'd', 'e', 'f')

    def __init__(self, a, b, c, d, e=0, f=0):
        self.a, self.b, self.c, self.d = Fraction(a), Fraction(b), Fraction(c), Fraction(d)
        self.e, self.f = Fraction(e), Fraction(f)
        if self.a * self.d - self.b * self.c == 0:
            raise GeometryError((a, b, c, d), _('Affine map is not invertible.'))

    @classmethod
    def translation(cls, dx, dy) -> 'AffineMap':
        return cls(1, 0, 0, 1, dx, dy)

    def apply(self, p: ProjPoint) -> ProjPoint:
        x, y, z = p.coords
        return ProjPoint(self.a * x + self.b * y + self.e * z,
                         self.c * x + self.d * y + self.f * z,
                         z)

    def apply_line(self, l: ProjLine) -> ProjLine:
        """ Image of a line, the line through the images of two of its points. """
        points = [ProjPoint(v) for v in ((l[1], -l[0], 0), (0, l[2], -l[1]), (l[2], 0, -l[0]))
                  if any(v)]
        distinct = [points[0]] + [p for p in points[1:] if p != points[0]]
        return join(self.apply(distinct[0]), self.apply(distinct[1]))

    def __repr__(self):
        return f'AffineMap([[{self.a}, {self.b}], [{self.c}, {self.d}]] + ({self.e}, {self.f}))'
