#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
# Complete quadrilateral machinery (diagonal triangle, midpoints, medial triangles, Newton-Gauss
# line) and the verifiers of the two parallelogram / quadrilateral problems.
#
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from desargues import translate_gettext as _
from desargues.exceptions import GeometryError, DegenerateQuadrilateralError, DegenerateConfigError, \
    AxisUndeterminedError, AxisMissingError, TheoremFalsifiedError
from desargues.geometry._projective import ProjPoint, ProjLine, join, meet, incident, collinear, midpoint, \
    point_along, to_affine
from desargues.geometry.homology import TrianglePair, check_reciprocal
from desargues.geometry.menelaus import Triangle
from desargues.geometry.verdicts import ClaimVerdict, concurrency_verdict, collinearity_verdict

_logger = logging.getLogger('desargues')

# The printed setup reads "AB ∩ CB = {E}", which would make E = B.
E_INTERPRETATION = _('E is taken as AB ∩ CD (the setup prints AB ∩ CB, which would make E = B).')


@dataclass(frozen=True)
class CompleteQuadrilateral:
    """ Quadrilateral ABCD with E = AB ∩ CD, F = BC ∩ AD, O = AC ∩ BD, P = BD ∩ EF, R = AC ∩ EF. """
    A: ProjPoint
    B: ProjPoint
    C: ProjPoint
    D: ProjPoint
    E: ProjPoint
    F: ProjPoint
    P: ProjPoint
    R: ProjPoint
    O: ProjPoint

    def dump(self) -> dict:
        return {name: str(getattr(self, name)) for name in ('A', 'B', 'C', 'D', 'E', 'F', 'P', 'R', 'O')}


@dataclass(frozen=True)
class MidpointSet:
    """ Midpoints of AB, BF, AF, AD, AE, DE, CE, BE, BC, CF, DF, DC, in that order. """
    G: ProjPoint
    H: ProjPoint
    I: ProjPoint
    J: ProjPoint
    K: ProjPoint
    L: ProjPoint
    M: ProjPoint
    N: ProjPoint
    Q: ProjPoint
    U: ProjPoint
    V: ProjPoint
    T: ProjPoint


# Midpoint name -> the two quadrilateral points of its segment.
MIDPOINT_SEGMENTS = (
    ('G', 'AB'), ('H', 'BF'), ('I', 'AF'), ('J', 'AD'), ('K', 'AE'), ('L', 'DE'),
    ('M', 'CE'), ('N', 'BE'), ('Q', 'BC'), ('U', 'CF'), ('V', 'DF'), ('T', 'DC'),
)


@dataclass(frozen=True)
class NewtonGaussData:
    """ Midpoints of the diagonals AC, BD, EF and the line carrying them. """
    O1: ProjPoint
    O2: ProjPoint
    O3: ProjPoint
    line: ProjLine


@dataclass(frozen=True)
class MedialTriangles:
    """ Medial triangles of ABF, ADE, BCE and CDF. """
    GHI: Triangle
    JKL: Triangle
    MNQ: Triangle
    UVT: Triangle


# Vertex order of each medial triangle that corresponds to the diagonal triangle (P, O, R), so that
# side PO (line BD) pairs with the midline through O2, OR (line AC) with the one through O1 and
# RP (line EF) with the one through O3.
DIAGONAL_CORRESPONDENCE = {
    'GHI': ('H', 'G', 'I'),
    'JKL': ('L', 'J', 'K'),
    'MNQ': ('N', 'Q', 'M'),
    'UVT': ('V', 'T', 'U'),
}

# Midline (pair of midpoints) -> the diagonal midpoint it passes through.
MIDLINE_INCIDENCES = (
    ('GI', 'O1'), ('GH', 'O2'), ('HI', 'O3'),
    ('JK', 'O1'), ('JL', 'O2'), ('KL', 'O3'),
    ('MQ', 'O1'), ('NQ', 'O2'), ('MN', 'O3'),
    ('UT', 'O1'), ('VT', 'O2'), ('UV', 'O3'),
)


@dataclass(frozen=True)
class Problem1Config:
    """ Parallelogram ABCD with A1, B1, C1, D1 on AB, BC, CD, DA and A1D1, BD, B1C1 concurrent at Pc. """
    A: ProjPoint
    B: ProjPoint
    C: ProjPoint
    D: ProjPoint
    A1: ProjPoint
    B1: ProjPoint
    C1: ProjPoint
    D1: ProjPoint
    Pc: ProjPoint

    def dump(self) -> dict:
        return {name: str(getattr(self, name)) for name in ('A', 'B', 'C', 'D', 'A1', 'B1', 'C1', 'D1', 'Pc')}


@dataclass(frozen=True)
class Problem1Report:
    """
    literal_a: AC, A1C1, B1D1 concurrent (claim a as printed).
    variant_a_bd: BD, A1C1, B1D1 concurrent.
    claim_b: A1B1, C1D1, AC concurrent (the claim the homology argument proves).
    """
    literal_a: ClaimVerdict
    variant_a_bd: ClaimVerdict
    claim_b: ClaimVerdict


@dataclass(frozen=True)
class PairVerdict:
    """
    Homology sub-check of Problem 2.  holds is None when the pair is degenerate.
    """
    holds: Optional[bool]
    center: Optional[ProjPoint] = None
    axis: Optional[ProjLine] = None
    axis_is_newton_gauss: Optional[bool] = None
    detail: str = ''


@dataclass(frozen=True)
class Problem2Report:
    """ Verdicts for claims i-v and the common-axis property of the medial triangles. """
    quadrilateral: CompleteQuadrilateral
    newton_gauss: NewtonGaussData
    pairs: Dict[str, PairVerdict]
    midlines: Dict[str, bool]
    claim_iv: Optional[ClaimVerdict]
    claim_v: Optional[ClaimVerdict]
    interpretation: str = field(default=E_INTERPRETATION)

    @property
    def claim_i(self) -> Dict[str, Optional[bool]]:
        return {name: self.pairs[f'POR~{name}'].holds for name in ('GHI', 'JKL', 'MNQ', 'UVT')}

    @property
    def claim_ii(self) -> Optional[bool]:
        return self.pairs['GHI~JKL'].holds

    @property
    def claim_iii(self) -> Optional[bool]:
        return self.pairs['MNQ~UVT'].holds

    @property
    def axes_are_newton_gauss(self) -> Dict[str, Optional[bool]]:
        return {name: verdict.axis_is_newton_gauss for name, verdict in self.pairs.items()}

    @property
    def degenerate(self) -> bool:
        return any(v.holds is None for v in self.pairs.values()) or self.claim_iv is None or self.claim_v is None


def build(A: ProjPoint, B: ProjPoint, C: ProjPoint, D: ProjPoint) -> CompleteQuadrilateral:
    """
    Derive E, F, O, P, R exactly.
    :raises DegenerateQuadrilateralError: naming the failed condition and its witnesses.
    """
    named = {'A': A, 'B': B, 'C': C, 'D': D}
    for name, p in named.items():
        if p.is_ideal:
            raise DegenerateQuadrilateralError(name, _('Vertex lies at infinity.'), {name: p})
    for trio in itertools.combinations('ABCD', 3):
        if collinear(*(named[n] for n in trio)):
            raise DegenerateQuadrilateralError(''.join(trio), _('Three vertices are collinear.'),
                                               {n: named[n] for n in trio})

    E = meet(join(A, B), join(C, D))
    F = meet(join(B, C), join(A, D))
    O = meet(join(A, C), join(B, D))
    for name, p in (('E', E), ('F', F), ('O', O)):
        if p.is_ideal:
            raise DegenerateQuadrilateralError(name, _('Derived point lies at infinity.'), {name: p})

    ef = join(E, F)
    try:
        P = meet(join(B, D), ef)
        R = meet(join(A, C), ef)
    except GeometryError as e:
        raise DegenerateQuadrilateralError('EF', e.message, {'E': E, 'F': F})
    for name, p in (('P', P), ('R', R)):
        if p.is_ideal:
            raise DegenerateQuadrilateralError(name, _('Derived point lies at infinity.'), {name: p})

    derived = {'E': E, 'F': F, 'P': P, 'R': R, 'O': O}
    for (n1, p1), (n2, p2) in itertools.combinations(derived.items(), 2):
        if p1 == p2:
            raise DegenerateQuadrilateralError(n1 + n2, _('Derived points coincide.'), {n1: p1, n2: p2})

    return CompleteQuadrilateral(A=A, B=B, C=C, D=D, E=E, F=F, P=P, R=R, O=O)


def diagonal_triangle(q: CompleteQuadrilateral) -> Triangle:
    return Triangle(q.P, q.O, q.R)


def midpoint_set(q: CompleteQuadrilateral) -> MidpointSet:
    return MidpointSet(**{name: midpoint(getattr(q, seg[0]), getattr(q, seg[1]))
                          for name, seg in MIDPOINT_SEGMENTS})


def newton_gauss(q: CompleteQuadrilateral) -> NewtonGaussData:
    """
    Midpoints of the three diagonals and the Newton-Gauss line through them.
    """
    o1, o2, o3 = midpoint(q.A, q.C), midpoint(q.B, q.D), midpoint(q.E, q.F)
    if o1 == o2:
        raise AxisUndeterminedError(o1, _('Diagonals AC and BD share their midpoint.'))
    if not collinear(o1, o2, o3):
        dump = q.dump()
        dump.update({'O1': str(o1), 'O2': str(o2), 'O3': str(o3)})
        raise TheoremFalsifiedError('newton-gauss', dump)
    line = join(o1, o3) if o1 != o3 else join(o1, o2)
    return NewtonGaussData(O1=o1, O2=o2, O3=o3, line=line)


def medial_triangles(q: CompleteQuadrilateral, mids: MidpointSet = None) -> MedialTriangles:
    mids = mids or midpoint_set(q)
    return MedialTriangles(**{name: Triangle(*(getattr(mids, c) for c in name))
                              for name in ('GHI', 'JKL', 'MNQ', 'UVT')})


def midline_incidences(q: CompleteQuadrilateral, mids: MidpointSet = None,
                       ng: NewtonGaussData = None) -> Dict[str, bool]:
    """ Named incidences 'GI∋O1', ... of the twelve midlines with the diagonal midpoints. """
    mids = mids or midpoint_set(q)
    ng = ng or newton_gauss(q)
    result = dict()
    for pair, target in MIDLINE_INCIDENCES:
        line = join(getattr(mids, pair[0]), getattr(mids, pair[1]))
        result[f'{pair}∋{target}'] = incident(getattr(ng, target), line)
    return result


def _oriented(mids: MidpointSet, name: str) -> Triangle:
    return Triangle(*(getattr(mids, c) for c in DIAGONAL_CORRESPONDENCE[name]))


def _pair_verdict(first: Triangle, second: Triangle, ng_line: ProjLine) -> PairVerdict:
    try:
        report = check_reciprocal(TrianglePair(first, second))
    except AxisMissingError:
        return PairVerdict(holds=False, detail=_('side intersections are not collinear'))
    except TheoremFalsifiedError as e:
        return PairVerdict(holds=False, detail=str(e))
    except GeometryError as e:
        _logger.debug(f'degenerate homology sub-check: {e}')
        return PairVerdict(holds=None, detail=e.message)
    return PairVerdict(holds=True, center=report.center, axis=report.axis,
                       axis_is_newton_gauss=report.axis == ng_line)


def _centers_verdict(*verdicts: PairVerdict) -> Optional[ClaimVerdict]:
    if any(v.center is None for v in verdicts):
        return None
    return collinearity_verdict([v.center for v in verdicts])


def verify_problem2(q: CompleteQuadrilateral) -> Problem2Report:
    """
    Check claims i-v: POR homological with each medial triangle, GHI/JKL and MNQ/UVT homological,
    every axis the Newton-Gauss line, and the homology centers of each triplet collinear.
    """
    ng = newton_gauss(q)
    mids = midpoint_set(q)
    diagonal = diagonal_triangle(q)
    oriented = {name: _oriented(mids, name) for name in DIAGONAL_CORRESPONDENCE}

    pairs = dict()
    for name in ('GHI', 'JKL', 'MNQ', 'UVT'):
        pairs[f'POR~{name}'] = _pair_verdict(diagonal, oriented[name], ng.line)
    pairs['GHI~JKL'] = _pair_verdict(oriented['GHI'], oriented['JKL'], ng.line)
    pairs['MNQ~UVT'] = _pair_verdict(oriented['MNQ'], oriented['UVT'], ng.line)

    claim_iv = _centers_verdict(pairs['POR~GHI'], pairs['POR~JKL'], pairs['GHI~JKL'])
    claim_v = _centers_verdict(pairs['POR~MNQ'], pairs['POR~UVT'], pairs['MNQ~UVT'])
    for label, verdict in (('iv', claim_iv), ('v', claim_v)):
        if verdict is not None and not verdict.holds:
            _logger.warning(_('Finding: homology centers are not collinear for claim') + f' {label}.')

    return Problem2Report(quadrilateral=q, newton_gauss=ng, pairs=pairs,
                          midlines=midline_incidences(q, mids, ng), claim_iv=claim_iv, claim_v=claim_v)


def _is_parallelogram(A: ProjPoint, B: ProjPoint, C: ProjPoint, D: ProjPoint) -> bool:
    if any(p.is_ideal for p in (A, B, C, D)) or collinear(A, B, D):
        return False
    (ax, ay), (bx, by), (cx, cy), (dx, dy) = (to_affine(p) for p in (A, B, C, D))
    return ax + cx == bx + dx and ay + cy == by + dy


def build_problem1_config(A: ProjPoint, B: ProjPoint, C: ProjPoint, D: ProjPoint,
                          pt: Fraction, ta: Fraction, tb: Fraction) -> Problem1Config:
    """
    Construct the hypothesis exactly: Pc on BD at pt, A1 on AB at ta, B1 on BC at tb, then
    D1 = A1Pc ∩ AD and C1 = B1Pc ∩ CD, so A1D1, BD and B1C1 meet at Pc by construction.
    """
    if not _is_parallelogram(A, B, C, D):
        raise DegenerateConfigError('ABCD', _('Vertices do not form a parallelogram.'))

    pc = point_along(B, D, pt)
    a1 = point_along(A, B, ta)
    b1 = point_along(B, C, tb)
    try:
        d1 = meet(join(a1, pc), join(A, D))
        c1 = meet(join(b1, pc), join(C, D))
    except GeometryError as e:
        raise DegenerateConfigError('A1D1/B1C1', e.message)

    checks = (('Pc', pc, (B, D)), ('A1', a1, (A, B)), ('B1', b1, (B, C)), ('D1', d1, (A, D)), ('C1', c1, (C, D)))
    for name, p, ends in checks:
        if p.is_ideal:
            raise DegenerateConfigError(name, _('Constructed point lies at infinity.'))
        if p in ends:
            raise DegenerateConfigError(name, _('Constructed point lands on a vertex.'))

    return Problem1Config(A=A, B=B, C=C, D=D, A1=a1, B1=b1, C1=c1, D1=d1, Pc=pc)


def verify_problem1(cfg: Problem1Config) -> Problem1Report:
    """ Projective concurrency verdicts, ideal common points count. """
    ac, bd = join(cfg.A, cfg.C), join(cfg.B, cfg.D)
    a1c1, b1d1 = join(cfg.A1, cfg.C1), join(cfg.B1, cfg.D1)
    return Problem1Report(
        literal_a=concurrency_verdict([ac, a1c1, b1d1]),
        variant_a_bd=concurrency_verdict([bd, a1c1, b1d1]),
        claim_b=concurrency_verdict([join(cfg.A1, cfg.B1), join(cfg.C1, cfg.D1), ac]),
    )
