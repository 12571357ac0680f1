#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
from ._projective import Rational, ProjPoint, ProjLine, LINE_AT_INFINITY, AffineMap, canonical_triple, det3, \
    from_affine, to_affine, is_ideal, join, meet, incident, collinear, concurrent, eq_projective, midpoint, \
    point_along, signed_ratio
from .verdicts import ClaimVerdict, concurrency_verdict, collinearity_verdict
from .menelaus import Triangle, TransversalFeet, feet_on_sides, transversal_feet, menelaus_product, \
    is_menelaus_transversal
from .homology import TrianglePair, HomologyReport, MenelausTrace, side_intersections, perspective_center, \
    homology_axis, classify, check_forward, check_reciprocal, menelaus_trace

__all__ = [
    'Rational', 'ProjPoint', 'ProjLine', 'LINE_AT_INFINITY', 'AffineMap', 'canonical_triple', 'det3',
    'from_affine', 'to_affine', 'is_ideal', 'join', 'meet', 'incident', 'collinear', 'concurrent',
    'eq_projective', 'midpoint', 'point_along', 'signed_ratio',
    'ClaimVerdict', 'concurrency_verdict', 'collinearity_verdict',
    'Triangle', 'TransversalFeet', 'feet_on_sides', 'transversal_feet', 'menelaus_product',
    'is_menelaus_transversal',
    'TrianglePair', 'HomologyReport', 'MenelausTrace', 'side_intersections', 'perspective_center',
    'homology_axis', 'classify', 'check_forward', 'check_reciprocal', 'menelaus_trace',
]
