#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
# Exact concurrency / collinearity verdicts that carry a witness or a counterexample.
#
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from desargues import translate_gettext as _
from desargues.exceptions import GeometryError
from desargues.geometry._projective import ProjPoint, ProjLine, join, meet, incident

Geometric = Union[ProjPoint, ProjLine]


@dataclass(frozen=True)
class ClaimVerdict:
    """
    Outcome of one incidence claim.  A true verdict carries the common point or line as witness,
    a false verdict carries the exact values that disagree.
    """
    holds: bool
    witness: Optional[Geometric] = None
    counterexample: Tuple[Geometric, ...] = ()

    def __bool__(self):
        return self.holds


def _first_distinct_pair(items: Sequence[Geometric]):
    for j in range(1, len(items)):
        if items[j] != items[0]:
            return items[0], items[j]
    return None


def concurrency_verdict(lines: Sequence[ProjLine]) -> ClaimVerdict:
    """
    Decide whether all lines pass through one point, ideal points included.
    :param lines: two or more lines.
    """
    if len(lines) < 2:
        raise GeometryError(tuple(lines), _('Concurrency needs at least two lines.'))
    pair = _first_distinct_pair(lines)
    if pair is None:
        # Every line is the same line, any of its points is common.
        return ClaimVerdict(True)
    candidate = meet(*pair)
    missing = [l for l in lines if not incident(candidate, l)]
    if not missing:
        return ClaimVerdict(True, witness=candidate)
    return ClaimVerdict(False, counterexample=(candidate, meet(pair[0], missing[0])))


def collinearity_verdict(points: Sequence[ProjPoint]) -> ClaimVerdict:
    """
    Decide whether all points lie on one line, ideal points included.
    :param points: two or more points.
    """
    if len(points) < 2:
        raise GeometryError(tuple(points), _('Collinearity needs at least two points.'))
    pair = _first_distinct_pair(points)
    if pair is None:
        return ClaimVerdict(True)
    candidate = join(*pair)
    off = [p for p in points if not incident(p, candidate)]
    if not off:
        return ClaimVerdict(True, witness=candidate)
    return ClaimVerdict(False, counterexample=(candidate, off[0]))
