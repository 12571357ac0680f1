#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
# Per-theorem fuzz trials.  A trial is a pure function of (theorem, seed, index, bound), so trials
# can run in any order or process and still produce identical records.
#
import itertools
import json
import logging
from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, Mapping, Tuple, Union

from desargues import translate_gettext as _
from desargues.exceptions import GeometryError, AxisMissingError, TheoremFalsifiedError, FuzzSpecError
from desargues.fuzzing import generators as gen
from desargues.fuzzing.spec import FuzzSpec
from desargues.fuzzing.splitmix import SplitMix64, derive_seed
from desargues.geometry import ProjPoint, ProjLine, perspective_center, side_intersections, classify, \
    check_forward, check_reciprocal, menelaus_trace, menelaus_product, is_menelaus_transversal, midpoint
from desargues.geometry import quadrilateral as quad

_logger = logging.getLogger('desargues')

# Resampling limit for one trial, generous for any bound >= 2.
MAX_REJECTIONS = 10000

Value = Union[ProjPoint, ProjLine]


class Sample:
    """ Named exact values, verdicts and witnesses collected by one trial. """

    def __init__(self):
        self.points: Dict[str, Value] = OrderedDict()
        self.verdicts: Dict[str, bool] = OrderedDict()
        self.witnesses: Dict[str, Value] = OrderedDict()
        self.rejections = 0


def _retry(make: Callable, what: str):
    """ Call make() until it stops raising GeometryError, return the value and the failure count. """
    for attempt in range(MAX_REJECTIONS):
        try:
            return make(), attempt
        except GeometryError as e:
            _logger.debug(f'rejected {what}: {e}')
    raise FuzzSpecError('bound', _('Too many degenerate samples, increase the coordinate bound.'))


def _name_vertices(sample: Sample, pair):
    for name, v in zip(('A', 'B', 'C'), pair.first.vertices):
        sample.points[name] = v
    for name, v in zip(('A1', 'B1', 'C1'), pair.second.vertices):
        sample.points[name] = v


def _desargues(rng: SplitMix64, bound: int) -> Sample:
    pp = gen.perspective_pair(rng, bound)
    sample = Sample()
    _name_vertices(sample, pp.pair)
    sample.points['O'] = pp.center

    sample.verdicts['center_is_O'] = perspective_center(pp.pair) == pp.center
    try:
        report = check_forward(pp.pair)
        sample.verdicts['axis_collinear'] = True
        sample.witnesses['axis'] = report.axis
        side_points = report.side_points
    except TheoremFalsifiedError as e:
        _logger.error(str(e))
        sample.verdicts['axis_collinear'] = False
        side_points = side_intersections(pp.pair)
    for name, p in zip(('N', 'M', 'P'), side_points):
        sample.points[name] = p

    trace = menelaus_trace(pp.pair, pp.center)
    if trace.complete:
        sample.verdicts['menelaus_trace'] = trace.consistent
    return sample


def _reciprocal(rng: SplitMix64, bound: int) -> Sample:
    pp = gen.perspective_pair(rng, bound)
    sample = Sample()
    _name_vertices(sample, pp.pair)
    try:
        report = check_reciprocal(pp.pair)
        sample.verdicts['axis_collinear'] = True
        sample.verdicts['center_concurrent'] = True
        sample.witnesses['axis'] = report.axis
        sample.witnesses['center'] = report.center
    except AxisMissingError:
        sample.verdicts['axis_collinear'] = False
    except TheoremFalsifiedError as e:
        _logger.error(str(e))
        sample.verdicts['axis_collinear'] = True
        sample.verdicts['center_concurrent'] = False

    def _control():
        perturbed = gen.perturb_vertex(rng, bound, pp.pair)
        result = classify(perturbed)
        if result.center is not None and result.axis is not None:
            raise GeometryError(perturbed, _('Perturbed pair is still homological.'))
        return perturbed, result

    (control, result), sample.rejections = _retry(_control, 'control pair')
    for name, v in zip(('A1', 'B1', 'C1'), control.second.vertices):
        if v != sample.points[name]:
            sample.points[f'{name}_moved'] = v
    sample.verdicts['control_no_axis'] = result.axis is None
    sample.verdicts['control_no_center'] = result.center is None
    return sample


def _menelaus(rng: SplitMix64, bound: int) -> Sample:
    tv = gen.transversal(rng, bound)
    sample = Sample()
    for name, v in zip(('A', 'B', 'C'), tv.triangle.vertices):
        sample.points[name] = v
    for name, foot in zip(tv.feet._fields, tv.feet):
        sample.points[name] = foot
    sample.witnesses['transversal'] = tv.line

    product = menelaus_product(tv.triangle, tv.feet)
    collinear = is_menelaus_transversal(tv.triangle, tv.feet)
    sample.verdicts['product_is_one'] = product == 1
    sample.verdicts['feet_collinear'] = collinear

    (index, moved), sample.rejections = _retry(lambda: gen.perturb_foot(rng, bound, tv), 'perturbed foot')
    name = tv.feet._fields[index]
    sample.points[f'{name}_moved'] = moved[index]
    moved_product = menelaus_product(tv.triangle, moved)
    moved_collinear = is_menelaus_transversal(tv.triangle, moved)
    sample.verdicts['perturbed_product_not_one'] = moved_product != 1
    sample.verdicts['perturbed_not_collinear'] = not moved_collinear
    sample.verdicts['criteria_agree'] = (product == 1) == collinear and (moved_product == 1) == moved_collinear
    return sample


def _quadrilateral_points(sample: Sample, q: quad.CompleteQuadrilateral):
    for name in ('A', 'B', 'C', 'D', 'E', 'F', 'O', 'P', 'R'):
        sample.points[name] = getattr(q, name)


def _newton_gauss(rng: SplitMix64, bound: int) -> Sample:
    q = gen.quadrilateral(rng, bound)
    sample = Sample()
    _quadrilateral_points(sample, q)
    try:
        ng = quad.newton_gauss(q)
        sample.verdicts['newton_gauss_collinear'] = True
        sample.witnesses['newton_gauss_line'] = ng.line
        diagonal_midpoints = (ng.O1, ng.O2, ng.O3)
    except TheoremFalsifiedError as e:
        _logger.error(str(e))
        sample.verdicts['newton_gauss_collinear'] = False
        diagonal_midpoints = (midpoint(q.A, q.C), midpoint(q.B, q.D), midpoint(q.E, q.F))
    for name, p in zip(('O1', 'O2', 'O3'), diagonal_midpoints):
        sample.points[name] = p
    return sample


def _problem1(rng: SplitMix64, bound: int) -> Sample:
    cfg = gen.parallelogram_config(rng, bound)
    sample = Sample()
    for name in ('A', 'B', 'C', 'D', 'A1', 'B1', 'C1', 'D1', 'Pc'):
        sample.points[name] = getattr(cfg, name)

    report = quad.verify_problem1(cfg)
    for name in ('claim_b', 'literal_a', 'variant_a_bd'):
        verdict = getattr(report, name)
        sample.verdicts[name] = verdict.holds
        if verdict.witness is not None:
            sample.witnesses[name] = verdict.witness
    return sample


def _problem2(rng: SplitMix64, bound: int) -> Sample:
    q = gen.quadrilateral(rng, bound)
    report = quad.verify_problem2(q)
    if report.degenerate:
        raise GeometryError(q.dump(), _('Medial homology sub-check is degenerate.'))

    sample = Sample()
    _quadrilateral_points(sample, q)
    for name, holds in report.claim_i.items():
        sample.verdicts[f'claim_i_{name}'] = holds
    sample.verdicts['claim_ii'] = report.claim_ii
    sample.verdicts['claim_iii'] = report.claim_iii
    for name, same in report.axes_are_newton_gauss.items():
        sample.verdicts[f'axis_is_newton_gauss_{name}'] = bool(same)
    sample.verdicts['midlines'] = all(report.midlines.values())
    sample.verdicts['claim_iv'] = report.claim_iv.holds
    sample.verdicts['claim_v'] = report.claim_v.holds

    sample.witnesses['newton_gauss_line'] = report.newton_gauss.line
    for name, verdict in report.pairs.items():
        if verdict.center is not None:
            sample.witnesses[f'center_{name}'] = verdict.center
    return sample


@dataclass(frozen=True)
class TheoremCheck:
    """
    sample: builds one exact configuration and its verdicts.
    required: verdicts whose failure falsifies the theorem.
    findings: verdicts surfaced when false without failing the run.
    """
    name: str
    sample: Callable[[SplitMix64, int], Sample]
    required: Tuple[str, ...]
    findings: Tuple[str, ...] = ()


_PROBLEM2_REQUIRED = tuple(f'claim_i_{n}' for n in ('GHI', 'JKL', 'MNQ', 'UVT')) + ('claim_ii', 'claim_iii') + \
    tuple(f'axis_is_newton_gauss_{p}' for p in ('POR~GHI', 'POR~JKL', 'POR~MNQ', 'POR~UVT', 'GHI~JKL',
                                                 'MNQ~UVT')) + ('midlines',)

THEOREMS: Mapping[str, TheoremCheck] = OrderedDict((check.name, check) for check in (
    TheoremCheck('desargues', _desargues, ('center_is_O', 'axis_collinear', 'menelaus_trace')),
    TheoremCheck('reciprocal', _reciprocal, ('axis_collinear', 'center_concurrent', 'control_no_axis',
                                             'control_no_center')),
    TheoremCheck('menelaus', _menelaus, ('product_is_one', 'feet_collinear', 'perturbed_product_not_one',
                                         'perturbed_not_collinear', 'criteria_agree')),
    TheoremCheck('newton-gauss', _newton_gauss, ('newton_gauss_collinear',)),
    TheoremCheck('problem1', _problem1, ('claim_b',)),
    TheoremCheck('problem2', _problem2, _PROBLEM2_REQUIRED, ('claim_iv', 'claim_v')),
))


def _triple(value: Value):
    return [str(c) for c in value.coords]


@dataclass(frozen=True)
class TrialRecord:
    index: int
    seed: int
    points: Mapping[str, Value]
    verdicts: Mapping[str, bool]
    witnesses: Mapping[str, Value]
    rejections: int

    def falsified(self, check: TheoremCheck) -> bool:
        return any(self.verdicts.get(name) is False for name in check.required)

    def findings(self, check: TheoremCheck) -> Tuple[str, ...]:
        return tuple(name for name in check.findings if self.verdicts.get(name) is False)

    def to_dict(self) -> dict:
        return {
            'index': self.index,
            'seed': str(self.seed),
            'points': {k: _triple(v) for k, v in self.points.items()},
            'verdicts': dict(self.verdicts),
            'witnesses': {k: _triple(v) for k, v in self.witnesses.items()},
            'rejections': self.rejections,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


def run_trial(theorem: str, seed: int, index: int, bound: int) -> TrialRecord:
    """
    Run trial `index` of a fuzz campaign.  Degenerate samples are redrawn from the same trial stream
    and counted in the record.
    """
    check = THEOREMS[theorem]
    trial_seed = derive_seed(seed, index)
    rng = SplitMix64(trial_seed)
    sample, rejections = _retry(lambda: check.sample(rng, bound), f'{theorem} trial {index}')
    return TrialRecord(index=index, seed=trial_seed, points=sample.points, verdicts=sample.verdicts,
                       witnesses=sample.witnesses, rejections=rejections + sample.rejections)


def run_fuzz(spec: FuzzSpec, jobs: int = 1) -> Iterator[TrialRecord]:
    """
    Yield trial records in index order.  With jobs > 1 the trials run in a process pool, the
    records still arrive in index order.
    """
    indexes = range(spec.trials)
    if jobs <= 1:
        for index in indexes:
            yield run_trial(spec.theorem, spec.seed, index, spec.bound)
        return

    chunksize = max(1, spec.trials // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        yield from executor.map(run_trial, itertools.repeat(spec.theorem), itertools.repeat(spec.seed), indexes,
                                itertools.repeat(spec.bound), chunksize=chunksize)


@dataclass
class FuzzSummary:
    """ Running totals over the records of one campaign. """
    spec: FuzzSpec
    trials: int = 0
    rejections: int = 0
    falsifications: int = 0
    findings: int = 0
    pass_counts: Dict[str, int] = field(default_factory=OrderedDict)
    seen_counts: Dict[str, int] = field(default_factory=OrderedDict)

    @property
    def check(self) -> TheoremCheck:
        return THEOREMS[self.spec.theorem]

    def add(self, record: TrialRecord):
        self.trials += 1
        self.rejections += record.rejections
        if record.falsified(self.check):
            self.falsifications += 1
        self.findings += len(record.findings(self.check))
        for name, holds in record.verdicts.items():
            self.seen_counts[name] = self.seen_counts.get(name, 0) + 1
            self.pass_counts[name] = self.pass_counts.get(name, 0) + int(bool(holds))

    @property
    def passed(self) -> bool:
        return self.falsifications == 0

    def to_dict(self) -> dict:
        return {'summary': {
            'theorem': self.spec.theorem,
            'trials': self.trials,
            'seed': str(self.spec.seed),
            'bound': self.spec.bound,
            'rejections': self.rejections,
            'falsifications': self.falsifications,
            'findings': self.findings,
            'pass_counts': dict(self.pass_counts),
        }}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)
