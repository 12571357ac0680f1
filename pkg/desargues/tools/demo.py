#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
# Tool running the worked parallelogram and quadrilateral configurations through the verifiers.
#
import logging
import sys
from enum import Enum
from fractions import Fraction

from desargues import translate_gettext as _
from desargues.geometry import ProjPoint, from_affine, to_affine
from desargues.geometry import quadrilateral as quad
from desargues.system_utils import tc as _tc
from desargues.tools import ToolContextManager, ToolEnvironmentObject, ExitCode

_logger = logging.getLogger('desargues')

# Tool_cmd and tool_desc name are required.
tool_cmd = _('demo')
tool_desc = _('run the worked problem1 or problem2 configuration and print the full report.')


class DemoName(Enum):
    problem1 = 'problem1'
    problem2 = 'problem2'


# Parallelogram shared by both worked Problem 1 configurations, with (pt, ta, tb) per configuration.
PARALLELOGRAM = ((0, 0), (4, 0), (6, 2), (2, 2))
PROBLEM1_PARAMETERS = (
    (Fraction(-1, 2), Fraction(3, 4), Fraction(1, 4)),
    (Fraction(3, 2), Fraction(1, 2), Fraction(1, 2)),
)
WORKED_QUADRILATERAL = ((0, 0), (4, 0), (5, 3), (1, 2))


def problem1_configs():
    vertices = [from_affine(*xy) for xy in PARALLELOGRAM]
    return [quad.build_problem1_config(*vertices, *params) for params in PROBLEM1_PARAMETERS]


def worked_quadrilateral() -> quad.CompleteQuadrilateral:
    return quad.build(*(from_affine(*xy) for xy in WORKED_QUADRILATERAL))


def _xy(point) -> str:
    """ Affine text of a finite point, homogeneous text of an ideal one. """
    if point.is_ideal:
        return f'{point} (' + _('ideal') + ')'
    x, y = to_affine(point)
    return f'({x}, {y})'


class DemoClass(object):
    """ Tool class for the worked demonstrations. """

    def __init__(self, args, env: ToolEnvironmentObject):
        """
        :param args: command line arguments.
        :param env: tool environment information.
        """
        self.args = args
        self.env = env

    @staticmethod
    def _claim(label, verdict):
        line = f'    {label.ljust(34)} {_tc.verdict(verdict.holds)}'
        if verdict.holds and verdict.witness is not None:
            witness = verdict.witness
            line += '  ' + _('common') + ' ' + (_xy(witness) if isinstance(witness, ProjPoint) else str(witness))
        elif not verdict.holds:
            line += '  ' + _('counterexample') + ' ' + ', '.join(_xy(p) if isinstance(p, ProjPoint) else str(p)
                                                                 for p in verdict.counterexample)
        _logger.info(line)

    @staticmethod
    def _discrepancy(reports):
        """ Compare the printed claim a with the BD reading over the computed reports. """
        total = len(reports)
        literal = sum(1 for r in reports if r.literal_a.holds)
        variant = sum(1 for r in reports if r.variant_a_bd.holds)
        _logger.info(_tc.fmt(_('Claim a discrepancy'), _tc.bold))
        _logger.info('    ' + _('AC, A1C1, B1D1 concurrent in') + f' {literal}/{total} ' + _('configurations') +
                     ', ' + _('BD, A1C1, B1D1 concurrent in') + f' {variant}/{total}.')
        for index, report in enumerate(reports, start=1):
            if report.literal_a.holds:
                continue
            first, second = report.literal_a.counterexample
            line = f'    {index}: ' + _('AC meets A1C1 at') + f' {_xy(first)}, ' + _('B1D1 meets AC at') + \
                   f' {_xy(second)}'
            if report.variant_a_bd.holds:
                line += '; ' + _('BD, A1C1, B1D1 meet at') + f' {_xy(report.variant_a_bd.witness)}'
            _logger.info(line + '.')
        if literal < total:
            _logger.info('    ' + _('The homology argument pairs A with C, A1 with B1 and D1 with C1, which proves '
                                  'claim b. Both readings of claim a are reported separately.'))

    def problem1(self) -> ExitCode:
        exit_code = ExitCode.PASS
        reports = list()
        for index, cfg in enumerate(problem1_configs(), start=1):
            _logger.info(_tc.fmt(_('Problem 1, configuration') + f' {index}', _tc.bold))
            for name in ('A', 'B', 'C', 'D', 'A1', 'B1', 'C1', 'D1', 'Pc'):
                _logger.info(f'    {name.ljust(3)} = {_xy(getattr(cfg, name))}')
            report = quad.verify_problem1(cfg)
            reports.append(report)
            self._claim(_('b) A1B1, C1D1, AC concurrent'), report.claim_b)
            self._claim(_('a) AC, A1C1, B1D1 concurrent'), report.literal_a)
            self._claim(_('a\') BD, A1C1, B1D1 concurrent'), report.variant_a_bd)
            if not report.claim_b.holds:
                exit_code = ExitCode.FAILURE
            _logger.info('')

        self._discrepancy(reports)
        return exit_code

    def problem2(self) -> ExitCode:
        q = worked_quadrilateral()
        _logger.info(_tc.fmt(_('Problem 2, worked quadrilateral'), _tc.bold))
        _logger.info('    ' + quad.E_INTERPRETATION)
        for name in ('A', 'B', 'C', 'D', 'E', 'F', 'O', 'P', 'R'):
            _logger.info(f'    {name.ljust(3)} = {_xy(getattr(q, name))}')

        mids = quad.midpoint_set(q)
        _logger.info('    ' + ', '.join(f'{name}={_xy(getattr(mids, name))}' for name, _seg in quad.MIDPOINT_SEGMENTS))

        report = quad.verify_problem2(q)
        ng = report.newton_gauss
        _logger.info('    ' + _('Newton-Gauss line') + f' {ng.line}: O1={_xy(ng.O1)}, O2={_xy(ng.O2)}, O3={_xy(ng.O3)}')
        _logger.info('')

        labels = {'POR~GHI': 'i', 'POR~JKL': 'i', 'POR~MNQ': 'i', 'POR~UVT': 'i', 'GHI~JKL': 'ii',
                  'MNQ~UVT': 'iii'}
        exit_code = ExitCode.PASS
        for name, verdict in report.pairs.items():
            line = f'    {labels[name].ljust(4)} {name.ljust(10)} {_tc.verdict(verdict.holds)}'
            if verdict.holds:
                same = _('axis = Newton-Gauss line') if verdict.axis_is_newton_gauss else \
                    _('axis differs from the Newton-Gauss line')
                line += '  ' + _('center') + f' {_xy(verdict.center)}, ' + _('axis') + f' {verdict.axis}, {same}'
            else:
                line += f'  {verdict.detail}'
            _logger.info(line)
            if not verdict.holds or not verdict.axis_is_newton_gauss:
                exit_code = ExitCode.FAILURE

        for label, verdict in (('iv', report.claim_iv), ('v', report.claim_v)):
            if verdict is None:
                _logger.info(f'    {label.ljust(4)} ' + _tc.verdict(None))
                continue
            self._claim(f'{label} ' + _('homology centers collinear'), verdict)

        _logger.info('')
        _logger.info('    ' + _('midline incidences') + ': ' +
                     ', '.join(f'{name} {_tc.verdict(holds)}' for name, holds in report.midlines.items()))
        return exit_code

    def run(self):
        """
        Main program process
        :return: Exit code value
        """
        if self.args.name is DemoName.problem1:
            return self.problem1()
        return self.problem2()


def run(argv=None):
    # Set global debug value and setup application logging.
    ToolContextManager.initialize_logging(tool_cmd, argv)
    parser = ToolContextManager.get_argparser(tool_cmd, tool_desc)

    parser.add_argument('name', help=_('demonstration to run') + ' (problem1, problem2)', metavar='NAME')

    args = parser.parse_args(argv)

    try:
        args.name = DemoName(args.name)
    except ValueError:
        _logger.error(_('Unknown demonstration') + f' "{args.name}", ' + _('expected problem1 or problem2.'))
        return int(ExitCode.USAGE)

    with ToolContextManager(tool_cmd, args) as tool_env:
        process = DemoClass(args, tool_env)
        exit_code = process.run()
        return int(exit_code)


# --- Main Program Call ---
if __name__ == "__main__":
    sys.exit(run())
