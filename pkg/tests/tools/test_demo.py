#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
import contextlib
import io
import sys
from unittest import TestCase, mock

from desargues.tools import ExitCode
from desargues.tools import demo
from desargues.tools.__main__ import run as launcher
from tests.helpers import run_tool


class DemoToolTest(TestCase):

    def test_problem1(self):
        exit_code, out, _err = run_tool(demo, ['problem1'])
        self.assertEqual(exit_code, ExitCode.PASS)
        self.assertIn('Claim a discrepancy', out)
        self.assertIn('Pc  = (5, -1)', out)
        self.assertIn('(18/5, 6/5)', out)

    def test_claim_a_discrepancy_is_computed(self):
        _exit_code, out, _err = run_tool(demo, ['problem1'])
        self.assertIn('AC, A1C1, B1D1 concurrent in 0/2 configurations', out)
        self.assertIn('BD, A1C1, B1D1 concurrent in 2/2', out)
        self.assertIn('AC meets A1C1 at (18/5, 6/5), B1D1 meets AC at (12/5, 4/5)', out)
        self.assertIn('meet at (10/3, 2/3)', out)
        self.assertIn('meet at (8/3, 4/3)', out)
        self.assertIn('[3:1:0] (ideal)', out)
        self.assertNotIn('[10:2:3]', out)

    def test_problem2(self):
        exit_code, out, _err = run_tool(demo, ['problem2'])
        self.assertEqual(exit_code, ExitCode.PASS)
        self.assertIn('AB ∩ CD', out)
        self.assertIn('[2:0:-5]', out)
        self.assertEqual(out.count('axis = Newton-Gauss line'), 6)

    def test_unknown_demo(self):
        exit_code, _out, _err = run_tool(demo, ['problem3'])
        self.assertEqual(exit_code, ExitCode.USAGE)

    def test_worked_configurations(self):
        first, second = demo.problem1_configs()
        self.assertEqual(str(first.Pc), '[5:-1:1]')
        self.assertEqual(str(second.Pc), '[1:3:1]')
        self.assertEqual(str(demo.worked_quadrilateral().E), '[7:0:-1]')


class LauncherTest(TestCase):

    @staticmethod
    def _launch(*argv):
        out, err = io.StringIO(), io.StringIO()
        with mock.patch.object(sys, 'argv', ['desargues-cli'] + list(argv)), \
                contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            exit_code = launcher()
        return exit_code, out.getvalue(), err.getvalue()

    def test_usage(self):
        exit_code, out, _err = self._launch('--help')
        self.assertEqual(exit_code, ExitCode.PASS)
        for command in ('check', 'demo', 'figure', 'fuzz'):
            self.assertIn(f'  {command}', out)

    def test_runs_tool(self):
        exit_code, out, _err = self._launch('demo', 'problem1')
        self.assertEqual(exit_code, ExitCode.PASS)
        self.assertIn('finished.', out)

    def test_failed_tool_is_not_finished(self):
        exit_code, out, _err = self._launch('check', 'problem1_claim_a.geo')
        self.assertEqual(exit_code, ExitCode.FAILURE)
        self.assertIn('FAIL', out)
        self.assertNotIn('finished.', out)

    def test_json_output_is_not_followed_by_text(self):
        exit_code, out, _err = self._launch('fuzz', '--theorem', 'menelaus', '--trials', '1', '--seed', '3', '--json')
        self.assertEqual(exit_code, ExitCode.PASS)
        self.assertNotIn('finished.', out)

    def test_unknown_command(self):
        exit_code, _out, err = self._launch('pappus')
        self.assertEqual(exit_code, ExitCode.USAGE)
        self.assertIn('unknown command', err)
