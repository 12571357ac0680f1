#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
import os
import tempfile
import xml.etree.ElementTree as ET
from unittest import TestCase

from desargues.tools import ExitCode
from desargues.tools import figure
from tests.helpers import run_tool, example, data_file

SVG = '{http://www.w3.org/2000/svg}'


class FigureToolTest(TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.output = os.path.join(self.tmp.name, 'figure.svg')

    def tearDown(self):
        self.tmp.cleanup()

    def test_figure(self):
        exit_code, _out, _err = run_tool(figure, [example('fig1.geo'), '-o', self.output])
        self.assertEqual(exit_code, ExitCode.PASS)
        root = ET.parse(self.output).getroot()
        ids = {e.get('id') for e in root.iter() if e.get('id')}
        for name in ('A', 'B', 'C', 'A1', 'B1', 'C1', 'O', 'N', 'M', 'P'):
            self.assertIn(f'point-{name}', ids)
        self.assertIn('line-axis', ids)
        labels = [e.text for e in root.iter(f'{SVG}text')]
        self.assertIn('A1', labels)

    def test_deterministic_output(self):
        run_tool(figure, [example('fig3.geo'), '-o', self.output])
        with open(self.output, 'rb') as h:
            first = h.read()
        run_tool(figure, [example('fig3.geo'), '-o', self.output])
        with open(self.output, 'rb') as h:
            self.assertEqual(h.read(), first)

    def test_ideal_elements_in_legend(self):
        exit_code, _out, _err = run_tool(figure, [example('homothetic.geo'), '-o', self.output])
        self.assertEqual(exit_code, ExitCode.PASS)
        root = ET.parse(self.output).getroot()
        legend = [e.text for e in root.iter(f'{SVG}text') if e.get('class') == 'legend']
        self.assertEqual(len(legend), 4)
        self.assertTrue(any(text.startswith('axis = [0:0:1]') for text in legend))

    def test_failed_assertion_still_draws(self):
        exit_code, _out, _err = run_tool(figure, [example('problem1_claim_a.geo'), '-o', self.output])
        self.assertEqual(exit_code, ExitCode.FAILURE)
        self.assertTrue(os.path.exists(self.output))

    def test_evaluation_error_draws_nothing(self):
        exit_code, _out, _err = run_tool(figure, [data_file('degenerate.geo'), '-o', self.output])
        self.assertEqual(exit_code, ExitCode.FAILURE)
        self.assertFalse(os.path.exists(self.output))

    def test_errors(self):
        exit_code, _out, _err = run_tool(figure, [data_file('bad-arity.geo'), '-o', self.output])
        self.assertEqual(exit_code, ExitCode.USAGE)
        exit_code, _out, _err = run_tool(figure, [data_file('missing.geo'), '-o', self.output])
        self.assertEqual(exit_code, ExitCode.IO_ERROR)
        bad_output = os.path.join(self.tmp.name, 'no-such-dir', 'figure.svg')
        exit_code, _out, _err = run_tool(figure, [example('menelaus.geo'), '-o', bad_output])
        self.assertEqual(exit_code, ExitCode.IO_ERROR)
