#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
import json
from unittest import TestCase

from desargues.system_utils import JSONObject, TerminalColors

class JSONObjectTest(TestCase):

    def test_nested_properties(self):
        config = JSONObject('{"theorem": "menelaus", "limits": {"trials": 3}, "points": [{"x": 1}, 2]}')
        self.assertTrue(config)
        self.assertEqual(config.theorem, 'menelaus')
        self.assertEqual(config.limits.trials, 3)
        self.assertEqual(config.points[0].x, 1)
        self.assertEqual(config.points[1], 2)
        self.assertEqual(json.loads(repr(config))['limits'], {'trials': 3})

    def test_get(self):
        config = JSONObject({'seed': 9})
        self.assertEqual(config.get('seed'), 9)
        self.assertIsNone(config.get('bound'))
        self.assertEqual(config.get('bound', 4), 4)

    def test_empty(self):
        config = JSONObject(None)
        self.assertFalse(config)
        self.assertIsNone(config.get('theorem'))

class TerminalColorsTest(TestCase):

    def test_verdict(self):
        colors = TerminalColors()
        colors.enabled = False
        self.assertEqual(colors.verdict(True), 'PASS')
        self.assertEqual(colors.verdict(False), 'FAIL')
        self.assertEqual(colors.verdict(None), 'n/a')

    def test_fmt(self):
        colors = TerminalColors()
        colors.enabled = True
        self.assertEqual(colors.fmt('x', colors.bold), colors.bold + 'x' + colors.reset)
        self.assertEqual(colors.fmt('x'), 'x')
