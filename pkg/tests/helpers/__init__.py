#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
import contextlib
import io
import json
import os
from fractions import Fraction

from jsonschema import validate

from desargues.geometry import from_affine
from desargues.system_utils import package_path

TEST_DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'test-data')
EXAMPLES_DIR = package_path('examples')


def pt(x, y):
    """ Finite point from integer, string or Fraction affine coordinates. """
    return from_affine(Fraction(x), Fraction(y))


def data_file(name):
    return os.path.join(TEST_DATA_DIR, name)


def example(name):
    return os.path.join(EXAMPLES_DIR, name)


def run_tool(module, argv):
    """
    Run a tool module in process.
    :return: (exit code, captured stdout text, captured stderr text)
    """
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        exit_code = module.run(list(argv))
    return exit_code, out.getvalue(), err.getvalue()


def validate_against(document, schema_file):
    """ Raise jsonschema.ValidationError unless the document matches a package schema. """
    with open(package_path('schemas', schema_file)) as h:
        schema = json.loads(h.read())
    validate(document, schema)
