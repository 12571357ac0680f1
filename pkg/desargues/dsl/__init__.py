#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
from .nodes import SourceSpan, Kind, AssertKind, Program
from .parser import parse, format_program
from .evaluator import EvalError, AssertionResult, EvalReport, evaluate

__all__ = [
    'SourceSpan', 'Kind', 'AssertKind', 'Program', 'parse', 'format_program',
    'EvalError', 'AssertionResult', 'EvalReport', 'evaluate',
]
