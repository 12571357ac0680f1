#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
# Exact evaluation of parsed `.geo` programs.
#
import logging
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Optional, Tuple, Union

from desargues import translate_gettext as _
from desargues.dsl.nodes import SourceSpan, AssertKind, Ref, Coord, Ideal, Mid, Join, Infinity, Meet, \
    PointDecl, LineDecl, Assert, Program, Expr
from desargues.exceptions import GeometryError
from desargues.geometry import ProjPoint, ProjLine, LINE_AT_INFINITY, from_affine, join, meet, incident, \
    midpoint, concurrency_verdict, collinearity_verdict

_logger = logging.getLogger('desargues')

Value = Union[ProjPoint, ProjLine]


@dataclass(frozen=True)
class EvalError:
    """ Degenerate operation met while evaluating one statement. """
    span: SourceSpan
    name: Optional[str]
    message: str

    def __str__(self):
        subject = f' {self.name}' if self.name else ''
        return f'{self.span}:{subject} {self.message}'


@dataclass(frozen=True)
class AssertionResult:
    """
    Verdict of one assertion.  `verdict` is None when the assertion could not be evaluated, `error`
    then says why.  `witness` holds the exact values behind the verdict.
    """
    span: SourceSpan
    kind: AssertKind
    verdict: Optional[bool]
    witness: Tuple[Value, ...] = ()
    error: Optional[EvalError] = None


@dataclass(frozen=True)
class EvalReport:
    bindings: Mapping[str, Value]
    results: Tuple[AssertionResult, ...]
    errors: Tuple[EvalError, ...] = field(default=())

    @property
    def ok(self) -> bool:
        """ True when every assertion holds and no statement failed. """
        return not self.errors and all(r.verdict for r in self.results)

    @property
    def failed(self) -> Tuple[AssertionResult, ...]:
        return tuple(r for r in self.results if r.verdict is not True)


class _Poisoned(Exception):
    """ Raised inside evaluation when a statement depends on a name whose declaration failed. """
    def __init__(self, name):
        self.name = name
        super().__init__(name)


class _Evaluator:

    def __init__(self):
        self.bindings = dict()
        self.poisoned = set()

    def value(self, expr: Expr) -> Value:
        if isinstance(expr, Ref):
            if expr.name in self.poisoned:
                raise _Poisoned(expr.name)
            return self.bindings[expr.name]
        if isinstance(expr, Coord):
            return from_affine(expr.x, expr.y)
        if isinstance(expr, Ideal):
            return ProjPoint(expr.x, expr.y, 0)
        if isinstance(expr, Mid):
            return midpoint(self.value(expr.first), self.value(expr.second))
        if isinstance(expr, Join):
            return join(self.value(expr.first), self.value(expr.second))
        if isinstance(expr, Infinity):
            return LINE_AT_INFINITY
        if isinstance(expr, Meet):
            return meet(self.value(expr.first), self.value(expr.second))
        raise TypeError(expr)

    def declare(self, statement, errors: list):
        try:
            self.bindings[statement.name] = self.value(statement.expr)
        except _Poisoned as e:
            self.poisoned.add(statement.name)
            errors.append(EvalError(statement.span, statement.name,
                                    _('depends on failed declaration of {0}').format(e.name)))
        except GeometryError as e:
            self.poisoned.add(statement.name)
            errors.append(EvalError(statement.span, statement.name, e.message))
        else:
            _logger.debug(f'{statement.name} = {self.bindings[statement.name]}')

    def check(self, statement: Assert) -> AssertionResult:
        try:
            args = [self.value(a) for a in statement.args]
        except _Poisoned as e:
            error = EvalError(statement.span, None, _('depends on failed declaration of {0}').format(e.name))
            return AssertionResult(statement.span, statement.kind, None, error=error)
        except GeometryError as e:
            return AssertionResult(statement.span, statement.kind, None,
                                   error=EvalError(statement.span, None, e.message))

        kind = statement.kind
        if kind in (AssertKind.COLLINEAR, AssertKind.CONCURRENT):
            v = collinearity_verdict(args) if kind is AssertKind.COLLINEAR else concurrency_verdict(args)
            if v.holds:
                witness = (v.witness, ) if v.witness is not None else ()
            else:
                witness = v.counterexample
            return AssertionResult(statement.span, kind, v.holds, witness)
        if kind is AssertKind.INCIDENT:
            return AssertionResult(statement.span, kind, incident(args[0], args[1]), tuple(args))
        if kind is AssertKind.PARALLEL:
            l, m = args
            if l == m:
                return AssertionResult(statement.span, kind, True, (l, ))
            common = meet(l, m)
            return AssertionResult(statement.span, kind, incident(common, LINE_AT_INFINITY), (common, ))
        # equal
        return AssertionResult(statement.span, kind, args[0] == args[1], tuple(args))


def evaluate(program: Program) -> EvalReport:
    """
    Evaluate statements in order with exact arithmetic.  Degenerate operations become EvalError
    entries and abort only the statements that depend on them; failed assertions never stop evaluation.
    """
    evaluator = _Evaluator()
    errors = list()
    results = list()

    for statement in program.statements:
        if isinstance(statement, (PointDecl, LineDecl)):
            evaluator.declare(statement, errors)
            continue
        result = evaluator.check(statement)
        if result.error:
            errors.append(result.error)
        results.append(result)

    _logger.debug(f'evaluated {len(program.statements)} statements, {len(errors)} errors.')
    return EvalReport(MappingProxyType(dict(evaluator.bindings)), tuple(results), tuple(errors))
