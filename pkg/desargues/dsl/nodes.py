#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
# Syntax tree of `.geo` construction programs.  Spans never take part in equality, so two programs
# compare equal when they have the same structure.
#
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple, Union


@dataclass(frozen=True)
class SourceSpan:
    """ Location of a token or node: 1-based line, 1-based byte columns and 0-based byte offsets. """
    line: int
    column: int
    end_column: int
    offset: int
    end_offset: int

    def to(self, other: 'SourceSpan') -> 'SourceSpan':
        """ Span from the start of this span to the end of another one on the same line. """
        return SourceSpan(self.line, self.column, other.end_column if other.line == self.line else self.end_column,
                          self.offset, other.end_offset)

    def __str__(self):
        return f'{self.line}:{self.column}'


class Kind(Enum):
    """ Value kind of an expression or declared name. """
    POINT = 'point'
    LINE = 'line'


class AssertKind(Enum):
    COLLINEAR = 'collinear'
    CONCURRENT = 'concurrent'
    INCIDENT = 'incident'
    PARALLEL = 'parallel'
    EQUAL = 'equal'


@dataclass(frozen=True)
class Ref:
    name: str
    kind: Kind
    span: Optional[SourceSpan] = field(default=None, compare=False)


@dataclass(frozen=True)
class Coord:
    x: Fraction
    y: Fraction
    span: Optional[SourceSpan] = field(default=None, compare=False)


@dataclass(frozen=True)
class Ideal:
    x: Fraction
    y: Fraction
    span: Optional[SourceSpan] = field(default=None, compare=False)


@dataclass(frozen=True)
class Mid:
    first: Ref
    second: Ref
    span: Optional[SourceSpan] = field(default=None, compare=False)


@dataclass(frozen=True)
class Join:
    first: Ref
    second: Ref
    span: Optional[SourceSpan] = field(default=None, compare=False)


@dataclass(frozen=True)
class Infinity:
    span: Optional[SourceSpan] = field(default=None, compare=False)


@dataclass(frozen=True)
class Meet:
    first: 'LineExpr'
    second: 'LineExpr'
    span: Optional[SourceSpan] = field(default=None, compare=False)


PointExpr = Union[Coord, Ideal, Mid, Meet, Ref]
LineExpr = Union[Join, Infinity, Ref]
Expr = Union[PointExpr, LineExpr]


def expr_kind(expr: Expr) -> Kind:
    if isinstance(expr, Ref):
        return expr.kind
    if isinstance(expr, (Join, Infinity)):
        return Kind.LINE
    return Kind.POINT


@dataclass(frozen=True)
class PointDecl:
    name: str
    expr: PointExpr
    span: Optional[SourceSpan] = field(default=None, compare=False)


@dataclass(frozen=True)
class LineDecl:
    name: str
    expr: LineExpr
    span: Optional[SourceSpan] = field(default=None, compare=False)


@dataclass(frozen=True)
class Assert:
    kind: AssertKind
    args: Tuple[Expr, ...]
    span: Optional[SourceSpan] = field(default=None, compare=False)


Statement = Union[PointDecl, LineDecl, Assert]


@dataclass(frozen=True)
class Program:
    statements: Tuple[Statement, ...]

    @property
    def declarations(self):
        return [s for s in self.statements if not isinstance(s, Assert)]

    @property
    def assertions(self):
        return [s for s in self.statements if isinstance(s, Assert)]
