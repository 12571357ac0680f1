#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
# Recursive descent parser and canonical formatter for `.geo` construction programs.
#
#   program   := { statement NEWLINE }
#   statement := "point" IDENT "=" pexpr | "line" IDENT "=" lexpr | "assert" akind "(" args ")"
#   pexpr     := "(" rat "," rat ")" | "meet" "(" lexpr "," lexpr ")" | "mid" "(" IDENT "," IDENT ")"
#              | "ideal" "(" rat "," rat ")"
#   lexpr     := IDENT | "join" "(" IDENT "," IDENT ")" | "infinity"
#   akind     := "collinear" | "concurrent" | "incident" | "parallel" | "equal"
#   args      := arg { "," arg }, arg being any point or line expression
#   rat       := ["-"] INT [ "/" INT ]
#
import logging
from fractions import Fraction
from typing import Dict, List

from desargues import translate_gettext as _
from desargues.dsl._lexer import Token, tokenize, IDENT, INT, NEWLINE, EOF
from desargues.dsl.nodes import Kind, AssertKind, Ref, Coord, Ideal, Mid, Join, Infinity, Meet, \
    PointDecl, LineDecl, Assert, Program, Expr, expr_kind
from desargues.exceptions import GeoSyntaxError, GeoNameError

_logger = logging.getLogger('desargues')

KEYWORDS = frozenset(('point', 'line', 'assert', 'meet', 'mid', 'ideal', 'join', 'infinity'))

# Assertion kind -> (minimum argument count, maximum count or None, argument kinds or None for "same kind").
_ASSERT_SIGNATURES = {
    AssertKind.COLLINEAR: (3, None, Kind.POINT),
    AssertKind.CONCURRENT: (3, None, Kind.LINE),
    AssertKind.INCIDENT: (2, 2, (Kind.POINT, Kind.LINE)),
    AssertKind.PARALLEL: (2, 2, Kind.LINE),
    AssertKind.EQUAL: (2, 2, None),
}


class _Parser:
    """ Single use parser over a token list, tracking declared names and their kinds. """

    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.pos = 0
        self.declared: Dict[str, Kind] = dict()

    # -- token helpers ------------------------------------------------------------------------
    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.kind != EOF:
            self.pos += 1
        return token

    def error(self, expected, token: Token = None):
        token = token or self.peek()
        return GeoSyntaxError(token.span, set(expected), token.text if token.kind != EOF else EOF)

    def expect(self, kind: str) -> Token:
        token = self.peek()
        if token.kind != kind:
            raise self.error({kind})
        return self.advance()

    # -- grammar ------------------------------------------------------------------------------
    def program(self) -> Program:
        statements = list()
        while self.peek().kind != EOF:
            if self.peek().kind == NEWLINE:
                self.advance()
                continue
            statements.append(self.statement())
            if self.peek().kind not in (NEWLINE, EOF):
                raise self.error({NEWLINE})
        return Program(tuple(statements))

    def statement(self):
        token = self.peek()
        if token.kind == IDENT and token.text in ('point', 'line'):
            self.advance()
            name_token = self.new_name()
            self.expect('=')
            if token.text == 'point':
                expr = self.point_expr()
                node = PointDecl(name_token.text, expr, token.span.to(expr.span))
                self.declared[name_token.text] = Kind.POINT
            else:
                expr = self.line_expr()
                node = LineDecl(name_token.text, expr, token.span.to(expr.span))
                self.declared[name_token.text] = Kind.LINE
            return node
        if token.kind == IDENT and token.text == 'assert':
            return self.assertion()
        raise self.error({'point', 'line', 'assert'})

    def new_name(self) -> Token:
        token = self.peek()
        if token.kind != IDENT or token.text in KEYWORDS:
            raise self.error({IDENT})
        if token.text in self.declared:
            raise GeoNameError(token.span, token.text, _('redefined identifier'))
        return self.advance()

    def reference(self, kind: Kind = None) -> Ref:
        token = self.peek()
        if token.kind != IDENT or token.text in KEYWORDS:
            raise self.error({IDENT})
        if token.text not in self.declared:
            raise GeoNameError(token.span, token.text, _('undefined identifier'))
        declared = self.declared[token.text]
        if kind is not None and declared is not kind:
            raise GeoSyntaxError(token.span, {kind.value}, f'{declared.value} {token.text}')
        self.advance()
        return Ref(token.text, declared, token.span)

    def rational(self) -> Fraction:
        negative = False
        if self.peek().kind == '-':
            self.advance()
            negative = True
        value = Fraction(int(self.expect(INT).text))
        if self.peek().kind == '/':
            self.advance()
            token = self.expect(INT)
            if int(token.text) == 0:
                raise GeoSyntaxError(token.span, {_('nonzero integer')}, token.text)
            value /= int(token.text)
        return -value if negative else value

    def pair_of(self, item):
        """ "(" item "," item ")" returning both items and the closing token. """
        self.expect('(')
        first = item()
        self.expect(',')
        second = item()
        close = self.expect(')')
        return first, second, close

    def point_expr(self):
        token = self.peek()
        if token.kind == '(':
            self.advance()
            x = self.rational()
            self.expect(',')
            y = self.rational()
            close = self.expect(')')
            return Coord(x, y, token.span.to(close.span))
        if token.kind == IDENT and token.text in ('meet', 'mid', 'ideal'):
            self.advance()
            if token.text == 'meet':
                first, second, close = self.pair_of(self.line_expr)
                return Meet(first, second, token.span.to(close.span))
            if token.text == 'mid':
                first, second, close = self.pair_of(lambda: self.reference(Kind.POINT))
                return Mid(first, second, token.span.to(close.span))
            x, y, close = self.pair_of(self.rational)
            return Ideal(x, y, token.span.to(close.span))
        raise self.error({'(', 'meet', 'mid', 'ideal'})

    def line_expr(self):
        token = self.peek()
        if token.kind == IDENT and token.text == 'join':
            self.advance()
            first, second, close = self.pair_of(lambda: self.reference(Kind.POINT))
            return Join(first, second, token.span.to(close.span))
        if token.kind == IDENT and token.text == 'infinity':
            self.advance()
            return Infinity(token.span)
        if token.kind == IDENT and token.text not in KEYWORDS:
            return self.reference(Kind.LINE)
        raise self.error({'join', 'infinity', IDENT})

    def argument(self) -> Expr:
        token = self.peek()
        if token.kind == '(' or (token.kind == IDENT and token.text in ('meet', 'mid', 'ideal')):
            return self.point_expr()
        if token.kind == IDENT and token.text in ('join', 'infinity'):
            return self.line_expr()
        if token.kind == IDENT:
            return self.reference()
        raise self.error({'(', 'meet', 'mid', 'ideal', 'join', 'infinity', IDENT})

    def assertion(self) -> Assert:
        start = self.advance()
        token = self.peek()
        kinds = {k.value: k for k in AssertKind}
        if token.kind != IDENT or token.text not in kinds:
            raise self.error(set(kinds))
        kind = kinds[self.advance().text]
        minimum, maximum, arg_kinds = _ASSERT_SIGNATURES[kind]

        self.expect('(')
        args = [self.argument()]
        while self.peek().kind == ',':
            if maximum is not None and len(args) == maximum:
                raise self.error({')'})
            self.advance()
            args.append(self.argument())
        if self.peek().kind == ')' and len(args) < minimum:
            raise self.error({','})
        close = self.expect(')')

        self._check_argument_kinds(kind, args, arg_kinds)
        return Assert(kind, tuple(args), start.span.to(close.span))

    @staticmethod
    def _check_argument_kinds(kind: AssertKind, args, arg_kinds):
        if arg_kinds is None:
            expected = [expr_kind(args[0])] * len(args)
        elif isinstance(arg_kinds, tuple):
            expected = list(arg_kinds)
        else:
            expected = [arg_kinds] * len(args)
        for arg, want in zip(args, expected):
            found = expr_kind(arg)
            if found is not want:
                raise GeoSyntaxError(arg.span, {want.value}, found.value)


def parse(source) -> Program:
    """
    Parse construction source text.
    :param source: str or UTF-8 bytes.
    :raises GeoSyntaxError: malformed input, with span and expected token set.
    :raises GeoNameError: undefined or redefined identifier, with span.
    """
    program = _Parser(tokenize(source)).program()
    _logger.debug(f'parsed {len(program.statements)} statements.')
    return program


#
# Canonical formatting.
#
def _fmt_rational(value: Fraction) -> str:
    return str(Fraction(value))


def format_expr(expr: Expr) -> str:
    if isinstance(expr, Ref):
        return expr.name
    if isinstance(expr, Coord):
        return f'({_fmt_rational(expr.x)}, {_fmt_rational(expr.y)})'
    if isinstance(expr, Ideal):
        return f'ideal({_fmt_rational(expr.x)}, {_fmt_rational(expr.y)})'
    if isinstance(expr, Infinity):
        return 'infinity'
    name = {Mid: 'mid', Join: 'join', Meet: 'meet'}[type(expr)]
    return f'{name}({format_expr(expr.first)}, {format_expr(expr.second)})'


def format_statement(statement) -> str:
    if isinstance(statement, PointDecl):
        return f'point {statement.name} = {format_expr(statement.expr)}'
    if isinstance(statement, LineDecl):
        return f'line {statement.name} = {format_expr(statement.expr)}'
    return f'assert {statement.kind.value}(' + ', '.join(format_expr(a) for a in statement.args) + ')'


def format_program(program: Program) -> str:
    """ Canonical source text, parse(format_program(p)) == p. """
    return ''.join(format_statement(s) + '\n' for s in program.statements)
