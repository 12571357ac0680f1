#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
# Tokenizer for `.geo` files.  Works on the UTF-8 bytes so spans are byte accurate.
#
import re
from typing import List, NamedTuple

from desargues import translate_gettext as _
from desargues.dsl.nodes import SourceSpan
from desargues.exceptions import GeoSyntaxError

_TOKEN_RE = re.compile(rb'''
    (?P<ws>[ \t\r\f]+)
  | (?P<comment>\#[^\n]*)
  | (?P<newline>\n)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<int>[0-9]+)
  | (?P<punct>[(),=/-])
''', re.VERBOSE)

IDENT = 'identifier'
INT = 'integer'
NEWLINE = 'newline'
EOF = 'end of file'


class Token(NamedTuple):
    kind: str  # IDENT, INT, NEWLINE, EOF or the punctuation character itself.
    text: str
    span: SourceSpan


def _bad_character(data: bytes, pos: int) -> str:
    """ The offending character at pos, or the repr of a byte that does not start valid UTF-8. """
    lead = data[pos]
    for size, mask, prefix in ((1, 0x80, 0x00), (2, 0xE0, 0xC0), (3, 0xF0, 0xE0), (4, 0xF8, 0xF0)):
        if lead & mask == prefix:
            try:
                return data[pos:pos + size].decode('utf-8')
            except UnicodeDecodeError:
                break
    return repr(data[pos:pos + 1])


def tokenize(source) -> List[Token]:
    """
    Split construction source text into tokens, comments and blank space dropped.
    :param source: str or UTF-8 bytes.
    """
    data = source.encode('utf-8') if isinstance(source, str) else bytes(source)
    tokens = list()
    line, line_start, pos = 1, 0, 0

    while pos < len(data):
        match = _TOKEN_RE.match(data, pos)
        if not match:
            char = _bad_character(data, pos)
            span = SourceSpan(line, pos - line_start + 1, pos - line_start + 2, pos, pos + 1)
            raise GeoSyntaxError(span, {_('statement character')}, char)

        end = match.end()
        span = SourceSpan(line, pos - line_start + 1, end - line_start + 1, pos, end)
        group = match.lastgroup
        text = match.group().decode('utf-8', errors='replace')
        if group == 'newline':
            tokens.append(Token(NEWLINE, text, span))
            line, line_start = line + 1, end
        elif group == 'ident':
            tokens.append(Token(IDENT, text, span))
        elif group == 'int':
            tokens.append(Token(INT, text, span))
        elif group == 'punct':
            tokens.append(Token(text, text, span))
        pos = end

    tokens.append(Token(EOF, '', SourceSpan(line, pos - line_start + 1, pos - line_start + 1, pos, pos)))
    return tokens
