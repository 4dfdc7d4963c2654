# Copyright (c) 2026, the slicekit authors
# All rights reserved.
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
#     * Redistributions of source code must retain the above copyright
#       notice, this list of conditions and the following disclaimer.
#     * Redistributions in binary form must reproduce the above copyright
#       notice, this list of conditions and the following disclaimer in the
#       documentation and/or other materials provided with the distribution.
#     * Neither the name of organization nor the
#       names of its contributors may be used to endorse or promote products
#       derived from this software without specific prior written permission.
#
# THIS SOFTWARE IS PROVIDED BY THE SLICEKIT AUTHORS ''AS IS'' AND ANY
# EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE IMPLIED
# WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE SLICEKIT AUTHORS BE LIABLE FOR ANY
# DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL DAMAGES
# (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES;
# LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER CAUSED AND
# ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY, OR TORT
# (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE OF THIS
# SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.
import re

from .exceptions import LexError

IDENTIFIER = "identifier"
KEYWORD = "keyword"
LITERAL = "literal"
OPERATOR = "operator"
PUNCTUATION = "punctuation"

KEYWORDS = frozenset([
    "void", "int", "long", "double", "float", "char", "boolean",
    "if", "else", "while", "for", "return", "new",
    "public", "protected", "private", "static", "final",
])
LITERAL_KEYWORDS = frozenset(["true", "false", "null"])

# longest first, so that "<=" wins over "<"
OPERATORS = ("++", "--", "+=", "-=", "*=", "/=", "%=", "==", "!=", "<=", ">=", "&&", "||",
             "=", "<", ">", "+", "-", "*", "/", "%", "!")
PUNCTUATIONS = "(){};,."

_TRIVIA = re.compile(r"(?:\s+|//[^\n]*|/\*.*?\*/)+", re.S)
_IDENTIFIER = re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*")
_NUMBER = re.compile(r"[0-9]+[lL]?")
_STRING = re.compile(r'"(?:[^"\\\n]|\\.)*"')
_CHAR = re.compile(r"'(?:[^'\\\n]|\\.)'")

class Token(object):
    def __init__(self, kind, text, line, column, offset, leading=""):
        super(Token, self).__init__()
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column
        self.offset = offset
        self.leading = leading
        self.trailing = ""
    @property
    def end(self):
        return self.offset + len(self.text)
    def __eq__(self, other):
        return isinstance(other, Token) and (other.kind, other.text, other.line, other.column) == \
            (self.kind, self.text, self.line, self.column)
    def __ne__(self, other):
        return not (self == other)
    def __repr__(self):
        return "<%s %r at %s:%s>" % (self.kind, self.text, self.line, self.column)

class _Cursor(object):
    def __init__(self, source):
        super(_Cursor, self).__init__()
        self.source = source
        self.offset = 0
        self.line = 1
        self.column = 1
    def advance(self, text):
        newlines = text.count("\n")
        if newlines:
            self.line += newlines
            self.column = len(text) - text.rfind("\n")
        else:
            self.column += len(text)
        self.offset += len(text)
    def match(self, pattern):
        return pattern.match(self.source, self.offset)
    def startswith(self, text):
        return self.source.startswith(text, self.offset)

def _classify_word(word):
    if word in LITERAL_KEYWORDS:
        return LITERAL
    if word in KEYWORDS:
        return KEYWORD
    return IDENTIFIER

def _next_token_text(cursor):
    for kind, pattern in ((None, _IDENTIFIER), (LITERAL, _NUMBER), (LITERAL, _STRING), (LITERAL, _CHAR)):
        match = cursor.match(pattern)
        if match:
            text = match.group(0)
            return (kind or _classify_word(text)), text
    for operator in OPERATORS:
        if cursor.startswith(operator):
            return OPERATOR, operator
    char = cursor.source[cursor.offset]
    if char in PUNCTUATIONS:
        return PUNCTUATION, char
    raise LexError(cursor.line, cursor.column, char)

def tokenize(source):
    """
    Splits method source into tokens. Whitespace and comments are kept as the
    ``leading`` trivia of the following token (``trailing`` on the last one),
    so untokenize(tokenize(s)) == s.
    """
    returned = []
    cursor = _Cursor(source)
    while True:
        leading = ""
        match = cursor.match(_TRIVIA)
        if match:
            leading = match.group(0)
            cursor.advance(leading)
        if cursor.offset >= len(source):
            if returned:
                returned[-1].trailing = leading
            break
        if cursor.startswith("/*"):
            # an unterminated block comment
            raise LexError(cursor.line, cursor.column, "/")
        kind, text = _next_token_text(cursor)
        returned.append(Token(kind, text, cursor.line, cursor.column, cursor.offset, leading))
        cursor.advance(text)
    return returned

def untokenize(tokens):
    return "".join(token.leading + token.text + token.trailing for token in tokens)
