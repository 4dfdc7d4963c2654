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
import logging

from . import statement as stmt
from . import syntax
from .exceptions import DuplicateDeclaration
from .exceptions import NestingTooDeep
from .exceptions import ParseError
from .exceptions import UndeclaredVariable
from .tokens import IDENTIFIER, KEYWORD, LITERAL, OPERATOR, PUNCTUATION
from .tokens import tokenize

_logger = logging.getLogger("slicekit.parser")

MODIFIERS = frozenset(["public", "protected", "private", "static", "final"])
PRIMITIVE_TYPES = frozenset(["int", "long", "double", "float", "char", "boolean"])
ASSIGNMENT_OPERATORS = frozenset(["=", "+=", "-=", "*=", "/=", "%="])
INCDEC_OPERATORS = frozenset(["++", "--"])

# every statement, expression and prefix operator being parsed holds one level
MAX_NESTING_DEPTH = 100

_BINARY_LEVELS = (
    ("||",),
    ("&&",),
    ("==", "!="),
    ("<", "<=", ">", ">="),
    ("+", "-"),
    ("*", "/", "%"),
)

class _Parser(object):
    def __init__(self, source, tokens, strict):
        super(_Parser, self).__init__()
        self.source = source
        self.tokens = tokens
        self.strict = strict
        self.pos = 0
        self.nodes = []
        self.scopes = []
        self.implicitNames = set()
        self.depth = 0
    ################################ token access ##############################
    def _peek(self, ahead=0):
        index = self.pos + ahead
        if index < len(self.tokens):
            return self.tokens[index]
        return None
    def _check(self, text, ahead=0):
        token = self._peek(ahead)
        return token is not None and token.text == text and token.kind != LITERAL
    def _checkKind(self, kind, ahead=0):
        token = self._peek(ahead)
        return token is not None and token.kind == kind
    def _fail(self, expected):
        token = self._peek()
        if token is None:
            if self.tokens:
                last = self.tokens[-1]
                raise ParseError(last.line, last.column + len(last.text), expected, "end of input")
            raise ParseError(1, 1, expected, "end of input")
        raise ParseError(token.line, token.column, expected, token.text)
    def _advance(self):
        token = self._peek()
        self.pos += 1
        return token
    def _expect(self, text):
        if not self._check(text):
            self._fail([text])
        return self._advance()
    def _expectIdentifier(self):
        if not self._checkKind(IDENTIFIER):
            self._fail([IDENTIFIER])
        return self._advance()
    def _previous(self):
        return self.tokens[self.pos - 1]
    def _enter(self):
        self.depth += 1
        if self.depth > MAX_NESTING_DEPTH:
            token = self._peek() or self._previous()
            raise NestingTooDeep(MAX_NESTING_DEPTH, token.line, token.column)
    def _leave(self):
        self.depth -= 1
    def _textBetween(self, first, last):
        return self.source[first.offset:last.end]
    #################################### scopes ################################
    def _isVisible(self, name):
        return any(name in scope for scope in self.scopes)
    def _declare(self, token):
        if self._isVisible(token.text):
            raise DuplicateDeclaration(token.text, token.line, token.column)
        self.scopes[-1].add(token.text)
    def _use(self, token):
        if self._isVisible(token.text):
            return
        if self.strict:
            raise UndeclaredVariable(token.text, token.line, token.column)
        self.implicitNames.add(token.text)
    ##################################### nodes ################################
    def _newNode(self, kind, first):
        node = stmt.StatementNode(len(self.nodes), kind, None, (first.line, first.column))
        self.nodes.append(node)
        return node
    def _adopt(self, parent, child_ids):
        parent.children.extend(child_ids)
        for child_id in child_ids:
            self.nodes[child_id].parent = parent.id
    #################################### method ################################
    def parseMethod(self):
        first = self._peek()
        if first is None:
            self._fail(["method definition"])
        while self._checkKind(KEYWORD) and self._peek().text in MODIFIERS:
            self._advance()
        if self._check("void"):
            return_type = self._advance().text
        else:
            return_type = self._parseType()
        name = self._expectIdentifier().text
        prototype = self._newNode(stmt.PROTOTYPE, first)
        self.scopes.append(set())
        parameters = self._parseParameters()
        prototype.text = self._textBetween(first, self._previous())
        prototype.expressions = [syntax.Declare(type_name, param) for param, type_name in parameters]
        self._expect("{")
        self._adopt(prototype, self._parseStatementsUntil("}"))
        self._expect("}")
        if self._peek() is not None:
            self._fail(["end of input"])
        self.scopes.pop()
        for node in self.nodes:
            _annotate(node)
        return stmt.MethodAst(name, return_type, parameters, self.nodes, self.source,
                              implicitNames=self.implicitNames)
    def _parseType(self):
        token = self._peek()
        if token is not None and (token.kind == IDENTIFIER or token.text in PRIMITIVE_TYPES):
            return self._advance().text
        return self._fail(["type"])
    def _parseParameters(self):
        returned = []
        self._expect("(")
        while not self._check(")"):
            if returned:
                self._expect(",")
            type_name = self._parseType()
            token = self._expectIdentifier()
            self._declare(token)
            returned.append((token.text, type_name))
        self._expect(")")
        return returned
    ################################## statements ##############################
    def _parseStatementsUntil(self, closing):
        returned = []
        while not self._check(closing):
            if self._peek() is None:
                self._fail([closing])
            returned.extend(self._parseStatement())
        return returned
    def _parseBlock(self):
        self._expect("{")
        self.scopes.append(set())
        returned = self._parseStatementsUntil("}")
        self.scopes.pop()
        self._expect("}")
        return returned
    def _parseBody(self):
        if self._check("{"):
            return self._parseBlock()
        self.scopes.append(set())
        returned = self._parseStatement()
        self.scopes.pop()
        return returned
    def _parseStatement(self):
        """Returns the ids of the nodes the statement contributes; blocks contribute their contents"""
        self._enter()
        try:
            return self._parseSingleStatement()
        finally:
            self._leave()
    def _parseSingleStatement(self):
        token = self._peek()
        if self._check("{"):
            return self._parseBlock()
        if self._check(";"):
            self._advance()
            return []
        if self._check("if"):
            return [self._parseIf()]
        if self._check("while"):
            return [self._parseWhile()]
        if self._check("for"):
            return [self._parseFor()]
        if self._check("return"):
            return [self._parseReturn()]
        if token is not None and token.kind == KEYWORD and token.text == "else":
            self._fail(["statement"])
        if self._isDeclarationStart():
            node = self._newNode(stmt.DECLARATION, token)
            node.expressions = [self._parseDeclarator()]
            node.text = self._textBetween(token, self._expect(";"))
            return [node.id]
        return [self._parseExpressionStatement()]
    def _isDeclarationStart(self):
        token = self._peek()
        if token is None:
            return False
        if token.kind == KEYWORD and token.text in PRIMITIVE_TYPES:
            return True
        if token.kind == KEYWORD and token.text == "final":
            return True
        return token.kind == IDENTIFIER and self._checkKind(IDENTIFIER, 1)
    def _parseDeclarator(self):
        if self._check("final"):
            self._advance()
        type_name = self._parseType()
        name = self._expectIdentifier()
        value = None
        if self._check("="):
            self._advance()
            value = self._parseExpression()
        self._declare(name)
        return syntax.Declare(type_name, name.text, value)
    def _parseCondition(self):
        self._expect("(")
        returned = self._parseExpression()
        self._expect(")")
        return returned
    def _parseIf(self):
        first = self._advance()
        node = self._newNode(stmt.IF, first)
        node.expressions = [self._parseCondition()]
        node.text = self._textBetween(first, self._previous())
        then_ids = self._parseBody()
        self._adopt(node, then_ids)
        if self._check("else"):
            self._advance()
            node.elseIndex = len(then_ids)
            self._adopt(node, self._parseBody())
        return node.id
    def _parseWhile(self):
        first = self._advance()
        node = self._newNode(stmt.WHILE, first)
        node.expressions = [self._parseCondition()]
        node.text = self._textBetween(first, self._previous())
        self._adopt(node, self._parseBody())
        return node.id
    def _parseFor(self):
        first = self._advance()
        node = self._newNode(stmt.FOR, first)
        self.scopes.append(set())
        self._expect("(")
        if not self._check(";"):
            if self._isDeclarationStart():
                node.expressions.append(self._parseDeclarator())
            else:
                node.expressions.extend(self._parseExpressionList(";"))
        self._expect(";")
        if not self._check(";"):
            node.expressions.append(self._parseExpression())
        self._expect(";")
        if not self._check(")"):
            node.expressions.extend(self._parseExpressionList(")"))
        node.text = self._textBetween(first, self._expect(")"))
        self._adopt(node, self._parseBody())
        self.scopes.pop()
        return node.id
    def _parseExpressionList(self, closing):
        returned = [self._parseExpression()]
        while self._check(","):
            self._advance()
            returned.append(self._parseExpression())
        if not self._check(closing):
            self._fail([",", closing])
        return returned
    def _parseReturn(self):
        first = self._advance()
        node = self._newNode(stmt.RETURN, first)
        if not self._check(";"):
            node.expressions = [self._parseExpression()]
        node.text = self._textBetween(first, self._expect(";"))
        return node.id
    def _parseExpressionStatement(self):
        first = self._peek()
        node = self._newNode(stmt.EXPRESSION_STATEMENT, first)
        expression = self._parseExpression()
        if isinstance(expression, (syntax.Assign, syntax.IncDec)):
            node.kind = stmt.ASSIGNMENT
        elif isinstance(expression, syntax.Call):
            node.kind = stmt.INVOCATION
        node.expressions = [expression]
        node.text = self._textBetween(first, self._expect(";"))
        return node.id
    ################################## expressions #############################
    def _parseExpression(self):
        self._enter()
        try:
            return self._parseAssignment()
        finally:
            self._leave()
    def _parseAssignment(self):
        left = self._parseBinary(0)
        token = self._peek()
        if token is not None and token.kind == OPERATOR and token.text in ASSIGNMENT_OPERATORS:
            if not isinstance(left, syntax.Name):
                raise ParseError(token.line, token.column, ["expression"], token.text)
            self._advance()
            return syntax.Assign(token.text, left, self._parseExpression())
        return left
    def _parseBinary(self, level):
        if level == len(_BINARY_LEVELS):
            return self._parseUnary()
        left = self._parseBinary(level + 1)
        while self._checkKind(OPERATOR) and self._peek().text in _BINARY_LEVELS[level]:
            op = self._advance().text
            left = syntax.Binary(op, left, self._parseBinary(level + 1))
        return left
    def _parseUnary(self):
        self._enter()
        try:
            return self._parsePrefixed()
        finally:
            self._leave()
    def _parsePrefixed(self):
        token = self._peek()
        if token is not None and token.kind == OPERATOR:
            if token.text in INCDEC_OPERATORS:
                self._advance()
                target = self._parseUnary()
                if not isinstance(target, syntax.Name):
                    raise ParseError(token.line, token.column, ["variable"], token.text)
                return syntax.IncDec(token.text, target, prefix=True)
            if token.text in ("!", "-", "+"):
                self._advance()
                return syntax.Unary(token.text, self._parseUnary())
        return self._parsePostfix()
    def _parsePostfix(self):
        expression = self._parsePrimary()
        while True:
            if self._check("."):
                self._advance()
                name = self._expectIdentifier().text
                if self._check("("):
                    expression = syntax.Call(expression, name, self._parseArguments())
                else:
                    expression = syntax.FieldAccess(expression, name)
            elif self._checkKind(OPERATOR) and self._peek().text in INCDEC_OPERATORS:
                token = self._advance()
                if not isinstance(expression, syntax.Name):
                    raise ParseError(token.line, token.column, [";"], token.text)
                expression = syntax.IncDec(token.text, expression, prefix=False)
            else:
                return expression
    def _parseArguments(self):
        returned = []
        self._expect("(")
        while not self._check(")"):
            if returned:
                self._expect(",")
            returned.append(self._parseExpression())
        self._expect(")")
        return returned
    def _parsePrimary(self):
        token = self._peek()
        if token is None:
            self._fail(["expression"])
        if token.kind == LITERAL:
            self._advance()
            return syntax.Literal(token.text)
        if self._check("("):
            self._advance()
            returned = self._parseExpression()
            self._expect(")")
            return returned
        if self._check("new"):
            self._advance()
            type_name = self._parseType()
            return syntax.New(type_name, self._parseArguments())
        if token.kind == IDENTIFIER:
            self._advance()
            if self._check("("):
                return syntax.Call(None, token.text, self._parseArguments())
            if not self._isVisible(token.text) and token.text[:1].isupper() and self._check("."):
                return syntax.TypeRef(token.text)
            self._use(token)
            return syntax.Name(token.text)
        return self._fail(["expression"])

############################# reads/writes extraction ##########################
def _collect(expression, reads, writes):
    # left-nested operator chains can be far deeper than the parser nesting limit
    pending = [expression]
    while pending:
        expression = pending.pop()
        if isinstance(expression, syntax.Name):
            reads.add(expression.name)
        elif isinstance(expression, syntax.Assign):
            writes.add(expression.target.name)
            if expression.op != "=":
                reads.add(expression.target.name)
            pending.append(expression.value)
        elif isinstance(expression, syntax.IncDec):
            reads.add(expression.target.name)
            writes.add(expression.target.name)
        elif isinstance(expression, syntax.Declare):
            if expression.value is not None:
                writes.add(expression.name)
                pending.append(expression.value)
        else:
            pending.extend(expression.getChildren())

def extract_reads_writes(node):
    """
    Computes the variables a statement reads and writes. Control statements
    only contribute their header; their inner statements have nodes of their own.
    """
    if node.kind == stmt.PROTOTYPE:
        return set(), set(expression.name for expression in node.expressions)
    reads = set()
    writes = set()
    for expression in node.expressions:
        _collect(expression, reads, writes)
    return reads, writes

def _annotate(node):
    reads, writes = extract_reads_writes(node)
    node.reads = frozenset(reads)
    node.writes = frozenset(writes)
    if node.kind == stmt.INVOCATION:
        call = node.expressions[0]
        node.receiver = syntax.get_chain_root(call)
        node.calledMethod = call.method
    if node.kind not in (stmt.DECLARATION, stmt.ASSIGNMENT):
        return
    expression = node.expressions[0]
    if isinstance(expression, syntax.Declare) and expression.value is not None:
        node.target, value = expression.name, expression.value
    elif isinstance(expression, syntax.Assign) and expression.op == "=":
        node.target, value = expression.target.name, expression.value
    else:
        return
    if isinstance(value, syntax.Name):
        node.copyOf = value.name
    wrapped = syntax.unwrap_constructions(value)
    if wrapped is not None:
        node.constructedTypes, node.constructedWrapperOf = wrapped

################################### entry points ###############################
def parse_method(source, strict=False):
    """
    Parses the source of exactly one method into a MethodAst whose statement
    ids follow textual order, the prototype being node 0.
    """
    tokens = tokenize(source)
    _logger.debug("%s tokens", len(tokens))
    returned = _Parser(source, tokens, strict).parseMethod()
    _logger.debug("parsed %r into %s statement nodes", returned.name, len(returned.statements))
    return returned
