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
from .exceptions import UnknownNode
from .syntax import Declare

PROTOTYPE = "prototype"
DECLARATION = "declaration"
ASSIGNMENT = "assignment"
EXPRESSION_STATEMENT = "expression-statement"
INVOCATION = "invocation"
IF = "if"
WHILE = "while"
FOR = "for"
RETURN = "return"

STATEMENT_KINDS = (PROTOTYPE, DECLARATION, ASSIGNMENT, EXPRESSION_STATEMENT, INVOCATION,
                   IF, WHILE, FOR, RETURN)
CONTROL_KINDS = frozenset([IF, WHILE, FOR])
LOOP_KINDS = frozenset([WHILE, FOR])

class StatementNode(object):
    def __init__(self, id, kind, text, position, expressions=(), reads=(), writes=()):
        super(StatementNode, self).__init__()
        self.id = id
        self.kind = kind
        self.text = text
        self.position = position
        # header expressions only, for control kinds
        self.expressions = list(expressions)
        self.reads = frozenset(reads)
        self.writes = frozenset(writes)
        self.children = []
        self.elseIndex = None
        self.parent = None
        self.receiver = None
        self.calledMethod = None
        self.target = None
        self.copyOf = None
        self.constructedWrapperOf = None
        self.constructedTypes = ()
    @property
    def line(self):
        return self.position[0]
    @property
    def column(self):
        return self.position[1]
    def isControl(self):
        return self.kind in CONTROL_KINDS
    def isLoop(self):
        return self.kind in LOOP_KINDS
    def getThenChildren(self):
        if self.elseIndex is None:
            return list(self.children)
        return self.children[:self.elseIndex]
    def getElseChildren(self):
        if self.elseIndex is None:
            return []
        return self.children[self.elseIndex:]
    def hasElse(self):
        return self.elseIndex is not None
    def __repr__(self):
        return "<%s #%s %r>" % (self.kind, self.id, self.text)

class MethodAst(object):
    def __init__(self, name, returnType, parameters, statements, sourceText, implicitNames=()):
        super(MethodAst, self).__init__()
        self.name = name
        self.returnType = returnType
        self.parameters = list(parameters)
        self.statements = list(statements)
        self.sourceText = sourceText
        self.implicitNames = frozenset(implicitNames)
    def __repr__(self):
        return "<method %s (%s statements)>" % (self.name, len(self.statements))
    def __len__(self):
        return len(self.statements)
    def __iter__(self):
        return iter(self.statements)
    @property
    def prototype(self):
        return self.statements[0]
    def getStatement(self, node_id):
        if not isinstance(node_id, int) or not 0 <= node_id < len(self.statements):
            raise UnknownNode(node_id)
        return self.statements[node_id]
    def getParameterNames(self):
        return [name for name, _ in self.parameters]
    def getDeclaredNames(self):
        returned = set(self.getParameterNames())
        for node in self.statements:
            for expression in node.expressions:
                if isinstance(expression, Declare):
                    returned.add(expression.name)
        return returned
    def getReceiverPaths(self):
        return set(node.receiver for node in self.statements if node.receiver is not None)
    def hasVariable(self, name):
        return name in self.getDeclaredNames() or name in self.implicitNames
    def getDescendants(self, node_id):
        returned = []
        pending = list(self.statements[node_id].children)
        while pending:
            child = pending.pop(0)
            returned.append(child)
            pending.extend(self.statements[child].children)
        return sorted(returned)
