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
"""
Expression trees kept on statement nodes. Only what the read/write
extraction and the alias resolver need is modelled.
"""

class Expression(object):
    def getChildren(self):
        return ()
    def __eq__(self, other):
        return type(self) is type(other) and vars(self) == vars(other)
    def __ne__(self, other):
        return not (self == other)
    def __repr__(self):
        return "<%s %s>" % (type(self).__name__,
                            " ".join("%s=%r" % item for item in sorted(vars(self).items())))

class Name(Expression):
    def __init__(self, name):
        super(Name, self).__init__()
        self.name = name

class TypeRef(Expression):
    """An upper-case class name used as a qualifier, e.g. ``System`` in ``System.err``"""
    def __init__(self, name):
        super(TypeRef, self).__init__()
        self.name = name

class Literal(Expression):
    def __init__(self, text):
        super(Literal, self).__init__()
        self.text = text

class FieldAccess(Expression):
    def __init__(self, target, name):
        super(FieldAccess, self).__init__()
        self.target = target
        self.name = name
    def getChildren(self):
        return (self.target,)

class Call(Expression):
    def __init__(self, receiver, method, args):
        super(Call, self).__init__()
        self.receiver = receiver
        self.method = method
        self.args = list(args)
    def getChildren(self):
        if self.receiver is None:
            return tuple(self.args)
        return (self.receiver,) + tuple(self.args)

class New(Expression):
    def __init__(self, type_name, args):
        super(New, self).__init__()
        self.typeName = type_name
        self.args = list(args)
    def getChildren(self):
        return tuple(self.args)

class Unary(Expression):
    def __init__(self, op, operand):
        super(Unary, self).__init__()
        self.op = op
        self.operand = operand
    def getChildren(self):
        return (self.operand,)

class IncDec(Expression):
    def __init__(self, op, target, prefix):
        super(IncDec, self).__init__()
        self.op = op
        self.target = target
        self.prefix = prefix
    def getChildren(self):
        return (self.target,)

class Binary(Expression):
    def __init__(self, op, left, right):
        super(Binary, self).__init__()
        self.op = op
        self.left = left
        self.right = right
    def getChildren(self):
        return (self.left, self.right)

class Assign(Expression):
    def __init__(self, op, target, value):
        super(Assign, self).__init__()
        self.op = op
        self.target = target
        self.value = value
    def getChildren(self):
        return (self.target, self.value)

class Declare(Expression):
    """``T name`` or ``T name = value``"""
    def __init__(self, type_name, name, value=None):
        super(Declare, self).__init__()
        self.typeName = type_name
        self.name = name
        self.value = value
    def getChildren(self):
        if self.value is None:
            return ()
        return (self.value,)

################################### helpers ####################################
def get_path(expression):
    """
    >>> get_path(FieldAccess(TypeRef('System'), 'err'))
    'System.err'
    >>> get_path(Name('out'))
    'out'
    """
    names = []
    while isinstance(expression, FieldAccess):
        names.append(expression.name)
        expression = expression.target
    if not isinstance(expression, (Name, TypeRef)):
        return None
    names.append(expression.name)
    return ".".join(reversed(names))

def get_chain_root(call):
    """Walks ``a.m(x).n(y)`` down to the receiver of its innermost call"""
    receiver = call.receiver
    while isinstance(receiver, Call) and receiver.receiver is not None:
        receiver = receiver.receiver
    return get_path(receiver)

def unwrap_constructions(expression):
    """
    Follows the first argument through nested ``new`` expressions.
    Returns (types, wrapped variable name) or None.

    >>> unwrap_constructions(New('PrintWriter', [New('BufferedWriter', [Name('out')])]))
    (('PrintWriter', 'BufferedWriter'), 'out')
    """
    types = []
    while isinstance(expression, New):
        types.append(expression.typeName)
        if not expression.args:
            return None
        expression = expression.args[0]
    if not types or not isinstance(expression, Name):
        return None
    return tuple(types), expression.name
