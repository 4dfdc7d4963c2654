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
EXIT_SUCCESS = 0
EXIT_SYNTAX_ERROR = 1
EXIT_UNKNOWN_VARIABLE = 2
EXIT_IO_ERROR = 3
EXIT_MISMATCH = 4
EXIT_BAD_CONFIGURATION = 5
EXIT_INTERNAL_ERROR = 70

class SlicekitException(Exception):
    exitCode = EXIT_INTERNAL_ERROR
    def __init__(self, msg):
        super(SlicekitException, self).__init__()
        self.msg = msg
    def __repr__(self):
        return "%s: %s" % (type(self).__name__, self.msg)
    __str__ = __repr__

############################### source problems ################################
class SourceException(SlicekitException):
    exitCode = EXIT_SYNTAX_ERROR
    def __init__(self, msg, line, column):
        super(SourceException, self).__init__("%s:%s: %s" % (line, column, msg))
        self.line = line
        self.column = column

class LexError(SourceException):
    def __init__(self, line, column, char):
        super(LexError, self).__init__("unexpected character %r" % (char,), line, column)
        self.char = char

class ParseError(SourceException):
    def __init__(self, line, column, expected, found=None):
        expected = sorted(set(expected))
        msg = "expected %s" % " or ".join(expected)
        if found is not None:
            msg += ", found %r" % (found,)
        super(ParseError, self).__init__(msg, line, column)
        self.expected = expected
        self.found = found

class DuplicateDeclaration(ParseError):
    def __init__(self, name, line, column):
        SourceException.__init__(self, "variable %r is already declared" % (name,), line, column)
        self.name = name
        self.expected = []
        self.found = name

class UndeclaredVariable(ParseError):
    def __init__(self, name, line, column):
        SourceException.__init__(self, "variable %r is used before it is declared" % (name,), line, column)
        self.name = name
        self.expected = []
        self.found = name

class NestingTooDeep(ParseError):
    def __init__(self, limit, line, column):
        SourceException.__init__(self, "statements or expressions nested deeper than %s levels" % (limit,),
                                 line, column)
        self.limit = limit
        self.expected = []
        self.found = None

################################ graph problems ################################
class InvalidGraph(SlicekitException):
    exitCode = EXIT_SYNTAX_ERROR

class UnknownNode(SlicekitException):
    exitCode = EXIT_INTERNAL_ERROR
    def __init__(self, node_id):
        super(UnknownNode, self).__init__("no node with id %r" % (node_id,))
        self.nodeId = node_id

############################### criterion problems #############################
class UnknownVariable(SlicekitException):
    exitCode = EXIT_UNKNOWN_VARIABLE
    def __init__(self, name, method_name=None):
        msg = "unknown variable %r" % (name,)
        if method_name is not None:
            msg += " in method %s" % (method_name,)
        super(UnknownVariable, self).__init__(msg)
        self.name = name

############################# environment problems #############################
class SlicekitIOError(SlicekitException):
    exitCode = EXIT_IO_ERROR
    def __init__(self, path, reason):
        super(SlicekitIOError, self).__init__("cannot read %s (%s)" % (path, reason))
        self.path = path

class MissingGolden(SlicekitIOError):
    def __init__(self, path):
        SlicekitException.__init__(self, "missing golden file %s" % (path,))
        self.path = path

class InvalidConfiguration(SlicekitException):
    exitCode = EXIT_BAD_CONFIGURATION

class UnknownMethod(SlicekitException):
    exitCode = EXIT_UNKNOWN_VARIABLE
    def __init__(self, name, found):
        super(UnknownMethod, self).__init__("no method %r (the file defines %r)" % (name, found))
        self.name = name
