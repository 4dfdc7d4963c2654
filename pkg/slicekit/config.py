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
import os

from six import string_types

from .exceptions import InvalidConfiguration

MODE_ALL_WRITERS = "paper"
MODE_REACHING_DEFS = "reaching-defs"
MODE_LOOP_AWARE = "loop-aware"
MODES = (MODE_ALL_WRITERS, MODE_REACHING_DEFS, MODE_LOOP_AWARE)

FORMAT_TEXT = "text"
FORMAT_JSON = "json"
FORMAT_DOT = "dot"
FORMATS = (FORMAT_TEXT, FORMAT_JSON, FORMAT_DOT)

DEFAULT_SINK_METHODS = frozenset(["print", "println", "write", "append"])
DEFAULT_WRAPPER_TYPES = frozenset(["PrintWriter", "BufferedWriter", "BufferedStream",
                                   "ObjectOutputStream", "Writer"])

COLOR_ENVIRONMENT_VARIABLE = "SLICEKIT_COLOR"

def parse_name_list(value):
    """
    >>> sorted(parse_name_list("print, write,,append"))
    ['append', 'print', 'write']
    """
    if isinstance(value, string_types):
        value = value.split(",")
    return frozenset(name.strip() for name in value if name and name.strip())

def is_color_enabled(environ=None):
    if environ is None:
        environ = os.environ
    return environ.get(COLOR_ENVIRONMENT_VARIABLE, "1").strip() not in ("0", "false", "no", "off")

class RunConfig(object):
    def __init__(self, inputPath, streamVariable=None, methodName=None, sinkMethods=DEFAULT_SINK_METHODS,
                 mode=MODE_ALL_WRITERS, outputFormat=FORMAT_TEXT, emitGraph=False, strict=False,
                 wrapperTypes=DEFAULT_WRAPPER_TYPES, colorEnabled=None):
        super(RunConfig, self).__init__()
        self.inputPath = inputPath
        self.streamVariable = streamVariable
        self.methodName = methodName
        self.sinkMethods = parse_name_list(sinkMethods)
        self.mode = mode
        self.outputFormat = outputFormat
        self.emitGraph = emitGraph
        self.strict = strict
        self.wrapperTypes = parse_name_list(wrapperTypes)
        if colorEnabled is None:
            colorEnabled = is_color_enabled()
        self.colorEnabled = colorEnabled
        self.validate()
    def isGraphOnly(self):
        return self.streamVariable is None
    def validate(self):
        if self.mode not in MODES:
            raise InvalidConfiguration("unknown mode %r (expected one of %s)" % (self.mode, ", ".join(MODES)))
        if self.outputFormat not in FORMATS:
            raise InvalidConfiguration("unknown format %r" % (self.outputFormat,))
        if not self.sinkMethods:
            raise InvalidConfiguration("at least one sink method is required")
        if self.isGraphOnly():
            if self.outputFormat == FORMAT_TEXT:
                self.outputFormat = FORMAT_DOT
        elif self.outputFormat == FORMAT_DOT:
            raise InvalidConfiguration("slices are rendered as text or json, not dot")
    def getParameter(self, name):
        return self.getDict().get(name, None)
    def getDict(self):
        return {
            "inputPath": self.inputPath,
            "streamVariable": self.streamVariable,
            "methodName": self.methodName,
            "sinkMethods": sorted(self.sinkMethods),
            "mode": self.mode,
            "outputFormat": self.outputFormat,
            "emitGraph": self.emitGraph,
            "strict": self.strict,
            "wrapperTypes": sorted(self.wrapperTypes),
        }
    def __repr__(self):
        return "<RunConfig %s>" % (" ".join("%s=%r" % item for item in sorted(self.getDict().items())),)
