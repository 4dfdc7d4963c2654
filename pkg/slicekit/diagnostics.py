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
import sys

from .config import is_color_enabled

logger = logging.getLogger("slicekit")

_LEVEL_COLORS = {
    logging.DEBUG: "\033[38;5;244m",
    logging.INFO: "\033[38;5;39m",
    logging.WARNING: "\033[38;5;214m",
    logging.ERROR: "\033[38;5;196m",
    logging.CRITICAL: "\033[38;5;196m",
}
_RESET = "\033[0m"

class DiagnosticFormatter(logging.Formatter):
    """``slicekit: <level>: <message>``, the level coloured when enabled"""
    def __init__(self, color=False):
        super(DiagnosticFormatter, self).__init__()
        self.color = color
    def format(self, record):
        level = record.levelname.lower()
        if self.color:
            level = "%s%s%s" % (_LEVEL_COLORS.get(record.levelno, ""), level, _RESET)
        returned = "slicekit: %s: %s" % (level, record.getMessage())
        if record.exc_info:
            returned += "\n" + self.formatException(record.exc_info)
        return returned

_handler = None

def _wants_color(stream, color):
    if color is None:
        color = is_color_enabled()
    return color and hasattr(stream, "isatty") and stream.isatty()

def enableLogging(level=logging.WARNING, stream=None, color=None):
    """Attaches (or replaces) the stderr handler of the ``slicekit`` logger"""
    global _handler
    disableLogging()
    if stream is None:
        stream = sys.stderr
    _handler = logging.StreamHandler(stream)
    _handler.setFormatter(DiagnosticFormatter(_wants_color(stream, color)))
    logger.addHandler(_handler)
    logger.setLevel(level)
    logger.propagate = False
    return _handler

def disableLogging():
    global _handler
    if _handler is not None:
        logger.removeHandler(_handler)
        _handler = None
    logger.setLevel(logging.NOTSET)
    logger.propagate = True

def isLoggingEnabled():
    return _handler is not None
