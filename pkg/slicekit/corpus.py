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
Golden-file checking: every ``<name>.mj`` program sits next to a
``<name>.expected.json`` slice document whose criterion is replayed.
"""
import glob
import json
import logging
import os

from .config import MODE_ALL_WRITERS
from .exceptions import MissingGolden
from .exceptions import SlicekitException
from .exceptions import SlicekitIOError
from .parser import parse_method
from .slicer import SliceCriterion
from .slicer import compute_slice
from .utils import dump_canonical_json
from .utils import read_text

_logger = logging.getLogger("slicekit.corpus")

SOURCE_SUFFIX = ".mj"
GOLDEN_SUFFIX = ".expected.json"

PASS = "pass"
FAIL = "fail"
ERROR = "error"

def get_golden_path(source_path):
    return source_path[:-len(SOURCE_SUFFIX)] + GOLDEN_SUFFIX

def find_programs(directory):
    if not os.path.isdir(directory):
        raise SlicekitIOError(directory, "not a directory")
    returned = sorted(glob.glob(os.path.join(directory, "*" + SOURCE_SUFFIX)))
    for path in returned:
        if not os.path.isfile(get_golden_path(path)):
            raise MissingGolden(get_golden_path(path))
    return returned

class CorpusResult(object):
    def __init__(self, name, status, diffs=None, error=None):
        super(CorpusResult, self).__init__()
        self.name = name
        self.status = status
        self.diffs = diffs or {}
        self.error = error
    def passed(self):
        return self.status == PASS
    def getDict(self):
        returned = {"status": self.status}
        if self.diffs:
            returned["diffs"] = self.diffs
        if self.error is not None:
            returned["error"] = self.error
        return returned
    def __repr__(self):
        return "<%s %s>" % (self.status, self.name)

def _diff(expected, actual):
    returned = {}
    missing = sorted(set(expected) - set(actual))
    unexpected = sorted(set(actual) - set(expected))
    if missing:
        returned["missing"] = missing
    if unexpected:
        returned["unexpected"] = unexpected
    return returned

def check_program(path, mode=MODE_ALL_WRITERS):
    name = os.path.basename(path)
    try:
        golden = json.loads(read_text(get_golden_path(path)))
        criterion = SliceCriterion(golden["criterion"]["streamVariable"], golden["criterion"]["sinkMethods"])
        method = parse_method(read_text(path))
        actual = compute_slice(method, criterion, mode)
        diffs = {}
        for key, computed in (("nodes", actual.nodes), ("sinkNodes", actual.sinkNodes)):
            difference = _diff(golden[key], computed)
            if difference:
                diffs[key] = difference
    except SlicekitException as e:
        _logger.debug("%s: %s", name, e.msg)
        return CorpusResult(name, ERROR, error=e.msg)
    except (ValueError, KeyError, TypeError) as e:
        return CorpusResult(name, ERROR, error="malformed golden (%s)" % (e,))
    if diffs:
        return CorpusResult(name, FAIL, diffs=diffs)
    return CorpusResult(name, PASS)

def check_corpus(directory, mode=MODE_ALL_WRITERS):
    results = [check_program(path, mode) for path in find_programs(directory)]
    return sorted(results, key=lambda result: result.name)

################################### reporting ##################################
def format_text_report(results):
    lines = []
    for result in results:
        if result.status == ERROR:
            lines.append("ERROR %s: %s" % (result.name, result.error))
            continue
        lines.append("%s %s" % (result.status.upper(), result.name))
        for key in sorted(result.diffs):
            for change in ("missing", "unexpected"):
                if change in result.diffs[key]:
                    lines.append("    %s %s: %s" % (key, change, ", ".join(str(node_id) for node_id in result.diffs[key][change])))
    lines.append("%s/%s pass" % (sum(1 for result in results if result.passed()), len(results)))
    return "\n".join(lines) + "\n"

def format_json_report(results):
    return dump_canonical_json({
        "files": dict((result.name, result.getDict()) for result in results),
        "passed": sum(1 for result in results if result.passed()),
        "total": len(results),
    })
