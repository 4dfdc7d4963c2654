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

from .config import MODE_ALL_WRITERS, MODE_LOOP_AWARE, MODE_REACHING_DEFS, MODES
from .exceptions import InvalidConfiguration
from .graph import DependencyGraph
from .graph import EdgeKind

_logger = logging.getLogger("slicekit.depgraph")

def control_edges(method):
    """
    Entry edges from the prototype to every other statement, plus an edge
    from each control statement to each of its direct inner statements.
    """
    returned = set()
    for node in method.statements[1:]:
        returned.add((0, node.id))
    for node in method.statements[1:]:
        if node.isControl():
            for child in node.children:
                returned.add((node.id, child))
    return returned

def _forward_data_edges(method):
    returned = set()
    written = {}
    # statements are evaluated in sequential order; a reader links to every earlier writer
    for node in method.statements:
        for variable in node.reads:
            for writer in written.get(variable, ()):
                returned.add((writer, node.id))
        for variable in node.writes:
            written.setdefault(variable, []).append(node.id)
    return returned

def _merge_reaching(first, second):
    returned = dict(first)
    for variable, writers in second.items():
        returned[variable] = returned.get(variable, frozenset()) | writers
    return returned

def _reach_block(method, child_ids, reaching, edges):
    """
    Walks the statements of one block in order. ``reaching`` maps each
    variable to the ids of the writers that may reach the block entry; the
    state at the block exit is returned.
    """
    reaching = dict(reaching)
    for child_id in child_ids:
        node = method.statements[child_id]
        for variable in node.reads:
            for writer in reaching.get(variable, ()):
                edges.add((writer, node.id))
        for variable in node.writes:
            reaching[variable] = frozenset([node.id])
        if node.isLoop():
            # zero or more iterations
            reaching = _merge_reaching(reaching, _reach_block(method, node.children, reaching, edges))
        elif node.isControl():
            reaching = _merge_reaching(_reach_block(method, node.getThenChildren(), reaching, edges),
                                       _reach_block(method, node.getElseChildren(), reaching, edges))
    return reaching

def _reaching_definition_edges(method):
    # only forward flows; loop carried ones belong to the loop-aware mode
    edges = set()
    prototype = method.prototype
    reaching = dict((variable, frozenset([prototype.id])) for variable in prototype.writes)
    _reach_block(method, prototype.children, reaching, edges)
    return edges

def _loop_back_edges(method):
    returned = set()
    for loop in method.statements:
        if not loop.isLoop():
            continue
        members = [loop.id] + method.getDescendants(loop.id)
        for writer in members:
            writes = method.statements[writer].writes
            for reader in members:
                if reader >= writer:
                    break
                if writes & method.statements[reader].reads:
                    returned.add((writer, reader))
    return returned

def data_edges(method, mode=MODE_ALL_WRITERS):
    if mode == MODE_ALL_WRITERS:
        return _forward_data_edges(method)
    if mode == MODE_REACHING_DEFS:
        return _reaching_definition_edges(method)
    if mode == MODE_LOOP_AWARE:
        return _forward_data_edges(method) | _loop_back_edges(method)
    raise InvalidConfiguration("unknown mode %r (expected one of %s)" % (mode, ", ".join(MODES)))

def build_graph(method, mode=MODE_ALL_WRITERS):
    control = control_edges(method)
    data = data_edges(method, mode)
    edges = [(src, dst, EdgeKind.CONTROL) for src, dst in control]
    edges.extend((src, dst, EdgeKind.DATA) for src, dst in data)
    returned = DependencyGraph([node.id for node in method.statements], edges)
    _logger.debug("graph of %s (%s mode): %s control edges, %s data edges",
                  method.name, mode, len(control), len(data))
    return returned
