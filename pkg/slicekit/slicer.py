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
from collections import deque
import logging

from six import StringIO

from . import statement as stmt
from .config import DEFAULT_SINK_METHODS
from .config import DEFAULT_WRAPPER_TYPES
from .config import MODE_ALL_WRITERS
from .config import parse_name_list
from .depgraph import build_graph
from .exceptions import InvalidConfiguration
from .exceptions import UnknownNode
from .exceptions import UnknownVariable
from .graph import DependencyGraph
from .utils import indent

_logger = logging.getLogger("slicekit.slicer")

class SliceCriterion(object):
    def __init__(self, streamVariable, sinkMethods=DEFAULT_SINK_METHODS):
        super(SliceCriterion, self).__init__()
        self.streamVariable = streamVariable
        self.sinkMethods = parse_name_list(sinkMethods)
        if not self.sinkMethods:
            raise InvalidConfiguration("at least one sink method is required")
    def __eq__(self, other):
        return isinstance(other, SliceCriterion) and \
            (other.streamVariable, other.sinkMethods) == (self.streamVariable, self.sinkMethods)
    def __ne__(self, other):
        return not (self == other)
    def __repr__(self):
        return "<SliceCriterion %s via %s>" % (self.streamVariable, ", ".join(sorted(self.sinkMethods)))

class Slice(object):
    def __init__(self, criterion, sinkNodes, nodes, renderedText="", warnings=()):
        super(Slice, self).__init__()
        self.criterion = criterion
        self.sinkNodes = frozenset(sinkNodes)
        self.nodes = frozenset(nodes)
        self.renderedText = renderedText
        self.warnings = list(warnings)
    def isEmpty(self):
        return not self.nodes
    def __contains__(self, node_id):
        return node_id in self.nodes
    def __repr__(self):
        return "<Slice of %s: %s>" % (self.criterion.streamVariable, sorted(self.nodes))

############################### graph reachability #############################
def transpose(graph):
    """Same nodes, every edge reversed, edge kinds kept"""
    reversed_adjacency = dict((node_id, []) for node_id in graph.nodeIds)
    # visiting sources in id order leaves every reversed list sorted by (dst, kind)
    for u in sorted(graph.nodeIds):
        for v, kind in graph.getAdjacency(u):
            reversed_adjacency[v].append((u, kind))
    return DependencyGraph.fromAdjacency(graph.nodeIds, reversed_adjacency)

def bfs_order(graph, start):
    if start not in graph:
        raise UnknownNode(start)
    nodes = [start]
    seen = set(nodes)
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for node in graph.getFanOutNodes(current):
            if node not in seen:
                queue.append(node)
                seen.add(node)
                nodes.append(node)
    return nodes

def reachable(graph, start):
    """start plus every node a directed path from start leads to"""
    return frozenset(bfs_order(graph, start))

################################### criterion ##################################
def _assert_known_variable(method, name):
    if method.hasVariable(name) or name in method.getReceiverPaths():
        return
    raise UnknownVariable(name, method.name)

def validate_criterion(method, criterion):
    _assert_known_variable(method, criterion.streamVariable)

def _is_wrapper_construction(node, aliases, wrapperTypes):
    if node.constructedWrapperOf not in aliases:
        return False
    return all(type_name in wrapperTypes for type_name in node.constructedTypes)

def alias_fixpoint(method, streamVariable, wrapperTypes=DEFAULT_WRAPPER_TYPES):
    """
    Propagates wrapper constructions and copies over all statements until a
    pass adds nothing. Returns (aliases, passes). Every pass but the last adds
    an alias, so passes never exceed the number of statements.
    """
    wrapperTypes = parse_name_list(wrapperTypes)
    aliases = set([streamVariable])
    passes = 0
    changed = True
    while changed:
        changed = False
        passes += 1
        for node in method.statements:
            if node.target is None or node.target in aliases:
                continue
            if _is_wrapper_construction(node, aliases, wrapperTypes) or node.copyOf in aliases:
                aliases.add(node.target)
                changed = True
    return frozenset(aliases), passes

def resolve_output_aliases(method, streamVariable, wrapperTypes=DEFAULT_WRAPPER_TYPES):
    """
    Every variable that wraps or copies the output stream, transitively:
    ``w = new PrintWriter(out);`` and ``w = out;`` both make w an alias of out.
    """
    _assert_known_variable(method, streamVariable)
    returned, passes = alias_fixpoint(method, streamVariable, wrapperTypes)
    _logger.debug("aliases of %s: %s (%s passes)", streamVariable, sorted(returned), passes)
    return returned

def find_sinks(method, criterion, wrapperTypes=DEFAULT_WRAPPER_TYPES):
    aliases = resolve_output_aliases(method, criterion.streamVariable, wrapperTypes)
    returned = set()
    for node in method.statements:
        if node.kind != stmt.INVOCATION:
            continue
        if node.receiver in aliases and node.calledMethod in criterion.sinkMethods:
            returned.add(node.id)
    _logger.debug("sinks of %s: %s", criterion.streamVariable, sorted(returned))
    return frozenset(returned)

##################################### slicing ##################################
def compute_slice(method, criterion, mode=MODE_ALL_WRITERS, wrapperTypes=DEFAULT_WRAPPER_TYPES):
    validate_criterion(method, criterion)
    graph = build_graph(method, mode)
    reverse = transpose(graph)
    sinks = find_sinks(method, criterion, wrapperTypes)
    nodes = set()
    for sink in sorted(sinks):
        order = bfs_order(reverse, sink)
        _logger.debug("visit order from sink %s: %s", sink, order)
        nodes.update(order)
    warnings = []
    if not sinks:
        warnings.append("no statement of %s writes to %s through %s" % (
            method.name, criterion.streamVariable, ", ".join(sorted(criterion.sinkMethods))))
    returned = Slice(criterion, sinks, nodes, warnings=warnings)
    returned.renderedText = render_slice(returned, method)
    return returned

#################################### rendering #################################
class _Renderer(object):
    def __init__(self, method, included):
        super(_Renderer, self).__init__()
        self.method = method
        self.included = included
        self.out = StringIO()
    def render(self):
        if not self.included:
            return ""
        prototype = self.method.prototype
        self.out.write("%s {\n" % (prototype.text,))
        self._renderChildren(prototype.children, 1)
        self.out.write("}\n")
        return self.out.getvalue()
    def _write(self, text, level):
        self.out.write(indent(text, level) + "\n")
    def _renderChildren(self, children, level):
        for child in children:
            if child in self.included:
                self._renderNode(self.method.getStatement(child), level)
    def _renderNode(self, node, level):
        if not node.isControl():
            self._write(node.text, level)
            return
        self._write("%s {" % (node.text,), level)
        self._renderChildren(node.getThenChildren(), level + 1)
        if node.hasElse():
            else_children = node.getElseChildren()
            if not else_children or any(child in self.included for child in else_children):
                self._write("} else {", level)
                self._renderChildren(else_children, level + 1)
        self._write("}", level)

def render_slice(slice, method):
    return _Renderer(method, slice.nodes).render()

def format_method(method):
    """The whole method in the layout render_slice uses"""
    return _Renderer(method, frozenset(node.id for node in method.statements)).render()
