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
from collections import namedtuple
from enum import Enum

from .exceptions import InvalidGraph
from .exceptions import UnknownNode

class EdgeKind(Enum):
    CONTROL = "control"
    DATA = "data"
    def __lt__(self, other):
        return self.value < other.value

Edge = namedtuple("Edge", ["src", "dst", "kind"])

class DependencyGraph(object):
    """
    Statement-level digraph. The same class holds a dependency graph and its
    transpose; edges are (src, dst, kind) triples and a pair of nodes may be
    linked by one edge of each kind.
    """
    def __init__(self, nodeIds, edges=()):
        super(DependencyGraph, self).__init__()
        self.nodeIds = list(nodeIds)
        known = frozenset(self.nodeIds)
        if len(known) != len(self.nodeIds):
            raise InvalidGraph("duplicate node ids")
        normalized = set()
        for src, dst, kind in edges:
            try:
                kind = EdgeKind(kind)
            except ValueError:
                raise InvalidGraph("unknown edge kind %r" % (kind,))
            if src not in known or dst not in known:
                raise InvalidGraph("edge %s -> %s refers to an unknown node" % (src, dst))
            if src == dst:
                raise InvalidGraph("self edge on node %s" % (src,))
            normalized.add(Edge(src, dst, kind))
        self.edges = frozenset(normalized)
        self._adjacency = dict((node_id, []) for node_id in self.nodeIds)
        for edge in sorted(self.edges):
            self._adjacency[edge.src].append((edge.dst, edge.kind))
    @classmethod
    def fromAdjacency(cls, nodeIds, adjacency):
        """
        Builds a graph from already valid (dst, kind) lists per source node,
        each sorted by (dst, kind). Nothing is validated or re-sorted.
        """
        returned = cls(nodeIds)
        edges = []
        for src, pairs in adjacency.items():
            returned._adjacency[src] = list(pairs)
            edges.extend(Edge(src, dst, kind) for dst, kind in pairs)
        returned.edges = frozenset(edges)
        return returned
    def __repr__(self):
        return "<DependencyGraph %s nodes, %s edges>" % (len(self.nodeIds), len(self.edges))
    def __eq__(self, other):
        return isinstance(other, DependencyGraph) and other.nodeIds == self.nodeIds and other.edges == self.edges
    def __ne__(self, other):
        return not (self == other)
    __hash__ = None
    def __contains__(self, node_id):
        return node_id in self._adjacency
    def _assertNode(self, node_id):
        if node_id not in self._adjacency:
            raise UnknownNode(node_id)
    def getAdjacency(self, node_id):
        """fan-out of node_id as (dst, kind) pairs sorted by (dst, kind)"""
        self._assertNode(node_id)
        return list(self._adjacency[node_id])
    def getFanOutNodes(self, node_id):
        returned = []
        for dst, _ in self.getAdjacency(node_id):
            if not returned or returned[-1] != dst:
                returned.append(dst)
        return returned
    def getEdges(self, kind=None):
        if kind is None:
            return sorted(self.edges)
        kind = EdgeKind(kind)
        return sorted(edge for edge in self.edges if edge.kind is kind)
    def hasEdge(self, src, dst, kind=None):
        if kind is None:
            return any(Edge(src, dst, k) in self.edges for k in EdgeKind)
        return Edge(src, dst, EdgeKind(kind)) in self.edges
