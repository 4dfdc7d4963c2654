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
import json

from six import StringIO

from .exceptions import InvalidGraph
from .graph import DependencyGraph
from .graph import EdgeKind
from .utils import INDENT
from .utils import dump_canonical_json

EDGE_STYLES = {
    EdgeKind.CONTROL: "solid",
    EdgeKind.DATA: "dashed",
}

def _quote_for_dot(text):
    r"""
    >>> print(_quote_for_dot('say "hi"'))
    "say \"hi\""
    """
    escaped = text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
    return '"%s"' % escaped

def to_dot(graph, method):
    """
    Writes the graph in the dialect of Graphviz' ``dot``: one boxed node per
    statement labelled with its text, control edges solid, data edges dashed.
    """
    out = StringIO()
    out.write("digraph %s {\n" % _quote_for_dot(method.name))
    out.write("%snode [shape=box];\n" % INDENT)
    for node_id in graph.nodeIds:
        out.write("%sn%s [label=%s];\n" % (INDENT, node_id, _quote_for_dot(method.getStatement(node_id).text)))
    for edge in graph.getEdges():
        out.write("%sn%s -> n%s [style=%s];\n" % (INDENT, edge.src, edge.dst, EDGE_STYLES[edge.kind]))
    out.write("}\n")
    return out.getvalue()

def graph_to_document(graph, method):
    nodes = []
    for node_id in graph.nodeIds:
        node = method.getStatement(node_id)
        nodes.append({"id": node.id, "kind": node.kind, "text": node.text, "line": node.line})
    edges = [{"src": edge.src, "dst": edge.dst, "kind": edge.kind.value} for edge in graph.getEdges()]
    return {"nodes": nodes, "edges": edges}

def to_json(graph, method):
    return dump_canonical_json(graph_to_document(graph, method))

def graph_from_json(text):
    try:
        document = json.loads(text)
        node_ids = [node["id"] for node in document["nodes"]]
        edges = [(edge["src"], edge["dst"], edge["kind"]) for edge in document["edges"]]
    except (ValueError, KeyError, TypeError) as e:
        raise InvalidGraph("malformed graph document (%s)" % (e,))
    return DependencyGraph(node_ids, edges)

def slice_to_document(slice):
    return {
        "criterion": {
            "streamVariable": slice.criterion.streamVariable,
            "sinkMethods": sorted(slice.criterion.sinkMethods),
        },
        "sinkNodes": sorted(slice.sinkNodes),
        "nodes": sorted(slice.nodes),
        "warnings": list(slice.warnings),
    }

def slice_to_json(slice, graph=None, method=None):
    document = slice_to_document(slice)
    if graph is not None:
        document["graph"] = graph_to_document(graph, method)
    return dump_canonical_json(document)
