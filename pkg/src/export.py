"""
Export - JSON, JSON lines and DOT output
"""

from pathlib import Path
from typing import Iterable

import orjson
from graphviz import Digraph

from .construct import StepTrace
from .correspondence import LabeledTree
from .symtree import ROOT, Tree, Vertex

# Sorted keys and fixed indentation keep repeated runs byte-identical
_PRETTY = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS | orjson.OPT_NON_STR_KEYS


def json_dumps(data, pretty: bool = False) -> str:
    option = _PRETTY if pretty else orjson.OPT_SORT_KEYS | orjson.OPT_NON_STR_KEYS
    return orjson.dumps(data, option=option).decode('utf-8')


def json_loads(data):
    return orjson.loads(data)


def vertex_name(v: Vertex) -> str:
    """'v' for the root, then the child-index path: (0, 2) -> 'v02'"""
    return 'v' + ''.join(map(str, v))


def export_dot(tree: Tree | LabeledTree) -> str:
    """DOT digraph of the tree; labeled trees carry their edge labels"""
    labels = tree.labels if isinstance(tree, LabeledTree) else None
    plain = tree.tree if isinstance(tree, LabeledTree) else tree

    dot = Digraph(
        name='tree',
        graph_attr={'rankdir': 'TB'},
        node_attr={'shape': 'circle', 'label': ''},
        edge_attr={'arrowhead': 'none'},
    )

    def rec(v: Vertex):
        dot.node(vertex_name(v))
        for child in plain.children(v):
            if labels is None:
                dot.edge(vertex_name(v), vertex_name(child))
            else:
                dot.edge(vertex_name(v), vertex_name(child), label=labels[child].value)
            rec(child)

    rec(ROOT)
    return dot.source


def trace_lines(traces: Iterable[StepTrace]) -> str:
    """One JSON object per recorded action, newline-terminated"""
    lines = [json_dumps(record)
             for step, trace in enumerate(traces)
             for record in trace.records(step)]
    return ''.join(line + '\n' for line in lines)


def write_trace_jsonl(traces: Iterable[StepTrace], path: str | Path):
    Path(path).write_text(trace_lines(traces), encoding='utf-8')
