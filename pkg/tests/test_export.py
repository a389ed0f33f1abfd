"""Tests for DOT, JSON and trace output"""
import pydot

from src.code_core import Code
from src.construct import prefixify_with_trace
from src.correspondence import code_to_tree
from src.export import (
    export_dot, json_dumps, json_loads, trace_lines, vertex_name, write_trace_jsonl,
)
from src.symtree import Tree

DEFAULT_STATEMENTS = {'node', 'edge', 'graph'}


def _parse(source):
    graphs = pydot.graph_from_dot_data(source)
    assert graphs and len(graphs) == 1
    graph = graphs[0]
    nodes = {n.get_name() for n in graph.get_nodes()} - DEFAULT_STATEMENTS
    edges = [(e.get_source(), e.get_destination(), (e.get_label() or '').strip('"'))
             for e in graph.get_edges()]
    return nodes, edges


def test_vertex_names():
    assert vertex_name(()) == 'v'
    assert vertex_name((0, 2)) == 'v02'


def test_single_vertex():
    nodes, edges = _parse(export_dot(Tree.single()))
    assert nodes == {'v'}
    assert edges == []


def test_single_b_edge():
    nodes, edges = _parse(export_dot(code_to_tree(Code.of('b'))))
    assert nodes == {'v', 'v0'}
    assert edges == [('v', 'v0', 'b')]


def test_labeled_edges_in_index_order():
    _, edges = _parse(export_dot(code_to_tree(Code.of('a', 'ba'))))
    assert edges == [
        ('v', 'v0', 'a'), ('v', 'v1', 'a-'), ('v', 'v2', 'b'),
        ('v2', 'v20', 'a'), ('v2', 'v21', 'a-'),
    ]


def test_unlabeled_tree_has_no_edge_labels():
    nodes, edges = _parse(export_dot(Tree.full(2)))
    assert len(nodes) == 13
    assert len(edges) == 12
    assert all(label == '' for _, _, label in edges)


def test_dot_is_deterministic():
    tree = code_to_tree(Code.of('aa', 'ab', 'b'))
    assert export_dot(tree) == export_dot(tree)


def test_json_helpers():
    text = json_dumps({'b': 1, 'a': [1, 2]}, pretty=True)
    assert text.index('"a"') < text.index('"b"')
    assert json_loads(text) == {'a': [1, 2], 'b': 1}
    assert json_dumps({2: 'x'}) == '{"2":"x"}'


def test_trace_lines(tmp_path):
    _, traces = prefixify_with_trace(Code.of('a', 'ab'))
    text = trace_lines(traces)
    lines = text.splitlines()
    assert len(lines) == sum(len(t.actions) for t in traces)
    assert text.endswith('\n')
    assert [json_loads(line)['step'] for line in lines] == list(range(len(lines)))

    path = tmp_path / 'trace.jsonl'
    write_trace_jsonl(traces, path)
    assert path.read_text(encoding='utf-8') == text
