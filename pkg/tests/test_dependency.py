import json
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import expanded_cycle_negatives, signed_cycle_negatives, undirected_cycles
from parity_backdoors.dependency import (
    SignedEdge,
    SignedGraph,
    build_directed,
    build_undirected,
    export_dot,
    export_json,
    undirected_view,
    unlabel,
)
from parity_backdoors.generators import random_program
from parity_backdoors.program import Program, parse_program


def edge_set(graph):
    return {(e.source, e.target, e.sign) for e in graph.edges}


def test_directed_graph_of_example(running_example):
    d = build_directed(running_example)
    assert {("b", "c", "neg"), ("a", "c", "neg"), ("a", "b", "neg"), ("c", "b", "neg")} <= edge_set(d)
    assert {("b", "a", "pos"), ("d", "a", "pos"), ("a", "d", "pos"), ("c", "d", "pos")} <= edge_set(d)
    assert len(d.edges) == 8


def test_directed_trivial():
    d = build_directed(parse_program("d."))
    assert d.vertices == ("d",) and d.edges == ()
    assert edge_set(build_directed(parse_program("a :- a."))) == {("a", "a", "pos")}


def test_both_signs_are_parallel_edges():
    d = build_directed(parse_program("a :- b. a :- not b."))
    assert edge_set(d) == {("a", "b", "pos"), ("a", "b", "neg")}


def test_undirected_graph_of_example(running_example):
    u = build_undirected(running_example)
    assert len(u.negative_vertices) == 4
    atom_edges = {frozenset(e) for e in u.edges if not any(x in u.negative_vertices for x in e)}
    assert atom_edges == {frozenset("ab"), frozenset("ad"), frozenset("cd")}
    for w in u.negative_vertices:
        assert sum(e.count(w) for e in u.edges) == 2


def test_undirected_collapse_and_negative_square():
    u = build_undirected(parse_program("a :- b. b :- a."))
    assert u.edges == (("a", "b"),) and not u.negative_vertices
    u = build_undirected(parse_program("a :- not b. b :- not a."))
    assert len(u.negative_vertices) == 2
    assert [len(c) for c in undirected_cycles(u.vertices, u.edges)] == [4]


def test_negative_self_loop_gives_parallel_pair():
    u = build_undirected(parse_program("a :- not a."))
    assert u.edges == (("a", "v(a,a)"), ("v(a,a)", "a"))
    assert expanded_cycle_negatives(u) == [1]


def test_unlabel_examples():
    tri = SignedGraph.from_edges([("a", "c", True), ("c", "b", True), ("b", "a", False)])
    lab = unlabel(tri)
    assert len(lab.edges) == 4 and lab.directed
    two = unlabel(SignedGraph.from_edges([("a", "b", False), ("b", "a", False)]))
    assert len(two.edges) == 4
    loop = unlabel(SignedGraph.from_edges([("a", "a", True)]))
    assert loop.edges == (("a", "a"),)
    assert lab.provenance == (0, 1, 2, 2)


def test_provenance_counts():
    g = SignedGraph.from_edges([("a", "b", False), ("b", "c", True), ("c", "a", False)], directed=False)
    lab = unlabel(g)
    for i, e in enumerate(g.edges):
        assert lab.provenance.count(i) == (1 if e.negative else 2)


def test_dot_export():
    empty = export_dot(SignedGraph((), (), True))
    assert empty.replace("\n", "").replace(" ", "") == "digraph{}"
    assert "a -> b" in export_dot(SignedGraph.from_edges([("a", "b", False)]))
    neg = export_dot(SignedGraph.from_edges([("a", "b", True)]))
    assert "a -> b [sign=neg" in neg


def test_dot_export_undirected(running_example):
    dot = export_dot(build_undirected(running_example))
    assert dot.startswith("graph {")
    assert '"v(a,b)" [shape=box, sign=neg];' in dot


def test_json_export_is_stable(running_example):
    a = export_json(build_undirected(running_example))
    b = export_json(build_undirected(Program(reversed(running_example.rules))))
    assert a == b
    data = json.loads(export_json(build_directed(running_example)))
    assert {"source": "a", "target": "b", "sign": "neg"} in data["edges"]
    lab = json.loads(export_json(unlabel(undirected_view(build_directed(running_example)))))
    assert len(lab["provenance"]) == len(lab["edges"])


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.integers(0, 8), st.integers(0, 2**31))
def test_invariant_under_reordering(n, m, seed):
    p = random_program(n, m, 0.4, 0.3, seed)
    rules = list(p.rules)
    random.Random(seed).shuffle(rules)
    q = Program(rules + rules[:2])
    assert build_directed(p) == build_directed(q)
    assert build_undirected(p) == build_undirected(q)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.integers(0, 8), st.integers(0, 2**31))
def test_directed_edges_match_rules(n, m, seed):
    p = random_program(n, m, 0.4, 0.3, seed)
    d = build_directed(p)
    expected = {SignedEdge(x, y, False) for r in p for x in r.head for y in r.pos}
    expected |= {SignedEdge(x, y, True) for r in p for x in r.head for y in r.neg}
    assert set(d.edges) == expected
    u = build_undirected(p)
    assert len(u.negative_vertices) == len(d.negative_edges)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.integers(0, 8), st.integers(0, 2**31))
def test_cycle_parity_preserved_by_expansion(n, m, seed):
    """Cycles of U_P and of the contracted signed view have the same negative counts."""
    p = random_program(n, m, 0.5, 0.0, seed)
    u = build_undirected(p)
    assert sorted(expanded_cycle_negatives(u)) == sorted(signed_cycle_negatives(u.signed))
