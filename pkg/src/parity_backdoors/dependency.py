"""Signed dependency graphs of programs and their unlabeled transforms.

``build_directed`` gives D_P: an edge head -> body atom for every rule, negative
when the body atom occurs under ``not``. ``build_undirected`` gives U_P, where
every negative edge (x, y) becomes a path x - v(x,y) - y through a fresh
negative vertex and positive edges lose their direction (and collapse).
``unlabel`` subdivides positive edges so that cycle length parity equals the
parity of the number of negative edges on the cycle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .program import Program, is_atom_name


class SignedEdge(NamedTuple):
    source: str
    target: str
    negative: bool

    @property
    def sign(self) -> str:
        return "neg" if self.negative else "pos"


@dataclass(frozen=True)
class SignedGraph:
    """A signed multigraph; D_P is the directed case.

    Edges are indexed by position. Parallel edges are allowed, which is how a
    pair of atoms with both a positive and a negative dependency is stored.
    """

    vertices: tuple
    edges: tuple
    directed: bool = True

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple],
        vertices: Iterable[str] = (),
        directed: bool = True,
    ) -> "SignedGraph":
        es = tuple(SignedEdge(u, v, bool(neg)) for u, v, neg in edges)
        vs = set(vertices) | {u for u, _, _ in es} | {v for _, v, _ in es}
        return cls(tuple(sorted(vs)), es, directed)

    @property
    def negative_edges(self) -> tuple:
        return tuple(i for i, e in enumerate(self.edges) if e.negative)

    def without_edge(self, index: int) -> "SignedGraph":
        edges = self.edges[:index] + self.edges[index + 1 :]
        return SignedGraph(self.vertices, edges, self.directed)

    def successors(self) -> dict:
        """Map vertex -> list of (neighbour, edge index); both ways if undirected."""
        adj: dict = {v: [] for v in self.vertices}
        for i, (u, v, _) in enumerate(self.edges):
            adj[u].append((v, i))
            if not self.directed and u != v:
                adj[v].append((u, i))
        return adj


SignedDepGraph = SignedGraph


def build_directed(program: Program) -> SignedGraph:
    edges = set()
    for r in program.rules:
        for x in r.head:
            edges.update(SignedEdge(x, y, False) for y in r.pos)
            edges.update(SignedEdge(x, y, True) for y in r.neg)
    return SignedGraph(tuple(sorted(program.atoms)), tuple(sorted(edges)), True)


def negative_vertex(x: str, y: str) -> str:
    return f"v({x},{y})"


def undirected_view(directed: SignedGraph) -> SignedGraph:
    """U_P with negative vertices contracted back into negative edges.

    Positive edges collapse to one per unordered pair; each negative directed
    edge keeps its own (oriented) negative edge.
    """
    positive = {tuple(sorted((u, v))) for u, v, neg in directed.edges if not neg}
    edges = [SignedEdge(u, v, False) for u, v in sorted(positive)]
    edges += [e for e in directed.edges if e.negative]
    return SignedGraph(directed.vertices, tuple(edges), False)


@dataclass(frozen=True)
class ExpandedUndirectedGraph:
    """U_P: atoms plus one negative vertex per negative edge of D_P.

    ``edges`` is a tuple of unordered pairs and may contain a parallel pair
    (a negative self-loop x <- not x gives x - v(x,x) twice) or a loop (a
    positive self-loop). ``signed`` is the contracted view U_P came from.
    """

    vertices: tuple
    edges: tuple
    negative_vertices: dict
    signed: SignedGraph

    def is_negative(self, vertex: str) -> bool:
        return vertex in self.negative_vertices


def expand(signed: SignedGraph) -> ExpandedUndirectedGraph:
    edges = []
    negatives = {}
    for u, v, neg in signed.edges:
        if neg:
            w = negative_vertex(u, v)
            negatives[w] = (u, v)
            edges += [(u, w), (w, v)]
        else:
            edges.append((u, v))
    vertices = tuple(signed.vertices) + tuple(sorted(negatives))
    return ExpandedUndirectedGraph(vertices, tuple(edges), negatives, signed)


def build_undirected(program: Program) -> ExpandedUndirectedGraph:
    return expand(undirected_view(build_directed(program)))


@dataclass(frozen=True)
class UnlabeledGraph:
    """An unsigned (multi)graph; ``provenance[i]`` is the signed edge behind edge i."""

    vertices: tuple
    edges: tuple
    directed: bool = False
    provenance: Optional[tuple] = None

    @classmethod
    def from_edges(
        cls, edges: Iterable[tuple], vertices: Iterable = (), directed: bool = False
    ) -> "UnlabeledGraph":
        es = tuple((u, v) for u, v in edges)
        vs = set(vertices) | {u for u, _ in es} | {v for _, v in es}
        return cls(tuple(sorted(vs, key=str)), es, directed)

    def adjacency(self) -> dict:
        adj: dict = {v: [] for v in self.vertices}
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            if not self.directed and u != v:
                adj[v].append((u, i))
        return adj


def subdivision_vertex(index: int, u: str, v: str) -> str:
    return f"s{index}({u},{v})"


def unlabel(graph: SignedGraph) -> UnlabeledGraph:
    """Subdivide each positive edge once and drop all signs."""
    vertices = list(graph.vertices)
    edges = []
    provenance = []
    for i, (u, v, neg) in enumerate(graph.edges):
        if neg:
            edges.append((u, v))
            provenance.append(i)
        else:
            w = subdivision_vertex(i, u, v)
            vertices.append(w)
            edges += [(u, w), (w, v)]
            provenance += [i, i]
    return UnlabeledGraph(tuple(vertices), tuple(edges), graph.directed, tuple(provenance))


# -- export ----------------------------------------------------------------------


def _dot_id(name: str) -> str:
    return name if is_atom_name(name) else json.dumps(name)


def export_dot(graph) -> str:
    """DOT text; negative edges carry ``sign=neg`` and negative vertices are boxes."""
    directed = getattr(graph, "directed", False)
    arrow = "->" if directed else "--"
    lines = [f"{'digraph' if directed else 'graph'} {{"]
    negatives = getattr(graph, "negative_vertices", {})
    for v in graph.vertices:
        if v in negatives:
            lines.append(f"  {_dot_id(v)} [shape=box, sign=neg];")
        else:
            lines.append(f"  {_dot_id(v)};")
    for edge in graph.edges:
        u, v = edge[0], edge[1]
        attrs = " [sign=neg, style=dashed, color=red]" if len(edge) > 2 and edge[2] else ""
        lines.append(f"  {_dot_id(u)} {arrow} {_dot_id(v)}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dict(graph) -> dict:
    if isinstance(graph, SignedGraph):
        return {
            "directed": graph.directed,
            "vertices": list(graph.vertices),
            "edges": [{"source": e.source, "target": e.target, "sign": e.sign} for e in graph.edges],
        }
    if isinstance(graph, ExpandedUndirectedGraph):
        return {
            "directed": False,
            "vertices": list(graph.vertices),
            "edges": [{"source": u, "target": v} for u, v in graph.edges],
            "negative_vertices": {w: list(e) for w, e in sorted(graph.negative_vertices.items())},
        }
    out = {
        "directed": graph.directed,
        "vertices": list(graph.vertices),
        "edges": [{"source": u, "target": v} for u, v in graph.edges],
    }
    if graph.provenance is not None:
        out["provenance"] = list(graph.provenance)
    return out


def export_json(graph) -> str:
    return json.dumps(graph_to_dict(graph), sort_keys=True, indent=2)
