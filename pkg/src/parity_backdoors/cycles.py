"""Cycle detection by kind (directed/undirected) and parity.

Directed parity questions are answered by exhaustive simple-cycle enumeration
(Johnson's blocking scheme), bounded by a cap. Undirected questions use the
block decomposition: a graph is even-cycle free iff every block is a bridge
or an odd cycle, and inside a non-bipartite block two distinct vertices are
joined by paths of both parities. Parity BFS over (vertex, parity) states is
not used anywhere: it finds closed walks, and two odd cycles sharing a vertex
form an even closed walk that is not a cycle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .dependency import (
    ExpandedUndirectedGraph,
    SignedGraph,
    UnlabeledGraph,
    negative_vertex,
    unlabel,
)

DEFAULT_CYCLE_CAP = 1_000_000


class CycleLimitExceeded(RuntimeError):
    """An exhaustive search examined ``cap`` cycles without an answer."""

    def __init__(self, cap: int):
        super().__init__(f"cycle enumeration cap of {cap} reached")
        self.cap = cap


@dataclass(frozen=True)
class CycleWitness:
    """A simple cycle of a signed graph, listed once from one starting vertex.

    Directed witnesses carry the sign of each step ``vertices[i] ->
    vertices[i+1]`` in ``signs``. Undirected witnesses live in U_P and count
    the negative vertices they pass through.
    """

    kind: str
    vertices: tuple
    negative_count: int
    signs: Optional[tuple] = None

    @property
    def bad(self) -> bool:
        return self.negative_count >= 1

    @property
    def even(self) -> bool:
        return self.negative_count % 2 == 0

    def __len__(self) -> int:
        return len(self.vertices)

    def as_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "vertices": list(self.vertices),
            "negative_count": self.negative_count,
            "bad": self.bad,
            "even": self.even,
        }
        if self.signs is not None:
            out["signs"] = ["neg" if s else "pos" for s in self.signs]
        return out

    def validate(self, graph) -> bool:
        """Re-walk the cycle in ``graph`` (D_P or U_P) and check the sign count."""
        vs = self.vertices
        if not vs or len(set(vs)) != len(vs):
            return False
        n = len(vs)
        if self.kind == "directed":
            if self.signs is None or len(self.signs) != n:
                return False
            present = {(e.source, e.target, e.negative) for e in graph.edges}
            steps = ((vs[i], vs[(i + 1) % n], self.signs[i]) for i in range(n))
            return all(s in present for s in steps) and sum(self.signs) == self.negative_count
        multiplicity: dict = {}
        for u, v in graph.edges:
            key = frozenset((u, v))
            multiplicity[key] = multiplicity.get(key, 0) + 1
        needed: dict = {}
        for i in range(n):
            key = frozenset((vs[i], vs[(i + 1) % n]))
            needed[key] = needed.get(key, 0) + 1
        if any(multiplicity.get(k, 0) < c for k, c in needed.items()):
            return False
        return sum(1 for v in vs if v in graph.negative_vertices) == self.negative_count


@dataclass(frozen=True)
class UnlabeledCycle:
    """A cycle of an unlabeled graph: ``edges[i]`` joins ``vertices[i]`` and ``vertices[i+1]``."""

    vertices: tuple
    edges: tuple

    @property
    def length(self) -> int:
        return len(self.edges)

    def validate(self, graph: UnlabeledGraph) -> bool:
        n = len(self.vertices)
        if n == 0 or n != len(self.edges) or len(set(self.vertices)) != n:
            return False
        if len(set(self.edges)) != n:
            return False
        for i, eid in enumerate(self.edges):
            if {*graph.edges[eid]} != {self.vertices[i], self.vertices[(i + 1) % n]}:
                return False
        return True


# -- directed ----------------------------------------------------------------------


def strongly_connected_components(succ: dict) -> list:
    """Tarjan's algorithm, iterative. ``succ`` maps vertex -> iterable of successors."""
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    comps = []
    counter = 0
    for root in succ:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(succ[root]))]
        while work:
            v, it = work[-1]
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            else:
                work.pop()
                if work:
                    u = work[-1][0]
                    low[u] = min(low[u], low[v])
                if low[v] == index[v]:
                    comp = set()
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        comp.add(w)
                        if w == v:
                            break
                    comps.append(comp)
    return comps


def _unblock(v, blocked: set, bmap: dict) -> None:
    todo = [v]
    while todo:
        x = todo.pop()
        if x in blocked:
            blocked.discard(x)
            todo.extend(bmap[x])
            bmap[x].clear()


def _circuit(v, start, adj, blocked, bmap, path):
    found = False
    path.append(v)
    blocked.add(v)
    for w in adj[v]:
        if w == start:
            yield tuple(path)
            found = True
        elif w not in blocked:
            if (yield from _circuit(w, start, adj, blocked, bmap, path)):
                found = True
    if found:
        _unblock(v, blocked, bmap)
    else:
        for w in adj[v]:
            bmap[w].add(v)
    path.pop()
    return found


def vertex_cycles(succ: dict) -> Iterator[tuple]:
    """Every elementary circuit of a simple digraph, from its least vertex.

    Self-loops are circuits of length one. ``succ`` maps vertex -> successors.
    """
    order = sorted(succ)
    rank = {v: i for i, v in enumerate(order)}
    for s in order:
        sub = {v: [w for w in succ[v] if rank[w] >= rank[s]] for v in order[rank[s] :]}
        comp = next(c for c in strongly_connected_components(sub) if s in c)
        if len(comp) == 1 and s not in sub[s]:
            continue
        adj = {v: sorted(w for w in sub[v] if w in comp) for v in comp}
        yield from _circuit(s, s, adj, set(), {v: set() for v in comp}, [])


def _sign_options(graph: SignedGraph) -> dict:
    options: dict = {}
    for u, v, neg in graph.edges:
        options.setdefault((u, v), set()).add(neg)
    return options


def _successors(graph: SignedGraph, options: dict) -> dict:
    succ: dict = {v: set() for v in graph.vertices}
    for u, v in options:
        succ[u].add(v)
    return succ


def iter_directed_cycles(graph: SignedGraph) -> Iterator[CycleWitness]:
    """Every simple directed cycle; parallel edges of both signs give distinct cycles."""
    options = _sign_options(graph)
    for cyc in vertex_cycles(_successors(graph, options)):
        n = len(cyc)
        per_step = [sorted(options[(cyc[i], cyc[(i + 1) % n])]) for i in range(n)]
        yield from _expand_signs(cyc, per_step)


def _expand_signs(cyc: tuple, per_step: list) -> Iterator[CycleWitness]:
    combos: list = [()]
    for opts in per_step:
        combos = [c + (s,) for c in combos for s in opts]
    for signs in combos:
        yield CycleWitness("directed", cyc, sum(signs), signs)


@dataclass(frozen=True)
class CycleEnumeration:
    cycles: tuple
    truncated: bool = False


def enumerate_directed_cycles(graph: SignedGraph, cap: int = DEFAULT_CYCLE_CAP) -> CycleEnumeration:
    out = []
    for witness in iter_directed_cycles(graph):
        if len(out) == cap:
            return CycleEnumeration(tuple(out), truncated=True)
        out.append(witness)
    return CycleEnumeration(tuple(out))


def has_negative_edge_in_scc(graph: SignedGraph) -> Optional[tuple]:
    """A negative edge (u, v) with u, v strongly connected, or None."""
    succ: dict = {v: set() for v in graph.vertices}
    for u, v, _ in graph.edges:
        succ[u].add(v)
    comp_of = {}
    for i, comp in enumerate(strongly_connected_components(succ)):
        for v in comp:
            comp_of[v] = i
    for u, v, neg in graph.edges:
        if neg and comp_of[u] == comp_of[v]:
            return (u, v)
    return None


def find_directed_cycle_through(graph: SignedGraph, u: str, v: str, negative: bool) -> CycleWitness:
    """Close the edge u -> v into a simple cycle with a shortest v -> u path."""
    if u == v:
        return CycleWitness("directed", (u,), int(negative), (negative,))
    adj = graph.successors()
    parent = {v: None}
    queue = deque([v])
    while queue and u not in parent:
        x = queue.popleft()
        for y, eid in adj[x]:
            if y not in parent:
                parent[y] = (x, eid)
                queue.append(y)
    if u not in parent:
        raise ValueError(f"{u} is not reachable from {v}")
    steps = []
    x = u
    while parent[x] is not None:
        p, eid = parent[x]
        steps.append((p, graph.edges[eid].negative))
        x = p
    steps.reverse()
    vertices = (u,) + tuple(p for p, _ in steps)
    signs = (negative,) + tuple(s for _, s in steps)
    return CycleWitness("directed", vertices, sum(signs), signs)


def has_directed_cycle(
    graph: SignedGraph,
    require_bad: bool = False,
    require_even: bool = False,
    cap: int = DEFAULT_CYCLE_CAP,
) -> Optional[CycleWitness]:
    """A simple directed cycle with the required properties, or None.

    Raises :class:`CycleLimitExceeded` after ``cap`` vertex cycles without a
    hit, so a None is always a definite answer.
    """
    if require_bad and has_negative_edge_in_scc(graph) is None:
        return None
    if not require_bad and not require_even:
        for u, v, neg in graph.edges:
            if u == v:
                return CycleWitness("directed", (u,), int(neg), (neg,))
    options = _sign_options(graph)
    for count, cyc in enumerate(vertex_cycles(_successors(graph, options))):
        if count >= cap:
            raise CycleLimitExceeded(cap)
        n = len(cyc)
        per_step = [options[(cyc[i], cyc[(i + 1) % n])] for i in range(n)]
        forced = sum(1 for s in per_step if s == {True})
        free = [i for i, s in enumerate(per_step) if len(s) == 2]
        for negs in range(forced, forced + len(free) + 1):
            if require_bad and negs == 0:
                continue
            if require_even and negs % 2:
                continue
            chosen = set(free[: negs - forced])
            signs = tuple(
                (i in chosen) if len(s) == 2 else next(iter(s)) for i, s in enumerate(per_step)
            )
            return CycleWitness("directed", cyc, negs, signs)
    return None


# -- undirected: blocks ------------------------------------------------------------


@dataclass(frozen=True)
class Block:
    vertices: frozenset
    edges: tuple

    @property
    def is_bridge(self) -> bool:
        return len(self.edges) == 1 and len(self.vertices) == 2

    @property
    def is_loop(self) -> bool:
        return len(self.vertices) == 1

    @property
    def is_cycle(self) -> bool:
        return len(self.edges) == len(self.vertices)


@dataclass(frozen=True)
class BlockDecomposition:
    """Biconnected components of an undirected multigraph.

    Loops form single-vertex blocks. ``cut_vertices`` are the vertices shared
    by two or more blocks; ``tree`` is the block-cut forest as an adjacency
    map over nodes ``("block", i)`` and ``("vertex", v)``.
    """

    blocks: tuple
    cut_vertices: frozenset
    tree: dict = field(repr=False)

    def blocks_of(self, v) -> list:
        return [i for i, b in enumerate(self.blocks) if v in b.vertices]


def _adjacency(graph) -> dict:
    adj: dict = {v: [] for v in graph.vertices}
    for i, (u, v) in enumerate(graph.edges):
        if u != v:
            adj[u].append((v, i))
            adj[v].append((u, i))
    return adj


def blocks(graph) -> BlockDecomposition:
    """Hopcroft-Tarjan biconnected components, iterative; handles parallel edges."""
    adj = _adjacency(graph)
    disc: dict = {}
    low: dict = {}
    edge_stack: list = []
    found: list = []
    t = 0
    for root in graph.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = t
        t += 1
        work = [(root, None, iter(adj[root]))]
        while work:
            v, via, it = work[-1]
            for w, eid in it:
                if eid == via:
                    continue
                if w not in disc:
                    disc[w] = low[w] = t
                    t += 1
                    edge_stack.append(eid)
                    work.append((w, eid, iter(adj[w])))
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(eid)
                    low[v] = min(low[v], disc[w])
            else:
                work.pop()
                if work:
                    u = work[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] >= disc[u]:
                        comp = []
                        while True:
                            e = edge_stack.pop()
                            comp.append(e)
                            if e == via:
                                break
                        found.append(tuple(sorted(comp)))
    for i, (u, v) in enumerate(graph.edges):
        if u == v:
            found.append((i,))
    result = []
    for comp in found:
        vs = frozenset(x for eid in comp for x in graph.edges[eid])
        result.append(Block(vs, comp))
    count: dict = {}
    for b in result:
        for v in b.vertices:
            count[v] = count.get(v, 0) + 1
    cuts = frozenset(v for v, c in count.items() if c > 1)
    tree: dict = {}
    for i, b in enumerate(result):
        tree.setdefault(("block", i), [])
        for v in sorted(b.vertices & cuts, key=str):
            tree[("block", i)].append(("vertex", v))
            tree.setdefault(("vertex", v), []).append(("block", i))
    return BlockDecomposition(tuple(result), cuts, tree)


def _block_adjacency(graph, block: Block) -> dict:
    adj: dict = {v: [] for v in block.vertices}
    for eid in block.edges:
        u, v = graph.edges[eid]
        if u != v:
            adj[u].append((v, eid))
            adj[v].append((u, eid))
    return adj


def _bfs_tree(adj: dict, root):
    parent = {root: None}
    depth = {root: 0}
    order = [root]
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y, eid in adj[x]:
            if y not in parent:
                parent[y] = (x, eid)
                depth[y] = depth[x] + 1
                order.append(y)
                queue.append(y)
    return parent, depth


def _tree_cycle(parent: dict, depth: dict, u, w, eid) -> UnlabeledCycle:
    """Cycle formed by the non-tree edge u - w and the tree paths to their LCA."""
    left, right = [u], [w]
    left_edges, right_edges = [], []
    a, b = u, w
    while depth[a] > depth[b]:
        a, e = parent[a]
        left.append(a)
        left_edges.append(e)
    while depth[b] > depth[a]:
        b, e = parent[b]
        right.append(b)
        right_edges.append(e)
    while a != b:
        a, e = parent[a]
        left.append(a)
        left_edges.append(e)
        b, e = parent[b]
        right.append(b)
        right_edges.append(e)
    # left runs u..lca, right runs w..lca; cycle: lca..u, u-w, w..lca
    vertices = list(reversed(left)) + right[:-1]
    edges = list(reversed(left_edges)) + [eid] + right_edges
    return UnlabeledCycle(tuple(vertices), tuple(edges))


def _some_cycle(adj: dict, odd_only: bool = False) -> Optional[UnlabeledCycle]:
    root = next(iter(adj))
    parent, depth = _bfs_tree(adj, root)
    tree_edges = {p[1] for p in parent.values() if p is not None}
    for u in adj:
        for w, eid in adj[u]:
            if eid in tree_edges:
                continue
            if odd_only and depth[u] % 2 != depth[w] % 2:
                continue
            return _tree_cycle(parent, depth, u, w, eid)
    return None


def _bfs_path(adj: dict, src, goal, banned=frozenset(), stop_at=None):
    """Shortest path src -> goal as (vertices, edges).

    With ``stop_at`` the search ends at the first vertex in that set (other
    than ``src``) and does not expand through such vertices.
    """
    parent = {src: None}
    queue = deque([src])
    hit = None
    while queue:
        x = queue.popleft()
        if x != src and (x == goal or (stop_at is not None and x in stop_at)):
            hit = x
            break
        for y, eid in adj[x]:
            if y not in parent and y not in banned:
                parent[y] = (x, eid)
                queue.append(y)
    if hit is None:
        return None
    vertices, edges = [hit], []
    while parent[vertices[-1]] is not None:
        p, eid = parent[vertices[-1]]
        vertices.append(p)
        edges.append(eid)
    return vertices[::-1], edges[::-1]


def _arc(cycle: UnlabeledCycle, i: int, j: int, forward: bool):
    """Path along ``cycle`` from position i to position j."""
    n = len(cycle.vertices)
    vertices, edges = [cycle.vertices[i]], []
    k = i
    while k != j:
        if forward:
            edges.append(cycle.edges[k])
            k = (k + 1) % n
        else:
            k = (k - 1) % n
            edges.append(cycle.edges[k])
        vertices.append(cycle.vertices[k])
    return vertices, edges


def _even_cycle_in_block(adj: dict) -> UnlabeledCycle:
    """An even cycle inside a 2-connected block that is not itself a cycle."""
    cycle = _some_cycle(adj)
    if cycle.length % 2 == 0:
        return cycle
    on_cycle = set(cycle.vertices)
    cycle_edges = set(cycle.edges)
    ear = None
    for x in cycle.vertices:
        for w, eid in adj[x]:
            if eid in cycle_edges:
                continue
            if w in on_cycle:
                ear = ([x, w], [eid])
            else:
                rest = _bfs_path(adj, w, None, banned={x}, stop_at=on_cycle)
                ear = ([x] + rest[0], [eid] + rest[1])
            break
        if ear:
            break
    ear_vertices, ear_edges = ear
    pos = {v: k for k, v in enumerate(cycle.vertices)}
    i, j = pos[ear_vertices[-1]], pos[ear_vertices[0]]
    # ear goes x -> y; close it along whichever arc y -> x has the ear's parity
    for forward in (True, False):
        arc_vertices, arc_edges = _arc(cycle, i, j, forward)
        if len(arc_edges) % 2 == len(ear_edges) % 2:
            return UnlabeledCycle(
                tuple(ear_vertices + arc_vertices[1:-1]), tuple(ear_edges + arc_edges)
            )
    raise AssertionError("odd cycle arcs must differ in parity")


def has_even_cycle_undirected(graph) -> Optional[UnlabeledCycle]:
    """An even-length cycle of an undirected (multi)graph, or None.

    None exactly when every block is a bridge or an odd cycle.
    """
    decomposition = blocks(graph)
    for block in decomposition.blocks:
        if block.is_bridge or block.is_loop:
            continue
        adj = _block_adjacency(graph, block)
        if block.is_cycle:
            if len(block.edges) % 2 == 0:
                return _some_cycle(adj)
            continue
        return _even_cycle_in_block(adj)
    return None


# -- undirected: parity paths ------------------------------------------------------


def _two_coloring(adj: dict) -> Optional[dict]:
    color = {}
    for root in adj:
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, _ in adj[x]:
                if y not in color:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    return color


def _segments(graph, s, t) -> Optional[list]:
    """Blocks on the block-cut path from s to t as (block, entry, exit) triples."""
    decomposition = blocks(graph)

    def node(v):
        if v in decomposition.cut_vertices:
            return ("vertex", v)
        owners = [i for i in decomposition.blocks_of(v) if not decomposition.blocks[i].is_loop]
        return ("block", owners[0]) if owners else None

    start, goal = node(s), node(t)
    if start is None or goal is None:
        return None
    parent = {start: None}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        if x == goal:
            break
        for y in decomposition.tree.get(x, ()):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    if goal not in parent:
        return None
    path = [goal]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    segments = []
    entry = s
    for k, (kind, value) in enumerate(path):
        if kind != "block":
            continue
        exit_ = path[k + 1][1] if k + 1 < len(path) else t
        segments.append((decomposition.blocks[value], entry, exit_))
        entry = exit_
    return segments


def odd_path_exists(graph, s, t) -> bool:
    """True iff some simple s-t path has odd length."""
    if s == t:
        raise ValueError("odd_path_exists needs two distinct vertices")
    segments = _segments(graph, s, t)
    if segments is None:
        return False
    parity = 0
    for block, entry, exit_ in segments:
        color = _two_coloring(_block_adjacency(graph, block))
        if color is None:
            return True
        parity ^= color[entry] != color[exit_]
    return parity == 1


def _disjoint_paths_to(adj: dict, u, v, targets: set):
    """Vertex-disjoint paths u -> targets and v -> targets meeting targets only at their ends.

    Unit-capacity max flow on the vertex-split graph; ``adj`` must be 2-connected.
    """
    if u in targets and v in targets:
        return ([u], []), ([v], [])
    if u in targets or v in targets:
        inside, outside = (u, v) if u in targets else (v, u)
        path = _bfs_path(adj, outside, None, banned={inside}, stop_at=targets - {inside})
        pair = (([inside], []), path)
        return pair if inside == u else pair[::-1]

    source, sink = ("S",), ("T",)
    cap: dict = {}
    eid_of: dict = {}
    graph: dict = {}

    def arc(a, b):
        cap[(a, b)] = cap.get((a, b), 0) + 1
        cap.setdefault((b, a), 0)
        graph.setdefault(a, set()).add(b)
        graph.setdefault(b, set()).add(a)

    for x in adj:
        if x in targets:
            arc(("in", x), sink)
            continue
        arc(("in", x), ("out", x))
        for y, eid in adj[x]:
            if (x, y) not in eid_of:
                eid_of[(x, y)] = eid
                arc(("out", x), ("in", y))
    arc(source, ("in", u))
    arc(source, ("in", v))
    for _ in range(2):
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in graph[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            raise ValueError("block is not 2-connected")
        b = sink
        while parent[b] is not None:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
    paths = []
    for start in (u, v):
        vertices, edges = [start], []
        x = start
        while x not in targets:
            # follow the unit of flow leaving x
            y = next(
                b[1] for b in graph[("out", x)]
                if b[0] == "in" and cap[(("out", x), b)] == 0 and cap[(b, ("out", x))] == 1
            )
            edges.append(eid_of[(x, y)])
            vertices.append(y)
            x = y
        paths.append((vertices, edges))
    return paths[0], paths[1]


def _path_with_parity_in_block(adj: dict, u, v, parity: int):
    """A u-v path of the given parity inside a 2-connected non-bipartite block."""
    cycle = _some_cycle(adj, odd_only=True)
    (pu, eu), (pv, ev) = _disjoint_paths_to(adj, u, v, set(cycle.vertices))
    pos = {x: k for k, x in enumerate(cycle.vertices)}
    i, j = pos[pu[-1]], pos[pv[-1]]
    for forward in (True, False):
        arc_vertices, arc_edges = _arc(cycle, i, j, forward)
        if (len(eu) + len(arc_edges) + len(ev)) % 2 == parity:
            vertices = pu + arc_vertices[1:] + pv[::-1][1:]
            return vertices, eu + arc_edges + ev[::-1]
    raise AssertionError("odd cycle arcs must differ in parity")


def parity_path(graph, s, t, parity: int):
    """A simple s-t path whose length has the given parity, as (vertices, edge ids)."""
    if s == t:
        raise ValueError("parity_path needs two distinct vertices")
    segments = _segments(graph, s, t)
    if segments is None:
        return None
    pieces = []
    fixed = 0
    flexible = None
    for k, (block, entry, exit_) in enumerate(segments):
        adj = _block_adjacency(graph, block)
        if flexible is None and _two_coloring(adj) is None:
            flexible = k
            pieces.append((adj, entry, exit_))
            continue
        path = _bfs_path(adj, entry, exit_)
        fixed ^= len(path[1]) % 2
        pieces.append(path)
    if flexible is None:
        if fixed != parity:
            return None
    else:
        adj, entry, exit_ = pieces[flexible]
        pieces[flexible] = _path_with_parity_in_block(adj, entry, exit_, parity ^ fixed)
    vertices, edges = [s], []
    for pv, pe in pieces:
        vertices += pv[1:]
        edges += pe
    return vertices, edges


# -- undirected: witnesses in U_P --------------------------------------------------


def _walk_in_expanded(signed: SignedGraph, start, signed_edges) -> tuple:
    """U_P vertex sequence of a closed walk over edges of the contracted signed view."""
    vertices = [start]
    current = start
    for j in signed_edges:
        u, v, neg = signed.edges[j]
        nxt = v if current == u else u
        if neg:
            vertices.append(negative_vertex(u, v))
        vertices.append(nxt)
        current = nxt
    assert vertices[-1] == start
    return tuple(vertices[:-1])


def _collapse(provenance, edge_ids) -> list:
    out = []
    for eid in edge_ids:
        j = provenance[eid]
        if not out or out[-1] != j:
            out.append(j)
    return out


def _expanded_witness(graph: ExpandedUndirectedGraph, vertices) -> CycleWitness:
    negs = sum(1 for v in vertices if v in graph.negative_vertices)
    return CycleWitness("undirected", tuple(vertices), negs)


def signed_cycle_witness(graph: ExpandedUndirectedGraph, cycle: UnlabeledCycle, unlabeled: UnlabeledGraph) -> CycleWitness:
    """Translate a cycle of ``unlabel(graph.signed)`` into a U_P witness."""
    originals = set(graph.signed.vertices)
    k = next(i for i, v in enumerate(cycle.vertices) if v in originals)
    n = len(cycle.vertices)
    start = cycle.vertices[k]
    edge_ids = [cycle.edges[(k + i) % n] for i in range(n)]
    signed_edges = _collapse(unlabeled.provenance, edge_ids)
    return _expanded_witness(graph, _walk_in_expanded(graph.signed, start, signed_edges))


def has_bad_even_cycle_undirected(graph: ExpandedUndirectedGraph) -> Optional[CycleWitness]:
    """A cycle of U_P through an even, non-zero number of negative vertices, or None.

    For each negative edge e = {s, t} of the contracted view, such a cycle
    through e exists iff the unlabeled graph of G - e has an odd s-t path.
    """
    signed = graph.signed
    for i in signed.negative_edges:
        s, t, _ = signed.edges[i]
        if s == t:
            continue  # a negative self-loop only closes an odd cycle
        reduced = unlabel(signed.without_edge(i))
        found = parity_path(reduced, s, t, 1)
        if found is None:
            continue
        _, edge_ids = found
        provenance = [j if j < i else j + 1 for j in reduced.provenance]
        signed_edges = _collapse(provenance, edge_ids) + [i]
        return _expanded_witness(graph, _walk_in_expanded(signed, s, signed_edges))
    return None


def find_undirected_cycle(graph: ExpandedUndirectedGraph, through_negative: bool = False) -> Optional[CycleWitness]:
    """Any cycle of U_P (optionally through a negative vertex), or None."""
    decomposition = blocks(graph)
    for block in decomposition.blocks:
        if block.is_bridge:
            continue
        if through_negative and not any(v in graph.negative_vertices for v in block.vertices):
            continue
        if block.is_loop:
            (v,) = block.vertices
            return _expanded_witness(graph, (v,))
        adj = _block_adjacency(graph, block)
        if through_negative:
            anchor = min(v for v in block.vertices if v in graph.negative_vertices)
        else:
            anchor = min(block.vertices, key=str)
        other, eid = adj[anchor][0]
        without = {x: [(y, e) for y, e in nbrs if e != eid] for x, nbrs in adj.items()}
        path_vertices, _ = _bfs_path(without, other, anchor)
        return _expanded_witness(graph, (anchor, *path_vertices[:-1]))
    return None
