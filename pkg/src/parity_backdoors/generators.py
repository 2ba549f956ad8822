"""Reduction gadgets, random instances, and a small Hitting Set oracle.

Naming scheme for generated atoms: set elements are ``e_<x>``, hitting-set
gadget atoms are ``a_i_j`` and ``b_i_j`` (1-based, j runs to k+1), padding
cycles use ``u_i`` and ``w_i``.
"""

from __future__ import annotations

import itertools
import json
import random
import string
from dataclasses import dataclass
from typing import Iterable, Optional

from .program import Program, Rule, is_atom_name

MAX_HITTING_SET_GROUND = 16


@dataclass(frozen=True)
class HittingSetInstance:
    family: tuple
    k: int

    def __init__(self, family: Iterable[Iterable], k: int):
        sets = tuple(frozenset(s) for s in family)
        if any(not s for s in sets):
            raise ValueError("hitting-set family members must be non-empty")
        if k < 0:
            raise ValueError("k must be non-negative")
        object.__setattr__(self, "family", sets)
        object.__setattr__(self, "k", k)

    @property
    def ground(self) -> frozenset:
        return frozenset().union(*self.family)

    def to_json(self) -> str:
        family = [sorted(s, key=str) for s in self.family]
        return json.dumps({"family": family, "k": self.k}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "HittingSetInstance":
        data = json.loads(text)
        return cls(data["family"], int(data["k"]))


def element_atom(x) -> str:
    name = f"e_{x}"
    if not is_atom_name(name):
        raise ValueError(f"set element {x!r} does not give a valid atom name")
    return name


DIRECTED = "directed"
UNDIRECTED = "undirected"


def gen_hitting_set_program(inst: HittingSetInstance, variant: str = DIRECTED) -> Program:
    """Gadget program whose small strong backdoors are exactly small hitting sets.

    For every S_i and every copy j <= k+1 there are two rules
    r: a_i_j <- not S_i, not b_i_j and s: b_i_j <- not a_i_j. The directed
    variant puts all elements positively in the body of s; the undirected
    variant puts S_i positively in the body of r instead.
    """
    if variant not in (DIRECTED, UNDIRECTED):
        raise ValueError(f"unknown variant {variant!r}")
    ground = frozenset(element_atom(x) for x in inst.ground)
    rules = []
    for i, s in enumerate(inst.family, start=1):
        elems = frozenset(element_atom(x) for x in s)
        for j in range(1, inst.k + 2):
            a, b = f"a_{i}_{j}", f"b_{i}_{j}"
            if variant == DIRECTED:
                rules.append(Rule(frozenset({a}), frozenset(), elems | {b}))
                rules.append(Rule(frozenset({b}), ground, frozenset({a})))
            else:
                rules.append(Rule(frozenset({a}), elems, elems | {b}))
                rules.append(Rule(frozenset({b}), frozenset(), frozenset({a})))
    return Program(rules)


def brute_force_hitting_set(inst: HittingSetInstance) -> Optional[frozenset]:
    """A minimum hitting set if one of size at most k exists, else None."""
    ground = sorted(inst.ground, key=str)
    if len(ground) > MAX_HITTING_SET_GROUND:
        raise ValueError(f"ground set larger than {MAX_HITTING_SET_GROUND}")
    for size in range(min(inst.k, len(ground)) + 1):
        for cand in itertools.combinations(ground, size):
            h = frozenset(cand)
            if all(s & h for s in inst.family):
                return h
    return None


@dataclass(frozen=True)
class Digraph:
    vertices: tuple
    edges: tuple
    s: Optional[str] = None
    m: Optional[str] = None
    t: Optional[str] = None

    @classmethod
    def from_edges(cls, edges, s=None, m=None, t=None, vertices=()) -> "Digraph":
        es = tuple(sorted({(u, v) for u, v in edges}))
        vs = set(vertices) | {u for u, _ in es} | {v for _, v in es}
        vs |= {x for x in (s, m, t) if x is not None}
        return cls(tuple(sorted(vs)), es, s, m, t)

    def successors(self) -> dict:
        adj: dict = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
        return adj


def parse_digraph(text: str) -> Digraph:
    """Edge list: a ``# s m t`` header line, then one ``u v`` pair per line."""
    s = m = t = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 3 and s is None:
                s, m, t = parts
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        edges.append((parts[0], parts[1]))
    return Digraph.from_edges(edges, s, m, t)


def format_digraph(g: Digraph) -> str:
    lines = [f"# {g.s} {g.m} {g.t}"] if g.s is not None else []
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def gen_path_gadget(g: Digraph) -> Program:
    """P_{s,m,t}(G): v <- w per edge, v <- not m for edges into m, and t <- not s."""
    s, m, t = g.s, g.m, g.t
    if None in (s, m, t) or len({s, m, t}) != 3:
        raise ValueError("s, m, t must be three distinct vertices")
    for x in (s, m, t):
        if not is_atom_name(x):
            raise ValueError(f"vertex {x!r} is not a valid atom name")
    rules = []
    for v, w in g.edges:
        if w == m:
            rules.append(Rule(frozenset({v}), frozenset(), frozenset({m})))
        else:
            rules.append(Rule(frozenset({v}), frozenset({w}), frozenset()))
    rules.append(Rule(frozenset({t}), frozenset(), frozenset({s})))
    return Program(rules)


def has_path_via(g: Digraph, s: str, m: str, t: str) -> bool:
    """Brute force: is there a simple directed path s -> ... -> m -> ... -> t?"""
    adj = g.successors()

    def dfs(v, seen, passed_m):
        passed_m = passed_m or v == m
        if v == t:
            return passed_m
        return any(dfs(w, seen | {w}, passed_m) for w in adj.get(v, ()) if w not in seen)

    return s in adj and dfs(s, {s}, False)


def pad_with_bad_even_cycles(program: Program, k: int) -> Program:
    """Add k disjoint gadgets u_i <- not w_i; w_i <- not u_i with fresh atoms."""
    if k < 0:
        raise ValueError("k must be non-negative")
    used = program.atoms
    rules = list(program.rules)
    i = 0
    for _ in range(k):
        i += 1
        while f"u_{i}" in used or f"w_{i}" in used:
            i += 1
        u, w = f"u_{i}", f"w_{i}"
        rules.append(Rule(frozenset({u}), frozenset(), frozenset({w})))
        rules.append(Rule(frozenset({w}), frozenset(), frozenset({u})))
    return Program(rules)


def atom_names(n: int) -> list:
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    return [f"x{i}" for i in range(n)]


@dataclass(frozen=True)
class RandomProgramConfig:
    n_atoms: int = 5
    n_rules: int = 6
    neg_prob: float = 0.3
    disj_prob: float = 0.0
    constraint_prob: float = 0.0
    max_body: int = 3


def random_program(
    n_atoms: int,
    n_rules: int,
    neg_prob: float = 0.3,
    disj_prob: float = 0.0,
    seed: int = 0,
    constraint_prob: float = 0.0,
    max_body: int = 3,
) -> Program:
    """Deterministic for a fixed seed. Body literals are negative with ``neg_prob``."""
    rng = random.Random(seed)
    names = atom_names(n_atoms)
    rules = []
    if not names:
        return Program(())
    for _ in range(n_rules):
        if rng.random() < constraint_prob:
            head = frozenset()
        else:
            size = 1
            while size < len(names) and rng.random() < disj_prob:
                size += 1
            head = frozenset(rng.sample(names, size))
        body = rng.sample(names, rng.randint(0, min(max_body, len(names))))
        pos = frozenset(x for x in body if rng.random() >= neg_prob)
        rules.append(Rule(head, pos, frozenset(body) - pos))
    return Program(rules)


def random_from_config(cfg: RandomProgramConfig, seed: int) -> Program:
    return random_program(
        cfg.n_atoms, cfg.n_rules, cfg.neg_prob, cfg.disj_prob, seed, cfg.constraint_prob, cfg.max_body
    )


def random_digraph(n_vertices: int, edge_prob: float, seed: int, loops: bool = False) -> Digraph:
    rng = random.Random(seed)
    names = atom_names(n_vertices)
    edges = [(u, v) for u in names for v in names if (loops or u != v) and rng.random() < edge_prob]
    return Digraph.from_edges(edges, vertices=names)


def random_signed_edges(n_vertices: int, n_edges: int, neg_prob: float, seed: int, directed: bool = True) -> list:
    """Random (u, v, negative) triples; loops and parallel edges may occur."""
    rng = random.Random(seed)
    names = atom_names(n_vertices)
    if not names:
        return []
    out = []
    for _ in range(n_edges):
        u, v = rng.choice(names), rng.choice(names)
        if not directed and u > v:
            u, v = v, u
        out.append((u, v, rng.random() < neg_prob))
    return out
