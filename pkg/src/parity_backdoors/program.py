"""Disjunctive logic programs: syntax, parsing, models, GL reduct, answer sets.

A program is a set of rules ``x1 | ... | xl :- y1, ..., yn, not z1, ..., not zm.``
over propositional atoms. Values are immutable; every function here is pure.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional

ATOM_RE = re.compile(r"[a-z][A-Za-z0-9_]*\Z")
_KEYWORDS = frozenset({"not"})

DEFAULT_BRUTEFORCE_BOUND = 20


def is_atom_name(name: str) -> bool:
    return bool(ATOM_RE.match(name)) and name not in _KEYWORDS


class ProgramSyntaxError(ValueError):
    """Raised by :func:`parse_program` with a 1-based line/column position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Rule:
    head: frozenset = frozenset()
    pos: frozenset = frozenset()
    neg: frozenset = frozenset()

    def __post_init__(self) -> None:
        for part in ("head", "pos", "neg"):
            value = getattr(self, part)
            if not isinstance(value, frozenset):
                object.__setattr__(self, part, frozenset(value))
            for atom in getattr(self, part):
                if not is_atom_name(atom):
                    raise ValueError(f"invalid atom name {atom!r}")

    @property
    def body(self) -> frozenset:
        return self.pos | self.neg

    @property
    def atoms(self) -> frozenset:
        return self.head | self.pos | self.neg

    @property
    def is_normal(self) -> bool:
        # constraints count as normal
        return len(self.head) <= 1

    @property
    def is_horn(self) -> bool:
        return self.is_normal and not self.neg

    @property
    def is_constraint(self) -> bool:
        return not self.head

    def sort_key(self) -> tuple:
        return (sorted(self.head), sorted(self.pos), sorted(self.neg))

    def __lt__(self, other: "Rule") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        head = " | ".join(sorted(self.head))
        body = [*sorted(self.pos), *(f"not {z}" for z in sorted(self.neg))]
        if not body:
            return f"{head}." if head else ":- ."
        lhs = f"{head} " if head else ""
        return f"{lhs}:- {', '.join(body)}."


def rule(head: Iterable[str] = (), pos: Iterable[str] = (), neg: Iterable[str] = ()) -> Rule:
    return Rule(frozenset(head), frozenset(pos), frozenset(neg))


@dataclass(frozen=True, init=False)
class Program:
    """A normalized program: duplicate rules collapse, order is canonical."""

    rules: tuple

    def __init__(self, rules: Iterable[Rule] = ()):
        object.__setattr__(self, "rules", tuple(sorted(set(rules), key=Rule.sort_key)))

    @property
    def atoms(self) -> frozenset:
        return frozenset().union(*(r.atoms for r in self.rules))

    @property
    def heads(self) -> frozenset:
        return frozenset().union(*(r.head for r in self.rules))

    @property
    def is_normal(self) -> bool:
        return all(r.is_normal for r in self.rules)

    @property
    def is_horn(self) -> bool:
        return all(r.is_horn for r in self.rules)

    @property
    def constraints(self) -> tuple:
        return tuple(r for r in self.rules if r.is_constraint)

    def without_constraints(self) -> "Program":
        return Program(r for r in self.rules if not r.is_constraint)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __contains__(self, r: object) -> bool:
        return r in self.rules

    def __str__(self) -> str:
        return "".join(f"{r}\n" for r in self.rules)


def format_program(program: Program) -> str:
    return str(program)


@dataclass(frozen=True)
class Assignment:
    """A total truth assignment over the atoms in ``values``."""

    values: Mapping[str, int]

    def __post_init__(self) -> None:
        frozen = tuple(sorted(self.values.items()))
        for atom, v in frozen:
            if v not in (0, 1):
                raise ValueError(f"assignment value for {atom!r} must be 0 or 1")
        object.__setattr__(self, "values", dict(frozen))

    def __hash__(self) -> int:
        return hash(tuple(self.values.items()))

    @property
    def domain(self) -> frozenset:
        return frozenset(self.values)

    @property
    def true_atoms(self) -> frozenset:
        return frozenset(a for a, v in self.values.items() if v == 1)

    @property
    def false_atoms(self) -> frozenset:
        return frozenset(a for a, v in self.values.items() if v == 0)

    def __call__(self, atom: str, negated: bool = False) -> int:
        v = self.values[atom]
        return 1 - v if negated else v

    def __str__(self) -> str:
        return ",".join(f"{a}={v}" for a, v in self.values.items()) or "{}"


def all_assignments(atoms: Iterable[str]) -> Iterator[Assignment]:
    """Every assignment over ``atoms`` in binary counting order.

    The lexicographically smallest atom is the most significant bit, so for
    ``{b, c}`` the order is 00, 01, 10, 11 as (b, c).
    """
    ordered = sorted(set(atoms))
    for bits in itertools.product((0, 1), repeat=len(ordered)):
        yield Assignment(dict(zip(ordered, bits)))


# -- parsing -----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>%[^\n]*)"
    r"|(?P<if>:-)|(?P<dot>\.)|(?P<bar>\|)|(?P<comma>,)"
    r"|(?P<ident>[A-Za-z0-9_]+)"
)


def _tokenize(text: str) -> Iterator[tuple[str, str, int, int]]:
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        column = pos - line_start + 1
        if m is None:
            raise ProgramSyntaxError(f"unexpected character {text[pos]!r}", line, column)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            yield kind, m.group(), line, column
        pos = m.end()
    yield "eof", "", line, pos - line_start + 1


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(_tokenize(text))
        self.i = 0

    def peek(self) -> tuple[str, str, int, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok: Optional[tuple] = None) -> ProgramSyntaxError:
        _, _, line, col = tok or self.peek()
        return ProgramSyntaxError(message, line, col)

    def atom(self) -> str:
        tok = self.take()
        kind, value = tok[0], tok[1]
        if kind != "ident":
            raise self.fail(f"expected atom, found {value or 'end of input'!r}", tok)
        if not is_atom_name(value):
            raise self.fail(f"invalid atom name {value!r}", tok)
        return value

    def program(self) -> list[Rule]:
        rules = []
        while self.peek()[0] != "eof":
            rules.append(self.statement())
        return rules

    def statement(self) -> Rule:
        head: set[str] = set()
        pos: set[str] = set()
        neg: set[str] = set()
        start = self.peek()
        if start[0] == "ident":
            head.add(self.atom())
            while self.peek()[0] == "bar":
                self.take()
                head.add(self.atom())
        if self.peek()[0] == "if":
            self.take()
            if self.peek()[0] != "dot":
                self.literal(pos, neg)
                while self.peek()[0] == "comma":
                    self.take()
                    self.literal(pos, neg)
        elif not head:
            raise self.fail("expected atom or ':-'", start)
        tok = self.peek()
        if tok[0] != "dot":
            shown = tok[1] or "end of input"
            raise self.fail(f"expected '.', found {shown!r}", tok)
        self.take()
        return Rule(frozenset(head), frozenset(pos), frozenset(neg))

    def literal(self, pos: set, neg: set) -> None:
        kind, value, _, _ = self.peek()
        if kind == "ident" and value == "not" and self.tokens[self.i + 1][0] == "ident":
            self.take()
            neg.add(self.atom())
        else:
            pos.add(self.atom())


def parse_program(text: str) -> Program:
    """Parse program text; raises :class:`ProgramSyntaxError` on malformed input."""
    return Program(_Parser(text).program())


# -- semantics -----------------------------------------------------------------


def satisfies(model: Iterable[str], r: Rule) -> bool:
    m = model if isinstance(model, (set, frozenset)) else frozenset(model)
    return not (r.head | r.neg).isdisjoint(m) or not r.pos <= m


def is_model(model: Iterable[str], program: Program) -> bool:
    m = frozenset(model)
    return all(satisfies(m, r) for r in program.rules)


def gl_reduct(program: Program, model: Iterable[str]) -> Program:
    m = frozenset(model)
    return Program(Rule(r.head, r.pos) for r in program.rules if r.neg.isdisjoint(m))


def least_model(program: Program) -> Optional[frozenset]:
    """Least model of a negation-free normal program.

    Constraints do not contribute to the fixpoint; if the least model of the
    remaining rules violates a constraint the result is ``None`` (UNSAT).
    """
    for r in program.rules:
        if r.neg or len(r.head) > 1:
            raise ValueError(f"least_model needs negation-free normal rules, got {r}")
    # counter-based forward chaining, linear in program size
    waiting: dict[str, list[int]] = {}
    missing = []
    heads = []
    queue = []
    for i, r in enumerate(program.rules):
        missing.append(len(r.pos))
        heads.append(next(iter(r.head), None))
        for y in r.pos:
            waiting.setdefault(y, []).append(i)
        if not r.pos:
            queue.append(i)
    derived: set[str] = set()
    constraint_fired = False
    while queue:
        i = queue.pop()
        h = heads[i]
        if h is None:
            constraint_fired = True
            continue
        if h in derived:
            continue
        derived.add(h)
        for j in waiting.get(h, ()):
            missing[j] -= 1
            if missing[j] == 0:
                queue.append(j)
    if constraint_fired:
        return None
    return frozenset(derived)


def _has_smaller_model(reduct: Program, model: frozenset) -> bool:
    """True iff some proper subset of ``model`` is a model of the positive ``reduct``."""
    order = sorted(model)
    index = {a: i for i, a in enumerate(order)}
    clauses = []
    for r in reduct.rules:
        if not r.pos <= model:
            continue  # satisfied by every subset of model
        clauses.append(
            (
                sum(1 << index[a] for a in r.head if a in index),
                sum(1 << index[a] for a in r.pos),
            )
        )
    full = (1 << len(order)) - 1
    for mask in range(full):
        if all(mask & head or (body & ~mask) for head, body in clauses):
            return True
    return False


def is_answer_set(program: Program, model: Iterable[str]) -> bool:
    m = frozenset(model)
    reduct = gl_reduct(program, m)
    if not is_model(m, reduct):
        return False
    if reduct.is_normal:
        return least_model(reduct) == m
    return not _has_smaller_model(reduct, m)


def answer_sets_bruteforce(program: Program, bound: int = DEFAULT_BRUTEFORCE_BOUND) -> frozenset:
    """All answer sets by checking every subset of the atoms. Exponential."""
    if len(program.atoms) > bound:
        raise ValueError(f"{len(program.atoms)} atoms exceed the brute-force bound of {bound}")
    # a minimal model of the reduct only contains head atoms
    candidates = sorted(program.heads)
    found = set()
    for size in range(len(candidates) + 1):
        for subset in itertools.combinations(candidates, size):
            if is_answer_set(program, subset):
                found.add(frozenset(subset))
    return frozenset(found)
