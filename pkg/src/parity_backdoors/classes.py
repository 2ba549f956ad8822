"""Membership in the nine target classes and their inclusion order."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .cycles import (
    DEFAULT_CYCLE_CAP,
    CycleLimitExceeded,
    CycleWitness,
    find_directed_cycle_through,
    find_undirected_cycle,
    has_bad_even_cycle_undirected,
    has_directed_cycle,
    has_even_cycle_undirected,
    has_negative_edge_in_scc,
    signed_cycle_witness,
)
from .dependency import build_directed, build_undirected, unlabel
from .program import Program, Rule


class ClassId(enum.Enum):
    HORN = "horn"
    NO_C = "no-c"
    NO_DC = "no-dc"
    NO_BC = "no-bc"
    NO_DBC = "no-dbc"
    NO_EC = "no-ec"
    NO_DEC = "no-dec"
    NO_BEC = "no-bec"
    NO_DBEC = "no-dbec"

    @classmethod
    def parse(cls, name: Union[str, "ClassId"]) -> "ClassId":
        if isinstance(name, ClassId):
            return name
        key = name.strip().lower().replace("_", "-")
        for c in cls:
            if c.value == key:
                return c
        raise ValueError(f"unknown target class {name!r}")

    def __str__(self) -> str:
        return self.value


PARITY_CLASSES = (ClassId.NO_DBEC, ClassId.NO_BEC, ClassId.NO_DEC, ClassId.NO_EC)
EXHAUSTIVE_CLASSES = (ClassId.NO_DEC, ClassId.NO_DBEC)

# (smaller, larger): smaller is a proper subset of larger
PROPER_SUBSETS = (
    (ClassId.NO_DBC, ClassId.NO_DBEC),
    (ClassId.NO_DEC, ClassId.NO_DBEC),
    (ClassId.NO_EC, ClassId.NO_BEC),
    (ClassId.NO_C, ClassId.NO_EC),
    (ClassId.NO_DC, ClassId.NO_DEC),
    (ClassId.NO_C, ClassId.NO_BC),
    (ClassId.NO_BC, ClassId.NO_DBC),
    (ClassId.NO_DC, ClassId.NO_DBC),
    (ClassId.NO_BC, ClassId.NO_BEC),
    (ClassId.NO_BEC, ClassId.NO_DBEC),
    # Horn programs have no negative edges, hence no bad cycles at all
    (ClassId.HORN, ClassId.NO_BC),
)


@lru_cache(maxsize=None)
def lattice_subset(smaller: ClassId, larger: ClassId) -> bool:
    """Reflexive-transitive closure of :data:`PROPER_SUBSETS`."""
    if smaller == larger:
        return True
    return any(lattice_subset(mid, larger) for low, mid in PROPER_SUBSETS if low == smaller)


@dataclass(frozen=True)
class MembershipVerdict:
    """``member`` is None when an exhaustive check hit its cycle cap."""

    target: ClassId
    member: Optional[bool]
    witness: Union[CycleWitness, Rule, None] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.member is True

    def as_dict(self) -> dict:
        out: dict = {"class": str(self.target), "member": self.member}
        if isinstance(self.witness, CycleWitness):
            out["witness"] = {"cycle": self.witness.as_dict()}
        elif isinstance(self.witness, Rule):
            out["witness"] = {"rule": str(self.witness)}
        if self.reason:
            out["reason"] = self.reason
        return out


def is_member(program: Program, target, cap: int = DEFAULT_CYCLE_CAP) -> MembershipVerdict:
    target = ClassId.parse(target)
    for r in program.rules:
        if not r.is_normal:
            return MembershipVerdict(target, False, r, "rule is not normal")
        if target is ClassId.HORN and r.neg:
            return MembershipVerdict(target, False, r, "rule has negative body")
    if target is ClassId.HORN:
        return MembershipVerdict(target, True)
    try:
        witness = _forbidden_cycle(program, target, cap)
    except CycleLimitExceeded as exc:
        return MembershipVerdict(target, None, None, str(exc))
    if witness is None:
        return MembershipVerdict(target, True)
    return MembershipVerdict(target, False, witness, "forbidden cycle")


def _forbidden_cycle(program: Program, target: ClassId, cap: int) -> Optional[CycleWitness]:
    if target in (ClassId.NO_DC, ClassId.NO_DEC, ClassId.NO_DBEC, ClassId.NO_DBC):
        graph = build_directed(program)
        if target is ClassId.NO_DBC:
            edge = has_negative_edge_in_scc(graph)
            return None if edge is None else find_directed_cycle_through(graph, *edge, True)
        return has_directed_cycle(
            graph,
            require_bad=target is ClassId.NO_DBEC,
            require_even=target is not ClassId.NO_DC,
            cap=cap,
        )
    graph = build_undirected(program)
    if target is ClassId.NO_C:
        return find_undirected_cycle(graph)
    if target is ClassId.NO_BC:
        return find_undirected_cycle(graph, through_negative=True)
    if target is ClassId.NO_EC:
        unlabeled = unlabel(graph.signed)
        cycle = has_even_cycle_undirected(unlabeled)
        return None if cycle is None else signed_cycle_witness(graph, cycle, unlabeled)
    return has_bad_even_cycle_undirected(graph)


def classify(program: Program, cap: int = DEFAULT_CYCLE_CAP) -> dict:
    """Verdict for every class, keyed by :class:`ClassId`."""
    return {c: is_member(program, c, cap) for c in ClassId}


def member_classes(program: Program, cap: int = DEFAULT_CYCLE_CAP) -> frozenset:
    return frozenset(c for c, v in classify(program, cap).items() if v.member)
