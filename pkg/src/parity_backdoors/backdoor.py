"""Truth-assignment reducts, atom deletion, and backdoor verification/detection."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .classes import ClassId, MembershipVerdict, is_member
from .cycles import DEFAULT_CYCLE_CAP
from .program import Assignment, Program, Rule, all_assignments

STRONG = "strong"
DELETION = "deletion"


class UnknownMembership(RuntimeError):
    """Detection cannot continue because a membership check was inconclusive."""


def truth_assignment_reduct(program: Program, tau: Assignment) -> Program:
    """P_tau: drop rules decided by ``tau`` and strip the assigned atoms from the rest.

    A rule is dropped when a head atom is true, when its (non-empty) head lies
    inside the assigned atoms, when a positive body atom is false, or when a
    negative body atom is true. Constraints are not dropped by the head test,
    so the empty assignment leaves the program unchanged.
    """
    domain, true, false = tau.domain, tau.true_atoms, tau.false_atoms
    kept = []
    for r in program.rules:
        if not r.head.isdisjoint(true) or (r.head and r.head <= domain):
            continue
        if not r.pos.isdisjoint(false) or not r.neg.isdisjoint(true):
            continue
        kept.append(Rule(r.head - domain, r.pos - domain, r.neg - domain))
    return Program(kept)


def delete_atoms(program: Program, atoms: Iterable[str]) -> Program:
    x = frozenset(atoms)
    return Program(Rule(r.head - x, r.pos - x, r.neg - x) for r in program.rules)


@dataclass(frozen=True)
class BackdoorReport:
    mode: str
    target: ClassId
    atoms: frozenset
    ok: bool
    assignment: Optional[Assignment] = None
    verdict: Optional[MembershipVerdict] = None

    @property
    def size(self) -> int:
        return len(self.atoms)

    @property
    def unknown(self) -> bool:
        return self.verdict is not None and self.verdict.member is None

    def as_dict(self) -> dict:
        out: dict = {
            "mode": self.mode,
            "class": str(self.target),
            "atoms": sorted(self.atoms),
            "ok": self.ok,
        }
        if not self.ok:
            failure: dict = {"verdict": self.verdict.as_dict()}
            if self.assignment is not None:
                failure["assignment"] = dict(self.assignment.values)
            out["failure"] = failure
        return out


def is_strong_backdoor(
    program: Program, atoms: Iterable[str], target, cap: int = DEFAULT_CYCLE_CAP
) -> BackdoorReport:
    target = ClassId.parse(target)
    x = frozenset(atoms)
    for tau in all_assignments(x):
        verdict = is_member(truth_assignment_reduct(program, tau), target, cap)
        if not verdict.member:
            return BackdoorReport(STRONG, target, x, False, tau, verdict)
    return BackdoorReport(STRONG, target, x, True)


def is_deletion_backdoor(
    program: Program, atoms: Iterable[str], target, cap: int = DEFAULT_CYCLE_CAP
) -> BackdoorReport:
    target = ClassId.parse(target)
    x = frozenset(atoms)
    verdict = is_member(delete_atoms(program, x), target, cap)
    if verdict.member:
        return BackdoorReport(DELETION, target, x, True)
    return BackdoorReport(DELETION, target, x, False, None, verdict)


def verify_backdoor(program: Program, atoms, target, mode: str = STRONG, cap: int = DEFAULT_CYCLE_CAP):
    if mode == STRONG:
        return is_strong_backdoor(program, atoms, target, cap)
    if mode == DELETION:
        return is_deletion_backdoor(program, atoms, target, cap)
    raise ValueError(f"unknown backdoor mode {mode!r}")


def detect_backdoor(
    program: Program, target, k: int, mode: str = STRONG, cap: int = DEFAULT_CYCLE_CAP
) -> Optional[BackdoorReport]:
    """Smallest, then lexicographically least, backdoor of size at most ``k``.

    Tries all subsets of at(P) by increasing size, at most n^k of them.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    atoms = sorted(program.atoms)
    for size in range(min(k, len(atoms)) + 1):
        for subset in itertools.combinations(atoms, size):
            report = verify_backdoor(program, subset, target, mode, cap)
            if report.ok:
                return report
            if report.unknown:
                raise UnknownMembership(
                    f"membership of a reduct for {sorted(subset)} is unknown: {report.verdict.reason}"
                )
    return None
