"""Well-founded models and the backdoor solving pipeline.

Given a strong backdoor X into an enumerable class, every reduct P_tau has at
most one answer set, computed from its well-founded model. The candidates
M | tau^-1(1) contain every answer set of P, so checking each candidate
against P yields AS(P) with at most 2^|X| checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .backdoor import STRONG, detect_backdoor, is_strong_backdoor, truth_assignment_reduct
from .classes import ClassId, is_member
from .program import (
    Assignment,
    Program,
    all_assignments,
    answer_sets_bruteforce,
    gl_reduct,
    is_answer_set,
    least_model,
)


class BackdoorError(ValueError):
    """The given atoms are not a strong backdoor, or none was found."""


@dataclass(frozen=True)
class ThreeValuedModel:
    true_atoms: frozenset
    false_atoms: frozenset
    atoms: frozenset

    @property
    def undefined(self) -> frozenset:
        return self.atoms - self.true_atoms - self.false_atoms

    @property
    def total(self) -> bool:
        return not self.undefined


def _gamma(program: Program, interpretation: frozenset) -> frozenset:
    return least_model(gl_reduct(program, interpretation))


def well_founded_model(program: Program) -> ThreeValuedModel:
    """Alternating fixpoint; constraints are ignored.

    gamma(I) is the least model of the GL reduct under I. It is antitone, so
    gamma^2 is monotone: true atoms are its least fixpoint from the empty set,
    false atoms lie outside its greatest fixpoint from at(P).
    """
    if not program.is_normal:
        raise ValueError("well-founded model needs a normal program")
    rules = program.without_constraints()
    atoms = program.atoms
    low: frozenset = frozenset()
    while True:
        nxt = _gamma(rules, _gamma(rules, low))
        if nxt == low:
            break
        low = nxt
    high = atoms
    while True:
        nxt = _gamma(rules, _gamma(rules, high))
        if nxt == high:
            break
        high = nxt
    return ThreeValuedModel(low, atoms - high, atoms)


def answer_sets_enumerable(program: Program, target=None, check_membership: bool = False) -> frozenset:
    """AS(P) for P without bad even cycles: the well-founded true set, if stable."""
    if check_membership:
        verdict = is_member(program, target)
        if not verdict.member:
            raise ValueError(f"program is not in {ClassId.parse(target)}")
    candidate = well_founded_model(program).true_atoms
    return frozenset({candidate}) if is_answer_set(program, candidate) else frozenset()


def _horn_answer_sets(program: Program) -> frozenset:
    model = least_model(program)
    return frozenset() if model is None else frozenset({model})


@dataclass(frozen=True)
class CandidateSet:
    """Pairs (candidate, generating assignment); ``sets`` is the deduplicated view."""

    pairs: tuple

    @property
    def sets(self) -> frozenset:
        return frozenset(m for m, _ in self.pairs)

    def __len__(self) -> int:
        return len(self.sets)


def candidate_answer_sets(
    program: Program, backdoor: Iterable[str], target=None, verify: bool = True
) -> CandidateSet:
    """AS(P, X). With ``target=None`` each reduct is solved by brute force."""
    x = frozenset(backdoor) & program.atoms
    if target is not None:
        target = ClassId.parse(target)
        if verify:
            report = is_strong_backdoor(program, x, target)
            if not report.ok:
                raise BackdoorError(f"{sorted(x)} is not a strong {target} backdoor")
    pairs = []
    for tau in all_assignments(x):
        reduct = truth_assignment_reduct(program, tau)
        if target is None:
            found = answer_sets_bruteforce(reduct)
        elif target is ClassId.HORN:
            found = _horn_answer_sets(reduct)
        else:
            found = answer_sets_enumerable(reduct)
        pairs += [(m | tau.true_atoms, tau) for m in sorted(found, key=sorted)]
    return CandidateSet(tuple(pairs))


@dataclass(frozen=True)
class Solution:
    backdoor: frozenset
    target: ClassId
    candidates: CandidateSet
    answer_sets: frozenset


def run_pipeline(
    program: Program,
    target,
    backdoor: Optional[Iterable[str]] = None,
    auto_k: Optional[int] = None,
    verify: bool = True,
) -> Solution:
    """Find or check a backdoor, build the candidates, keep those stable for P."""
    target = ClassId.parse(target)
    if backdoor is None:
        if auto_k is None:
            raise ValueError("give a backdoor or a size bound for detection")
        report = detect_backdoor(program, target, auto_k, STRONG)
        if report is None:
            raise BackdoorError(f"no strong {target} backdoor of size at most {auto_k}")
        backdoor, verify = report.atoms, False
    x = frozenset(backdoor)
    candidates = candidate_answer_sets(program, x, target, verify)
    answer_sets = frozenset(m for m in candidates.sets if is_answer_set(program, m))
    return Solution(x, target, candidates, answer_sets)


def solve(program: Program, target, backdoor=None, auto_k: Optional[int] = None, verify: bool = True) -> frozenset:
    return run_pipeline(program, target, backdoor, auto_k, verify).answer_sets


QUERIES = ("consistency", "credulous", "skeptical", "count", "enumerate")


def sorted_answer_sets(answer_sets) -> list:
    return sorted((sorted(m) for m in answer_sets), key=lambda m: (len(m), m))


def answer_query(program: Program, answer_sets: frozenset, problem: str, atom: Optional[str] = None):
    """Evaluate one of the five reasoning problems over computed answer sets.

    Skeptical reasoning over zero answer sets is vacuously true.
    """
    if problem in ("credulous", "skeptical"):
        if atom is None or atom not in program.atoms:
            raise ValueError(f"{problem} reasoning needs an atom of the program, got {atom!r}")
    if problem == "consistency":
        return bool(answer_sets)
    if problem == "credulous":
        return any(atom in m for m in answer_sets)
    if problem == "skeptical":
        return all(atom in m for m in answer_sets)
    if problem == "count":
        return len(answer_sets)
    if problem == "enumerate":
        return sorted_answer_sets(answer_sets)
    raise ValueError(f"unknown problem {problem!r}")


def query(program: Program, target, backdoor, problem: str, atom: Optional[str] = None, auto_k=None):
    return answer_query(program, solve(program, target, backdoor, auto_k), problem, atom)
