import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import minimum_backdoor_size
from parity_backdoors.backdoor import (
    DELETION,
    STRONG,
    UnknownMembership,
    delete_atoms,
    detect_backdoor,
    is_deletion_backdoor,
    is_strong_backdoor,
    truth_assignment_reduct,
    verify_backdoor,
)
from parity_backdoors.classes import PARITY_CLASSES, ClassId
from parity_backdoors.generators import random_program
from parity_backdoors.program import Assignment, Program, all_assignments, parse_program, rule


def test_reducts_of_example(running_example):
    p10 = truth_assignment_reduct(running_example, Assignment({"b": 1, "c": 0}))
    assert p10 == parse_program("d :- a. a :- d. d.")
    p0 = truth_assignment_reduct(running_example, Assignment({"c": 0}))
    assert p0 == parse_program("b :- a. d :- a. b. a :- d. a :- d, not b. d.")
    assert truth_assignment_reduct(running_example, Assignment({})) == running_example


def test_reducts_drop_rules_with_heads_inside_x(running_example):
    """b :- a disappears once b is assigned, rather than turning into :- a."""
    p00 = truth_assignment_reduct(running_example, Assignment({"b": 0, "c": 0}))
    assert p00 == parse_program("d :- a. a :- d. d.")


def test_reduct_keeps_constraints():
    p = parse_program(":- a, not b. c.")
    assert truth_assignment_reduct(p, Assignment({"b": 0})) == parse_program(":- a. c.")
    assert truth_assignment_reduct(p, Assignment({"b": 1})) == parse_program("c.")


def test_delete_atoms(running_example):
    expected = parse_program(":- . d. :- not c. :- d, not c. c :- d.")
    assert delete_atoms(running_example, {"a", "b"}) == expected
    assert delete_atoms(running_example, set()) == running_example
    assert delete_atoms(parse_program("a :- b."), {"a", "b"}) == Program([rule()])


def test_strong_examples(running_example):
    assert is_strong_backdoor(running_example, {"b", "c"}, ClassId.HORN).ok
    assert is_strong_backdoor(running_example, {"c"}, ClassId.NO_DBEC).ok
    report = is_strong_backdoor(running_example, set(), ClassId.NO_DBEC)
    assert not report.ok and report.assignment == Assignment({})
    data = report.as_dict()
    assert data["failure"]["verdict"]["member"] is False


def test_deletion_examples(running_example):
    assert is_deletion_backdoor(running_example, {"a", "b"}, ClassId.NO_DBEC).ok
    report = is_deletion_backdoor(running_example, {"d"}, ClassId.NO_DBEC)
    assert not report.ok and report.verdict.witness is not None
    member = parse_program("a :- b.")
    assert is_deletion_backdoor(member, set(), ClassId.NO_DBEC).ok


def test_deletion_of_c_is_a_size_one_backdoor(running_example):
    """P - {c} coincides with the reduct P_{c=0}, which is in no-DBEC."""
    assert delete_atoms(running_example, {"c"}) == truth_assignment_reduct(running_example, Assignment({"c": 0}))
    assert is_deletion_backdoor(running_example, {"c"}, ClassId.NO_DBEC).ok
    found = detect_backdoor(running_example, ClassId.NO_DBEC, 1, DELETION)
    assert found is not None and found.atoms == {"c"}


def test_detection_examples(running_example):
    found = detect_backdoor(running_example, ClassId.NO_DBEC, 1, STRONG)
    assert found.atoms == {"c"}
    assert detect_backdoor(running_example, ClassId.HORN, 1, STRONG) is None
    # {a,b} also works and precedes {b,c} lexicographically
    assert detect_backdoor(running_example, ClassId.HORN, 2, STRONG).atoms == {"a", "b"}
    assert detect_backdoor(running_example, ClassId.NO_DBEC, 0, DELETION) is None
    with pytest.raises(ValueError):
        detect_backdoor(running_example, ClassId.HORN, -1)


def test_verify_rejects_unknown_mode(running_example):
    with pytest.raises(ValueError):
        verify_backdoor(running_example, {"c"}, ClassId.HORN, "partial")


def test_detection_aborts_on_unknown():
    p = parse_program("a :- b. b :- a. c :- not c.")
    with pytest.raises(UnknownMembership):
        detect_backdoor(p, ClassId.NO_DEC, 1, STRONG, cap=0)


def _random(seed, n=6, disj=0.15):
    rng = random.Random(seed)
    p = random_program(rng.randint(1, n), rng.randint(0, 7), rng.choice([0.3, 0.6]), disj, seed, 0.1)
    x = frozenset(a for a in sorted(p.atoms) if rng.random() < 0.4)
    return p, x


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**31), st.sampled_from(PARITY_CLASSES))
def test_deletion_implies_strong(seed, target):
    p, x = _random(seed)
    if is_deletion_backdoor(p, x, target).ok:
        assert is_strong_backdoor(p, x, target).ok
    deleted = set(delete_atoms(p, x).rules)
    for tau in all_assignments(x):
        reduct = truth_assignment_reduct(p, tau)
        assert set(reduct.rules) <= deleted
        assert not reduct.atoms & x


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**31), st.sampled_from(list(ClassId)))
def test_all_atoms_form_a_strong_backdoor(seed, target):
    p, _ = _random(seed)
    assert is_strong_backdoor(p, p.atoms, target).ok


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**31), st.sampled_from(list(ClassId)), st.sampled_from([STRONG, DELETION]))
def test_detection_is_minimum(seed, target, mode):
    p, _ = _random(seed, 5, 0.1)
    expected = minimum_backdoor_size(p, target, mode, verify_backdoor)
    found = detect_backdoor(p, target, len(p.atoms), mode)
    if expected is None:
        assert found is None
    else:
        assert found is not None and found.size == expected
        assert verify_backdoor(p, found.atoms, target, mode).ok
