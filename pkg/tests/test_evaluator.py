import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import three_valued_wfm
from parity_backdoors.backdoor import is_strong_backdoor
from parity_backdoors.classes import PARITY_CLASSES, ClassId, is_member
from parity_backdoors.evaluator import (
    BackdoorError,
    answer_query,
    answer_sets_enumerable,
    candidate_answer_sets,
    query,
    run_pipeline,
    solve,
    well_founded_model,
)
from parity_backdoors.generators import random_program
from parity_backdoors.program import answer_sets_bruteforce, gl_reduct, least_model, parse_program

P0 = "b :- a. d :- a. b. a :- d. a :- d, not b. d."
P1 = "b :- a. d :- a. d."


def S(*sets):
    return frozenset(frozenset(s) for s in sets)


def test_wfm_examples():
    m = well_founded_model(parse_program(P0))
    assert m.true_atoms == {"a", "b", "d"} and m.false_atoms == frozenset() and m.total
    m = well_founded_model(parse_program("a :- not a."))
    assert m.true_atoms == m.false_atoms == frozenset() and m.undefined == {"a"}
    assert well_founded_model(parse_program("d. a :- d.")).true_atoms == {"a", "d"}
    with pytest.raises(ValueError):
        well_founded_model(parse_program("a | b."))


def test_wfm_ignores_constraints():
    m = well_founded_model(parse_program("a :- not b. :- a."))
    assert m.true_atoms == {"a"} and m.false_atoms == {"b"}


def test_enumerable_examples():
    assert answer_sets_enumerable(parse_program(P0)) == S("abd")
    assert answer_sets_enumerable(parse_program(P1)) == S("d")
    assert answer_sets_enumerable(parse_program("a :- not a.")) == frozenset()
    with pytest.raises(ValueError):
        answer_sets_enumerable(parse_program("a :- not b. b :- not a."), ClassId.NO_DBEC, check_membership=True)


def test_candidates_of_example(running_example):
    horn = candidate_answer_sets(running_example, {"b", "c"}, ClassId.HORN)
    assert horn.sets == S("ad", "cd", "abd", "bcd")
    parity = candidate_answer_sets(running_example, {"c"}, ClassId.NO_DBEC)
    assert parity.sets == S("abd", "cd")
    member = parse_program("a :- not b. c.")
    assert candidate_answer_sets(member, set(), ClassId.NO_DBEC).sets == answer_sets_bruteforce(member)


def test_candidates_reject_non_backdoor(running_example):
    with pytest.raises(BackdoorError):
        candidate_answer_sets(running_example, {"b"}, ClassId.HORN)


def test_candidate_deduplication():
    p = parse_program("a :- not b. b :- not a.")
    cands = candidate_answer_sets(p, {"a", "b"}, ClassId.HORN)
    assert len(cands.pairs) == 4 and cands.sets == S("a", "b", "ab", "")


def test_solve_examples(running_example):
    assert solve(running_example, ClassId.HORN, {"b", "c"}) == S("abd", "cd")
    assert solve(running_example, ClassId.NO_DBEC, {"c"}) == S("abd", "cd")
    for c in ClassId:
        assert solve(parse_program("d."), c, set()) == S("d")


def test_solve_auto(running_example):
    sol = run_pipeline(running_example, ClassId.NO_DBEC, auto_k=1)
    assert sol.backdoor == {"c"} and sol.answer_sets == S("abd", "cd")
    with pytest.raises(BackdoorError):
        run_pipeline(running_example, ClassId.HORN, auto_k=1)
    with pytest.raises(ValueError):
        run_pipeline(running_example, ClassId.HORN)


def test_queries(running_example):
    assert query(running_example, ClassId.HORN, {"b", "c"}, "credulous", "a") is True
    assert query(running_example, ClassId.HORN, {"b", "c"}, "skeptical", "a") is False
    assert query(running_example, ClassId.HORN, {"b", "c"}, "skeptical", "d") is True
    assert query(running_example, ClassId.HORN, {"b", "c"}, "count") == 2
    assert query(running_example, ClassId.HORN, {"b", "c"}, "enumerate") == [["c", "d"], ["a", "b", "d"]]
    selfneg = parse_program("a :- not a.")
    for c in PARITY_CLASSES:
        assert query(selfneg, c, {"a"}, "consistency") is False
    assert answer_query(selfneg, frozenset(), "skeptical", "a") is True
    with pytest.raises(ValueError):
        query(running_example, ClassId.HORN, {"b", "c"}, "credulous", "zz")
    with pytest.raises(ValueError):
        answer_query(running_example, frozenset(), "maximize")


def _random(seed, n=6, disj=0.0):
    rng = random.Random(seed)
    return random_program(rng.randint(1, n), rng.randint(0, 8), rng.choice([0.3, 0.5, 0.7]), disj, seed, 0.1)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**31))
def test_wfm_matches_unfounded_set_oracle(seed):
    p = _random(seed, 8)
    m = well_founded_model(p)
    assert (m.true_atoms, m.false_atoms) == three_valued_wfm(p)
    assert not m.true_atoms & m.false_atoms
    rules = p.without_constraints()

    def gamma(i):
        return least_model(gl_reduct(rules, i))

    assert gamma(gamma(m.true_atoms)) == m.true_atoms


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**31))
def test_answer_sets_contain_wfm_true_and_avoid_false(seed):
    p = _random(seed)
    m = well_founded_model(p)
    for a in answer_sets_bruteforce(p):
        assert m.true_atoms <= a and not (a & m.false_atoms)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**31))
def test_answer_sets_are_candidates(seed):
    p = _random(seed, 6, 0.3)
    rng = random.Random(seed + 1)
    x = {a for a in p.atoms if rng.random() < 0.5}
    assert answer_sets_bruteforce(p) <= candidate_answer_sets(p, x).sets


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**31), st.sampled_from([ClassId.HORN, *PARITY_CLASSES]))
def test_solve_matches_bruteforce(seed, target):
    p = _random(seed, 6, 0.2)
    rng = random.Random(seed + 2)
    x = {a for a in p.atoms if rng.random() < 0.5}
    if not is_strong_backdoor(p, x, target).ok:
        return
    sol = run_pipeline(p, target, x)
    assert sol.answer_sets == answer_sets_bruteforce(p)
    assert len(sol.candidates) <= 2 ** len(x & p.atoms)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**31), st.sampled_from(PARITY_CLASSES))
def test_parity_members_have_at_most_one_answer_set(seed, target):
    p = _random(seed)
    if not is_member(p, target).member:
        return
    brute = answer_sets_bruteforce(p)
    assert len(brute) <= 1
    assert answer_sets_enumerable(p, target, check_membership=True) == brute
