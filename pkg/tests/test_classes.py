import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import directed_cycles, expanded_cycle_negatives
from parity_backdoors.backdoor import delete_atoms
from parity_backdoors.classes import (
    PROPER_SUBSETS,
    ClassId,
    classify,
    is_member,
    lattice_subset,
    member_classes,
)
from parity_backdoors.cycles import CycleWitness
from parity_backdoors.dependency import build_directed, build_undirected
from parity_backdoors.generators import random_program
from parity_backdoors.program import Rule, parse_program

ALL = frozenset(ClassId)


def test_parse_class_names():
    assert ClassId.parse("no-dbec") is ClassId.NO_DBEC
    assert ClassId.parse("NO_BEC") is ClassId.NO_BEC
    assert str(ClassId.HORN) == "horn"
    with pytest.raises(ValueError):
        ClassId.parse("no-xyz")


def test_membership_examples(running_example):
    assert is_member(parse_program("d :- a. a :- d. d."), ClassId.HORN).member
    verdict = is_member(running_example, ClassId.NO_DBEC)
    assert verdict.member is False and isinstance(verdict.witness, Rule)
    assert is_member(delete_atoms(running_example, {"a", "b"}), ClassId.NO_DBEC).member


def test_normal_part_of_example_has_cycle_witness(running_example):
    normal = parse_program("b :- a. d :- a. b :- not c. a :- d, not c. a :- d, not b. c :- d, not b. d.")
    verdict = is_member(normal, ClassId.NO_DBEC)
    assert not verdict.member
    w = verdict.witness
    assert isinstance(w, CycleWitness) and w.bad and w.even and w.validate(build_directed(normal))
    u_verdict = is_member(normal, ClassId.NO_BEC)
    assert u_verdict.witness.validate(build_undirected(normal))


def test_classify_examples():
    assert member_classes(parse_program("d.")) == ALL
    assert member_classes(parse_program("a :- not b. b :- not a.")) == frozenset()
    assert member_classes(parse_program("a :- b.")) == ALL


def test_constraints_keep_membership():
    p = parse_program(":- . d. :- not c. :- d, not c. c :- d.")
    assert member_classes(p) == ALL - {ClassId.HORN}


def test_lattice_examples():
    assert lattice_subset(ClassId.NO_DC, ClassId.NO_DBEC)
    assert not lattice_subset(ClassId.NO_DEC, ClassId.NO_EC)
    assert not lattice_subset(ClassId.NO_EC, ClassId.NO_DEC)
    for c in ClassId:
        assert lattice_subset(c, c)
    for small, large in PROPER_SUBSETS:
        assert not lattice_subset(large, small)


def test_verdict_serializes():
    v = is_member(parse_program("a :- not b. b :- not a."), ClassId.NO_DBEC)
    data = v.as_dict()
    assert data["member"] is False and data["witness"]["cycle"]["negative_count"] == 2


def test_unknown_when_cap_is_hit():
    v = is_member(parse_program("a :- b. b :- a."), ClassId.NO_DEC, cap=0)
    assert v.member is None and not v


def _random(seed, n=7, disj=0.05):
    rng = random.Random(seed)
    return random_program(rng.randint(1, n), rng.randint(0, 8), rng.choice([0.2, 0.5]), disj, seed, 0.1)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**31))
def test_lattice_soundness(seed):
    p = _random(seed)
    members = member_classes(p)
    for a in ClassId:
        for b in ClassId:
            if lattice_subset(a, b) and a in members:
                assert b in members


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**31))
def test_recognizers_match_enumeration(seed):
    p = _random(seed, 8, 0.0)
    d = build_directed(p)
    dcycles = [sum(d.edges[i].negative for i in c) for c in directed_cycles(d.vertices, d.edges)]
    ucycles = expanded_cycle_negatives(build_undirected(p))
    expected = {
        ClassId.NO_DC: not dcycles,
        ClassId.NO_DBC: not any(c >= 1 for c in dcycles),
        ClassId.NO_DEC: not any(c % 2 == 0 for c in dcycles),
        ClassId.NO_DBEC: not any(c >= 1 and c % 2 == 0 for c in dcycles),
        ClassId.NO_C: not ucycles,
        ClassId.NO_BC: not any(c >= 1 for c in ucycles),
        ClassId.NO_EC: not any(c % 2 == 0 for c in ucycles),
        ClassId.NO_BEC: not any(c >= 1 and c % 2 == 0 for c in ucycles),
        ClassId.HORN: all(not r.neg for r in p),
    }
    verdicts = classify(p)
    for c, want in expected.items():
        assert bool(verdicts[c].member) == want, c
        w = verdicts[c].witness
        if isinstance(w, CycleWitness):
            graph = build_directed(p) if w.kind == "directed" else build_undirected(p)
            assert w.validate(graph)
