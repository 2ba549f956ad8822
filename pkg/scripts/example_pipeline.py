"""Walk the running example through reducts, candidates and answer sets."""

from parity_backdoors import (
    ClassId,
    all_assignments,
    candidate_answer_sets,
    is_member,
    parse_program,
    solve,
    truth_assignment_reduct,
)
from parity_backdoors.program import format_program

EXAMPLE = "b :- a. d :- a. b :- not c. a :- d, not c. a | c :- d, not b. d."


def show(program, backdoor, target):
    print(f"== backdoor {sorted(backdoor)} into {target}")
    for tau in all_assignments(backdoor):
        reduct = truth_assignment_reduct(program, tau)
        ok = bool(is_member(reduct, target).member)
        print(f"-- {tau} (member: {ok})")
        print(format_program(reduct), end="")
    cands = candidate_answer_sets(program, backdoor, target)
    print("candidates:", sorted(sorted(c) for c in cands.sets))
    print("answer sets:", sorted(sorted(a) for a in solve(program, target, backdoor)))


def main():
    program = parse_program(EXAMPLE)
    show(program, {"b", "c"}, ClassId.HORN)
    show(program, {"c"}, ClassId.NO_DBEC)


if __name__ == "__main__":
    main()
