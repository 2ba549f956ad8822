"""Backdoor evaluation of disjunctive logic programs with parity-cycle target classes."""

from .backdoor import (
    DELETION,
    STRONG,
    BackdoorReport,
    UnknownMembership,
    delete_atoms,
    detect_backdoor,
    is_deletion_backdoor,
    is_strong_backdoor,
    truth_assignment_reduct,
    verify_backdoor,
)
from .classes import ClassId, MembershipVerdict, classify, is_member, lattice_subset, member_classes
from .cycles import (
    CycleLimitExceeded,
    CycleWitness,
    blocks,
    enumerate_directed_cycles,
    has_bad_even_cycle_undirected,
    has_directed_cycle,
    has_even_cycle_undirected,
    odd_path_exists,
)
from .dependency import build_directed, build_undirected, export_dot, export_json, unlabel
from .evaluator import (
    BackdoorError,
    CandidateSet,
    ThreeValuedModel,
    answer_sets_enumerable,
    candidate_answer_sets,
    query,
    run_pipeline,
    solve,
    well_founded_model,
)
from .program import (
    Assignment,
    Program,
    ProgramSyntaxError,
    Rule,
    all_assignments,
    answer_sets_bruteforce,
    gl_reduct,
    is_answer_set,
    is_model,
    least_model,
    parse_program,
    satisfies,
)

__version__ = "0.1.0"
