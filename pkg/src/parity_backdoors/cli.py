"""Command-line frontend.

Exit codes: 0 success, 1 semantic negative (no backdoor, failed verification,
no answer set), 2 usage or parse error. JSON payloads go to stdout with
sorted keys; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, TextIO

from .backdoor import DELETION, STRONG, UnknownMembership, detect_backdoor, verify_backdoor
from .classes import ClassId, classify
from .cycles import DEFAULT_CYCLE_CAP
from .dependency import build_directed, build_undirected, export_dot, export_json, undirected_view, unlabel
from .evaluator import QUERIES, BackdoorError, answer_query, run_pipeline, sorted_answer_sets
from .generators import (
    DIRECTED,
    UNDIRECTED,
    HittingSetInstance,
    gen_hitting_set_program,
    gen_path_gadget,
    pad_with_bad_even_cycles,
    parse_digraph,
    random_program,
)
from .program import ProgramSyntaxError, format_program, parse_program

CLASS_NAMES = [c.value for c in ClassId]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _atom_list(text: str) -> list:
    return [a.strip() for a in text.split(",") if a.strip()]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="parity-backdoors", description="Backdoor analysis of disjunctive logic programs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="parse and validate a program")
    c.add_argument("file")

    c = sub.add_parser("classify", help="membership in every target class")
    c.add_argument("file")
    c.add_argument("--cap", type=int, default=DEFAULT_CYCLE_CAP)

    c = sub.add_parser("graph", help="export a dependency graph")
    c.add_argument("file")
    c.add_argument("--view", choices=["d", "u", "unlabeled"], default="d")
    c.add_argument("--format", choices=["dot", "json"], default="dot")

    c = sub.add_parser("backdoor", help="verify or detect a backdoor")
    c.add_argument("file")
    c.add_argument("--class", dest="target", required=True, choices=CLASS_NAMES)
    c.add_argument("--mode", choices=[STRONG, DELETION], default=STRONG)
    c.add_argument("--cap", type=int, default=DEFAULT_CYCLE_CAP)
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--verify", metavar="X", help="comma-separated atoms")
    g.add_argument("--detect", metavar="K", type=int)

    c = sub.add_parser("solve", help="answer sets through a strong backdoor")
    c.add_argument("file")
    c.add_argument("--class", dest="target", required=True, choices=CLASS_NAMES)
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--backdoor", metavar="X", help="comma-separated atoms (may be empty)")
    g.add_argument("--auto", metavar="K", type=int)
    c.add_argument("--query", help="consistency | credulous:ATOM | skeptical:ATOM | count | enumerate")

    c = sub.add_parser("gen", help="generate programs")
    gen = c.add_subparsers(dest="generator", required=True, parser_class=_Parser)
    h = gen.add_parser("hitting-set", help="hitting-set gadget program")
    h.add_argument("instance", help="JSON file with 'family' and 'k'")
    h.add_argument("--variant", choices=[DIRECTED, UNDIRECTED], default=DIRECTED)
    h = gen.add_parser("path-gadget", help="s-m-t path gadget program")
    h.add_argument("digraph", help="edge list with a '# s m t' header")
    h = gen.add_parser("pad", help="add disjoint bad even cycles")
    h.add_argument("file")
    h.add_argument("--k", type=int, required=True)
    h = gen.add_parser("random", help="random program")
    h.add_argument("--atoms", type=int, required=True)
    h.add_argument("--rules", type=int, required=True)
    h.add_argument("--neg-prob", type=float, default=0.3)
    h.add_argument("--disj-prob", type=float, default=0.0)
    h.add_argument("--seed", type=int, required=True)
    return p


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _load(path: str):
    try:
        return parse_program(_read(path))
    except ProgramSyntaxError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _dump(payload: dict, out: TextIO) -> None:
    out.write(json.dumps(payload, sort_keys=True) + "\n")


def _parse_query(text: Optional[str]):
    if text is None:
        return None, None
    problem, _, atom = text.partition(":")
    if problem not in QUERIES:
        raise UsageError(f"unknown query {problem!r}")
    if problem in ("credulous", "skeptical") and not atom:
        raise UsageError(f"query {problem} needs an atom, as in {problem}:a")
    return problem, atom or None


def _cmd_check(args, out) -> int:
    prog = _load(args.file)
    _dump({"atoms": len(prog.atoms), "rules": len(prog), "normal": prog.is_normal}, out)
    return 0


def _cmd_classify(args, out) -> int:
    verdicts = classify(_load(args.file), args.cap)
    _dump(
        {
            "classes": sorted(str(c) for c, v in verdicts.items() if v.member),
            "verdicts": {str(c): v.as_dict() for c, v in verdicts.items()},
        },
        out,
    )
    return 0


def _cmd_graph(args, out) -> int:
    prog = _load(args.file)
    directed = build_directed(prog)
    if args.view == "d":
        graph = directed
    elif args.view == "u":
        graph = build_undirected(prog)
    else:
        graph = unlabel(undirected_view(directed))
    out.write(export_dot(graph) if args.format == "dot" else export_json(graph) + "\n")
    return 0


def _cmd_backdoor(args, out) -> int:
    prog = _load(args.file)
    if args.verify is not None:
        report = verify_backdoor(prog, _atom_list(args.verify), args.target, args.mode, args.cap)
        _dump(report.as_dict(), out)
        return 0 if report.ok else 1
    if args.detect < 0:
        raise UsageError("--detect needs a non-negative size bound")
    report = detect_backdoor(prog, args.target, args.detect, args.mode, args.cap)
    if report is None:
        _dump({"found": False}, out)
        return 1
    _dump({"found": True, **report.as_dict()}, out)
    return 0


def _cmd_solve(args, out, err) -> int:
    prog = _load(args.file)
    problem, atom = _parse_query(args.query)
    if problem in ("credulous", "skeptical") and atom not in prog.atoms:
        raise UsageError(f"atom {atom!r} does not occur in the program")
    backdoor = None if args.backdoor is None else _atom_list(args.backdoor)
    if args.auto is not None and args.auto < 0:
        raise UsageError("--auto needs a non-negative size bound")
    try:
        sol = run_pipeline(prog, args.target, backdoor, args.auto)
    except BackdoorError as exc:
        err.write(f"{exc}\n")
        _dump({"found": False} if backdoor is None else {"error": str(exc)}, out)
        return 1
    payload: dict = {}
    if args.auto is not None:
        payload["backdoor"] = sorted(sol.backdoor)
    if problem is None:
        payload["answer_sets"] = sorted_answer_sets(sol.answer_sets)
        payload["candidates"] = sorted_answer_sets(sol.candidates.sets)
    else:
        payload[problem] = answer_query(prog, sol.answer_sets, problem, atom)
        if atom is not None:
            payload["atom"] = atom
    _dump(payload, out)
    return 0 if sol.answer_sets else 1


def _cmd_gen(args, out) -> int:
    if args.generator == "hitting-set":
        try:
            inst = HittingSetInstance.from_json(_read(args.instance))
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"{args.instance}: bad instance: {exc}") from exc
        prog = gen_hitting_set_program(inst, args.variant)
    elif args.generator == "path-gadget":
        try:
            prog = gen_path_gadget(parse_digraph(_read(args.digraph)))
        except ValueError as exc:
            raise UsageError(f"{args.digraph}: {exc}") from exc
    elif args.generator == "pad":
        if args.k < 0:
            raise UsageError("--k must be non-negative")
        prog = pad_with_bad_even_cycles(_load(args.file), args.k)
    else:
        if args.atoms < 0 or args.rules < 0:
            raise UsageError("--atoms and --rules must be non-negative")
        prog = random_program(args.atoms, args.rules, args.neg_prob, args.disj_prob, args.seed)
    out.write(format_program(prog))
    return 0


def run(argv: Sequence[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        if args.command == "check":
            return _cmd_check(args, out)
        if args.command == "classify":
            return _cmd_classify(args, out)
        if args.command == "graph":
            return _cmd_graph(args, out)
        if args.command == "backdoor":
            return _cmd_backdoor(args, out)
        if args.command == "solve":
            return _cmd_solve(args, out, err)
        return _cmd_gen(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return 2
    except UnknownMembership as exc:
        err.write(f"inconclusive: {exc}\n")
        return 1
    except SystemExit as exc:
        # --help exits through argparse
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run(sys.argv[1:]))
