"""Command-line front end.

Exit status: 0 answered (including infeasible), 1 usage error, 2 input error,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .agm import CATALOGUE, AgmError, PostulateId, check_postulate
from .analysis import DEFAULT_BUDGET, RefutabilityClass, classify_refutability
from .engine import ProofTag, belief_set, compute_tags, extension, format_tags
from .revision import (
    GoalKind,
    OutcomeStatus,
    RevisionError,
    RevisionGoal,
    Strategy,
    classify_instance,
    contract,
    expand,
    revise,
    search_revision,
)
from .sat import CnfError, gamma_transform, parse_dimacs, sat_via_refutability, truth_table_sat
from .theory import Theory, TheoryError, lit, parse_theory, serialize_theory

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _theory(path: str) -> Theory:
    return parse_theory(_read(path))


def _literal(text: str):
    try:
        return lit(text)
    except TheoryError as exc:
        raise _UsageError(str(exc)) from None


def _tag(text: str) -> ProofTag:
    try:
        return ProofTag.parse(text)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _goal(text: str):
    parts = text.split()
    if len(parts) != 2:
        raise _UsageError(f"goal must look like '+partial p', got {text!r}")
    return _tag(parts[0]), _literal(parts[1])


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_prove(a) -> int:
    t = _theory(a.file)
    tags = compute_tags(t)
    _out("true" if tags.holds(_tag(a.tag), _literal(a.lit)) else "false")
    return EXIT_OK


def cmd_extension(a) -> int:
    t = _theory(a.file)
    tags = compute_tags(t)
    if a.all_tags:
        _out(format_tags(tags))
        return EXIT_OK
    ext = extension(t, tags)
    _out("+partial: " + ", ".join(map(str, sorted(ext.plus_partial))))
    _out("-partial: " + ", ".join(map(str, sorted(ext.minus_partial))))
    return EXIT_OK


def cmd_beliefset(a) -> int:
    _out(str(belief_set(_theory(a.file))))
    return EXIT_OK


def cmd_classify(a) -> int:
    t = _theory(a.file)
    p = _literal(a.lit)
    if a.op == "refutability":
        res = classify_refutability(t, p, a.budget)
        _out(res.report())
        return EXIT_BUDGET if res.value is RefutabilityClass.EXHAUSTED_BUDGET else EXIT_OK
    kind = GoalKind(a.op)
    if kind is GoalKind.REVISE:
        p = p.complement()
    _out(classify_instance(t, RevisionGoal(kind, p), check_precondition=not a.relax).value)
    return EXIT_OK


def _report(outcome) -> int:
    _out(outcome.report())
    return EXIT_BUDGET if outcome.status is OutcomeStatus.EXHAUSTED else EXIT_OK


def cmd_contract(a) -> int:
    t = _theory(a.file)
    return _report(
        contract(t, _literal(a.lit), a.strategy or Strategy.TARGETED, a.budget, not a.relax)
    )


def cmd_revise(a) -> int:
    t = _theory(a.file)
    target = _literal(a.lit)
    return _report(
        revise(
            t,
            target.complement(),
            a.strategy or Strategy.SINGLE_WINNER,
            a.budget,
            winner=a.winner,
            check_precondition=not a.relax,
        )
    )


def cmd_expand(a) -> int:
    t = _theory(a.file)
    return _report(expand(t, _literal(a.lit), a.strategy or Strategy.TARGETED, a.budget, not a.relax))


def cmd_search(a) -> int:
    t = _theory(a.file)
    goals = [_goal(g) for g in a.goal]
    if not goals:
        raise _UsageError("at least one --goal is required")
    outs = search_revision(t, goals, a.budget, all_minimal=True, metric=a.metric)
    if not a.all:
        outs = outs[:1]
    for n, o in enumerate(outs):
        if n:
            _out("")
        _out(o.report())
    return EXIT_BUDGET if outs[0].status is OutcomeStatus.EXHAUSTED else EXIT_OK


def _cnf(path: str):
    return parse_dimacs(_read(path))


def cmd_gamma(a) -> int:
    _out(serialize_theory(gamma_transform(_cnf(a.file))))
    return EXIT_OK


def cmd_sat(a) -> int:
    f = _cnf(a.file)
    if a.emit_theory:
        Path(a.emit_theory).write_text(serialize_theory(gamma_transform(f)), encoding="utf-8")
    res = sat_via_refutability(f, a.budget, per_pair=a.per_pair)
    _out(res.report())
    return EXIT_BUDGET if res.status == "exhausted_budget" else EXIT_OK


def cmd_oracle(a) -> int:
    _out(truth_table_sat(_cnf(a.file)).report())
    return EXIT_OK


def cmd_agm(a) -> int:
    t = _theory(a.file)
    p = _literal(a.lit)
    q = _literal(a.q) if a.q else None
    other = _theory(a.other) if a.other else None
    try:
        ids = [PostulateId.parse(x) for x in a.postulate] if a.postulate else list(CATALOGUE)
    except AgmError as exc:
        raise _UsageError(str(exc)) from None
    wdir = Path(a.witness_dir) if a.witness_dir else None
    for pid in ids:
        needs_q = pid.index in ("K-7", "K-8", "K*7", "K*8")
        if (needs_q and q is None) or (pid.index == "K+5" and other is None):
            if a.postulate:
                raise _UsageError(f"{pid} needs " + ("--q" if needs_q else "--other"))
            continue
        v = check_postulate(pid, t, p, q, other=other, outcomes=a.outcomes, budget=a.budget)
        ref = "-"
        if v.witnesses and wdir is not None:
            wdir.mkdir(parents=True, exist_ok=True)
            name = pid.index.replace("/", "_").replace("*", "star").replace("'", "prime")
            path = wdir / f"{name}.dlt"
            path.write_text(v.witness.report(), encoding="utf-8")
            ref = str(path)
        _out(v.report(ref))
    return EXIT_OK


def cmd_fmt(a) -> int:
    text = serialize_theory(_theory(a.file))
    if a.in_place:
        if a.file == "-":
            raise _UsageError("--in-place needs a file")
        Path(a.file).write_text(text, encoding="utf-8")
    else:
        _out(text.rstrip("\n"))
    return EXIT_OK


def _strategy(text: str) -> Strategy:
    try:
        return Strategy(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown strategy {text!r}") from None


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="defrev", description="Defeasible theories and superiority-relation revision.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, fn, help_, file_help="theory file, or - for stdin"):
        s = sub.add_parser(name, help=help_)
        s.add_argument("file", help=file_help)
        s.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="candidate limit for searches")
        s.add_argument("--jobs", type=_positive, default=1, help="worker cap (evaluation is sequential)")
        s.set_defaults(fn=fn)
        return s

    s = verb("prove", cmd_prove, "does the theory prove a tagged literal")
    s.add_argument("--lit", required=True)
    s.add_argument("--tag", default="+partial", help="e.g. +partial, -chain, +phi")

    s = verb("extension", cmd_extension, "defeasible extension")
    s.add_argument("--all-tags", action="store_true", help="print every tag of every literal")

    verb("beliefset", cmd_beliefset, "believed and disbelieved literals")

    s = verb("classify", cmd_classify, "instance class of a revision request, or refutability")
    s.add_argument("--lit", required=True)
    s.add_argument("--op", choices=["contract", "revise", "expand", "refutability"], default="contract")
    s.add_argument("--relax", action="store_true", help="skip the precondition check")

    for name, fn, what in (
        ("contract", cmd_contract, "make a proven literal refuted"),
        ("revise", cmd_revise, "revise by a literal whose complement is proven"),
        ("expand", cmd_expand, "prove a literal refuted on both sides"),
    ):
        s = verb(name, fn, what)
        s.add_argument("--lit", required=True)
        s.add_argument("--strategy", type=_strategy, default=None,
                       help="single_winner, team_defeater, targeted or search")
        s.add_argument("--winner", default=None, help="revise: rule label of the promoted chain")
        s.add_argument("--relax", action="store_true", help="skip the precondition check")

    s = verb("search", cmd_search, "minimal relation change reaching tagged goals")
    s.add_argument("--goal", action="append", default=[], help="'+partial p'; repeat for conjunctions")
    s.add_argument("--all", action="store_true", help="list every minimal outcome")
    s.add_argument("--metric", choices=["tuples", "conclusions"], default="tuples")

    verb("gamma", cmd_gamma, "transform a 3-CNF formula into rules", "DIMACS file")
    s = verb("sat", cmd_sat, "decide 3-CNF through refutability", "DIMACS file")
    s.add_argument("--emit-theory", metavar="PATH")
    s.add_argument("--per-pair", action="store_true", help="enumerate generator pairs one by one")
    verb("oracle", cmd_oracle, "decide 3-CNF by truth table", "DIMACS file")

    s = verb("agm", cmd_agm, "check belief-change postulates")
    s.add_argument("--lit", required=True)
    s.add_argument("--q", help="second literal for K-7, K-8, K*7, K*8")
    s.add_argument("--other", help="second theory file for K+5")
    s.add_argument("--postulate", action="append", default=[], help="postulate id; repeatable")
    s.add_argument("--outcomes", choices=["all", "first"], default="all")
    s.add_argument("--witness-dir", help="write violation witnesses here")

    s = verb("fmt", cmd_fmt, "canonical formatting")
    s.add_argument("--in-place", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args)
    except _UsageError as exc:
        print(f"defrev: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TheoryError, CnfError, RevisionError, OSError, UnicodeDecodeError) as exc:
        print(f"defrev: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())
