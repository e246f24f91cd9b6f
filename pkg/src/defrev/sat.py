"""3-CNF satisfiability through refutability of a transformed rule set.

A formula is mapped to rules whose goal literal ``_goal`` can be refuted by
some superiority relation exactly when the formula is satisfiable. A plain
truth-table check is included as an independent reference.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass

from .analysis import DEFAULT_BUDGET, RefutabilityClass, classify_refutability
from .engine import Family, Status, compute_tags
from .theory import Literal, Rule, RuleKind, Theory

__all__ = [
    "CnfFormula",
    "CnfError",
    "SatResult",
    "GOAL",
    "parse_dimacs",
    "format_dimacs",
    "gamma_transform",
    "generator_groups",
    "sat_via_refutability",
    "truth_table_sat",
]

GOAL = Literal("_goal")
MAX_TRUTH_TABLE_VARS = 24


class CnfError(ValueError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    variable_count: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if not self.clauses:
            raise CnfError("formula has no clauses")
        clauses = tuple(tuple(c) for c in self.clauses)
        for c in clauses:
            if len(c) != 3:
                raise CnfError(f"clause {list(c)} has {len(c)} literals, expected 3")
            for v in c:
                if v == 0 or abs(v) > self.variable_count:
                    raise CnfError(f"literal {v} outside 1..{self.variable_count}")
        object.__setattr__(self, "clauses", clauses)

    def satisfied_by(self, assignment: Sequence[int]) -> bool:
        """``assignment[k-1]`` is the value of variable ``k``."""
        return all(any((v > 0) == bool(assignment[abs(v) - 1]) for v in c) for c in self.clauses)


def parse_dimacs(text: str) -> CnfFormula:
    header = None
    nums: list[int] = []
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise CnfError(f"line {n}: malformed header {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise CnfError(f"line {n}: malformed header {line!r}") from None
            continue
        if header is None:
            raise CnfError(f"line {n}: clause before 'p cnf' header")
        try:
            nums.extend(int(x) for x in line.split())
        except ValueError:
            raise CnfError(f"line {n}: non-integer token in {line!r}") from None
    if header is None:
        raise CnfError("missing 'p cnf' header")
    clauses, cur = [], []
    for x in nums:
        if x == 0:
            clauses.append(tuple(cur))
            cur = []
        else:
            cur.append(x)
    if cur:
        raise CnfError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise CnfError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], tuple(clauses))


def format_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.variable_count} {len(f.clauses)}"]
    lines.extend(" ".join(map(str, c)) + " 0" for c in f.clauses)
    return "\n".join(lines) + "\n"


def _var(v: int) -> Literal:
    return Literal(f"x{abs(v)}", v < 0)


def gamma_transform(f: CnfFormula) -> Theory:
    """Rules only; facts and superiority are empty.

    For clause ``i`` and position ``j``: ``ga_i_j: => a``, ``g_i_j: a => _c<i>``,
    then ``gn_i: => ~_c<i>`` and ``gp_i: ~_c<i> => _goal``.
    """
    rules = []
    for i, clause in enumerate(f.clauses, 1):
        c = Literal(f"_c{i}")
        for j, v in enumerate(clause, 1):
            a = _var(v)
            rules.append(Rule(f"ga_{i}_{j}", frozenset(), RuleKind.DEFEASIBLE, a))
            rules.append(Rule(f"g_{i}_{j}", frozenset([a]), RuleKind.DEFEASIBLE, c))
        rules.append(Rule(f"gn_{i}", frozenset(), RuleKind.DEFEASIBLE, c.complement()))
        rules.append(Rule(f"gp_{i}", frozenset([c.complement()]), RuleKind.DEFEASIBLE, GOAL))
    return Theory(frozenset(), tuple(rules), frozenset())


def _generators(t: Theory) -> dict[str, tuple[list[str], list[str]]]:
    out: dict[str, tuple[list[str], list[str]]] = {}
    for r in t.rules:
        if r.label.startswith("ga_"):
            pos, neg = out.setdefault(r.head.atom, ([], []))
            (neg if r.head.negated else pos).append(r.label)
    return out


def generator_pairs(t: Theory) -> list[tuple[str, str]]:
    """Every (positive generator, negative generator) pair on the same variable."""
    return [pr for g in generator_groups(t) for pr in g]


def generator_groups(t: Theory) -> list[tuple[tuple[str, str], ...]]:
    """Per variable, all generator pairs oriented positive over negative.

    The generators of one variable only interact with each other, and every
    relation over them leaves the variable proven, its negation proven, or
    neither. Each of the three is reached by a uniform orientation of the
    block, so enumerating blocks covers every outcome of the full space.
    """
    out = []
    for atom, (pos, neg) in sorted(_generators(t).items()):
        block = tuple((p, n) for p in pos for n in neg)
        if block:
            out.append(block)
    return out


@dataclass(frozen=True)
class SatResult:
    status: str  # "sat", "unsat" or "exhausted_budget"
    assignment: tuple[int, ...] | None = None
    witness: frozenset[tuple[str, str]] | None = None
    examined: int = 0

    @property
    def sat(self) -> bool | None:
        return {"sat": True, "unsat": False}.get(self.status)

    def report(self) -> str:
        if self.status == "sat":
            vals = [str(k if v else -k) for k, v in enumerate(self.assignment, 1)]
            return "s SATISFIABLE\nv " + " ".join(vals + ["0"]) + "\n"
        if self.status == "unsat":
            return "s UNSATISFIABLE\n"
        return "s UNKNOWN\n"


def sat_via_refutability(
    f: CnfFormula, budget: int = DEFAULT_BUDGET, per_pair: bool = False
) -> SatResult:
    """Satisfiable iff ``_goal`` is refutable in the transformed rules.

    The assignment is read from the witness: variable ``k`` is 1 iff ``x<k>``
    is defeasibly proven there. ``per_pair`` enumerates every generator pair
    on its own instead of one block per variable.
    """
    t = gamma_transform(f)
    if per_pair:
        res = classify_refutability(t, GOAL, budget, pairs=generator_pairs(t))
    else:
        res = classify_refutability(t, GOAL, budget, groups=generator_groups(t))
    if res.value is RefutabilityClass.EXHAUSTED_BUDGET:
        return SatResult("exhausted_budget", examined=res.examined)
    if res.value is not RefutabilityClass.REFUTABLE:
        return SatResult("unsat", examined=res.examined)
    tags = compute_tags(t.with_superiority(res.witness))
    assignment = tuple(
        int(tags.status(Family.PARTIAL, Literal(f"x{k}")) is Status.PLUS)
        for k in range(1, f.variable_count + 1)
    )
    return SatResult("sat", assignment, res.witness, res.examined)


def truth_table_sat(f: CnfFormula) -> SatResult:
    """Lexicographically least satisfying assignment, variable 1 first."""
    if f.variable_count > MAX_TRUTH_TABLE_VARS:
        raise CnfError(f"{f.variable_count} variables exceed the truth-table limit of {MAX_TRUTH_TABLE_VARS}")
    for n, bits in enumerate(itertools.product((0, 1), repeat=f.variable_count), 1):
        if f.satisfied_by(bits):
            return SatResult("sat", tuple(bits), examined=n)
    return SatResult("unsat", examined=2**f.variable_count)
