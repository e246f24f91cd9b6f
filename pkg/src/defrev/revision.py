"""Revising a theory by editing only its superiority relation.

Three operations are provided: ``contract`` takes a proven literal to
refuted, ``revise`` takes a proven literal to a proven complement, and
``expand`` takes a literal refuted on both sides to proven. Each first
classifies the instance from the tags of the literal and its complement,
applies the edits suited to that instance, re-runs inference, and falls back
to an exhaustive minimal search when the targeted edits do not verify.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum

from .analysis import DEFAULT_BUDGET, conflicting_pairs, is_unreachable, support_trees
from .engine import Evaluator, Family, ProofTag, Sign, Status, TagAssignment, compute_tags
from .theory import Literal, RuleKind, Theory, find_cycle, serialize_theory

__all__ = [
    "GoalKind",
    "RevisionGoal",
    "InstanceClass",
    "Strategy",
    "OutcomeStatus",
    "RevisionOutcome",
    "RevisionError",
    "Searcher",
    "classify_instance",
    "contract",
    "revise",
    "expand",
    "search_revision",
]

Pair = tuple[str, str]
Goal = tuple[ProofTag, Literal]

PLUS_PARTIAL = ProofTag(Sign.PLUS, Family.PARTIAL)
MINUS_PARTIAL = ProofTag(Sign.MINUS, Family.PARTIAL)


class RevisionError(ValueError):
    """The theory is outside what superiority-only revision handles."""


class GoalKind(Enum):
    CONTRACT = "contract"
    REVISE = "revise"
    EXPAND = "expand"


@dataclass(frozen=True)
class RevisionGoal:
    kind: GoalKind
    target: Literal

    @property
    def goal(self) -> Goal:
        if self.kind is GoalKind.CONTRACT:
            return (MINUS_PARTIAL, self.target)
        if self.kind is GoalKind.REVISE:
            return (PLUS_PARTIAL, self.target.complement())
        return (PLUS_PARTIAL, self.target)


class InstanceClass(Enum):
    ATTACK_PREMISES = "attack_premises"
    OMEGA_PLUS_SIGMA_MINUS = "omega_plus_sigma_minus"
    OMEGA_MINUS_SIGMA_PLUS = "omega_minus_sigma_plus"
    OMEGA_MINUS_SIGMA_MINUS = "omega_minus_sigma_minus"
    OMEGA_PLUS_SIGMA_PLUS_IMPOSSIBLE = "omega_plus_sigma_plus_impossible"
    THIRD_OMEGA_PLUS_SIGMA_PLUS = "third_omega_plus_sigma_plus"
    THIRD_OMEGA_PLUS_SIGMA_MINUS = "third_omega_plus_sigma_minus"
    THIRD_OMEGA_MINUS_SIGMA_PLUS = "third_omega_minus_sigma_plus"
    THIRD_OMEGA_MINUS_SIGMA_MINUS = "third_omega_minus_sigma_minus"
    INFEASIBLE_PHI = "infeasible_phi"
    INFEASIBLE_NO_CHAIN = "infeasible_no_chain"
    INFEASIBLE_UNREACHABLE = "infeasible_unreachable"
    PRECONDITION_NOT_MET = "precondition_not_met"
    GOAL = "goal"

    @property
    def infeasible(self) -> bool:
        return self in _INFEASIBLE


_INFEASIBLE = {
    InstanceClass.INFEASIBLE_PHI,
    InstanceClass.INFEASIBLE_NO_CHAIN,
    InstanceClass.INFEASIBLE_UNREACHABLE,
    InstanceClass.PRECONDITION_NOT_MET,
}


class Strategy(Enum):
    SINGLE_WINNER = "single_winner"
    TEAM_DEFEATER = "team_defeater"
    TARGETED = "targeted"
    SEARCH = "search"


class OutcomeStatus(Enum):
    OK = "ok"
    INFEASIBLE = "infeasible"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class RevisionOutcome:
    status: OutcomeStatus
    original: Theory
    instance: InstanceClass
    strategy: Strategy
    new_superiority: frozenset[Pair] | None = None
    verified: bool = False
    examined: int = 0
    goals: tuple[Goal, ...] = ()
    note: str = ""

    def __bool__(self) -> bool:
        return self.status is OutcomeStatus.OK

    @property
    def theory(self) -> Theory:
        if self.new_superiority is None:
            raise RevisionError(f"no outcome theory: {self.status.value}")
        return self.original.with_superiority(self.new_superiority)

    @property
    def added(self) -> frozenset[Pair]:
        if self.new_superiority is None:
            return frozenset()
        return self.new_superiority - self.original.superiority

    @property
    def removed(self) -> frozenset[Pair]:
        if self.new_superiority is None:
            return frozenset()
        return self.original.superiority - self.new_superiority

    @property
    def diff_size(self) -> int:
        return len(self.added) + len(self.removed)

    def report(self) -> str:
        lines = [
            f"status: {self.status.value}",
            f"instance: {self.instance.value}",
            f"strategy: {self.strategy.value}",
        ]
        diff = [f"+ ({a},{b})" for a, b in self.added] + [f"- ({a},{b})" for a, b in self.removed]
        lines.extend(sorted(diff))
        out = "\n".join(lines) + "\n"
        if self.new_superiority is not None:
            out += serialize_theory(self.theory)
        return out


def _require_defeasible(t: Theory) -> None:
    bad = sorted(r.label for r in t.rules if r.kind is not RuleKind.DEFEASIBLE)
    if bad:
        raise RevisionError(
            "revision works on defeasible rules only; strict rules or defeaters: " + ", ".join(bad)
        )


def _plus(tags: TagAssignment, fam: Family, l: Literal) -> bool:
    return tags.status(fam, l) is Status.PLUS


def _minus(tags: TagAssignment, fam: Family, l: Literal) -> bool:
    return tags.status(fam, l) is Status.MINUS


def classify_instance(
    t: Theory,
    g: RevisionGoal,
    tags: TagAssignment | None = None,
    check_precondition: bool = True,
) -> InstanceClass:
    """Place a revision request in the case analysis of its operation."""
    _require_defeasible(t)
    tags = tags or compute_tags(t)
    p = g.target
    np_ = p.complement()
    if g.kind in (GoalKind.CONTRACT, GoalKind.REVISE):
        if check_precondition and not _plus(tags, Family.PARTIAL, p):
            return InstanceClass.PRECONDITION_NOT_MET
        if _plus(tags, Family.PHI, p):
            return InstanceClass.INFEASIBLE_PHI
        if _minus(tags, Family.CHAIN, np_):
            if g.kind is GoalKind.REVISE:
                return InstanceClass.INFEASIBLE_NO_CHAIN
            return InstanceClass.ATTACK_PREMISES
        om = _plus(tags, Family.OMEGA, np_)
        sg = _plus(tags, Family.SUPPORT, np_)
        if om and sg:
            return InstanceClass.OMEGA_PLUS_SIGMA_PLUS_IMPOSSIBLE
        if om:
            return InstanceClass.OMEGA_PLUS_SIGMA_MINUS
        if sg:
            return InstanceClass.OMEGA_MINUS_SIGMA_PLUS
        return InstanceClass.OMEGA_MINUS_SIGMA_MINUS
    if check_precondition and not (
        _minus(tags, Family.PARTIAL, p) and _minus(tags, Family.PARTIAL, np_)
    ):
        return InstanceClass.PRECONDITION_NOT_MET
    if not _plus(tags, Family.CHAIN, p):
        return InstanceClass.INFEASIBLE_NO_CHAIN
    if is_unreachable(t, p):
        return InstanceClass.INFEASIBLE_UNREACHABLE
    om = _plus(tags, Family.OMEGA, p)
    sg = _plus(tags, Family.SUPPORT, p)
    if om and sg:
        return InstanceClass.THIRD_OMEGA_PLUS_SIGMA_PLUS
    if om:
        return InstanceClass.THIRD_OMEGA_PLUS_SIGMA_MINUS
    if sg:
        return InstanceClass.THIRD_OMEGA_MINUS_SIGMA_PLUS
    return InstanceClass.THIRD_OMEGA_MINUS_SIGMA_MINUS


# -- exhaustive minimal search ---------------------------------------------


def _normalize_goals(goals: Goal | Iterable[Goal]) -> tuple[Goal, ...]:
    if isinstance(goals, tuple) and len(goals) == 2 and isinstance(goals[0], ProofTag):
        return (goals,)
    return tuple(goals)


class Searcher:
    """Scans superiority relations of one theory in order of distance from
    its own relation. Full tag assignments are cached once requested.

    A candidate is a vector of pair states, one per conflicting pair:
    0 unrelated, 1 first label wins, 2 second label wins. Tuples of the
    original relation on other pairs are kept in every candidate.
    """

    def __init__(self, t: Theory, pairs: Sequence[Pair] | None = None):
        self.theory = t
        ev = self.evaluator = Evaluator(t)
        self.pairs = conflicting_pairs(t) if pairs is None else list(pairs)
        on_pairs = {frozenset(p) for p in self.pairs}
        self.inert = frozenset(x for x in t.superiority if frozenset(x) not in on_pairs)
        sup = t.superiority
        self.start = tuple(
            1 if (r, s) in sup else 2 if (s, r) in sup else 0 for r, s in self.pairs
        )
        self._edges = [((), ((r, s),), ((s, r),)) for r, s in self.pairs]
        self._inert_idx = ev.sup_indices(self.inert)
        self._edge_idx = [
            tuple(tuple(ev.sup_indices(e)) for e in opts) for opts in self._edges
        ]
        # order-preserving integer codes for every tuple that can be changed
        every = sorted({e for opts in self._edges for st in opts for e in st})
        rank = {e: n for n, e in enumerate(every)}
        self._diff = []
        for i, opts in enumerate(self._edges):
            base = set(opts[self.start[i]])
            self._diff.append(tuple(tuple(sorted(rank[e] for e in set(o) ^ base)) for o in opts))
        self._ranked = every
        self.may_cycle = _undirected_cycle([tuple(p) for p in on_pairs] + list(self.inert))
        self._full: dict[tuple[int, ...], TagAssignment] = {}

    @property
    def total(self) -> int:
        return 3 ** len(self.pairs)

    def relation(self, states: Sequence[int]) -> frozenset[Pair]:
        out = set(self.inert)
        for opts, st in zip(self._edges, states):
            out.update(opts[st])
        return frozenset(out)

    def changed(self, states: Sequence[int]) -> tuple[Pair, ...]:
        """Sorted tuples in the symmetric difference with the original relation."""
        return tuple(self._ranked[n] for n in self._key(states))

    def _key(self, states: Sequence[int]) -> tuple[int, ...]:
        out: list[int] = []
        for d, st in zip(self._diff, states):
            out.extend(d[st])
        out.sort()
        return tuple(out)

    def cyclic(self, states: Sequence[int]) -> bool:
        return self.may_cycle and find_cycle(self.relation(states)) is not None

    def partial(self, states: Sequence[int]) -> list[int]:
        sup = set(self._inert_idx)
        for opts, st in zip(self._edge_idx, states):
            sup.update(opts[st])
        return self.evaluator.partial(sup)

    def tags(self, states: Sequence[int]) -> TagAssignment:
        states = tuple(states)
        got = self._full.get(states)
        if got is None:
            got = self._full[states] = self.evaluator.run(self.relation(states))
        return got

    def _compile(self, goals: Sequence[Goal]) -> list[tuple[Family, Literal, int | None, int]]:
        index = {l: i for i, l in enumerate(self.evaluator.c.universe)}
        return [
            (tag.family, l, index.get(l), 1 if tag.sign is Sign.PLUS else -1) for tag, l in goals
        ]

    def holds(self, states: Sequence[int], goals: Sequence[Goal], _compiled=None) -> bool:
        P = None
        for fam, l, i, want in _compiled or self._compile(goals):
            if fam is Family.PARTIAL:
                if i is None:
                    v = -1
                else:
                    if P is None:
                        P = self.partial(states)
                    v = P[i]
            else:
                v = self.tags(states).status(fam, l).value
            if v != want:
                return False
        return True

    def _cost(self, i: int, st: int) -> int:
        o = self.start[i]
        if st == o:
            return 0
        return 2 if st and o else 1

    def levels(self) -> Iterator[list[tuple[tuple[int, ...], tuple[int, ...]]]]:
        """Candidates grouped by size of the change, each group sorted by
        the sorted list of changed tuples. Items are ``(key, states)``."""
        k = len(self.pairs)
        options = [
            [(st, self._cost(i, st)) for st in sorted(range(3), key=lambda st, i=i: self._cost(i, st))]
            for i in range(k)
        ]

        def rec(i: int, budget: int, acc: list[int]):
            if i == k:
                if budget == 0:
                    yield tuple(acc)
                return
            for st, c in options[i]:
                if c <= budget and budget - c <= 2 * (k - i - 1):
                    acc.append(st)
                    yield from rec(i + 1, budget - c, acc)
                    acc.pop()

        for cost in range(2 * k + 1):
            group = [(self._key(states), states) for states in rec(0, cost, [])]
            group.sort()
            yield group

    def search(
        self,
        goals: Goal | Iterable[Goal],
        budget: int = DEFAULT_BUDGET,
        all_minimal: bool = False,
        metric: str = "tuples",
    ) -> tuple[str, list[frozenset[Pair]], int]:
        """Return ``(status, relations, examined)`` where status is ``ok``,
        ``infeasible`` or ``exhausted``."""
        goals = _normalize_goals(goals)
        if metric == "conclusions":
            return self._search_conclusions(goals, budget, all_minimal)
        if metric != "tuples":
            raise ValueError(f"unknown minimality metric {metric!r}")
        examined = 0
        compiled = self._compile(goals)
        for group in self.levels():
            found = []
            for _, states in group:
                if examined >= budget:
                    return ("ok", found, examined) if found else ("exhausted", found, examined)
                examined += 1
                if self.cyclic(states) or not self.holds(states, goals, compiled):
                    continue
                found.append(self.relation(states))
                if not all_minimal:
                    return "ok", found, examined
            if found:
                return "ok", found, examined
        return "infeasible", [], examined

    def _search_conclusions(self, goals, budget, all_minimal):
        if self.total > budget:
            return "exhausted", [], 0
        base = self.partial(self.start)
        compiled = self._compile(goals)
        best = []
        examined = 0
        for group in self.levels():
            for key, states in group:
                examined += 1
                if self.cyclic(states) or not self.holds(states, goals, compiled):
                    continue
                changed = sum(1 for a, b in zip(base, self.partial(states)) if a != b)
                best.append(((changed, len(key), key), states))
        if not best:
            return "infeasible", [], examined
        best.sort()
        top = best[0][0][:2]
        chosen = [st for k, st in best if k[:2] == top] if all_minimal else [best[0][1]]
        return "ok", [self.relation(st) for st in chosen], examined


def _undirected_cycle(edges: Iterable[tuple[str, str]]) -> bool:
    """True when the undirected graph has a cycle; otherwise no orientation can."""
    parent: dict[str, str] = {}

    def root(x: str) -> str:
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = root(a), root(b)
        if ra == rb:
            return True
        parent[ra] = rb
    return False


def search_revision(
    t: Theory,
    goals: Goal | Iterable[Goal],
    budget: int = DEFAULT_BUDGET,
    *,
    all_minimal: bool = False,
    metric: str = "tuples",
    instance: InstanceClass = InstanceClass.GOAL,
    searcher: Searcher | None = None,
) -> RevisionOutcome | list[RevisionOutcome]:
    """Find the relations closest to the current one that prove every goal.

    Distance is the size of the symmetric difference of tuple sets; ties go
    to the lexicographically smallest sorted list of changed tuples. With
    ``metric="conclusions"`` the number of literals whose defeasible status
    changes is minimized first. Only pairs of rules with complementary heads
    are varied. With ``all_minimal`` every outcome at the minimal distance is
    returned, in order.
    """
    goals = _normalize_goals(goals)
    s = searcher or Searcher(t)
    status, rels, examined = s.search(goals, budget, all_minimal, metric)
    if status != "ok":
        out = RevisionOutcome(
            OutcomeStatus(status), t, instance, Strategy.SEARCH, examined=examined, goals=goals
        )
        return [out] if all_minimal else out
    outs = [
        RevisionOutcome(
            OutcomeStatus.OK,
            t,
            instance,
            Strategy.SEARCH,
            rel,
            verified=_verify(t, rel, goals),
            examined=examined,
            goals=goals,
        )
        for rel in rels
    ]
    return outs if all_minimal else outs[0]


def _verify(t: Theory, rel: Iterable[Pair], goals: Sequence[Goal]) -> bool:
    try:
        tags = compute_tags(t.with_superiority(rel))
    except ValueError:
        return False
    return all(tags.holds(tag, l) for tag, l in goals)


# -- targeted edits ----------------------------------------------------------


class _Edit:
    """A mutable superiority relation with inference on demand."""

    def __init__(self, t: Theory):
        self.t = t
        self.ev = Evaluator(t)
        self.sup = set(t.superiority)

    def tags(self) -> TagAssignment:
        return self.ev.run(self.sup)

    def applicable(self, tags: TagAssignment, label: str) -> bool:
        return all(_plus(tags, Family.PARTIAL, b) for b in self.t.rule(label).body)

    def rules_for(self, l: Literal, supporting: bool = False) -> list[str]:
        return sorted(r.label for r in self.t.rules if r.head == l and (r.supports or not supporting))

    def invert_or_add(self, winner: str, loser: str) -> None:
        self.sup.discard((loser, winner))
        self.sup.add((winner, loser))

    def acyclic(self) -> bool:
        return find_cycle(self.sup) is None


def _walk(e: _Edit, tree, root_mode: str) -> None:
    """Strengthen a support chain from its leaves up.

    Each literal on the chain that is not yet proven gets its chain rule
    placed above every applicable rule for the complement, inverting an
    opposite priority where one exists. At the root, ``"tie"`` only removes
    priorities against the root rule, ``"win"`` treats it like any node.
    """
    for node in tree.nodes():
        if node.rule is None:
            continue
        tags = e.tags()
        l = node.root
        r = node.rule.label
        opponents = [s for s in e.rules_for(l.complement()) if e.applicable(tags, s)]
        if node is tree and root_mode == "tie":
            for s in opponents:
                e.sup.discard((s, r))
            continue
        if _plus(tags, Family.PARTIAL, l):
            continue
        for s in opponents:
            e.invert_or_add(r, s)


def _finish(
    t: Theory,
    e: _Edit,
    goal: Goal,
    instance: InstanceClass,
    strategy: Strategy,
) -> RevisionOutcome | None:
    if not e.acyclic():
        return None
    rel = frozenset(e.sup)
    if not _verify(t, rel, [goal]):
        return None
    return RevisionOutcome(OutcomeStatus.OK, t, instance, strategy, rel, True, goals=(goal,))


def _tree_attempts(t: Theory, target: Literal, root_mode: str, goal, instance, limit=16):
    for tree in support_trees(t, target, limit):
        e = _Edit(t)
        _walk(e, tree, root_mode)
        out = _finish(t, e, goal, instance, Strategy.TARGETED)
        if out is not None:
            return out
    return None


def _fallback(t, goal, instance, budget, note="") -> RevisionOutcome:
    out = search_revision(t, goal, budget, instance=instance)
    if note and out.status is OutcomeStatus.OK:
        out = RevisionOutcome(
            out.status, t, instance, Strategy.SEARCH, out.new_superiority,
            out.verified, out.examined, out.goals, note,
        )
    return out


def _infeasible(t, instance, goal, strategy=Strategy.TARGETED) -> RevisionOutcome:
    return RevisionOutcome(OutcomeStatus.INFEASIBLE, t, instance, strategy, goals=(goal,))


def contract(
    t: Theory,
    p: Literal,
    strategy: Strategy | str = Strategy.TARGETED,
    budget: int = DEFAULT_BUDGET,
    check_precondition: bool = True,
) -> RevisionOutcome:
    """Edit the superiority relation so that ``p`` becomes refuted."""
    strategy = Strategy(strategy)
    tags = compute_tags(t)
    goal = (MINUS_PARTIAL, p)
    inst = classify_instance(t, RevisionGoal(GoalKind.CONTRACT, p), tags, check_precondition)
    if inst.infeasible:
        return _infeasible(t, inst, goal, strategy)
    if strategy is Strategy.SEARCH:
        return search_revision(t, goal, budget, instance=inst)
    np_ = p.complement()
    out = None
    if inst is InstanceClass.OMEGA_PLUS_SIGMA_MINUS:
        e = _Edit(t)
        mine = [r for r in e.rules_for(p, True) if e.applicable(tags, r)]
        theirs = [s for s in e.rules_for(np_) if e.applicable(tags, s)]
        for r in mine:
            for s in theirs:
                e.sup.discard((r, s))
        out = _finish(t, e, goal, inst, Strategy.TARGETED)
    elif inst in (InstanceClass.OMEGA_MINUS_SIGMA_PLUS, InstanceClass.OMEGA_MINUS_SIGMA_MINUS):
        out = _tree_attempts(t, np_, "tie", goal, inst)
    elif inst is InstanceClass.ATTACK_PREMISES:
        out = _attack_premises(t, p, goal, inst)
    return out or _fallback(t, goal, inst, budget)


def _attack_premises(t: Theory, p: Literal, goal, inst) -> RevisionOutcome | None:
    tags = compute_tags(t)
    seen = set()
    for tree in support_trees(t, p, 16):
        for node in tree.nodes():
            l = node.root
            if node is tree or l in seen or not _plus(tags, Family.CHAIN, l.complement()):
                continue
            seen.add(l)
            out = _tree_attempts(t, l.complement(), "tie", goal, inst, limit=4)
            if out is not None:
                return out
    return None


def revise(
    t: Theory,
    p: Literal,
    strategy: Strategy | str = Strategy.SINGLE_WINNER,
    budget: int = DEFAULT_BUDGET,
    winner: str | None = None,
    check_precondition: bool = True,
) -> RevisionOutcome:
    """Edit the superiority relation so that the complement of ``p`` becomes
    proven, starting from a theory that proves ``p``.

    ``winner`` names the final rule of the chain for the complement that
    the single-winner strategy promotes; by default the smallest label.
    """
    strategy = Strategy(strategy)
    tags = compute_tags(t)
    np_ = p.complement()
    goal = (PLUS_PARTIAL, np_)
    inst = classify_instance(t, RevisionGoal(GoalKind.REVISE, p), tags, check_precondition)
    if inst.infeasible:
        return _infeasible(t, inst, goal, strategy)
    if strategy is Strategy.SEARCH:
        return search_revision(t, goal, budget, instance=inst)
    out = None
    if inst is InstanceClass.OMEGA_PLUS_SIGMA_MINUS:
        if strategy is Strategy.TEAM_DEFEATER:
            out = _team_defeater(t, p, tags, goal, inst)
        else:
            out = _single_winner(t, p, tags, goal, inst, winner)
    elif inst in (InstanceClass.OMEGA_MINUS_SIGMA_PLUS, InstanceClass.OMEGA_MINUS_SIGMA_MINUS):
        out = _tree_attempts(t, np_, "win", goal, inst)
        if out is not None:
            out = RevisionOutcome(out.status, t, inst, strategy, out.new_superiority, True, goals=(goal,))
    return out or _fallback(t, goal, inst, budget)


def _last_steps(e: _Edit, tags: TagAssignment, p: Literal) -> tuple[list[str], list[str]]:
    mine = [r for r in e.rules_for(p, True) if e.applicable(tags, r)]
    theirs = [s for s in e.rules_for(p.complement(), True) if e.applicable(tags, s)]
    return mine, theirs


def _single_winner(t, p, tags, goal, inst, winner):
    e = _Edit(t)
    P, N = _last_steps(e, tags, p)
    if not N:
        return None
    n = winner if winner is not None else N[0]
    if n not in N:
        raise RevisionError(f"{n} is not an applicable rule for {p.complement()}")
    for x in P:
        if (x, n) in e.sup:
            e.invert_or_add(n, x)
    for x in P:
        e.sup.add((n, x))
    return _finish(t, e, goal, inst, Strategy.SINGLE_WINNER)


def _team_defeater(t, p, tags, goal, inst):
    e = _Edit(t)
    P, N = _last_steps(e, tags, p)
    if not N:
        return None
    P_ls = [x for x in P if any((x, n) in e.sup for n in N)]
    if len(N) > len(P_ls):
        beaten = [n for n in N if any((x, n) in e.sup for x in P)]
        rest = [n for n in N if n not in beaten]
        team = (beaten + rest)[: max(1, len(P_ls))]
    else:
        team = list(N)
    for n in team:
        for x in P:
            if (x, n) in e.sup:
                e.invert_or_add(n, x)
    remaining = [x for x in P if not any((m, x) in e.sup for m in N)]
    for i, x in enumerate(remaining):
        e.sup.add((team[i % len(team)], x))
    return _finish(t, e, goal, inst, Strategy.TEAM_DEFEATER)


def expand(
    t: Theory,
    p: Literal,
    strategy: Strategy | str = Strategy.TARGETED,
    budget: int = DEFAULT_BUDGET,
    check_precondition: bool = True,
) -> RevisionOutcome:
    """Edit the superiority relation so that ``p`` becomes proven, starting
    from a theory that refutes both ``p`` and its complement."""
    strategy = Strategy(strategy)
    tags = compute_tags(t)
    goal = (PLUS_PARTIAL, p)
    inst = classify_instance(t, RevisionGoal(GoalKind.EXPAND, p), tags, check_precondition)
    if inst.infeasible:
        return _infeasible(t, inst, goal, strategy)
    if strategy is Strategy.SEARCH:
        return search_revision(t, goal, budget, instance=inst)
    out = None
    if inst is InstanceClass.THIRD_OMEGA_PLUS_SIGMA_PLUS:
        e = _Edit(t)
        P, N = _last_steps(e, tags, p)
        undefeated = [r for r in P if not any((s, r) in e.sup for s in N)]
        if undefeated:
            r = undefeated[0]
            for s in N:
                e.sup.add((r, s))
            out = _finish(t, e, goal, inst, Strategy.TARGETED)
    if out is None:
        out = _tree_attempts(t, p, "win", goal, inst)
    return out or _fallback(t, goal, inst, budget)
