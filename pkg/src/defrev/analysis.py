"""Structural analysis of rule bases.

Dependency between literals, reachability, decisiveness, extraction of
support chains, and exhaustive enumeration of superiority relations over the
pairs of rules with complementary heads.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum

from .engine import Evaluator, Family, Status, TagAssignment, compute_tags
from .theory import Literal, Rule, Theory, find_cycle

__all__ = [
    "SupportTree",
    "Decisiveness",
    "RefutabilityClass",
    "Refutability",
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "depends_on",
    "dependents_of",
    "unreachable_literals",
    "is_unreachable",
    "atom_graph_acyclic",
    "is_decisive",
    "support_trees",
    "conflicting_pairs",
    "count_superiorities",
    "enumerate_superiorities",
    "classify_refutability",
]

DEFAULT_BUDGET = 3**12

Pair = tuple[str, str]


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"{required} candidates required, budget is {budget}")
        self.required = required
        self.budget = budget


def _rules_by_head(t: Theory) -> dict[Literal, list[Rule]]:
    out: dict[Literal, list[Rule]] = {}
    for r in t.rules:
        out.setdefault(r.head, []).append(r)
    return out


def dependents_of(t: Theory, b: Literal) -> frozenset[Literal]:
    """All literals of the universe that depend on ``b``.

    ``a`` depends on ``b`` when ``a == b`` or every rule for ``a`` has ``b``
    or some literal depending on ``b`` among its antecedents. This is the
    least fixpoint of that condition. A literal without rules satisfies the
    universal condition vacuously, except facts, which stand on their own.
    """
    heads = _rules_by_head(t)
    dep = {b}
    changed = True
    while changed:
        changed = False
        for a in t.universe:
            if a in dep or a in t.facts:
                continue
            if all(r.body & dep for r in heads.get(a, ())):
                dep.add(a)
                changed = True
    return frozenset(dep)


def depends_on(t: Theory, a: Literal, b: Literal) -> bool:
    return a == b or a in dependents_of(t, b)


def unreachable_literals(t: Theory) -> frozenset[Literal]:
    """Literals that no superiority relation can make defeasibly provable.

    A literal is unreachable when each of its rules either needs two
    antecedents that depend on complementary literals, or needs an
    unreachable antecedent. Facts are reachable; non-facts with no rule
    are unreachable.
    """
    heads = _rules_by_head(t)
    deps = {l: dependents_of(t, l) for l in t.universe}

    def clashing(r: Rule) -> bool:
        body = sorted(r.body)
        for l in t.universe:
            if l.negated:
                continue
            pos, neg = deps[l], deps[l.complement()]
            if any(x in pos for x in body) and any(y in neg for y in body):
                return True
        return False

    clash = {r.label for r in t.rules if clashing(r)}
    out: set[Literal] = set()
    changed = True
    while changed:
        changed = False
        for p in t.universe:
            if p in out or p in t.facts:
                continue
            if all(r.label in clash or r.body & out for r in heads.get(p, ())):
                out.add(p)
                changed = True
    return frozenset(out)


def is_unreachable(t: Theory, p: Literal) -> bool:
    if p not in t.universe:
        return p not in t.facts
    return p in unreachable_literals(t)


def atom_graph_acyclic(t: Theory) -> bool:
    """True when the graph from antecedent atoms to head atoms has no cycle."""
    edges = {(b.atom, r.head.atom) for r in t.rules for b in r.body}
    return find_cycle(edges) is None


@dataclass(frozen=True)
class Decisiveness:
    decisive: bool
    atom_graph_acyclic: bool
    undecided: frozenset[Literal]

    def __bool__(self) -> bool:
        return self.decisive


def is_decisive(t: Theory, tags: TagAssignment | None = None) -> Decisiveness:
    tags = tags or compute_tags(t)
    undecided = frozenset(
        l for l in tags.universe if tags.status(Family.PARTIAL, l) is Status.UNDECIDED
    )
    return Decisiveness(not undecided, atom_graph_acyclic(t), undecided)


@dataclass(frozen=True)
class SupportTree:
    """A chain of rules supporting ``root``. ``rule`` is None for a fact."""

    root: Literal
    rule: Rule | None
    children: tuple[SupportTree, ...] = ()

    def rules(self) -> Iterator[Rule]:
        if self.rule is not None:
            yield self.rule
        for c in self.children:
            yield from c.rules()

    def nodes(self) -> Iterator[SupportTree]:
        """Post-order: antecedents before the literal they support."""
        for c in self.children:
            yield from c.nodes()
        yield self

    def __str__(self) -> str:
        if self.rule is None:
            return f"{self.root}"
        if not self.children:
            return f"{self.rule.label}"
        inner = ", ".join(f"{c.root} <- {c}" for c in self.children)
        return f"{self.rule.label}({inner})"


def support_trees(t: Theory, q: Literal, limit: int = 100) -> list[SupportTree]:
    """Distinct support trees for ``q`` in label order, at most ``limit``.

    No literal repeats along a root-to-leaf path, and defeaters never
    support, so the result is nonempty exactly when ``q`` has a chain.
    """
    if limit < 1:
        raise ValueError("limit must be positive")
    heads = {h: [r for r in rs if r.supports] for h, rs in _rules_by_head(t).items()}

    def trees(lit_: Literal, path: frozenset[Literal]) -> Iterator[SupportTree]:
        if lit_ in t.facts:
            yield SupportTree(lit_, None)
        for r in heads.get(lit_, ()):
            body = sorted(r.body)
            if any(b in path or b == lit_ for b in body):
                continue
            below = path | {lit_}
            subs = [lambda b=b: trees(b, below) for b in body]
            for combo in _product(subs):
                yield SupportTree(lit_, r, tuple(combo))

    return list(itertools.islice(trees(q, frozenset()), limit))


def _product(gens) -> Iterator[tuple]:
    """Cartesian product over lazily restarted generators."""
    if not gens:
        yield ()
        return
    first, rest = gens[0], gens[1:]
    for x in first():
        for tail in _product(rest):
            yield (x,) + tail


def conflicting_pairs(t: Theory) -> list[Pair]:
    """Unordered pairs of rules with complementary heads, each sorted, in order."""
    out = set()
    for r in t.rules:
        for s in t.rules:
            if r.head == s.head.complement() and r.label < s.label:
                out.add((r.label, s.label))
    return sorted(out)


def count_superiorities(pairs: Sequence[Pair]) -> int:
    return 3 ** len(pairs)


def _relation(pairs: Sequence[Pair], states: Sequence[int]) -> frozenset[Pair]:
    out = set()
    for (r, s), st in zip(pairs, states):
        if st == 1:
            out.add((r, s))
        elif st == 2:
            out.add((s, r))
    return frozenset(out)


def enumerate_superiorities(
    t: Theory,
    budget: int = DEFAULT_BUDGET,
    pairs: Sequence[Pair] | None = None,
    base: Iterable[Pair] = (),
) -> Iterator[frozenset[Pair]]:
    """Every acyclic relation putting each pair in one of three states.

    A pair ``(r, s)`` is unrelated, ``r > s`` or ``s > r``. ``base`` tuples
    are added to every candidate unchanged. Raises :class:`BudgetExceeded`
    before yielding anything if there are more than ``budget`` candidates.
    """
    pairs = conflicting_pairs(t) if pairs is None else list(pairs)
    need = count_superiorities(pairs)
    if need > budget:
        raise BudgetExceeded(need, budget)
    base = frozenset(base)
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        rel = _relation(pairs, states) | base
        if find_cycle(rel) is None:
            yield rel


class RefutabilityClass(Enum):
    TAUTOLOGICAL = "tautological"
    REFUTABLE = "refutable"
    NEITHER = "neither"
    EXHAUSTED_BUDGET = "exhausted_budget"


@dataclass(frozen=True)
class Refutability:
    literal: Literal
    value: RefutabilityClass
    witness: frozenset[Pair] | None
    examined: int
    required: int

    def report(self) -> str:
        w = "-" if self.witness is None else "{" + ", ".join(f"{a}>{b}" for a, b in sorted(self.witness)) + "}"
        return f"{self.literal}\t{self.value.value}\t{w}\t{self.examined}"


def classify_refutability(
    t: Theory,
    p: Literal,
    budget: int = DEFAULT_BUDGET,
    pairs: Sequence[Pair] | None = None,
    groups: Sequence[Sequence[Pair]] | None = None,
) -> Refutability:
    """Decide whether ``p`` is proven under every relation over the rules of
    ``t`` (tautological) or refuted under at least one (refutable).

    Facts are dropped and the relation of ``t`` ignored: every acyclic
    assignment of the conflicting pairs (or of ``pairs``) is tried. The
    search stops at the first refuting relation, which is the witness.

    ``groups`` replaces ``pairs`` with blocks of oriented pairs that switch
    together: a block is unrelated, all ``r > s``, or all ``s > r``. This is
    exhaustive only when every outcome of the full space is realized by some
    uniform assignment, as for the blocks built by :func:`defrev.sat.generator_groups`.
    """
    bare = Theory(frozenset(), t.rules, frozenset())
    if groups is None:
        pairs = conflicting_pairs(bare) if pairs is None else list(pairs)
        groups = [(pr,) for pr in pairs]
    else:
        groups = [tuple(g) for g in groups]
    need = 3 ** len(groups)
    if need > budget:
        return Refutability(p, RefutabilityClass.EXHAUSTED_BUDGET, None, 0, need)
    ev = Evaluator(bare)
    i = ev.c.universe.index(p) if p in ev.c.universe else None
    examined = 0
    always_plus = True
    for states in itertools.product((0, 1, 2), repeat=len(groups)):
        rel = set()
        for g, st in zip(groups, states):
            if st == 1:
                rel.update(g)
            elif st == 2:
                rel.update((b, a) for a, b in g)
        rel = frozenset(rel)
        if find_cycle(rel) is not None:
            continue
        examined += 1
        if i is None:
            return Refutability(p, RefutabilityClass.REFUTABLE, rel, examined, need)
        v = ev.partial(ev.sup_indices(rel))[i]
        if v == -1:
            return Refutability(p, RefutabilityClass.REFUTABLE, rel, examined, need)
        if v != 1:
            always_plus = False
    value = RefutabilityClass.TAUTOLOGICAL if always_plus else RefutabilityClass.NEITHER
    return Refutability(p, value, None, examined, need)
