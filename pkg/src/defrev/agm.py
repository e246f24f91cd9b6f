"""Belief-change postulates checked against superiority-only revision.

Contraction, revision and expansion are read as minimal-change searches on
the superiority relation: contracting ``p`` reaches ``-partial p``, revising
by ``p`` or expanding by ``p`` reaches ``+partial p``. Sets of literals are
handled as conjunctions of goals.

A postulate is checked on one instance. Operators can have several minimal
outcomes; by default every combination of them is evaluated and the
postulate is violated when some combination breaks it. With
``outcomes="first"`` only the deterministic first outcome of each step is
used.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass
from enum import Enum

from .analysis import DEFAULT_BUDGET
from .engine import BeliefSet, Family, ProofTag, Sign, Status, belief_set, compute_tags
from .revision import OutcomeStatus, search_revision
from .theory import Literal, Theory, find_cycle, serialize_theory

__all__ = [
    "PostulateId",
    "CATALOGUE",
    "ALWAYS_HOLD",
    "VIOLABLE",
    "VerdictStatus",
    "Verdict",
    "Witness",
    "AgmError",
    "InfeasibleOperation",
    "PreconditionNotMet",
    "agm_contract",
    "agm_revise",
    "agm_expand",
    "check_postulate",
    "check_levi",
    "check_harper",
]

PLUS = ProofTag(Sign.PLUS, Family.PARTIAL)
MINUS = ProofTag(Sign.MINUS, Family.PARTIAL)
MAX_COMBINATIONS = 256


class AgmError(ValueError):
    pass


class InfeasibleOperation(AgmError):
    pass


class PreconditionNotMet(AgmError):
    pass


@dataclass(frozen=True, order=True)
class PostulateId:
    family: str
    index: str

    @classmethod
    def parse(cls, text: str) -> PostulateId:
        key = text.strip().replace("−", "-").replace("∗", "*")
        for pid in CATALOGUE:
            if pid.index == key:
                return pid
        raise AgmError(f"unknown postulate {text!r}")

    def __str__(self) -> str:
        return self.index


def _ids(family: str, names: Iterable[str]) -> tuple[PostulateId, ...]:
    return tuple(PostulateId(family, n) for n in names)


CATALOGUE: tuple[PostulateId, ...] = (
    _ids("contraction", ["K-1", "K-2", "K-3", "K-4", "K-4'", "K-5", "K-6", "K-7", "K-8"])
    + _ids("revision", [f"K*{i}" for i in range(1, 9)])
    + _ids("expansion", ["K+1", "K+2", "K+3/4", "K+5", "K+6"])
    + _ids("identity", ["LI", "HI"])
)

ALWAYS_HOLD = tuple(
    PostulateId.parse(x)
    for x in ("K-1", "K-3", "K-6", "K*1", "K*2", "K*5", "K*6", "K+1", "K+2", "K+3/4")
)
VIOLABLE = tuple(
    PostulateId.parse(x) for x in ("K-2", "K-5", "K-7", "K-8", "K*7", "K*8", "K+5", "LI", "HI")
)


class VerdictStatus(Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    NOT_APPLICABLE = "n/a"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class Witness:
    """Named theories whose belief sets break the postulate."""

    theories: tuple[tuple[str, Theory], ...]

    def belief_sets(self) -> dict[str, BeliefSet]:
        return {name: belief_set(t) for name, t in self.theories}

    def report(self) -> str:
        out = []
        for name, t in self.theories:
            bs = belief_set(t)
            out.append(f"# {name}: {bs}")
            out.append(serialize_theory(t))
        return "\n".join(out)


@dataclass(frozen=True)
class Verdict:
    postulate: PostulateId
    status: VerdictStatus
    witnesses: tuple[Witness, ...] = ()
    combinations: int = 0
    note: str = ""

    def __bool__(self) -> bool:
        return self.status is not VerdictStatus.VIOLATED

    @property
    def witness(self) -> Witness | None:
        return self.witnesses[0] if self.witnesses else None

    def report(self, witness_ref: str = "-") -> str:
        ref = witness_ref if self.witnesses else "-"
        return f"{self.postulate}\t{self.status.value}\t{ref}"


# -- operators ---------------------------------------------------------------


def _as_set(p: Literal | Iterable[Literal]) -> tuple[Literal, ...]:
    if isinstance(p, Literal):
        return (p,)
    return tuple(sorted(set(p)))


def _minimal(t: Theory, goals, budget: int) -> list[Theory]:
    outs = search_revision(t, goals, budget, all_minimal=True)
    if not outs or outs[0].status is not OutcomeStatus.OK:
        status = outs[0].status.value if outs else "infeasible"
        raise InfeasibleOperation(f"no superiority relation reaches {_goal_text(goals)} ({status})")
    return [o.theory for o in outs]


def _goal_text(goals) -> str:
    return ", ".join(f"{tag} {l}" for tag, l in goals)


def _status(t: Theory, l: Literal, fam: Family = Family.PARTIAL) -> Status:
    return compute_tags(t).status(fam, l)


def _contract_all(t, p, budget=DEFAULT_BUDGET) -> list[Theory]:
    return _minimal(t, [(MINUS, x) for x in _as_set(p)], budget)


def _plus_all(t, p, budget=DEFAULT_BUDGET) -> list[Theory]:
    return _minimal(t, [(PLUS, x) for x in _as_set(p)], budget)


def agm_contract(
    t: Theory, p: Literal | Iterable[Literal], budget: int = DEFAULT_BUDGET
) -> tuple[Theory, BeliefSet]:
    """Minimal change refuting every literal of ``p``, which must be believed."""
    for x in _as_set(p):
        if _status(t, x) is not Status.PLUS:
            raise PreconditionNotMet(f"{x} is not believed")
    out = _contract_all(t, p, budget)[0]
    return out, belief_set(out)


def agm_revise(
    t: Theory, p: Literal | Iterable[Literal], budget: int = DEFAULT_BUDGET
) -> tuple[Theory, BeliefSet]:
    """Minimal change proving every literal of ``p``, whose complements must
    be believed and which must have chains."""
    tags = compute_tags(t)
    for x in _as_set(p):
        if tags.status(Family.PARTIAL, x.complement()) is not Status.PLUS:
            raise PreconditionNotMet(f"{x.complement()} is not believed")
        if tags.status(Family.CHAIN, x) is not Status.PLUS:
            raise PreconditionNotMet(f"{x} has no chain")
    out = _plus_all(t, p, budget)[0]
    return out, belief_set(out)


def agm_expand(
    t: Theory, p: Literal | Iterable[Literal], budget: int = DEFAULT_BUDGET
) -> tuple[Theory, BeliefSet]:
    """Minimal change proving every literal of ``p``; neither it nor its
    complement may be believed."""
    tags = compute_tags(t)
    for x in _as_set(p):
        for y in (x, x.complement()):
            if tags.status(Family.PARTIAL, y) is not Status.MINUS:
                raise PreconditionNotMet(f"{y} is not disbelieved")
        if tags.status(Family.CHAIN, x) is not Status.PLUS:
            raise PreconditionNotMet(f"{x} has no chain")
    out = _plus_all(t, p, budget)[0]
    return out, belief_set(out)


# -- postulate checks --------------------------------------------------------


def _subset(a: Iterable, b: Iterable) -> bool:
    return set(a) <= set(b)


class _Ctx:
    def __init__(self, budget: int, first_only: bool):
        self.budget = budget
        self.first_only = first_only
        self._memo: dict = {}

    def _run(self, kind: str, t: Theory, p) -> list[Theory]:
        key = (kind, t, _as_set(p))
        if key not in self._memo:
            fn = _contract_all if kind == "-" else _plus_all
            outs = fn(t, p, self.budget)
            self._memo[key] = outs[:1] if self.first_only else outs
        return self._memo[key]

    def contract(self, t, p):
        return self._run("-", t, p)

    def plus(self, t, p):
        return self._run("+", t, p)


Combo = tuple[bool, tuple[tuple[str, Theory], ...]]
Check = Callable[[_Ctx, Theory, Literal, "Literal | None", "Theory | None"], Iterator[Combo]]


def _bs(t: Theory) -> BeliefSet:
    return belief_set(t)


def _acyclic_each(outs: list[Theory], name: str) -> Iterator[Combo]:
    for o in outs:
        yield find_cycle(o.superiority) is None, ((name, o),)


def _k_minus_1(c, t, p, q, other):
    yield from _acyclic_each(c.contract(t, p), "D-p")


def _k_minus_2(c, t, p, q, other):
    b = _bs(t)
    for o in c.contract(t, p):
        bo = _bs(o)
        ok = _subset(bo.believed, b.believed) and _subset(b.disbelieved, bo.disbelieved)
        yield ok, (("D", t), ("D-p", o))


def _k_minus_3(c, t, p, q, other):
    if _status(t, p) is not Status.MINUS:
        return
    b = _bs(t)
    for o in c.contract(t, p):
        yield _bs(o) == b, (("D", t), ("D-p", o))


def _k_minus_4(family: Family):
    def check(c, t, p, q, other):
        try:
            outs = c.contract(t, p)
        except InfeasibleOperation:
            outs = [t]
        for o in outs:
            kept = _bs(o).believed
            if p in kept:
                yield _status(t, p, family) is Status.PLUS, (("D", t), ("D-p", o))
            else:
                yield True, (("D-p", o),)

    return check


def _k_minus_5(c, t, p, q, other):
    b = _bs(t)
    for o in c.contract(t, p):
        for o2 in c.plus(o, p):
            yield _subset(b.all, _bs(o2).all), (("D", t), ("D-p", o), ("(D-p)+p", o2))


def _same_literal(check: Callable[[list[Theory], list[Theory]], bool], op: str):
    def run(c, t, p, q, other):
        if q is not None and q != p:
            return
        fn = c.contract if op == "-" else c.plus
        a, b = fn(t, p), fn(t, p if q is None else q)
        yield check(a, b), tuple((f"D{op}p#{i}", o) for i, o in enumerate(a))

    return run


def _pair(q):
    if q is None:
        raise AgmError("this postulate needs a second literal q")
    return q


def _k_minus_7(c, t, p, q, other):
    q = _pair(q)
    for a in c.contract(t, p):
        for b in c.contract(t, q):
            for ab in c.contract(t, {p, q}):
                A, B, AB = _bs(a), _bs(b), _bs(ab)
                ok = _subset(A.believed & B.believed, AB.believed) and _subset(
                    AB.disbelieved, A.disbelieved & B.disbelieved
                )
                yield ok, (("D-p", a), ("D-q", b), ("D-pq", ab))


def _k_minus_8(c, t, p, q, other):
    q = _pair(q)
    for a in c.contract(t, p):
        for ab in c.contract(t, {p, q}):
            A, AB = _bs(a), _bs(ab)
            if p not in AB.disbelieved:
                yield True, (("D-pq", ab),)
                continue
            ok = _subset(AB.believed, A.believed) and _subset(A.disbelieved, AB.disbelieved)
            yield ok, (("D-p", a), ("D-pq", ab))


def _k_star_1(c, t, p, q, other):
    yield from _acyclic_each(c.plus(t, p), "D*p")


def _k_star_2(c, t, p, q, other):
    for o in c.plus(t, p):
        yield p in _bs(o).believed, (("D*p", o),)


def _k_star_3(c, t, p, q, other):
    for r in c.plus(t, p):
        for e in c.plus(t, p):
            yield _subset(_bs(r).believed, _bs(e).believed), (("D*p", r), ("D+p", e))


def _k_star_4(c, t, p, q, other):
    if p.complement() not in _bs(t).disbelieved:
        return
    for r in c.plus(t, p):
        for e in c.plus(t, p):
            yield _subset(_bs(e).believed, _bs(r).believed), (("D*p", r), ("D+p", e))


def _k_star_5(c, t, p, q, other):
    for o in c.plus(t, p):
        kept = _bs(o).believed
        yield not any(l.complement() in kept for l in kept), (("D*p", o),)


def _k_star_7(c, t, p, q, other):
    q = _pair(q)
    for both in c.plus(t, {p, q}):
        for r in c.plus(t, p):
            for rq in c.plus(r, q):
                B, RQ = _bs(both), _bs(rq)
                ok = _subset(B.believed, RQ.believed) and _subset(RQ.disbelieved, B.disbelieved)
                yield ok, (("D*pq", both), ("D*p", r), ("(D*p)+q", rq))


def _k_star_8(c, t, p, q, other):
    q = _pair(q)
    for r in c.plus(t, p):
        if q.complement() not in _bs(r).disbelieved:
            yield True, (("D*p", r),)
            continue
        for both in c.plus(t, {p, q}):
            for rq in c.plus(r, q):
                B, RQ = _bs(both), _bs(rq)
                ok = _subset(RQ.believed, B.believed) and _subset(B.disbelieved, RQ.disbelieved)
                yield ok, (("D*pq", both), ("D*p", r), ("(D*p)+q", rq))


def _k_plus_1(c, t, p, q, other):
    yield from _acyclic_each(c.plus(t, p), "D+p")


def _k_plus_2(c, t, p, q, other):
    for o in c.plus(t, p):
        yield p in _bs(o).believed, (("D+p", o),)


def _k_plus_34(c, t, p, q, other):
    b = _bs(t)
    if p not in b.believed:
        return
    for o in c.plus(t, p):
        yield _bs(o) == b, (("T", t), ("T+p", o))


def _k_plus_5(c, t, p, q, other):
    if other is None:
        raise AgmError("K+5 needs a second theory")
    if not _subset(_bs(t).believed, _bs(other).believed):
        return
    for a in c.plus(t, p):
        for b in c.plus(other, p):
            yield _subset(_bs(a).believed, _bs(b).believed), (
                ("D", t), ("D'", other), ("D+p", a), ("D'+p", b),
            )


def _levi(c, t, p, q, other):
    for r in c.plus(t, p):
        for k in c.contract(t, p.complement()):
            for ke in c.plus(k, p):
                yield _bs(r) == _bs(ke), (("D*p", r), ("D-~p", k), ("(D-~p)+p", ke))


def _harper(c, t, p, q, other):
    b = _bs(t)
    for k in c.contract(t, p):
        for r in c.plus(t, p.complement()):
            R, K = _bs(r), _bs(k)
            ok = K.believed == R.believed & b.believed and K.disbelieved == R.disbelieved & b.disbelieved
            yield ok, (("D", t), ("D-p", k), ("D*~p", r))


def _same_sets(a: list[Theory], b: list[Theory]) -> bool:
    return {_bs(x).all for x in a} == {_bs(x).all for x in b}


_CHECKS: dict[str, Check] = {
    "K-1": _k_minus_1,
    "K-2": _k_minus_2,
    "K-3": _k_minus_3,
    "K-4": _k_minus_4(Family.DELTA),
    "K-4'": _k_minus_4(Family.PHI),
    "K-5": _k_minus_5,
    "K-6": _same_literal(_same_sets, "-"),
    "K-7": _k_minus_7,
    "K-8": _k_minus_8,
    "K*1": _k_star_1,
    "K*2": _k_star_2,
    "K*3": _k_star_3,
    "K*4": _k_star_4,
    "K*5": _k_star_5,
    "K*6": _same_literal(_same_sets, "*"),
    "K*7": _k_star_7,
    "K*8": _k_star_8,
    "K+1": _k_plus_1,
    "K+2": _k_plus_2,
    "K+3/4": _k_plus_34,
    "K+5": _k_plus_5,
    "LI": _levi,
    "HI": _harper,
}


def _assumption(pid: PostulateId, t: Theory, p: Literal, q: Literal | None) -> str | None:
    """Why the standing assumptions of the postulate's family fail, or None."""
    tags = compute_tags(t)
    st = lambda l, fam=Family.PARTIAL: tags.status(fam, l)  # noqa: E731
    lits = [p] if q is None or pid.index in ("K-6", "K*6") else [p, q]
    if pid.index in ("K-3", "K-4", "K-4'", "K+3/4"):
        return None
    if pid.family == "contraction" or pid.index == "HI":
        bad = [l for l in lits if st(l) is not Status.PLUS]
        return f"{bad[0]} is not believed" if bad else None
    if pid.family == "revision" or pid.index == "LI":
        for l in lits[:1]:
            if st(l.complement()) is not Status.PLUS:
                return f"{l.complement()} is not believed"
            if st(l, Family.CHAIN) is not Status.PLUS:
                return f"{l} has no chain"
        return None
    for l in lits[:1]:
        if st(l) is not Status.MINUS or st(l.complement()) is not Status.MINUS:
            return f"{l} or {l.complement()} is believed"
        if st(l, Family.CHAIN) is not Status.PLUS:
            return f"{l} has no chain"
    return None


def check_postulate(
    pid: PostulateId | str,
    t: Theory,
    p: Literal,
    q: Literal | None = None,
    *,
    other: Theory | None = None,
    outcomes: str = "all",
    budget: int = DEFAULT_BUDGET,
    max_combinations: int = MAX_COMBINATIONS,
) -> Verdict:
    """Evaluate one postulate on ``(t, p[, q])``.

    ``other`` is the second theory that K+5 compares against. Instances
    outside the family's standing assumptions are ``n/a``; an operator with
    no outcome gives ``infeasible``.
    """
    if isinstance(pid, str):
        pid = PostulateId.parse(pid)
    if outcomes not in ("all", "first"):
        raise ValueError("outcomes must be 'all' or 'first'")
    if pid.index == "K+6":
        return Verdict(pid, VerdictStatus.NOT_APPLICABLE, note="minimality of a tagged belief set is undefined")
    why = _assumption(pid, t, p, q)
    if why is not None:
        return Verdict(pid, VerdictStatus.NOT_APPLICABLE, note=why)
    if pid.index == "K+5" and other is not None:
        why = _assumption(pid, other, p, None)
        if why is not None:
            return Verdict(pid, VerdictStatus.NOT_APPLICABLE, note="second theory: " + why)
    ctx = _Ctx(budget, outcomes == "first")
    bad: list[Witness] = []
    n = 0
    try:
        for ok, named in itertools.islice(_CHECKS[pid.index](ctx, t, p, q, other), max_combinations):
            n += 1
            if not ok:
                bad.append(Witness(named))
    except InfeasibleOperation as exc:
        return Verdict(pid, VerdictStatus.INFEASIBLE, note=str(exc))
    status = VerdictStatus.VIOLATED if bad else VerdictStatus.HOLDS
    return Verdict(pid, status, tuple(bad), n)


def check_levi(t: Theory, p: Literal, **kw) -> Verdict:
    return check_postulate("LI", t, p, **kw)


def check_harper(t: Theory, p: Literal, **kw) -> Verdict:
    return check_postulate("HI", t, p, **kw)
