"""Bottom-up computation of the six proof-tag families.

Families are evaluated in strata: definite (delta) first, then defeasible
(partial), chain (Sigma), omega, support (sigma) and phi. Inside a stratum
the positive and negative conditions are applied together with a worklist
until nothing changes. Both conditions only ever test membership in the set
of conclusions proven so far, so the result is a unique least fixpoint and
anything never proven either way stays undecided.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .theory import Literal, RuleKind, Theory

__all__ = [
    "Family",
    "Sign",
    "ProofTag",
    "Status",
    "TagAssignment",
    "Extension",
    "BeliefSet",
    "Evaluator",
    "compute_tags",
    "extension",
    "belief_set",
    "proves",
    "is_consistent",
    "format_tags",
]


class Family(Enum):
    DELTA = "delta"
    PHI = "phi"
    PARTIAL = "partial"
    OMEGA = "omega"
    SUPPORT = "support"
    CHAIN = "chain"

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]


_SYMBOLS = {
    Family.DELTA: "Δ",
    Family.PHI: "φ",
    Family.PARTIAL: "∂",
    Family.OMEGA: "ω",
    Family.SUPPORT: "σ",
    Family.CHAIN: "Σ",
}

# report order, strongest first
FAMILY_ORDER = (Family.DELTA, Family.PHI, Family.PARTIAL, Family.OMEGA, Family.SUPPORT, Family.CHAIN)


class Sign(Enum):
    PLUS = "+"
    MINUS = "-"


@dataclass(frozen=True)
class ProofTag:
    sign: Sign
    family: Family

    @classmethod
    def parse(cls, text: str) -> ProofTag:
        """Accept ``+partial``, ``-chain``, ``+∂`` and similar spellings."""
        text = text.strip()
        if not text or text[0] not in "+-−":
            raise ValueError(f"proof tag needs a sign: {text!r}")
        sign = Sign.PLUS if text[0] == "+" else Sign.MINUS
        name = text[1:]
        for fam in Family:
            if name in (fam.value, fam.symbol):
                return cls(sign, fam)
        aliases = {"sigma": Family.SUPPORT, "Sigma": Family.CHAIN, "d": Family.PARTIAL}
        if name in aliases:
            return cls(sign, aliases[name])
        raise ValueError(f"unknown proof tag {text!r}")

    def __str__(self) -> str:
        return self.sign.value + self.family.value

    @property
    def symbol(self) -> str:
        return self.sign.value + self.family.symbol


PLUS_PARTIAL = ProofTag(Sign.PLUS, Family.PARTIAL)
MINUS_PARTIAL = ProofTag(Sign.MINUS, Family.PARTIAL)


class Status(Enum):
    PLUS = 1
    MINUS = -1
    UNDECIDED = 0


@dataclass(frozen=True)
class TagAssignment:
    universe: tuple[Literal, ...]
    table: dict[Family, tuple[int, ...]]

    @cached_property
    def _index(self) -> dict[Literal, int]:
        return {l: i for i, l in enumerate(self.universe)}

    def status(self, family: Family, literal: Literal) -> Status:
        i = self._index.get(literal)
        if i is None:
            # a literal foreign to the theory has no rules and is no fact
            return Status.MINUS
        return Status(self.table[family][i])

    def holds(self, tag: ProofTag, literal: Literal) -> bool:
        want = Status.PLUS if tag.sign is Sign.PLUS else Status.MINUS
        return self.status(tag.family, literal) is want

    def plus(self, family: Family) -> frozenset[Literal]:
        col = self.table[family]
        return frozenset(l for l, v in zip(self.universe, col) if v == 1)

    def minus(self, family: Family) -> frozenset[Literal]:
        col = self.table[family]
        return frozenset(l for l, v in zip(self.universe, col) if v == -1)

    def tags_of(self, literal: Literal) -> list[ProofTag]:
        out = []
        for fam in FAMILY_ORDER:
            s = self.status(fam, literal)
            if s is Status.PLUS:
                out.append(ProofTag(Sign.PLUS, fam))
            elif s is Status.MINUS:
                out.append(ProofTag(Sign.MINUS, fam))
        return out


@dataclass(frozen=True)
class Extension:
    plus_partial: frozenset[Literal]
    minus_partial: frozenset[Literal]


@dataclass(frozen=True)
class BeliefSet:
    believed: frozenset[Literal]
    disbelieved: frozenset[Literal]

    @property
    def all(self) -> frozenset[tuple[str, Literal]]:
        """Both halves as one set of signed entries, for set algebra."""
        return frozenset({("+", l) for l in self.believed} | {("-", l) for l in self.disbelieved})

    def __str__(self) -> str:
        b = ", ".join(str(l) for l in sorted(self.believed))
        d = ", ".join(str(l) for l in sorted(self.disbelieved))
        return f"+{{{b}}} -{{{d}}}"


class _Compiled:
    """Integer-indexed view of a theory: literal ``i`` has complement ``i ^ 1``."""

    def __init__(self, t: Theory):
        self.universe = t.universe
        index = {l: i for i, l in enumerate(self.universe)}
        n = len(self.universe)
        self.n = n
        self.fact = [False] * n
        for f in t.facts:
            self.fact[index[f]] = True
        self.strict_for: list[list[int]] = [[] for _ in range(n)]
        self.sd_for: list[list[int]] = [[] for _ in range(n)]
        self.all_for: list[list[int]] = [[] for _ in range(n)]
        self.used_by: list[list[int]] = [[] for _ in range(n)]
        self.body: list[tuple[int, ...]] = []
        self.head: list[int] = []
        rule_index = {}
        for k, r in enumerate(t.rules):
            rule_index[r.label] = k
            h = index[r.head]
            self.head.append(h)
            self.body.append(tuple(index[b] for b in sorted(r.body)))
            self.all_for[h].append(k)
            if r.kind is not RuleKind.DEFEATER:
                self.sd_for[h].append(k)
            if r.kind is RuleKind.STRICT:
                self.strict_for[h].append(k)
            for b in self.body[k]:
                self.used_by[b].append(k)
        self.sup = {(rule_index[a], rule_index[b]) for a, b in t.superiority}
        # literals whose conditions read the status of literal i
        self.readers: list[list[int]] = []
        for i in range(n):
            hs = {self.head[k] for k in self.used_by[i]}
            self.readers.append(sorted(hs | {h ^ 1 for h in hs}))


def _fixpoint(c: _Compiled, evaluate: Callable[[int, list[int]], int]) -> list[int]:
    state = [0] * c.n
    queue = deque(range(c.n))
    queued = [True] * c.n
    while queue:
        q = queue.popleft()
        queued[q] = False
        if state[q]:
            continue
        v = evaluate(q, state)
        if v:
            state[q] = v
            for x in c.readers[q]:
                if not state[x] and not queued[x]:
                    queued[x] = True
                    queue.append(x)
    return state


def _all(vals: list[int], lits: Iterable[int], want: int) -> bool:
    return all(vals[a] == want for a in lits)


def _any(vals: list[int], lits: Iterable[int], want: int) -> bool:
    return any(vals[a] == want for a in lits)


class Evaluator:
    """Reusable evaluation of one rule base under varying superiority relations.

    The definite, chain and phi families never consult the superiority
    relation, so they are computed once; :meth:`run` recomputes only the
    families that do.
    """

    def __init__(self, t: Theory):
        self.theory = t
        c = self.c = _Compiled(t)
        self.rule_index = {r.label: k for k, r in enumerate(t.rules)}
        body = c.body

        def delta(q, D):
            if c.fact[q] or any(_all(D, body[r], 1) for r in c.strict_for[q]):
                return 1
            if all(_any(D, body[r], -1) for r in c.strict_for[q]):
                return -1
            return 0

        D = self.D = _fixpoint(c, delta)
        self._mine = [[(r, body[r]) for r in c.sd_for[q]] for q in range(c.n)]
        self._theirs = [[(s, body[s]) for s in c.all_for[q]] for q in range(c.n)]

        def chain(q, S):
            if D[q] == 1 or any(_all(S, body[r], 1) for r in c.sd_for[q]):
                return 1
            if all(_any(S, body[r], -1) for r in c.sd_for[q]):
                return -1
            return 0

        S = self.S = _fixpoint(c, chain)

        def phi(q, F):
            if D[q] == 1:
                return 1
            nq = q ^ 1
            theirs = c.all_for[nq]
            # a definite proof of the complement is an attack no chain escapes
            unattacked = all(_any(S, body[s], -1) for s in theirs)
            if D[nq] != 1 and unattacked and any(_all(F, body[r], 1) for r in c.sd_for[q]):
                return 1
            attacked = any(_all(S, body[s], 1) for s in theirs)
            if D[nq] == 1 or all(_any(F, body[r], -1) or attacked for r in c.sd_for[q]):
                return -1
            return 0

        self.Ph = _fixpoint(c, phi)

    def sup_indices(self, pairs: Iterable[tuple[str, str]]) -> set[tuple[int, int]]:
        ix = self.rule_index
        return {(ix[a], ix[b]) for a, b in pairs}

    def partial(self, sup: Iterable[tuple[int, int]]) -> list[int]:
        c, D = self.c, self.D
        beaten_by: dict[int, set[int]] = {}
        for u, s in sup:
            beaten_by.setdefault(s, set()).add(u)
        mine_of, theirs_of = self._mine, self._theirs
        none: set[int] = set()

        def partial(q, P):
            if D[q] == 1:
                return 1
            nq = q ^ 1
            mine = mine_of[q]
            applicable = []
            all_discarded = True
            for r, body in mine:
                st = 1
                for a in body:
                    v = P[a]
                    if v == -1:
                        st = -1
                        break
                    if v == 0:
                        st = 0
                if st == 1:
                    applicable.append(r)
                if st != -1:
                    all_discarded = False
            if D[nq] == 1 or all_discarded:
                return -1
            theirs = theirs_of[nq]
            if D[nq] == -1 and applicable:
                win = True
                for s, body in theirs:
                    if beaten_by.get(s, none).isdisjoint(applicable):
                        for a in body:
                            if P[a] == -1:
                                break
                        else:
                            win = False
                            break
                if win:
                    return 1
            for s, body in theirs:
                for a in body:
                    if P[a] != 1:
                        break
                else:
                    over = beaten_by.get(s, none)
                    blocked = False
                    for u, ubody in mine:
                        if u in over:
                            for a in ubody:
                                if P[a] == -1:
                                    break
                            else:
                                blocked = True
                                break
                    if not blocked:
                        return -1
            return 0

        return _fixpoint(c, partial)

    def run(self, superiority: Iterable[tuple[str, str]] | None = None) -> TagAssignment:
        c, D, body = self.c, self.D, self.c.body
        pairs = self.theory.superiority if superiority is None else superiority
        sup = self.sup_indices(pairs)
        P = self.partial(sup)

        W = [0] * c.n
        for q in range(c.n):
            if D[q] == 1 or any(_all(P, body[r], 1) for r in c.sd_for[q]):
                W[q] = 1
            elif all(_any(P, body[r], -1) for r in c.sd_for[q]):
                W[q] = -1

        def support(q, s_):
            if D[q] == 1:
                return 1
            theirs = c.all_for[q ^ 1]

            def undefeated(r):
                return all(_any(P, body[s], -1) or (s, r) not in sup for s in theirs)

            def overridden(r):
                return any(_all(P, body[s], 1) and (s, r) in sup for s in theirs)

            if any(_all(s_, body[r], 1) and undefeated(r) for r in c.sd_for[q]):
                return 1
            if all(_any(s_, body[r], -1) or overridden(r) for r in c.sd_for[q]):
                return -1
            return 0

        Sg = _fixpoint(c, support)

        table = {
            Family.DELTA: tuple(self.D),
            Family.PARTIAL: tuple(P),
            Family.CHAIN: tuple(self.S),
            Family.OMEGA: tuple(W),
            Family.SUPPORT: tuple(Sg),
            Family.PHI: tuple(self.Ph),
        }
        return TagAssignment(c.universe, table)


def compute_tags(t: Theory) -> TagAssignment:
    """Every tag family for every literal of the universe of ``t``."""
    return Evaluator(t).run()


def extension(t: Theory, tags: TagAssignment | None = None) -> Extension:
    tags = tags or compute_tags(t)
    return Extension(tags.plus(Family.PARTIAL), tags.minus(Family.PARTIAL))


def belief_set(t: Theory, tags: TagAssignment | None = None) -> BeliefSet:
    """Defeasibly proven and refuted literals among those written in ``t``."""
    ext = extension(t, tags)
    seen = t.appearing
    return BeliefSet(ext.plus_partial & seen, ext.minus_partial & seen)


def proves(t: Theory, tag: ProofTag, literal: Literal, tags: TagAssignment | None = None) -> bool:
    tags = tags or compute_tags(t)
    return tags.holds(tag, literal)


def is_consistent(t: Theory, tags: TagAssignment | None = None) -> bool:
    """False iff some literal and its complement are both defeasibly proven
    without both being definitely proven."""
    tags = tags or compute_tags(t)
    plus = tags.plus(Family.PARTIAL)
    definite = tags.plus(Family.DELTA)
    for p in plus:
        if p.complement() in plus and not (p in definite and p.complement() in definite):
            return False
    return True


def format_tags(tags: TagAssignment, literals: Iterable[Literal] | None = None) -> str:
    """One ``lit<TAB>+tags<TAB>-tags`` line per literal."""
    lines = []
    for l in sorted(literals if literals is not None else tags.universe):
        got = tags.tags_of(l)
        pos = ",".join(g.symbol for g in got if g.sign is Sign.PLUS)
        neg = ",".join(g.symbol for g in got if g.sign is Sign.MINUS)
        lines.append(f"{l}\t{pos}\t{neg}")
    return "\n".join(lines) + ("\n" if lines else "")
