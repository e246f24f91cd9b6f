"""Propositional defeasible theories: literals, rules, superiority, text format.

A theory is a triple of facts, rules and a superiority relation over rule
labels. Values are immutable; editing the superiority relation produces a new
theory via :meth:`Theory.with_superiority`.

Text format::

    # comment
    facts: a, ~b.
    r1: a, ~b => c.
    r2: -> d.
    r3: d ~> ~c.
    r1 > r3.
"""

from __future__ import annotations

import re
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

__all__ = [
    "Literal",
    "Rule",
    "RuleKind",
    "Theory",
    "TheoryError",
    "ParseError",
    "Restrict",
    "lit",
    "complement",
    "check_acyclic",
    "find_cycle",
    "parse_theory",
    "serialize_theory",
    "rules_for",
]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class TheoryError(ValueError):
    """A theory violates one of its structural invariants."""


class ParseError(TheoryError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True, order=True)
class Literal:
    """An atom or its strong negation. Orders by atom, positive first."""

    atom: str
    negated: bool = False

    def __post_init__(self):
        if not _IDENT.match(self.atom):
            raise TheoryError(f"invalid atom {self.atom!r}")

    def complement(self) -> Literal:
        return Literal(self.atom, not self.negated)

    def __str__(self) -> str:
        return ("~" if self.negated else "") + self.atom

    def __repr__(self) -> str:
        return f"Literal({str(self)!r})"


def lit(text: str) -> Literal:
    """Build a literal from ``"a"`` or ``"~a"``."""
    text = text.strip()
    if text.startswith("~"):
        return Literal(text[1:].strip(), True)
    return Literal(text)


def complement(literal: Literal) -> Literal:
    return literal.complement()


class RuleKind(Enum):
    STRICT = "->"
    DEFEASIBLE = "=>"
    DEFEATER = "~>"

    @property
    def arrow(self) -> str:
        return self.value


class Restrict(Enum):
    ALL = "all"
    STRICT = "strict"
    STRICT_AND_DEFEASIBLE = "strict_and_defeasible"


@dataclass(frozen=True)
class Rule:
    label: str
    body: frozenset[Literal]
    kind: RuleKind
    head: Literal

    def __post_init__(self):
        if not _IDENT.match(self.label):
            raise TheoryError(f"invalid rule label {self.label!r}")
        object.__setattr__(self, "body", frozenset(self.body))

    @property
    def supports(self) -> bool:
        """Strict and defeasible rules can build chains; defeaters cannot."""
        return self.kind is not RuleKind.DEFEATER

    def __str__(self) -> str:
        body = ", ".join(str(b) for b in sorted(self.body))
        sep = " " if body else ""
        return f"{self.label}: {body}{sep}{self.kind.arrow} {self.head}."


Pair = tuple[str, str]


def find_cycle(pairs: Iterable[Pair]) -> list[str] | None:
    """Return the labels of one cycle in the digraph ``pairs``, or None."""
    succ: dict[str, list[str]] = {}
    for a, b in pairs:
        succ.setdefault(a, []).append(b)
        succ.setdefault(b, [])
    for node in succ:
        succ[node].sort()
    colour = dict.fromkeys(succ, 0)
    for root in sorted(succ):
        if colour[root]:
            continue
        colour[root] = 1
        path = [root]
        stack = [iter(succ[root])]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                colour[path.pop()] = 2
                stack.pop()
                continue
            if colour[nxt] == 1:
                return path[path.index(nxt):]
            if colour[nxt] == 0:
                colour[nxt] = 1
                path.append(nxt)
                stack.append(iter(succ[nxt]))
    return None


def check_acyclic(pairs: Iterable[Pair], labels: Iterable[str] | None = None) -> bool:
    """True iff the relation has no cycle (a self-pair counts as one).

    When ``labels`` is given, every pair must mention known labels only.
    """
    pairs = list(pairs)
    if labels is not None:
        known = set(labels)
        for a, b in pairs:
            for x in (a, b):
                if x not in known:
                    raise TheoryError(f"unknown rule label {x!r} in superiority")
    return find_cycle(pairs) is None


@dataclass(frozen=True)
class Theory:
    facts: frozenset[Literal] = frozenset()
    rules: tuple[Rule, ...] = ()
    superiority: frozenset[Pair] = frozenset()
    _by_label: dict[str, Rule] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        facts = frozenset(self.facts)
        rules = tuple(sorted(self.rules, key=lambda r: r.label))
        sup = frozenset((str(a), str(b)) for a, b in self.superiority)
        by_label: dict[str, Rule] = {}
        for r in rules:
            if r.label in by_label:
                raise TheoryError(f"duplicate rule label {r.label!r}")
            by_label[r.label] = r
        for f in facts:
            if f.complement() in facts:
                raise TheoryError(f"inconsistent facts: {f} and {f.complement()}")
        for a, b in sup:
            if a == b:
                raise TheoryError(f"superiority pair ({a},{b}) is reflexive")
        if not check_acyclic(sup, by_label):
            cycle = find_cycle(sup)
            raise TheoryError("cyclic superiority: " + " > ".join(cycle + cycle[:1]))
        object.__setattr__(self, "facts", facts)
        object.__setattr__(self, "rules", rules)
        object.__setattr__(self, "superiority", sup)
        object.__setattr__(self, "_by_label", by_label)

    def rule(self, label: str) -> Rule:
        return self._by_label[label]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self._by_label)

    def with_superiority(self, pairs: Iterable[Pair]) -> Theory:
        return Theory(self.facts, self.rules, frozenset(pairs))

    @cached_property
    def appearing(self) -> frozenset[Literal]:
        """Literals written somewhere in the theory."""
        out = set(self.facts)
        for r in self.rules:
            out.add(r.head)
            out.update(r.body)
        return frozenset(out)

    @cached_property
    def universe(self) -> tuple[Literal, ...]:
        """Appearing literals closed under complement, in canonical order."""
        atoms = sorted({l.atom for l in self.appearing})
        return tuple(Literal(a, neg) for a in atoms for neg in (False, True))

    @property
    def is_defeasible_only(self) -> bool:
        return all(r.kind is RuleKind.DEFEASIBLE for r in self.rules)

    def __str__(self) -> str:
        return serialize_theory(self)


def rules_for(t: Theory, q: Literal, restrict: Restrict = Restrict.ALL) -> frozenset[Rule]:
    if restrict is Restrict.STRICT:
        kinds = {RuleKind.STRICT}
    elif restrict is Restrict.STRICT_AND_DEFEASIBLE:
        kinds = {RuleKind.STRICT, RuleKind.DEFEASIBLE}
    else:
        kinds = set(RuleKind)
    return frozenset(r for r in t.rules if r.head == q and r.kind in kinds)


# -- text format -----------------------------------------------------------

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<arrow>->|=>|~>)|(?P<neg>~)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<punct>[,:.>])"
)


def _tokens(text: str):
    line, col, pos = 1, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind == "nl":
            line, col = line + 1, 1
        else:
            if kind not in ("ws", "comment"):
                yield (value if kind == "punct" else kind, value, line, col)
            col += len(value)
        pos = m.end()
    yield ("eof", "", line, col)


class _Parser:
    def __init__(self, text: str):
        self.toks = list(_tokens(text))
        self.i = 0

    def peek(self, ahead: int = 0):
        return self.toks[min(self.i + ahead, len(self.toks) - 1)]

    def take(self, kind: str, what: str | None = None):
        tok = self.peek()
        if tok[0] != kind:
            found = tok[1] or "end of input"
            raise ParseError(f"expected {what or kind}, found {found!r}", tok[2], tok[3])
        self.i += 1
        return tok

    def literal(self) -> Literal:
        negated = False
        if self.peek()[0] == "neg":
            self.i += 1
            negated = True
        return Literal(self.take("ident", "literal")[1], negated)

    def literals_until(self, stops: tuple[str, ...]) -> list[tuple[Literal, tuple[int, int]]]:
        out = []
        if self.peek()[0] in stops:
            return out
        while True:
            tok = self.peek()
            out.append((self.literal(), (tok[2], tok[3])))
            if self.peek()[0] != ",":
                return out
            self.i += 1

    def parse(self) -> Theory:
        facts: dict[Literal, tuple[int, int]] = {}
        rules: list[Rule] = []
        seen: dict[str, tuple[int, int]] = {}
        sup: list[tuple[str, str, int, int]] = []
        while self.peek()[0] != "eof":
            head = self.take("ident", "statement")
            nxt = self.peek()[0]
            if head[1] == "facts" and nxt == ":" and self._is_fact_stmt():
                self.i += 1
                for f, pos in self.literals_until((".",)):
                    facts.setdefault(f, pos)
                self.take(".", "'.'")
            elif nxt == ":":
                self.i += 1
                body = self.literals_until(("arrow",))
                arrow = self.take("arrow", "arrow")
                concl = self.literal()
                self.take(".", "'.'")
                if head[1] in seen:
                    raise ParseError(f"duplicate rule label {head[1]!r}", head[2], head[3])
                seen[head[1]] = (head[2], head[3])
                rules.append(Rule(head[1], frozenset(b for b, _ in body), RuleKind(arrow[1]), concl))
            elif nxt == ">":
                self.i += 1
                loser = self.take("ident", "rule label")[1]
                self.take(".", "'.'")
                sup.append((head[1], loser, head[2], head[3]))
            else:
                tok = self.peek()
                raise ParseError(f"expected ':' or '>', found {tok[1] or 'end of input'!r}", tok[2], tok[3])
        for f, (line, col) in facts.items():
            if f.complement() in facts:
                raise ParseError(f"inconsistent facts: {f} and {f.complement()}", line, col)
        for a, b, line, col in sup:
            for x in (a, b):
                if x not in seen:
                    raise ParseError(f"superiority names unknown rule {x!r}", line, col)
        try:
            return Theory(frozenset(facts), tuple(rules), frozenset((a, b) for a, b, _, _ in sup))
        except TheoryError as exc:
            line, col = (sup[0][2], sup[0][3]) if sup else (1, 1)
            raise ParseError(str(exc), line, col) from exc

    def _is_fact_stmt(self) -> bool:
        # "facts: a => b." is a rule labelled facts; scan to the next '.'
        j = self.i + 1
        while self.toks[j][0] not in (".", "eof"):
            if self.toks[j][0] == "arrow":
                return False
            j += 1
        return True


def parse_theory(text: str) -> Theory:
    """Parse the line-oriented theory format; raises :class:`ParseError`."""
    return _Parser(text).parse()


def serialize_theory(t: Theory) -> str:
    """Canonical text: facts sorted, rules by label, superiority pairs sorted."""
    lines = ["facts:" + (" " + ", ".join(str(f) for f in sorted(t.facts)) if t.facts else "") + "."]
    lines.extend(str(r) for r in t.rules)
    lines.extend(f"{a} > {b}." for a, b in sorted(t.superiority))
    return "\n".join(lines) + "\n"
