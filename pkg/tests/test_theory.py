import pytest
from hypothesis import given, settings

from defrev import (
    Literal,
    ParseError,
    Restrict,
    Rule,
    RuleKind,
    Theory,
    TheoryError,
    check_acyclic,
    lit,
    parse_theory,
    rules_for,
    serialize_theory,
)
from defrev.theory import find_cycle
from gen import theories


def test_literal_complement_and_order():
    a = lit("a")
    assert a.complement() == lit("~a")
    assert a.complement().complement() == a
    assert sorted([lit("~b"), lit("b"), lit("~a")]) == [lit("~a"), lit("b"), lit("~b")]
    assert str(lit(" ~ x")) == "~x"


@pytest.mark.parametrize("bad", ["", "1a", "a-b", "~"])
def test_bad_atoms_rejected(bad):
    with pytest.raises(TheoryError):
        lit(bad)


def test_parse_all_rule_kinds():
    t = parse_theory(
        """
        # comment line
        facts: a, ~b.
        s1: a -> c.
        d1: c, ~b => p.
        f1: a ~> ~p.
        d1 > f1.
        """
    )
    assert t.facts == {lit("a"), lit("~b")}
    assert t.rule("s1").kind is RuleKind.STRICT
    assert t.rule("d1").body == {lit("c"), lit("~b")}
    assert t.rule("f1").kind is RuleKind.DEFEATER
    assert t.superiority == {("d1", "f1")}
    assert not t.is_defeasible_only


def test_rule_named_facts_is_a_rule():
    t = parse_theory("facts: a => b.")
    assert t.facts == frozenset()
    assert t.rule("facts").head == lit("b")


def test_universe_closes_under_complement():
    t = parse_theory("r: a => ~b.")
    assert t.appearing == {lit("a"), lit("~b")}
    assert t.universe == (lit("a"), lit("~a"), lit("b"), lit("~b"))


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("r: => p.\nr: => q.", 2, 1),
        ("r: => p.\ns: => ~p.\nr > x.", 3, 1),
        ("facts: a, ~a.", 1, 8),
        ("r: => p", 1, 8),
        ("r => p.", 1, 3),
    ],
)
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_theory(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert str(info.value).startswith(f"{line}:{column}:")


def test_cyclic_superiority_rejected():
    with pytest.raises(ParseError, match="cyclic"):
        parse_theory("r: => p.\ns: => ~p.\nr > s.\ns > r.")
    with pytest.raises(TheoryError, match="reflexive"):
        Theory(frozenset(), (Rule("r", frozenset(), RuleKind.DEFEASIBLE, lit("p")),), {("r", "r")})


def test_find_cycle():
    assert find_cycle({("a", "b"), ("b", "c")}) is None
    cyc = find_cycle({("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")})
    assert sorted(cyc) == ["a", "b", "c"]
    assert check_acyclic({("a", "b")})
    assert not check_acyclic({("a", "b"), ("b", "a")})


def test_rules_for_restrictions():
    t = parse_theory("s: -> p.\nd: => p.\nf: ~> p.\ng: => q.")
    p = Literal("p")
    assert {r.label for r in rules_for(t, p)} == {"s", "d", "f"}
    assert {r.label for r in rules_for(t, p, Restrict.STRICT)} == {"s"}
    assert {r.label for r in rules_for(t, p, Restrict.STRICT_AND_DEFEASIBLE)} == {"s", "d"}


def test_serialize_is_canonical():
    t = parse_theory("z: b => a.\nr: => ~a.\nz > r.\nfacts: b.")
    assert serialize_theory(t) == "facts: b.\nr: => ~a.\nz: b => a.\nz > r.\n"


@settings(max_examples=200, deadline=None)
@given(theories(strict=True, defeaters=True))
def test_roundtrip(t):
    text = serialize_theory(t)
    back = parse_theory(text)
    assert back == t
    assert serialize_theory(back) == text
