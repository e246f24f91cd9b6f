import itertools

import pytest
from hypothesis import given, settings

from conftest import load
from defrev import (
    BudgetExceeded,
    Family,
    ProofTag,
    RefutabilityClass,
    Status,
    classify_refutability,
    compute_tags,
    conflicting_pairs,
    depends_on,
    enumerate_superiorities,
    is_decisive,
    is_unreachable,
    lit,
    parse_theory,
    support_trees,
    unreachable_literals,
)
from defrev.analysis import dependents_of
from defrev.theory import find_cycle
from gen import corpus, theories

EX1 = load("eleven_rules")
PLUS = ProofTag.parse("+partial")
MINUS = ProofTag.parse("-partial")


def names(ls):
    return sorted(str(l) for l in ls)


def test_dependents_in_example():
    assert names(dependents_of(EX1, lit("a"))) == ["a", "c", "d", "~e", "~f", "~p"]
    assert depends_on(EX1, lit("d"), lit("a"))
    assert depends_on(EX1, lit("p"), lit("~d"))
    assert not depends_on(EX1, lit("p"), lit("a"))


def test_fact_depends_only_on_itself():
    t = parse_theory("facts: a.\nr: b => a.\ns: => b.")
    assert depends_on(t, lit("a"), lit("a"))
    assert not depends_on(t, lit("a"), lit("b"))


def test_unreachable_literals():
    assert names(unreachable_literals(load("unreachable"))) == ["p", "~p"]
    assert names(unreachable_literals(EX1)) == ["~e", "~f", "~p"]
    assert is_unreachable(load("unreachable"), lit("p"))
    assert not is_unreachable(EX1, lit("p"))


def test_support_trees():
    assert [str(x) for x in support_trees(EX1, lit("d"))] == ["r3(c <- r2(a <- r1))"]
    assert [str(x) for x in support_trees(load("levi"), lit("p"))] == ["r2(a <- r1)", "r6(b <- r5)"]
    assert support_trees(EX1, lit("~p")) == []
    tree = support_trees(EX1, lit("d"))[0]
    assert [r.label for r in tree.rules()] == ["r3", "r2", "r1"]
    assert [str(n.root) for n in tree.nodes()] == ["a", "c", "d"]
    with pytest.raises(ValueError):
        support_trees(EX1, lit("d"), limit=0)


def test_support_trees_skip_defeaters_and_loops():
    t = parse_theory("facts: a.\nf: a ~> p.\nr: p => p.\ns: a => p.")
    assert [str(x) for x in support_trees(t, lit("p"))] == ["s(a <- a)"]


def test_decisiveness():
    d = is_decisive(EX1)
    assert d and d.atom_graph_acyclic and not d.undecided
    d = is_decisive(load("loop"))
    assert not d and not d.atom_graph_acyclic
    assert names(d.undecided) == ["p", "~p"]


@settings(max_examples=200, deadline=None)
@given(theories())
def test_acyclic_atom_graph_is_decisive(t):
    if is_decisive(t).atom_graph_acyclic:
        assert is_decisive(t)


def test_conflicting_pairs():
    assert conflicting_pairs(load("team")) == [("r1", "r3"), ("r1", "r4"), ("r2", "r3"), ("r2", "r4")]


def _naive_acyclic(rel):
    # repeatedly peel nodes without incoming edges
    edges = set(rel)
    nodes = {x for e in edges for x in e}
    while nodes:
        free = {n for n in nodes if not any(b == n for _, b in edges)}
        if not free:
            return False
        nodes -= free
        edges = {(a, b) for a, b in edges if a not in free}
    return True


def test_enumeration_counts_acyclic_relations():
    t = load("team")
    got = set(enumerate_superiorities(t))
    pairs = conflicting_pairs(t)
    want = set()
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        rel = frozenset(
            (a, b) if s == 1 else (b, a) for (a, b), s in zip(pairs, states) if s
        )
        if _naive_acyclic(rel):
            want.add(rel)
    assert got == want
    assert len(got) == 79


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded) as info:
        list(enumerate_superiorities(load("team"), budget=80))
    assert info.value.required == 81


def test_refutability_fixtures():
    r = classify_refutability(load("taut"), lit("p"))
    assert r.value is RefutabilityClass.TAUTOLOGICAL and r.witness is None and r.examined == 27
    r = classify_refutability(load("levi"), lit("p"))
    assert r.value is RefutabilityClass.REFUTABLE
    assert compute_tags(load("levi").with_superiority(r.witness)).holds(MINUS, lit("p"))
    assert r.report() == "p\trefutable\t{}\t1"
    r = classify_refutability(load("contr_contr_taut"), lit("p"), budget=10)
    assert r.value is RefutabilityClass.EXHAUSTED_BUDGET and r.examined == 0


@pytest.mark.parametrize("seed", range(3))
def test_refutability_agrees_with_enumeration(seed):
    for t in corpus(seed, 60, max_rules=8, atoms=("a", "b", "c"), facts=False):
        if len(conflicting_pairs(t)) > 5:
            continue
        rels = list(enumerate_superiorities(t))
        for p in t.universe:
            tags = [compute_tags(t.with_superiority(rel)) for rel in rels]
            r = classify_refutability(t, p)
            if any(x.holds(MINUS, p) for x in tags):
                assert r.value is RefutabilityClass.REFUTABLE
                assert compute_tags(t.with_superiority(r.witness)).holds(MINUS, p)
                assert find_cycle(r.witness) is None
            elif all(x.holds(PLUS, p) for x in tags):
                assert r.value is RefutabilityClass.TAUTOLOGICAL
            else:
                assert r.value is RefutabilityClass.NEITHER


def _dependency_violations(t):
    tags = compute_tags(t)
    out = []
    for p in tags.universe:
        if tags.status(Family.PARTIAL, p) is not Status.PLUS:
            continue
        for q in tags.universe:
            if depends_on(t, p, q) and tags.status(Family.PARTIAL, q) is not Status.PLUS:
                out.append((p, q))
    return out


@settings(max_examples=300, deadline=None)
@given(theories())
def test_proven_literal_proves_what_it_depends_on(t):
    assert _dependency_violations(t) == []
