"""Naive reference evaluation of the proof conditions.

Each family is computed by sweeping every literal until nothing changes,
reading rule lists and superiority pairs straight off the theory. Slow and
independent of the engine's indexing.
"""

from defrev.theory import RuleKind


def _sweep(universe, decide):
    val = {}
    changed = True
    while changed:
        changed = False
        for q in universe:
            if q in val:
                continue
            v = decide(q, val)
            if v:
                val[q] = v
                changed = True
    return val


def oracle_tags(t, superiority=None):
    """Map family name to {literal: +1 | -1}; undecided literals are absent."""
    sup = t.superiority if superiority is None else frozenset(superiority)
    U = t.universe

    def R(q, kinds):
        return [r for r in t.rules if r.head == q and r.kind in kinds]

    S_ = {RuleKind.STRICT}
    SD = {RuleKind.STRICT, RuleKind.DEFEASIBLE}
    ALL = set(RuleKind)

    def every(val, r, want):
        return all(val.get(a) == want for a in r.body)

    def some(val, r, want):
        return any(val.get(a) == want for a in r.body)

    def delta(q, D):
        if q in t.facts or any(every(D, r, 1) for r in R(q, S_)):
            return 1
        if all(some(D, r, -1) for r in R(q, S_)):
            return -1
        return 0

    D = _sweep(U, delta)
    pD = lambda q: D.get(q) == 1  # noqa: E731

    def partial(q, P):
        nq = q.complement()
        if pD(q):
            return 1
        if (
            D.get(nq) == -1
            and any(every(P, r, 1) for r in R(q, SD))
            and all(
                some(P, s, -1)
                or any(every(P, u, 1) and (u.label, s.label) in sup for u in R(q, SD))
                for s in R(nq, ALL)
            )
        ):
            return 1
        if pD(nq) or all(some(P, r, -1) for r in R(q, SD)):
            return -1
        if any(
            every(P, s, 1)
            and all(some(P, u, -1) or (u.label, s.label) not in sup for u in R(q, SD))
            for s in R(nq, ALL)
        ):
            return -1
        return 0

    P = _sweep(U, partial)

    def chain(q, S):
        if pD(q) or any(every(S, r, 1) for r in R(q, SD)):
            return 1
        if all(some(S, r, -1) for r in R(q, SD)):
            return -1
        return 0

    S = _sweep(U, chain)

    W = {}
    for q in U:
        if pD(q) or any(every(P, r, 1) for r in R(q, SD)):
            W[q] = 1
        elif all(some(P, r, -1) for r in R(q, SD)):
            W[q] = -1

    def support(q, s_):
        nq = q.complement()
        if pD(q):
            return 1
        for r in R(q, SD):
            if every(s_, r, 1) and all(
                some(P, s, -1) or (s.label, r.label) not in sup for s in R(nq, ALL)
            ):
                return 1
        if all(
            some(s_, r, -1) or any(every(P, s, 1) and (s.label, r.label) in sup for s in R(nq, ALL))
            for r in R(q, SD)
        ):
            return -1
        return 0

    Sg = _sweep(U, support)

    def phi(q, F):
        nq = q.complement()
        if pD(q):
            return 1
        quiet = all(some(S, s, -1) for s in R(nq, ALL))
        if not pD(nq) and quiet and any(every(F, r, 1) for r in R(q, SD)):
            return 1
        loud = any(every(S, s, 1) for s in R(nq, ALL))
        if pD(nq) or all(some(F, r, -1) or loud for r in R(q, SD)):
            return -1
        return 0

    Ph = _sweep(U, phi)
    return {"delta": D, "partial": P, "chain": S, "omega": W, "support": Sg, "phi": Ph}
