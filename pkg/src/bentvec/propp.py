"""Property (P_tau): vanishing second-order derivatives over a defining set.

g satisfies (P_tau) with defining set {u_1,...,u_tau} when
D_{u_i} D_{u_j} g = 0 for every pair i < j.  tau = 1 (or 0) is vacuously
true.  The module also checks the two structural facts the constructions
rely on: closure of the vanishing condition over the F2-span of the
defining set, and the equivalence with the shift decomposition
g(x + sum w_i u_i) = g(x) + sum w_i D_{u_i} g(x).
"""

from __future__ import annotations

from itertools import combinations
from typing import NamedTuple

import numpy as np

from .boolfun import BooleanFunction
from .errors import PreconditionError, VerificationError
from .redpoly import DefiningSet


class PropertyCheck(NamedTuple):
    holds: bool
    pair: tuple[int, int] | None  # failing (i, j), 1-based
    witness: int | None           # x with D_{u_i} D_{u_j} g(x) = 1


class ShiftCheck(NamedTuple):
    holds: bool
    weights: tuple[int, ...] | None  # failing w vector
    witness: int | None              # failing x


def satisfies_p(g: BooleanFunction, defining: DefiningSet) -> PropertyCheck:
    """Check D_{u_i} D_{u_j} g = 0 for all pairs of the defining set."""
    _same_field(g, defining)
    us = defining.elements
    idx = np.arange(g.field.size)
    t = g.table
    for i, j in combinations(range(len(us)), 2):
        a, b = us[i], us[j]
        dd = t ^ t[idx ^ a] ^ t[idx ^ b] ^ t[idx ^ a ^ b]
        hit = np.nonzero(dd)[0]
        if hit.size:
            return PropertyCheck(False, (i + 1, j + 1), int(hit[0]))
    return PropertyCheck(True, None, None)


def span_closure(g: BooleanFunction, defining: DefiningSet) -> bool:
    """D_a D_b g = 0 for all a, b in the span of a satisfying defining set.

    This is a theorem check: given the precondition it must return True.
    """
    _same_field(g, defining)
    check = satisfies_p(g, defining)
    if not check.holds:
        raise PreconditionError(
            f"property (P_tau) fails on pair {check.pair} at x={check.witness}"
        )
    span = defining.span()
    idx = np.arange(g.field.size)
    t = g.table
    for a in span:
        for b in span:
            dd = t ^ t[idx ^ a] ^ t[idx ^ b] ^ t[idx ^ a ^ b]
            if dd.any():
                return False
    return True


def shift_decomposition(g: BooleanFunction, defining: DefiningSet) -> ShiftCheck:
    """Does g(x + sum w_i u_i) = g(x) + sum w_i D_{u_i} g(x) for all w, x?

    Equivalent to satisfies_p by the decomposition lemma; both sides are
    computed independently so the equivalence itself is testable.
    """
    _same_field(g, defining)
    us = defining.elements
    tau = len(us)
    derivs = [g.derivative(u).table for u in us]
    t = g.table
    idx = np.arange(g.field.size)
    for w in range(1 << tau):
        shift_amount = 0
        rhs = t.copy()
        for i in range(tau):
            if (w >> i) & 1:
                shift_amount ^= us[i]
                rhs ^= derivs[i]
        lhs = t[idx ^ shift_amount]
        bad = np.nonzero(lhs ^ rhs)[0]
        if bad.size:
            weights = tuple((w >> i) & 1 for i in range(tau))
            return ShiftCheck(False, weights, int(bad[0]))
    return ShiftCheck(True, None, None)


def product_shift(g: BooleanFunction, defining: DefiningSet, b) -> BooleanFunction:
    """h(x) = g(x) g(x + b) for b in the span; h keeps property (P_tau).

    The preservation is asserted before returning (theorem check).
    """
    _same_field(g, defining)
    check = satisfies_p(g, defining)
    if not check.holds:
        raise PreconditionError(
            f"property (P_tau) fails on pair {check.pair} at x={check.witness}"
        )
    if b not in set(defining.span()):
        raise PreconditionError(f"shift {b:#x} is outside the defining-set span")
    h = g & g.shift(b)
    after = satisfies_p(h, defining)
    if not after.holds:
        raise VerificationError(
            f"product shift broke (P_tau) on pair {after.pair}"
        )
    return h


def find_defining_sets(
    g: BooleanFunction,
    tau,
    candidates=None,
    limit=None,
    node_budget=None,
):
    """All tau-subsets of the candidate pool satisfying (P_tau), lex order.

    Complete clique enumeration over the graph whose edges are the
    vanishing pairs; exponential in the worst case, bounded by
    node_budget (visited extension nodes) when given.  limit truncates
    the output to the first N sets in lexicographic value order.
    """
    if tau < 2:
        raise PreconditionError("search needs tau >= 2")
    field = g.field
    pool = sorted(set(int(c) for c in candidates)) if candidates is not None else list(
        range(1, field.size)
    )
    for c in pool:
        field.check(c)
    idx = np.arange(field.size)
    t = g.table
    edges = {c: set() for c in pool}
    for i, a in enumerate(pool):
        for b in pool[i + 1 :]:
            dd = t ^ t[idx ^ a] ^ t[idx ^ b] ^ t[idx ^ a ^ b]
            if not dd.any():
                edges[a].add(b)
                edges[b].add(a)
    results = []
    nodes = 0

    def extend(clique, allowed):
        nonlocal nodes
        if limit is not None and len(results) >= limit:
            return
        if len(clique) == tau:
            results.append(DefiningSet(field, tuple(clique)))
            return
        for c in allowed:
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                raise PreconditionError(
                    f"defining-set search exceeded node budget {node_budget}"
                )
            extend(clique + [c], [d for d in allowed if d > c and d in edges[c]])
            if limit is not None and len(results) >= limit:
                return

    extend([], pool)
    return results


def _same_field(g, defining):
    if g.field != defining.field:
        raise PreconditionError("function and defining set live in different fields")
