"""Linear filters of right ideals and the σ[M] calculus.

A linear filter is a set 𝔉 of right ideals with: F1 R ∈ 𝔉; F2 closed
under pairwise intersection; F3 upward closed; F4 closed under
(I : r) = {y : r·y ∈ I} for every ring element r.  Filters are stored
extensionally as index sets into the canonical right-ideal list, which
makes all the axms finite checks.
"""

from __future__ import annotations

import itertools

from .errors import BoundExceededError, InputError, TheoremViolationError
from .exactla import apply_matrix, quotient_presentation, solve_affine
from .ideals import is_two_sided, maximal_right_ideals, right_ideals
from .modules import (
    RightModule,
    Submodule,
    element_annihilator,
    regular_module,
    submodule_intersection,
)
from .ring import FiniteRing

FILTER_IDEAL_GUARD = 30


class IdealContext:
    """Per-ring tables over the canonical right-ideal list: index lookup,
    pairwise intersections, and memoized colon ideals."""

    def __init__(self, ring: FiniteRing):
        self.ring = ring
        self.ideals = right_ideals(ring)
        self.index = {i.gens: t for t, i in enumerate(self.ideals)}
        n = len(self.ideals)
        self.top = self.index[self.ideals[-1].gens]
        assert self.ideals[self.top].size() == ring.order()
        self.inter = [[None] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                m = submodule_intersection(self.ideals[a], self.ideals[b])
                t = self.index[m.gens]
                self.inter[a][b] = t
                self.inter[b][a] = t
        self.leq = [[self.inter[a][b] == a for b in range(n)] for a in range(n)]
        self._colon = {}

    def idx(self, ideal: Submodule) -> int:
        key = ideal.gens.howell_form() if ideal.gens is None else ideal.gens
        return self.index[key]

    def colon(self, t: int, r) -> int:
        """(I_t : r) = {y : r·y ∈ I_t}, as an ideal index."""
        r = self.ring.reduce_el(r)
        key = (t, r)
        if key in self._colon:
            return self._colon[key]
        ring = self.ring
        ideal = self.ideals[t]
        new_orders, proj, _ = quotient_presentation(ring.orders,
                                                    ideal.gens.rows)
        if not new_orders:
            out = self.top
        else:
            rows = [apply_matrix(ring.el_mul(r, ring.generator(j)), proj,
                                 new_orders)
                    for j in range(ring.rank)]
            _, ker = solve_affine(rows, new_orders, (0,) * len(new_orders),
                                  ring.orders)
            out = self.index[Submodule(regular_module(ring), ker).gens]
        self._colon[key] = out
        return out

    def upset(self, t: int) -> frozenset:
        return frozenset(b for b in range(len(self.ideals)) if self.leq[t][b])


def ideal_context(ring: FiniteRing) -> IdealContext:
    key = "ideal_context"
    if key not in ring._cache:
        ring._cache[key] = IdealContext(ring)
    return ring._cache[key]


class LinearFilter:
    """A set of right ideals, held as indices into the canonical list."""

    def __init__(self, ring: FiniteRing, members):
        self.ring = ring
        self.members = frozenset(int(t) for t in members)

    def ideals(self):
        ctx = ideal_context(self.ring)
        return [ctx.ideals[t] for t in sorted(self.members)]

    def smallest_member(self) -> Submodule:
        """Intersection of the members; the generating ideal when the
        filter is an η(I)."""
        ctx = ideal_context(self.ring)
        t = ctx.top
        for s in self.members:
            t = ctx.inter[t][s]
        return ctx.ideals[t]

    def __len__(self):
        return len(self.members)

    def __contains__(self, ideal: Submodule):
        ctx = ideal_context(self.ring)
        return ctx.index[ideal.gens] in self.members

    def __eq__(self, other):
        return (isinstance(other, LinearFilter)
                and self.ring is other.ring
                and self.members == other.members)

    def __hash__(self):
        return hash(self.members)

    def __le__(self, other):
        return self.members <= other.members

    def __repr__(self):
        return f"LinearFilter({len(self.members)} ideals)"


def is_linear_filter(ring: FiniteRing, members):
    """(flag, report): report names the first violated axiom."""
    ctx = ideal_context(ring)
    if isinstance(members, LinearFilter):
        mem = members.members
    else:
        mem = frozenset(ctx.index[i.gens] if isinstance(i, Submodule) else int(i)
                        for i in members)
    if ctx.top not in mem:
        return False, "F1: the whole ring is missing"
    for t in mem:
        for b in ctx.upset(t):
            if b not in mem:
                return False, (f"F3: member {t} is contained in non-member {b}")
    for a in mem:
        for b in mem:
            if ctx.inter[a][b] not in mem:
                return False, f"F2: intersection of members {a}, {b} missing"
    for t in mem:
        for r in ring.elements():
            c = ctx.colon(t, r)
            if c not in mem:
                return False, f"F4: ({t} : {r}) missing"
    return True, None


def eta_filter(ring: FiniteRing, ideal: Submodule) -> LinearFilter:
    """η(I): all right ideals containing the two-sided ideal I."""
    if not is_two_sided(ring, ideal):
        raise InputError("eta filter needs a two-sided ideal")
    ctx = ideal_context(ring)
    t = ctx.index[ideal.gens]
    filt = LinearFilter(ring, ctx.upset(t))
    ok, report = is_linear_filter(ring, filt)
    if not ok:
        raise TheoremViolationError(
            f"eta filter of a two-sided ideal violates {report}")
    return filt


def _upsets(ctx: IdealContext):
    """All up-sets of the right-ideal poset, each yielded once.

    Elements are processed from large to small, so membership of
    everything above is already decided when an element is considered.
    """
    n = len(ctx.ideals)
    order = sorted(range(n), key=lambda t: -ctx.ideals[t].size())
    strict_above = [[b for b in ctx.upset(t) if b != t] for t in range(n)]

    def rec(pos, chosen):
        if pos == n:
            yield frozenset(chosen)
            return
        t = order[pos]
        yield from rec(pos + 1, chosen)
        if all(b in chosen for b in strict_above[t]):
            chosen.add(t)
            yield from rec(pos + 1, chosen)
            chosen.remove(t)

    yield from rec(0, set())


def all_linear_filters(ring: FiniteRing, above_all_maximal: bool = False):
    """Every linear filter, by brute force over up-sets of the ideal poset.

    With above_all_maximal, keeps only filters containing every maximal
    right ideal.
    """
    ctx = ideal_context(ring)
    if len(ctx.ideals) > FILTER_IDEAL_GUARD:
        raise BoundExceededError(
            f"{len(ctx.ideals)} right ideals exceed the filter guard "
            f"{FILTER_IDEAL_GUARD}")
    required = set()
    if above_all_maximal:
        required = {ctx.index[m.gens] for m in maximal_right_ideals(ring)}
    out = []
    elements = list(ring.elements())
    for cand in _upsets(ctx):
        if ctx.top not in cand:
            continue
        if not required <= cand:
            continue
        if any(ctx.inter[a][b] not in cand
               for a, b in itertools.combinations(cand, 2)):
            continue
        if any(ctx.colon(t, r) not in cand for t in cand for r in elements):
            continue
        out.append(LinearFilter(ring, cand))
    out.sort(key=lambda f: (len(f.members), sorted(f.members)))
    return out


def sigma_filter(m: RightModule) -> LinearFilter:
    """The filter of σ[M]: right ideals containing a finite intersection
    of element annihilators."""
    ring = m.ring
    ctx = ideal_context(ring)
    anns = {ctx.index[element_annihilator(m, x).gens] for x in m.elements()}
    closed = set(anns)
    frontier = set(anns)
    while frontier:
        fresh = set()
        for a in frontier:
            for b in closed:
                c = ctx.inter[a][b]
                if c not in closed:
                    fresh.add(c)
        closed |= fresh
        frontier = fresh
    members = set()
    for t in closed:
        members |= ctx.upset(t)
    filt = LinearFilter(ring, members)
    ok, report = is_linear_filter(ring, filt)
    if not ok:
        raise TheoremViolationError(f"sigma filter violates {report}")
    return filt


def sigma_contains(m: RightModule, n: RightModule) -> bool:
    """True iff N belongs to σ[M]: every element annihilator of N is in
    the filter of M."""
    filt = sigma_filter(m)
    ctx = ideal_context(m.ring)
    for x in n.elements():
        if ctx.index[element_annihilator(n, x).gens] not in filt.members:
            return False
    return True
