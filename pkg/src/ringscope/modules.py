"""Finite right modules over a finite ring.

A module is an additive group ⊕_i Z/m_i with one action matrix per ring
generator; the action of an arbitrary ring element is assembled by
linearity.  Submodules are identified with their Howell-canonical spans,
so two submodules are equal iff their representations are equal.
"""

from __future__ import annotations

import itertools
import math

from .errors import BoundExceededError, InputError, TheoremViolationError
from .exactla import (
    ModMatrix,
    apply_matrix,
    howell_span,
    quotient_presentation,
    solve_affine,
    zero_matrix,
)
from .ring import FiniteRing

SUBMODULE_ENUM_BOUND = 4096


class RightModule:
    """Right module over a finite ring, immutable once validated."""

    def __init__(self, ring: FiniteRing, orders, action, label: str = "module"):
        self.ring = ring
        self.orders = tuple(int(m) for m in orders)
        if any(m < 1 for m in self.orders):
            raise InputError("generator orders must be positive")
        if len(action) != ring.rank:
            raise InputError("need one action matrix per ring generator")
        acts = []
        for a in action:
            if not isinstance(a, ModMatrix):
                a = ModMatrix(self.orders, a)
            if a.col_moduli != self.orders or a.nrows != len(self.orders):
                raise InputError("action matrix has wrong shape")
            acts.append(a)
        self.action = tuple(acts)
        self.label = label
        self.zero = (0,) * len(self.orders)
        self._cache = {}

    @property
    def rank(self) -> int:
        return len(self.orders)

    def order(self) -> int:
        return math.prod(self.orders)

    def __repr__(self):
        return f"RightModule({self.label}, order={self.order()})"

    def reduce_el(self, vec):
        return tuple(int(x) % m for x, m in zip(vec, self.orders))

    def add(self, x, y):
        return tuple((a + b) % m for a, b, m in zip(x, y, self.orders))

    def elements(self, bound: int = SUBMODULE_ENUM_BOUND):
        if self.order() > bound:
            raise BoundExceededError(
                f"module of order {self.order()} exceeds bound {bound}")
        return itertools.product(*(range(m) for m in self.orders))

    def act_gen(self, x, j):
        """x · g_j for ring generator j."""
        return apply_matrix(x, self.action[j].rows, self.orders)

    def act(self, x, r):
        """x · r for a ring element r in coordinates."""
        acc = [0] * self.rank
        for j, c in enumerate(r):
            if not c:
                continue
            img = self.act_gen(x, j)
            for k in range(self.rank):
                acc[k] += c * img[k]
        return tuple(a % m for a, m in zip(acc, self.orders))

    def act_matrix(self, r) -> ModMatrix:
        rows = []
        for i in range(self.rank):
            e = [0] * self.rank
            e[i] = 1
            rows.append(self.act(tuple(e), r))
        return ModMatrix(self.orders, rows)

    def generator(self, i):
        e = [0] * self.rank
        e[i] = 1
        return tuple(e)


def verify_module_axioms(m: RightModule):
    """None if the action tables define a unital module, else a report."""
    ring = m.ring
    for j in range(ring.rank):
        rows = m.action[j].rows
        for i in range(m.rank):
            for k in range(m.rank):
                if (m.orders[i] * rows[i][k]) % m.orders[k]:
                    return f"action of g{j} not additive on generator {i}"
                if (ring.orders[j] * rows[i][k]) % m.orders[k]:
                    return f"action of g{j} ignores the order of g{j}"
    for i in range(m.rank):
        e = m.generator(i)
        if m.act(e, ring.one) != e:
            return f"identity does not fix module generator {i}"
    for a in range(ring.rank):
        for b in range(ring.rank):
            prod = ring.mul[a][b]
            for i in range(m.rank):
                e = m.generator(i)
                lhs = m.act_gen(m.act_gen(e, a), b)
                rhs = m.act(e, prod)
                if lhs != rhs:
                    return f"action incompatible with g{a}*g{b} on generator {i}"
    return None


def _validated(mod: RightModule) -> RightModule:
    report = verify_module_axioms(mod)
    if report is not None:
        raise InputError(f"{mod.label}: {report}")
    return mod


class ModuleMap:
    """Additive, action-preserving map given by generator images (rows)."""

    def __init__(self, source: RightModule, target: RightModule, rows,
                 check: bool = True):
        self.source = source
        self.target = target
        self.rows = tuple(target.reduce_el(r) for r in rows)
        if len(self.rows) != source.rank:
            raise InputError("map needs one image row per source generator")
        if check and not self.is_valid():
            raise InputError("matrix is not a module map")

    def apply(self, x):
        return apply_matrix(x, self.rows, self.target.orders)

    def is_valid(self) -> bool:
        src, tgt = self.source, self.target
        for i in range(src.rank):
            img = self.rows[i]
            for k in range(tgt.rank):
                if (src.orders[i] * img[k]) % tgt.orders[k]:
                    return False
        for i in range(src.rank):
            e = src.generator(i)
            for j in range(src.ring.rank):
                if self.apply(src.act_gen(e, j)) != tgt.act_gen(self.apply(e), j):
                    return False
        return True

    def compose(self, inner: "ModuleMap") -> "ModuleMap":
        """self ∘ inner."""
        if inner.target is not self.source and inner.target.orders != self.source.orders:
            raise InputError("maps do not compose")
        rows = [self.apply(r) for r in inner.rows]
        return ModuleMap(inner.source, self.target, rows, check=False)

    def image_span(self) -> ModMatrix:
        return howell_span(self.target.orders, self.rows)

    def __eq__(self, other):
        return (isinstance(other, ModuleMap) and self.rows == other.rows
                and self.source.orders == other.source.orders
                and self.target.orders == other.target.orders)

    def __hash__(self):
        return hash(self.rows)


class Submodule:
    """A submodule of `parent`, stored as the Howell form of its span."""

    def __init__(self, parent: RightModule, gens):
        if not isinstance(gens, ModMatrix):
            gens = ModMatrix(parent.orders, gens)
        if gens.col_moduli != parent.orders:
            raise InputError("generator moduli do not match the module")
        self.parent = parent
        self.gens = gens.howell_form()

    def size(self) -> int:
        return self.gens.span_size()

    def contains(self, vec) -> bool:
        return self.gens.contains(vec)

    def contains_sub(self, other: "Submodule") -> bool:
        return all(self.gens.contains(r) for r in other.gens.rows)

    def is_action_stable(self) -> bool:
        for row in self.gens.rows:
            for j in range(self.parent.ring.rank):
                if not self.gens.contains(self.parent.act_gen(row, j)):
                    return False
        return True

    def elements(self):
        return self.gens.span_elements()

    def __eq__(self, other):
        return isinstance(other, Submodule) and self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        return f"Submodule(size={self.size()})"


def zero_submodule(m: RightModule) -> Submodule:
    return Submodule(m, zero_matrix(m.orders))


def full_submodule(m: RightModule) -> Submodule:
    rows = [m.generator(i) for i in range(m.rank)]
    return Submodule(m, rows)


# -- construction -------------------------------------------------------------


def regular_module(ring: FiniteRing) -> RightModule:
    """The ring acting on itself by right multiplication."""
    key = "regular"
    if key not in ring._cache:
        action = [ring.right_mul_matrix(ring.generator(j)).rows
                  for j in range(ring.rank)]
        mod = _validated(RightModule(ring, ring.orders, action,
                                     label=f"{ring.label} (regular)"))
        ring._cache[key] = mod
    return ring._cache[key]


def from_action_tables(ring: FiniteRing, orders, action,
                       label: str = "module") -> RightModule:
    return _validated(RightModule(ring, orders, action, label=label))


def zero_module(ring: FiniteRing) -> RightModule:
    return RightModule(ring, (), [()] * ring.rank if ring.rank else [],
                       label="0")


def direct_sum(mods, label: str | None = None) -> RightModule:
    mods = list(mods)
    if not mods:
        raise InputError("direct sum of nothing; pass the zero module instead")
    ring = mods[0].ring
    if any(m.ring is not ring for m in mods):
        raise InputError("direct sum components must share the ring")
    orders = tuple(m for mod in mods for m in mod.orders)
    offsets = []
    off = 0
    for mod in mods:
        offsets.append(off)
        off += mod.rank
    action = []
    for j in range(ring.rank):
        rows = []
        for mod, o in zip(mods, offsets):
            for r in mod.action[j].rows:
                row = [0] * off
                row[o:o + mod.rank] = list(r)
                rows.append(row)
        action.append(rows)
    name = label or " + ".join(m.label for m in mods)
    return _validated(RightModule(ring, orders, action, label=name))


def quotient_module(n: RightModule, k: Submodule, label: str | None = None):
    """Factor module together with the projection map.

    The returned projection carries a ``section`` attribute: integer rows
    lifting each quotient generator back into n.
    """
    if k.parent is not n and k.parent.orders != n.orders:
        raise InputError("submodule does not live in the given module")
    if not k.is_action_stable():
        raise InputError("span is not closed under the ring action")
    new_orders, proj, lift = quotient_presentation(n.orders, k.gens.rows)
    d = len(new_orders)

    def down(vec):
        return apply_matrix(vec, proj, new_orders)

    action = []
    for j in range(n.ring.rank):
        rows = [down(n.act_gen(tuple(lift_row), j)) for lift_row in lift]
        action.append(rows if d else [])
    q = _validated(RightModule(n.ring, new_orders, action,
                               label=label or f"{n.label}/K"))
    projection = ModuleMap(n, q, [down(n.generator(i)) for i in range(n.rank)],
                           check=False)
    projection.section = [tuple(r) for r in lift]
    return q, projection


def cyclic_module(ring: FiniteRing, ideal: Submodule,
                  label: str | None = None):
    """R/I for a right ideal I, with the projection from the regular module."""
    reg = regular_module(ring)
    return quotient_module(reg, Submodule(reg, ideal.gens),
                           label=label or f"{ring.label}/I")


def module_construct(kind: str, **kw) -> RightModule:
    """Single entry point used by the command layer."""
    if kind == "regular":
        return regular_module(kw["ring"])
    if kind == "cyclic":
        return cyclic_module(kw["ring"], kw["ideal"])[0]
    if kind == "quotient":
        return quotient_module(kw["module"], kw["submodule"])[0]
    if kind == "direct_sum":
        return direct_sum(kw["summands"])
    if kind == "from_action_tables":
        return from_action_tables(kw["ring"], kw["orders"], kw["action"],
                                  label=kw.get("label", "module"))
    raise InputError(f"unknown module constructor {kind!r}")


# -- submodule enumeration -----------------------------------------------------


def cyclic_span(m: RightModule, x) -> Submodule:
    """x·R: the smallest submodule containing x."""
    span = howell_span(m.orders, [m.reduce_el(x)])
    while True:
        extra = []
        for row in span.rows:
            for j in range(m.ring.rank):
                img = m.act_gen(row, j)
                if not span.contains(img):
                    extra.append(img)
        if not extra:
            return Submodule(m, span)
        span = span.stack(ModMatrix(m.orders, extra, span.n)).howell_form()


def submodules(n: RightModule, bound: int = SUBMODULE_ENUM_BOUND):
    """Every submodule, canonically sorted; 0 and N included."""
    key = ("submodules", bound)
    if key in n._cache:
        return n._cache[key]
    if n.order() > bound:
        raise BoundExceededError(
            f"module of order {n.order()} exceeds enumeration bound {bound}")
    cyclics = {zero_submodule(n)}
    for x in n.elements(bound):
        cyclics.add(cyclic_span(n, x))
    seen = set(cyclics)
    frontier = list(cyclics)
    while frontier:
        s = frontier.pop()
        for c in cyclics:
            joined = Submodule(n, s.gens.stack(c.gens))
            if joined not in seen:
                seen.add(joined)
                frontier.append(joined)
    out = sorted(seen, key=lambda s: (s.size(), s.gens.rows))
    n._cache[key] = out
    return out


def submodule_sum(a: Submodule, b: Submodule) -> Submodule:
    return Submodule(a.parent, a.gens.stack(b.gens))


def submodule_intersection(a: Submodule, b: Submodule) -> Submodule:
    small, big = (a, b) if a.size() <= b.size() else (b, a)
    rows = [v for v in small.elements() if big.contains(v)]
    return Submodule(a.parent, rows)


def submodule_as_module(sub: Submodule, label: str | None = None):
    """Present a submodule abstractly.

    Returns (module, inclusion ModuleMap, express) where express maps an
    ambient coordinate vector to coordinates of the presented module
    (None when the vector lies outside the submodule).
    """
    parent = sub.parent
    gens = sub.gens
    g = gens.nrows
    if g == 0:
        zero = zero_module(parent.ring)
        incl = ModuleMap(zero, parent, [], check=False)
        return zero, incl, lambda v: () if not any(v) else None
    ker = gens.kernel()
    new_orders, proj, lift = quotient_presentation((gens.n,) * g, ker.rows)

    def coeffs_of(vec):
        sol = gens.solve(vec)
        if sol is None:
            return None
        return sol[0]

    def into(coords):
        # coordinates of the abstract module -> ambient vector
        acc = [0] * parent.rank
        for c, lrow in zip(coords, lift):
            if not c:
                continue
            for t, l in enumerate(lrow):
                amb = gens.rows[t]
                for k in range(parent.rank):
                    acc[k] += c * l * amb[k]
        return parent.reduce_el(acc)

    d = len(new_orders)
    action = []
    for j in range(parent.ring.rank):
        rows = []
        for i in range(d):
            e = [0] * d
            e[i] = 1
            img = parent.act_gen(into(tuple(e)), j)
            rows.append(apply_matrix(coeffs_of(img), proj, new_orders))
        action.append(rows)
    mod = _validated(RightModule(parent.ring, new_orders, action,
                                 label=label or f"{parent.label} (sub)"))
    incl_rows = [into(mod.generator(i)) for i in range(d)]
    incl = ModuleMap(mod, parent, incl_rows, check=False)

    def express(vec):
        c = coeffs_of(vec)
        if c is None:
            return None
        return apply_matrix(c, proj, new_orders)

    return mod, incl, express


# -- socle, radical, singular, annihilator ------------------------------------


def minimal_submodules(m: RightModule):
    subs = [s for s in submodules(m) if s.size() > 1]
    return [s for s in subs
            if not any(t.size() < s.size() and s.contains_sub(t)
                       for t in subs)]


def socle(m: RightModule) -> Submodule:
    """Sum of the minimal submodules; cross-checked against the subgroup
    annihilated by the radical."""
    key = "socle"
    if key in m._cache:
        return m._cache[key]
    acc = zero_submodule(m)
    for s in minimal_submodules(m):
        acc = submodule_sum(acc, s)
    from .ideals import jacobson_radical  # deferred: ideals builds on modules

    jac = jacobson_radical(m.ring)
    killed = annihilated_by(m, jac)
    if killed != acc:
        raise TheoremViolationError(
            f"socle mismatch on {m.label}: sum of minimal submodules differs "
            "from the radical annihilator")
    m._cache[key] = acc
    return acc


def annihilated_by(m: RightModule, ideal: Submodule) -> Submodule:
    """{x in M : x·i = 0 for all i in the ideal}."""
    gens = ideal.gens.rows
    if not gens:
        return full_submodule(m)
    mats = [m.act_matrix(g) for g in gens]
    rows = []
    for i in range(m.rank):
        rows.append(tuple(x for mat in mats for x in mat.rows[i]))
    eq_moduli = m.orders * len(mats)
    rhs = (0,) * len(eq_moduli)
    _, ker = solve_affine(rows, eq_moduli, rhs, m.orders)
    return Submodule(m, ker)


def module_times_ideal(m: RightModule, ideal: Submodule) -> Submodule:
    """The span M·I for a right ideal I of the ring."""
    rows = []
    for i in range(m.rank):
        e = m.generator(i)
        for g in ideal.gens.rows:
            rows.append(m.act(e, g))
    return Submodule(m, rows)


def socle_series(m: RightModule):
    """Ascending socle chain 0 < Soc M < Soc₂ M < ... < M and its length."""
    chain = [zero_submodule(m)]
    current = chain[0]
    while current.size() < m.order():
        q, proj = quotient_module(m, current)
        s = socle(q)
        lifted = list(current.gens.rows)
        for row in s.gens.rows:
            amb = [0] * m.rank
            for c, sec in zip(row, proj.section):
                for k in range(m.rank):
                    amb[k] += c * sec[k]
            lifted.append(m.reduce_el(amb))
        nxt = Submodule(m, lifted)
        if nxt.size() == current.size():
            raise TheoremViolationError(
                f"socle series stalls on {m.label}")
        chain.append(nxt)
        current = nxt
    loewy_length = len(chain) - 1
    return chain, loewy_length


def radical_series(m: RightModule):
    """Descending chain M > MJ > MJ² > ... > 0."""
    from .ideals import jacobson_radical

    jac = jacobson_radical(m.ring)
    chain = [full_submodule(m)]
    while chain[-1].size() > 1:
        prev = chain[-1]
        rows = []
        for x in prev.gens.rows:
            for g in jac.gens.rows:
                rows.append(m.act(x, g))
        nxt = Submodule(m, rows)
        if nxt.size() == prev.size():
            raise TheoremViolationError(
                f"radical series stalls on {m.label}; ring radical is "
                "not nilpotent on this module")
        chain.append(nxt)
    return chain


def element_annihilator(m: RightModule, x) -> Submodule:
    """ann(x) = {r in R : x·r = 0}, a right ideal."""
    ring = m.ring
    rows = [m.act_gen(x, j) for j in range(ring.rank)]
    _, ker = solve_affine(rows, m.orders, (0,) * m.rank, ring.orders)
    return Submodule(regular_module(ring), ker)


def singular_submodule(m: RightModule) -> Submodule:
    """Z(M): elements whose annihilator is an essential right ideal."""
    from .ideals import is_essential

    rows = []
    cache = {}
    for x in m.elements():
        ann = element_annihilator(m, x)
        flag = cache.get(ann.gens)
        if flag is None:
            flag = is_essential(m.ring, ann)
            cache[ann.gens] = flag
        if flag:
            rows.append(tuple(x))
    z = Submodule(m, rows)
    # the qualifying elements already form a subgroup; the span adds nothing
    assert z.size() == len(rows)
    return z


def annihilator(m: RightModule) -> Submodule:
    """{r in R : M·r = 0}, as a submodule of the regular module (two-sided)."""
    ring = m.ring
    reg = regular_module(ring)
    if m.rank == 0:
        return full_submodule(reg)
    rows = []
    for j in range(ring.rank):
        rows.append(tuple(x for i in range(m.rank)
                          for x in m.act_gen(m.generator(i), j)))
    eq_moduli = m.orders * m.rank
    _, ker = solve_affine(rows, eq_moduli, (0,) * len(eq_moduli), ring.orders)
    return Submodule(reg, ker)


# -- isomorphism and enumeration ----------------------------------------------


def additive_type(orders) -> tuple:
    new_orders, _, _ = quotient_presentation(tuple(orders), [])
    return new_orders


def minimal_generating_tuple(m: RightModule):
    """A small generating set, greedily built from module elements."""
    gens = []
    span = zero_submodule(m)
    if m.order() == 1:
        return []
    for x in sorted(m.elements(), key=lambda v: tuple(v), reverse=True):
        if span.contains(x):
            continue
        gens.append(tuple(x))
        span = submodule_sum(span, cyclic_span(m, x))
        if span.size() == m.order():
            return gens
    return gens


def _relation_kernel(m: RightModule, gens):
    """Kernel of (r_1..r_k) ↦ Σ gens[t]·r_t inside R^k."""
    ring = m.ring
    rows = []
    for x in gens:
        for j in range(ring.rank):
            rows.append(m.act_gen(x, j))
    umods = ring.orders * len(gens)
    _, ker = solve_affine(rows, m.orders, (0,) * m.rank, umods)
    return ker


def is_isomorphic_modules(a: RightModule, b: RightModule,
                          search_bound: int = 1 << 20):
    """(flag, witness): witness maps the generators of a generating tuple.

    Decision: pick a generating tuple of `a`, compute its relation kernel
    in R^k, and search b^k for a tuple satisfying the same relations that
    generates `b`.  Sound because any tuple passing both checks induces a
    surjective module map, hence a bijection when |a| = |b|.
    """
    if a.ring is not b.ring and (a.ring.orders != b.ring.orders
                                 or a.ring.mul != b.ring.mul):
        return False, None
    if a.order() != b.order():
        return False, None
    if additive_type(a.orders) != additive_type(b.orders):
        return False, None
    if a.order() == 1:
        return True, ModuleMap(a, b, [(0,) * b.rank] * a.rank, check=False)
    gens = minimal_generating_tuple(a)
    k = len(gens)
    if b.order() ** k > search_bound:
        raise BoundExceededError(
            f"isomorphism search space {b.order()}**{k} too large")
    ker = _relation_kernel(a, gens)
    ring = a.ring
    for cand in itertools.product(list(b.elements()), repeat=k):
        ok = True
        for rel in ker.rows:
            acc = [0] * b.rank
            for t in range(k):
                part = rel[t * ring.rank:(t + 1) * ring.rank]
                img = b.act(cand[t], part)
                for u in range(b.rank):
                    acc[u] += img[u]
            if any(x % mm for x, mm in zip(acc, b.orders)):
                ok = False
                break
        if not ok:
            continue
        span = zero_submodule(b)
        for y in cand:
            span = submodule_sum(span, cyclic_span(b, y))
        if span.size() != b.order():
            continue
        witness = _map_from_generator_images(a, b, gens, cand)
        if witness is not None:
            return True, witness
    return False, None


def _map_from_generator_images(a, b, gens, images):
    """Build the ModuleMap sending gens[t] ↦ images[t], or None."""
    ring = a.ring
    k = len(gens)
    rows = []
    for x in gens:
        for j in range(ring.rank):
            rows.append(a.act_gen(x, j))
    umods = ring.orders * k
    out_rows = []
    for i in range(a.rank):
        sol = solve_affine(rows, a.orders, a.generator(i), umods)
        if sol[0] is None:
            return None
        coeffs = sol[0]
        acc = [0] * b.rank
        for t in range(k):
            part = coeffs[t * ring.rank:(t + 1) * ring.rank]
            img = b.act(images[t], part)
            for u in range(b.rank):
                acc[u] += img[u]
        out_rows.append(b.reduce_el(acc))
    fmap = ModuleMap(a, b, out_rows, check=False)
    if not fmap.is_valid():
        return None
    return fmap


def cyclic_modules_up_to_iso(ring: FiniteRing):
    """One representative R/I per isomorphism class of cyclic modules."""
    key = "cyclic_classes"
    if key in ring._cache:
        return ring._cache[key]
    from .ideals import right_ideals

    reps = []
    for ideal in right_ideals(ring):
        q, _ = cyclic_module(ring, ideal)
        if not any(is_isomorphic_modules(q, r)[0] for r in reps):
            reps.append(q)
    reps.sort(key=lambda m: (m.order(), m.orders))
    ring._cache[key] = reps
    return reps


def enumerate_modules(ring: FiniteRing, max_free_rank: int = 2,
                      max_order: int = 64, ceiling: int = 20000):
    """All iso-classes of quotients of R^k, k ≤ max_free_rank, of order
    ≤ max_order."""
    reg = regular_module(ring)
    reps = []
    for k in range(1, max_free_rank + 1):
        free = direct_sum([reg] * k, label=f"R^{k}")
        if free.order() > SUBMODULE_ENUM_BOUND:
            raise BoundExceededError(
                f"free module of order {free.order()} not enumerable")
        subs = submodules(free)
        if len(subs) > ceiling:
            raise BoundExceededError(
                f"{len(subs)} submodules of R^{k} exceed ceiling {ceiling}")
        for s in subs:
            if free.order() // s.size() > max_order:
                continue
            q, _ = quotient_module(free, s)
            if not any(is_isomorphic_modules(q, r)[0] for r in reps):
                reps.append(q)
    reps.sort(key=lambda m: (m.order(), m.orders))
    return reps
