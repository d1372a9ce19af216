"""Finite associative rings with identity, given by structure constants.

A ring is an additive group ⊕_i Z/n_i together with a bilinear product
recorded on generators: ``mul[i][j]`` is the coordinate vector of g_i·g_j.
Constructors cover Z/n, explicit tables, path algebras of acyclic quivers
over F_p, matrix rings, finite products, two-sided quotients, and
opposites.
"""

from __future__ import annotations

import graphlib
import itertools
import math
import os
from functools import reduce

from .errors import BoundExceededError, InputError
from .exactla import ModMatrix, apply_matrix, howell_span, quotient_presentation

DEFAULT_MAX_ORDER = 65536


def max_ring_order() -> int:
    return int(os.environ.get("RINGSCOPE_MAX_ORDER", DEFAULT_MAX_ORDER))


class FiniteRing:
    """A finite ring with identity, immutable once validated."""

    def __init__(self, orders, mul, one, label: str = "ring"):
        self.orders = tuple(int(n) for n in orders)
        if any(n < 1 for n in self.orders):
            raise InputError("generator orders must be positive")
        d = len(self.orders)
        if len(mul) != d or any(len(row) != d for row in mul):
            raise InputError("multiplication table has wrong shape")
        self.mul = tuple(
            tuple(tuple(int(x) % m for x, m in zip(vec, self.orders))
                  for vec in row)
            for row in mul
        )
        if len(one) != d:
            raise InputError("identity vector has wrong length")
        self.one = tuple(int(x) % m for x, m in zip(one, self.orders))
        self.label = label
        self.zero = (0,) * d
        self.exponent = reduce(math.lcm, self.orders, 1)
        self._cache = {}

    @property
    def rank(self) -> int:
        return len(self.orders)

    def order(self) -> int:
        return math.prod(self.orders)

    def __repr__(self):
        return f"FiniteRing({self.label}, order={self.order()})"

    def reduce_el(self, vec):
        return tuple(int(x) % m for x, m in zip(vec, self.orders))

    def el_add(self, x, y):
        return tuple((a + b) % m for a, b, m in zip(x, y, self.orders))

    def el_neg(self, x):
        return tuple((-a) % m for a, m in zip(x, self.orders))

    def el_mul(self, x, y):
        acc = [0] * self.rank
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.mul[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                t = row[j]
                for k in range(self.rank):
                    acc[k] += c * t[k]
        return tuple(a % m for a, m in zip(acc, self.orders))

    def elements(self, bound: int | None = None):
        limit = bound if bound is not None else max_ring_order()
        if self.order() > limit:
            raise BoundExceededError(
                f"ring of order {self.order()} exceeds enumeration bound {limit}")
        return itertools.product(*(range(n) for n in self.orders))

    def left_mul_matrix(self, a) -> ModMatrix:
        """Matrix of x ↦ a·x in the generator coordinates (rows = images)."""
        rows = []
        for j in range(self.rank):
            e = [0] * self.rank
            e[j] = 1
            rows.append(self.el_mul(a, tuple(e)))
        return ModMatrix(self.orders, rows, self.exponent)

    def right_mul_matrix(self, a) -> ModMatrix:
        """Matrix of x ↦ x·a (rows = images of the generators)."""
        rows = []
        for i in range(self.rank):
            e = [0] * self.rank
            e[i] = 1
            rows.append(self.el_mul(tuple(e), a))
        return ModMatrix(self.orders, rows, self.exponent)

    def generator(self, i):
        e = [0] * self.rank
        e[i] = 1
        return tuple(e)


def verify_ring_axioms(r: FiniteRing):
    """None when the tables define a ring with identity r.one; otherwise a
    human-readable description of the first violated law."""
    d = r.rank
    for i in range(d):
        for j in range(d):
            prod = r.mul[i][j]
            for k in range(d):
                if (r.orders[i] * prod[k]) % r.orders[k]:
                    return (f"product g{i}*g{j} not well defined: "
                            f"{r.orders[i]} copies do not vanish")
                if (r.orders[j] * prod[k]) % r.orders[k]:
                    return (f"product g{i}*g{j} not well defined: "
                            f"{r.orders[j]} copies do not vanish")
    for i in range(d):
        g = r.generator(i)
        if r.el_mul(r.one, g) != g:
            return f"left unit law fails on generator g{i}"
        if r.el_mul(g, r.one) != g:
            return f"right unit law fails on generator g{i}"
    for i in range(d):
        gi = r.generator(i)
        for j in range(d):
            left = r.mul[i][j]
            for k in range(d):
                gk = r.generator(k)
                if r.el_mul(left, gk) != r.el_mul(gi, r.mul[j][k]):
                    return f"associativity fails on (g{i}, g{j}, g{k})"
    return None


def _validated(ring: FiniteRing) -> FiniteRing:
    report = verify_ring_axioms(ring)
    if report is not None:
        raise InputError(f"{ring.label}: {report}")
    return ring


# -- constructors -----------------------------------------------------------


def zmod(n: int) -> FiniteRing:
    if n < 1:
        raise InputError("zmod needs n >= 1")
    return _validated(FiniteRing((n,), [[(1,)]], (1,), label=f"Z/{n}"))


def table_ring(orders, mul, one, label: str = "table") -> FiniteRing:
    return _validated(FiniteRing(orders, mul, one, label=label))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in range(2, int(p ** 0.5) + 1):
        if p % q == 0:
            return False
    return True


def path_algebra(p: int, num_vertices: int, arrows, label: str | None = None) -> FiniteRing:
    """Path algebra of an acyclic quiver over F_p.

    Basis: all paths, including one trivial path per vertex.  The product
    a·b is "b then a": nonzero exactly when source(a) = target(b), the
    composite running from source(b) to target(a).
    """
    if not _is_prime(p):
        raise InputError(f"{p} is not prime")
    arrows = [(int(s), int(t)) for s, t in arrows]
    verts = list(range(1, num_vertices + 1))
    for s, t in arrows:
        if s not in verts or t not in verts:
            raise InputError(f"arrow {s}->{t} uses an unknown vertex")
    graph = {v: set() for v in verts}
    for s, t in arrows:
        graph[t].add(s)  # t depends on s
    try:
        tuple(graphlib.TopologicalSorter(graph).static_order())
    except graphlib.CycleError as exc:
        raise InputError("quiver has a cycle; path algebra is infinite") from exc

    # paths as (source, target, arrow index tuple); trivial paths first
    paths = [(v, v, ()) for v in verts]
    frontier = list(paths)
    while frontier:
        src, tgt, seq = frontier.pop()
        for idx, (s, t) in enumerate(arrows):
            if s == tgt:
                ext = (src, t, seq + (idx,))
                paths.append(ext)
                frontier.append(ext)
    paths.sort(key=lambda q: (len(q[2]), q))
    index = {q: i for i, q in enumerate(paths)}
    d = len(paths)

    def compose(a, b):
        # a after b
        if a[0] != b[1]:
            return None
        return (b[0], a[1], b[2] + a[2])

    zero = (0,) * d
    mul = []
    for a in paths:
        row = []
        for b in paths:
            c = compose(a, b)
            if c is None:
                row.append(zero)
            else:
                e = [0] * d
                e[index[c]] = 1
                row.append(tuple(e))
        mul.append(row)
    one = [0] * d
    for v in verts:
        one[index[(v, v, ())]] = 1
    name = label or f"F{p}-quiver({num_vertices}v,{len(arrows)}a)"
    ring = FiniteRing((p,) * d, mul, one, label=name)
    if ring.order() > max_ring_order():
        raise BoundExceededError(f"path algebra order {ring.order()} too large")
    return _validated(ring)


def matrix_ring(base: FiniteRing, size: int) -> FiniteRing:
    """size × size matrices over the base ring."""
    if size < 1:
        raise InputError("matrix size must be >= 1")
    if base.order() ** (size * size) > max_ring_order():
        raise BoundExceededError("matrix ring order exceeds bound")
    db = base.rank
    basis = [(i, j, s) for i in range(size) for j in range(size)
             for s in range(db)]
    index = {b: t for t, b in enumerate(basis)}
    d = len(basis)
    orders = tuple(base.orders[s] for (_, _, s) in basis)
    zero = (0,) * d
    mul = []
    for (i, j, s) in basis:
        row = []
        for (k, l, t) in basis:
            if j != k:
                row.append(zero)
                continue
            prod = base.mul[s][t]
            vec = [0] * d
            for u, c in enumerate(prod):
                vec[index[(i, l, u)]] = c
            row.append(tuple(vec))
        mul.append(row)
    one = [0] * d
    for i in range(size):
        for u, c in enumerate(base.one):
            one[index[(i, i, u)]] = c
    return _validated(FiniteRing(orders, mul, one,
                                 label=f"M{size}({base.label})"))


def product_ring(factors) -> FiniteRing:
    factors = list(factors)
    if not factors:
        raise InputError("product of zero rings is not supported")
    orders = tuple(n for r in factors for n in r.orders)
    offsets = []
    off = 0
    for r in factors:
        offsets.append(off)
        off += r.rank
    d = off
    zero = (0,) * d
    mul = [[zero] * d for _ in range(d)]
    for r, o in zip(factors, offsets):
        for i in range(r.rank):
            for j in range(r.rank):
                vec = [0] * d
                for k, c in enumerate(r.mul[i][j]):
                    vec[o + k] = c
                mul[o + i][o + j] = tuple(vec)
    one = [0] * d
    for r, o in zip(factors, offsets):
        for k, c in enumerate(r.one):
            one[o + k] = c
    label = " x ".join(r.label for r in factors)
    return _validated(FiniteRing(orders, mul, one, label=label))


def two_sided_closure(ring: FiniteRing, gens) -> ModMatrix:
    """Howell span of the smallest two-sided ideal containing gens."""
    span = howell_span(ring.orders, [ring.reduce_el(g) for g in gens])
    while True:
        extra = []
        for row in span.rows:
            for i in range(ring.rank):
                g = ring.generator(i)
                for cand in (ring.el_mul(g, row), ring.el_mul(row, g)):
                    if not span.contains(cand):
                        extra.append(cand)
        if not extra:
            return span
        span = span.stack(ModMatrix(ring.orders, extra, span.n)).howell_form()


def quotient_ring(base: FiniteRing, ideal_gens, label: str | None = None):
    """Factor ring by the two-sided ideal generated by ideal_gens.

    Returns (ring, proj, lift) where proj maps base coordinates onto the
    quotient coordinates and lift is a set-theoretic section.
    """
    ideal = two_sided_closure(base, ideal_gens)
    new_orders, proj, lift = quotient_presentation(base.orders, ideal.rows)
    d = len(new_orders)

    def down(vec):
        return apply_matrix(vec, proj, new_orders)

    def up(vec):
        acc = [0] * base.rank
        for c, row in zip(vec, lift):
            for k in range(base.rank):
                acc[k] += c * row[k]
        return base.reduce_el(acc)

    mul = [[down(base.el_mul(up(_unit_vec(d, i)), up(_unit_vec(d, j))))
            for j in range(d)] for i in range(d)]
    one = down(base.one)
    ring = FiniteRing(new_orders, mul, one,
                      label=label or f"{base.label}/I")
    return _validated(ring), down, up


def _unit_vec(d, i):
    e = [0] * d
    e[i] = 1
    return tuple(e)


def opposite_ring(base: FiniteRing) -> FiniteRing:
    mul = [[base.mul[j][i] for j in range(base.rank)]
           for i in range(base.rank)]
    return _validated(FiniteRing(base.orders, mul, base.one,
                                 label=f"op({base.label})"))


# -- element-level queries ---------------------------------------------------


def units(ring: FiniteRing, bound: int | None = None) -> set:
    """All elements with a two-sided inverse."""
    out = set()
    for x in ring.elements(bound):
        sol = ring.left_mul_matrix(x).solve(ring.one)
        if sol is None:
            continue
        y = ring.reduce_el(sol[0])
        if ring.el_mul(y, x) == ring.one:
            out.add(tuple(x))
    return out


def inverse(ring: FiniteRing, x):
    """Two-sided inverse of x, or None."""
    sol = ring.left_mul_matrix(x).solve(ring.one)
    if sol is None:
        return None
    y = ring.reduce_el(sol[0])
    if ring.el_mul(y, x) != ring.one:
        return None
    return y


def central_idempotents(ring: FiniteRing, bound: int | None = None) -> set:
    gens = [ring.generator(i) for i in range(ring.rank)]
    out = set()
    for x in ring.elements(bound):
        x = tuple(x)
        if ring.el_mul(x, x) != x:
            continue
        if all(ring.el_mul(x, g) == ring.el_mul(g, x) for g in gens):
            out.add(x)
    return out


# -- spec-driven construction -------------------------------------------------


def ring_from_spec(spec) -> FiniteRing:
    """Build a ring from a nested dict spec; see docs/format.md."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise InputError("ring spec must be a dict with a 'kind' field")
    kind = spec["kind"]
    label = spec.get("label")
    if kind == "zmod":
        ring = zmod(int(spec["n"]))
    elif kind == "table":
        ring = table_ring(spec["orders"], spec["mul"], spec["one"],
                          label=label or "table")
    elif kind == "path_algebra":
        ring = path_algebra(int(spec["p"]), int(spec["vertices"]),
                            spec["arrows"], label=label)
    elif kind == "matrix":
        ring = matrix_ring(ring_from_spec(spec["base"]), int(spec["size"]))
    elif kind == "product":
        ring = product_ring([ring_from_spec(s) for s in spec["factors"]])
    elif kind == "quotient":
        base = ring_from_spec(spec["base"])
        ring, _, _ = quotient_ring(base, spec["ideal_gens"], label=label)
    elif kind == "opposite":
        ring = opposite_ring(ring_from_spec(spec["base"]))
    else:
        raise InputError(f"unknown ring constructor {kind!r}")
    if ring.order() > max_ring_order():
        raise BoundExceededError(
            f"ring order {ring.order()} exceeds bound {max_ring_order()}")
    if label:
        ring.label = label
    return ring
