"""Hom groups and relative injectivity/projectivity.

Hom_R(A, B) is computed in one linear solve: a map is a matrix F over
the target moduli that is additively well defined and commutes with the
action of every ring generator, all of which are linear conditions on
the entries.  Relative injectivity of M with respect to N is decided by
surjectivity of the restriction maps Hom(N,M) → Hom(K,M) over all
submodules K ≤ N, one span comparison per submodule; the projective
side uses composition with the projections N → N/L.
"""

from __future__ import annotations

from .errors import BoundExceededError
from .exactla import ModMatrix, howell_span, solve_affine, zero_matrix
from .modules import (
    ModuleMap,
    RightModule,
    Submodule,
    quotient_module,
    regular_module,
    submodule_as_module,
    submodules,
)


class HomGroup:
    """The abelian group Hom_R(source, target), as a canonical span.

    ``basis`` spans the group inside ⊕_(i,j) Z/target.orders[j], the
    flattened matrix coordinates (source generator i, target coord j).
    """

    def __init__(self, source: RightModule, target: RightModule,
                 basis: ModMatrix):
        self.source = source
        self.target = target
        self.basis = basis

    def size(self) -> int:
        return self.basis.span_size()

    def _unflatten(self, flat) -> ModuleMap:
        t = self.target.rank
        rows = [flat[i * t:(i + 1) * t] for i in range(self.source.rank)]
        return ModuleMap(self.source, self.target, rows, check=False)

    def gen_maps(self):
        return [self._unflatten(r) for r in self.basis.rows]

    def maps(self, bound: int = 4096):
        if self.size() > bound:
            raise BoundExceededError(
                f"hom group of order {self.size()} exceeds bound {bound}")
        for flat in self.basis.span_elements():
            yield self._unflatten(flat)

    def contains_map(self, fmap: ModuleMap) -> bool:
        flat = tuple(x for row in fmap.rows for x in row)
        return self.basis.contains(flat)


def hom_group(a: RightModule, b: RightModule) -> HomGroup:
    """Hom_R(a, b) with a cached canonical basis."""
    key = ("hom", id(b), b.orders, tuple(m.rows for m in b.action))
    cache = a._cache.setdefault("hom_groups", {})
    if key in cache:
        return cache[key]
    ring = a.ring
    ncols = a.rank * b.rank
    umods = tuple(b.orders[j] for _ in range(a.rank) for j in range(b.rank))
    if ncols == 0:
        grp = HomGroup(a, b, zero_matrix(umods))
        cache[key] = grp
        return grp

    def upos(i, j):
        return i * b.rank + j

    eq_rows = [[0] * 0 for _ in range(ncols)]
    eq_moduli = []
    cols = [[] for _ in range(ncols)]

    def add_equation(coeffs: dict, modulus: int):
        pos = len(eq_moduli)
        eq_moduli.append(modulus)
        for u, c in coeffs.items():
            cols[u].append((pos, c))

    # additive well-definedness: orders[i]·F[i][j] ≡ 0
    for i in range(a.rank):
        for j in range(b.rank):
            add_equation({upos(i, j): a.orders[i]}, b.orders[j])
    # commutation with each generator action
    for g in range(ring.rank):
        for i in range(a.rank):
            moved = a.act_gen(a.generator(i), g)  # e_i · g in source
            bact = b.action[g].rows
            for u in range(b.rank):
                coeffs = {}
                for t in range(a.rank):
                    if moved[t]:
                        coeffs[upos(t, u)] = coeffs.get(upos(t, u), 0) + moved[t]
                for v in range(b.rank):
                    if bact[v][u]:
                        coeffs[upos(i, v)] = coeffs.get(upos(i, v), 0) - bact[v][u]
                coeffs = {k: c for k, c in coeffs.items() if c % b.orders[u]}
                if coeffs:
                    add_equation(coeffs, b.orders[u])
    neq = len(eq_moduli)
    rows = [[0] * neq for _ in range(ncols)]
    for u in range(ncols):
        for pos, c in cols[u]:
            rows[u][pos] = c
    _, ker = solve_affine(rows, eq_moduli, (0,) * neq, umods)
    grp = HomGroup(a, b, ker)
    cache[key] = grp
    return grp


def hom_basis(a: RightModule, b: RightModule):
    """Generating maps of Hom_R(a, b)."""
    return hom_group(a, b).gen_maps()


def _flatten_map_rows(rows):
    return tuple(x for row in rows for x in row)


def is_relatively_injective(m: RightModule, n: RightModule):
    """(flag, certificate): certificate is (K, φ) with φ: K → m
    non-extendable to n when the answer is negative."""
    homs_nm = hom_group(n, m)
    for k in submodules(n):
        if k.size() == n.order():
            continue  # restriction along the identity
        kmod, incl, _ = submodule_as_module(k)
        homs_km = hom_group(kmod, m)
        if homs_km.size() == 1:
            continue
        flat_mods = tuple(m.orders[j] for _ in range(kmod.rank)
                          for j in range(m.rank))
        restrictions = []
        for gen in homs_nm.gen_maps():
            restricted = [gen.apply(incl.rows[t]) for t in range(kmod.rank)]
            restrictions.append(_flatten_map_rows(restricted))
        image = howell_span(flat_mods, restrictions)
        if image.span_size() == homs_km.size():
            continue
        for phi in homs_km.maps():
            if not image.contains(_flatten_map_rows(phi.rows)):
                return False, (k, phi)
        raise AssertionError("span size mismatch without a missing map")
    return True, None


def is_relatively_projective(m: RightModule, n: RightModule):
    """(flag, certificate): certificate is (L, ψ) with ψ: m → n/L
    non-liftable through the projection when the answer is negative."""
    homs_mn = hom_group(m, n)
    for l in submodules(n):
        if l.size() == 1:
            continue  # lifting along the identity
        q, proj = quotient_module(n, l)
        homs_mq = hom_group(m, q)
        if homs_mq.size() == 1:
            continue
        flat_mods = tuple(q.orders[j] for _ in range(m.rank)
                          for j in range(q.rank))
        composites = []
        for gen in homs_mn.gen_maps():
            composed = [proj.apply(r) for r in gen.rows]
            composites.append(_flatten_map_rows(composed))
        image = howell_span(flat_mods, composites)
        if image.span_size() == homs_mq.size():
            continue
        for psi in homs_mq.maps():
            if not image.contains(_flatten_map_rows(psi.rows)):
                return False, (l, psi)
        raise AssertionError("span size mismatch without a missing map")
    return True, None


def is_injective(m: RightModule) -> bool:
    """Self-injectivity test relative to the regular module.

    Extending maps from right ideals of R into M suffices for full
    injectivity over these rings (the regular module is a test module).
    """
    flag, _ = is_relatively_injective(m, regular_module(m.ring))
    return flag


def is_projective(m: RightModule) -> bool:
    """Projectivity via projectivity relative to the regular module.

    Any finite M admits an epimorphism R^k → M.  Projectivity relative
    to R gives projectivity relative to R^k (projectivity domains are
    closed under finite direct sums), so the identity of M lifts through
    R^k → M, splitting it; hence M is a summand of a free module, i.e.
    projective.  The converse is immediate.
    """
    flag, _ = is_relatively_projective(m, regular_module(m.ring))
    return flag


def is_quasi(m: RightModule, kind: str) -> bool:
    """Self-relative injectivity or projectivity."""
    if kind == "injective":
        return is_relatively_injective(m, m)[0]
    if kind == "projective":
        return is_relatively_projective(m, m)[0]
    raise ValueError(f"kind must be injective or projective, got {kind!r}")


def trace(sources, target: RightModule) -> Submodule:
    """Sum of all homomorphic images of the sources inside the target."""
    rows = []
    for src in sources:
        for gen in hom_group(src, target).gen_maps():
            rows.extend(gen.rows)
    return Submodule(target, rows)
