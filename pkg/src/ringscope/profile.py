"""Injectivity/projectivity profiles of a finite ring.

The profile is the lattice of realizable domains.  It is assembled by
two independent routes — structurally as {η(I) : I two-sided, I ⊆ J(R)}
and by brute-force enumeration of linear filters above all maximal
right ideals — and the two must agree exactly; a mismatch aborts the
computation, it is never papered over.  Domains are tracked through
their restriction to cyclic modules (fingerprints), enough to separate
any two domains over these rings.
"""

from __future__ import annotations

from .errors import BoundExceededError, TheoremViolationError
from .hom import is_relatively_injective, is_relatively_projective
from .ideals import ideals_in_radical, jacobson_radical, two_sided_ideals
from .lattice import FiniteLattice, are_isomorphic, build_lattice, structure_report
from .modules import (
    RightModule,
    cyclic_module,
    cyclic_modules_up_to_iso,
    enumerate_modules,
    module_times_ideal,
    regular_module,
    socle,
)
from .ring import FiniteRing
from .torsion import LinearFilter, all_linear_filters, eta_filter


class CyclicFingerprint:
    """A domain restricted to the cyclic iso-classes, as an index set."""

    def __init__(self, ring: FiniteRing, members):
        self.ring = ring
        self.members = frozenset(int(t) for t in members)

    def modules(self):
        reps = cyclic_modules_up_to_iso(self.ring)
        return [reps[t] for t in sorted(self.members)]

    def __eq__(self, other):
        return (isinstance(other, CyclicFingerprint)
                and self.ring is other.ring
                and self.members == other.members)

    def __hash__(self):
        return hash(self.members)

    def __le__(self, other):
        return self.members <= other.members

    def __len__(self):
        return len(self.members)

    def __repr__(self):
        return f"CyclicFingerprint({sorted(self.members)})"


def inj_fingerprint(m: RightModule) -> CyclicFingerprint:
    """{cyclic C : m is C-injective}."""
    reps = cyclic_modules_up_to_iso(m.ring)
    members = [t for t, c in enumerate(reps)
               if is_relatively_injective(m, c)[0]]
    return CyclicFingerprint(m.ring, members)


def proj_fingerprint(m: RightModule) -> CyclicFingerprint:
    """{cyclic C : m is C-projective}."""
    reps = cyclic_modules_up_to_iso(m.ring)
    members = [t for t, c in enumerate(reps)
               if is_relatively_projective(m, c)[0]]
    return CyclicFingerprint(m.ring, members)


def semisimple_cyclics(ring: FiniteRing) -> CyclicFingerprint:
    """Cyclic classes killed by the radical — exactly the semisimple ones."""
    jac = jacobson_radical(ring)
    reps = cyclic_modules_up_to_iso(ring)
    members = [t for t, c in enumerate(reps)
               if module_times_ideal(c, jac).size() == 1]
    return CyclicFingerprint(ring, members)


def killed_by(ring: FiniteRing, ideal) -> CyclicFingerprint:
    """Cyclic classes C with C·I = 0."""
    reps = cyclic_modules_up_to_iso(ring)
    members = [t for t, c in enumerate(reps)
               if module_times_ideal(c, ideal).size() == 1]
    return CyclicFingerprint(ring, members)


class ProfileReport:
    """Profile lattice plus per-node data and structure flags."""

    def __init__(self, kind: str, ring: FiniteRing, lattice: FiniteLattice,
                 ideals, filters, witnesses):
        self.kind = kind
        self.ring = ring
        self.lattice = lattice
        self.ideals = ideals          # node t -> two-sided ideal I_t
        self.filters = filters        # node t -> eta(I_t)
        self.witnesses = witnesses    # node t -> module or None
        rep = structure_report(lattice)
        self.flags = {
            "is_chain": rep["chain"],
            "has_middle_class": lattice.size > 2,
            "modular": rep["modular"],
            "distributive": rep["distributive"],
            "coatomic": rep["coatomic"],
            "atomic": rep["atomic"],
            "length": rep["length"],
            "atoms": rep["atoms"],
            "coatoms": rep["coatoms"],
        }

    @property
    def size(self) -> int:
        return self.lattice.size


def _profile_nodes(ring: FiniteRing):
    """Two-sided ideals inside J(R) with the filter cross-check applied."""
    jac = jacobson_radical(ring)
    nodes = [i for i in two_sided_ideals(ring) if jac.contains_sub(i)]
    structural = {eta_filter(ring, i) for i in nodes}
    brute = set(all_linear_filters(ring, above_all_maximal=True))
    if structural != brute:
        raise TheoremViolationError(
            f"{ring.label}: filters above all maximal right ideals do not "
            f"match eta-filters of ideals inside the radical "
            f"({len(brute)} vs {len(structural)})")
    return nodes


def _profile_lattice(ring: FiniteRing, nodes):
    # order the nodes by reverse inclusion of ideals: larger ideal =>
    # smaller domain => lower in the profile
    lat = build_lattice(list(range(len(nodes))),
                        leq=lambda a, b: nodes[a].contains_sub(nodes[b]))
    ideal_lat, _ = ideals_in_radical(ring)
    ok, _ = are_isomorphic(lat, ideal_lat, anti=True)
    if not ok:
        raise TheoremViolationError(
            f"{ring.label}: profile lattice is not anti-isomorphic to the "
            "lattice of ideals inside the radical")
    return lat


def i_profile(ring: FiniteRing) -> ProfileReport:
    """The injectivity profile, cross-validated against filter enumeration."""
    nodes = _profile_nodes(ring)
    lat = _profile_lattice(ring, nodes)
    filters = [eta_filter(ring, i) for i in nodes]
    witnesses = []
    for i in nodes:
        found = find_witness(ring, i, "i", quick_only=True)
        witnesses.append(found)
    return ProfileReport("i", ring, lat, nodes, filters, witnesses)


def p_profile(ring: FiniteRing) -> ProfileReport:
    """The projectivity profile; every node's witness R/I is verified."""
    nodes = _profile_nodes(ring)
    lat = _profile_lattice(ring, nodes)
    filters = [eta_filter(ring, i) for i in nodes]
    witnesses = []
    for i in nodes:
        w, _ = cyclic_module(ring, i)
        if proj_fingerprint(w) != killed_by(ring, i):
            raise TheoremViolationError(
                f"{ring.label}: projectivity domain of the factor module "
                "does not match the annihilator condition")
        witnesses.append(w)
    return ProfileReport("p", ring, lat, nodes, filters, witnesses)


def profile(ring: FiniteRing, kind: str) -> ProfileReport:
    if kind == "i":
        return i_profile(ring)
    if kind == "p":
        return p_profile(ring)
    raise ValueError(f"kind must be 'i' or 'p', got {kind!r}")


def is_poor(m: RightModule, kind: str) -> bool:
    """True when the domain is as small as possible (semisimples only)."""
    fp = inj_fingerprint(m) if kind == "i" else proj_fingerprint(m)
    return fp == semisimple_cyclics(m.ring)


def has_middle_class(ring: FiniteRing, kind: str) -> bool:
    """True iff the profile has more than two nodes."""
    return profile(ring, kind).size > 2


def rises_bounded(m: RightModule, n: RightModule, max_free_rank: int = 1,
                  max_order: int = 64):
    """Search for a module that is m-injective but not n-injective.

    Returns ("refuted", witness) or ("consistent_up_to_bound", bounds);
    the latter is a bounded non-refutation, never a proof.
    """
    for e in enumerate_modules(m.ring, max_free_rank, max_order):
        if (is_relatively_injective(e, m)[0]
                and not is_relatively_injective(e, n)[0]):
            return "refuted", e
    return "consistent_up_to_bound", (max_free_rank, max_order)


def find_witness(ring: FiniteRing, ideal, kind: str,
                 max_free_rank: int = 1, max_order: int = 64,
                 quick_only: bool = False):
    """A module whose domain is the node of the given two-sided ideal.

    kind "p": R/I, verified, always found.  kind "i": tries R/I and the
    regular module first, then a bounded enumeration; returns None when
    the search is exhausted (the bound is honest, absence is not proved).
    """
    target = killed_by(ring, ideal)
    if kind == "p":
        w, _ = cyclic_module(ring, ideal)
        if proj_fingerprint(w) != target:
            raise TheoremViolationError(
                f"{ring.label}: factor module fails its projectivity "
                "fingerprint")
        return w
    quick = [cyclic_module(ring, ideal)[0], regular_module(ring)]
    for cand in quick:
        if inj_fingerprint(cand) == target:
            return cand
    if quick_only:
        return None
    try:
        pool = enumerate_modules(ring, max_free_rank, max_order)
    except BoundExceededError:
        return None
    for cand in pool:
        if inj_fingerprint(cand) == target:
            return cand
    return None
