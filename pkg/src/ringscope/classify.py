"""Ring-level predicates and the cross-module verification suite.

The suite (V1..V16) re-derives the structure theorems that the profile
machinery relies on, each by an independent route, and reports
pass/fail/skipped per check.  A failure is either a bug or a genuine
counterexample; both must surface identically.
"""

from __future__ import annotations

import itertools

from .errors import BoundExceededError
from .hom import (
    hom_group,
    is_injective,
    is_quasi,
    is_relatively_injective,
    is_relatively_projective,
)
from .ideals import (
    ideals_in_radical,
    is_two_sided,
    jacobson_radical,
    minimal_right_ideals,
    right_ideals,
    two_sided_ideals,
)
from .lattice import are_isomorphic, build_lattice, structure_report
from .modules import (
    Submodule,
    cyclic_module,
    cyclic_modules_up_to_iso,
    direct_sum,
    enumerate_modules,
    is_isomorphic_modules,
    module_times_ideal,
    regular_module,
    socle,
    socle_series,
    submodule_as_module,
    submodules,
)
from .profile import (
    i_profile,
    inj_fingerprint,
    is_poor,
    killed_by,
    p_profile,
    proj_fingerprint,
    semisimple_cyclics,
)
from .ring import FiniteRing, quotient_ring, units
from .torsion import all_linear_filters, eta_filter


def is_semisimple_ring(ring: FiniteRing) -> bool:
    return jacobson_radical(ring).size() == 1


def is_local(ring: FiniteRing) -> bool:
    """Non-units closed under addition."""
    unit_set = units(ring)
    non_units = [x for x in ring.elements() if tuple(x) not in unit_set]
    for x in non_units:
        for y in non_units:
            if ring.el_add(x, y) in unit_set:
                return False
    return True


def is_chain_ring(ring: FiniteRing) -> bool:
    ideals = right_ideals(ring)
    return all(a.contains_sub(b) or b.contains_sub(a)
               for a, b in itertools.combinations(ideals, 2))


def is_uniform_ring(ring: FiniteRing) -> bool:
    """Every two nonzero right ideals intersect nontrivially; it suffices
    to test the minimal ones."""
    atoms = minimal_right_ideals(ring)
    return len(atoms) <= 1


def is_qf(ring: FiniteRing) -> bool:
    """Self-injectivity of the regular module (finite rings are noetherian)."""
    return is_injective(regular_module(ring))


def is_super_qf(ring: FiniteRing):
    """(flag, certificate): certificate is a two-sided ideal with non-QF
    factor ring when the answer is negative."""
    for ideal in two_sided_ideals(ring):
        if ideal.size() == ring.order():
            continue  # zero factor ring
        if ideal.size() == 1:
            factor = ring
        else:
            factor, _, _ = quotient_ring(ring, ideal.gens.rows)
        if not is_qf(factor):
            return False, ideal
    return True, None


def socle_homogeneous(m) -> bool:
    """m is semisimple with pairwise isomorphic simple summands."""
    if m.order() == 1:
        return True
    if socle(m).size() != m.order():
        return False
    minimals = [s for s in submodules(m) if s.size() > 1
                and not any(t.size() > 1 and t.size() < s.size()
                            and s.contains_sub(t) for t in submodules(m))]
    simples = [submodule_as_module(s)[0] for s in minimals]
    return all(is_isomorphic_modules(simples[0], s)[0] for s in simples[1:])


def radical_as_module(ring: FiniteRing):
    jac = jacobson_radical(ring)
    return submodule_as_module(jac)[0]


def is_simple_artinian(ring: FiniteRing) -> bool:
    """Semisimple with a single simple class: matrix ring over a division
    ring."""
    if not is_semisimple_ring(ring):
        return False
    atoms = minimal_right_ideals(ring)
    if not atoms:
        return False
    mods = [submodule_as_module(a)[0] for a in atoms]
    return all(is_isomorphic_modules(mods[0], a)[0] for a in mods[1:])


class VerifyReport:
    """Ordered results of the verification suite."""

    def __init__(self):
        self.entries = []

    def add(self, check_id: str, statement: str, status: str,
            certificate=None):
        assert status in ("pass", "fail", "skipped")
        self.entries.append({
            "id": check_id,
            "statement": statement,
            "status": status,
            "certificate": certificate,
        })

    @property
    def failed(self):
        return [e for e in self.entries if e["status"] == "fail"]

    def ok(self) -> bool:
        return not self.failed

    def lines(self):
        for e in self.entries:
            suffix = ""
            if e["status"] == "fail" and e["certificate"] is not None:
                suffix = f"  [{e['certificate']}]"
            elif e["status"] == "skipped" and e["certificate"] is not None:
                suffix = f"  ({e['certificate']})"
            yield f"{e['id']:<4} {e['status']:<7} {e['statement']}{suffix}"


def verify_suite(ring: FiniteRing, max_free_rank: int = 1,
                 max_order: int = 64, product_partner=None) -> VerifyReport:
    """Run checks V1..V16 and collect a report.

    product_partner, when given, is a second ring used for the product
    law check (V3); otherwise V3 is skipped.
    """
    rep = VerifyReport()
    reg = regular_module(ring)
    jac = jacobson_radical(ring)
    semisimple = jac.size() == 1
    ip = i_profile(ring)
    pp = p_profile(ring)
    cyclics = cyclic_modules_up_to_iso(ring)

    # V1: profile via ideals equals profile via filter enumeration
    structural = {eta_filter(ring, i) for i in ip.ideals}
    brute = set(all_linear_filters(ring, above_all_maximal=True))
    rep.add("V1", "ideal route and filter route give the same profile",
            "pass" if structural == brute else "fail",
            None if structural == brute else (structural, brute))

    # V2: intersection law on cyclic pairs
    bad = None
    for a, b in itertools.combinations_with_replacement(cyclics, 2):
        lhs = inj_fingerprint(direct_sum([a, b]))
        rhs_members = inj_fingerprint(a).members & inj_fingerprint(b).members
        if lhs.members != rhs_members:
            bad = (a.label, b.label)
            break
    rep.add("V2", "domain of a direct sum is the intersection of domains",
            "pass" if bad is None else "fail", bad)

    # V3: product law
    if product_partner is None:
        rep.add("V3", "profile of a product is the product of profiles",
                "skipped", "no partner ring supplied")
    else:
        from .lattice import lattice_product
        from .ring import product_ring

        prod = product_ring([ring, product_partner])
        okv3 = True
        for mk, fn in (("i", i_profile), ("p", p_profile)):
            lhs = fn(prod).lattice
            rhs = lattice_product(fn(ring).lattice,
                                  fn(product_partner).lattice)
            if not are_isomorphic(lhs, rhs)[0]:
                okv3 = False
        rep.add("V3", "profile of a product is the product of profiles",
                "pass" if okv3 else "fail")

    # V4: profile lattice modular and coatomic
    okv4 = ip.flags["modular"] and ip.flags["coatomic"]
    rep.add("V4", "profile lattice is modular and coatomic",
            "pass" if okv4 else "fail", None if okv4 else ip.flags)

    # V5: chain rings have chain profiles of length (Loewy length - 1)
    if not is_chain_ring(ring):
        rep.add("V5", "chain ring profile is a chain of length l(R)-1",
                "skipped", "not a chain ring")
    else:
        _, loewy = socle_series(reg)
        okv5 = ip.flags["is_chain"] and ip.flags["length"] == max(loewy - 1, 0)
        rep.add("V5", "chain ring profile is a chain of length l(R)-1",
                "pass" if okv5 else "fail",
                None if okv5 else (ip.flags["length"], loewy))

    # V6: QF law — profile matches the ideal lattice of R/Soc(R)
    qf = is_qf(ring)
    if not qf:
        rep.add("V6", "QF profile is isomorphic to the ideal lattice of R/Soc",
                "skipped", "ring is not QF")
    else:
        soc = socle(reg)
        if soc.size() == ring.order():
            okv6 = ip.size == 1
        else:
            fac, _, _ = quotient_ring(ring, soc.gens.rows)
            tsf = two_sided_ideals(fac)
            flat = build_lattice(list(range(len(tsf))),
                                 leq=lambda a, b: tsf[b].contains_sub(tsf[a]))
            okv6 = are_isomorphic(ip.lattice, flat)[0]
        rep.add("V6", "QF profile is isomorphic to the ideal lattice of R/Soc",
                "pass" if okv6 else "fail")

    # V7: middle class iff a two-sided ideal strictly between 0 and J
    strict = [i for i in ip.ideals if 1 < i.size() < jac.size()]
    okv7 = (ip.size > 2) == bool(strict)
    rep.add("V7", "middle class iff the radical holds a nontrivial ideal",
            "pass" if okv7 else "fail")

    # V8: projectivity fingerprint of R/I is the annihilator condition
    bad = None
    for i in pp.ideals:
        w, _ = cyclic_module(ring, i)
        if proj_fingerprint(w) != killed_by(ring, i):
            bad = i
            break
    rep.add("V8", "factor modules realize the annihilator fingerprint",
            "pass" if bad is None else "fail", bad)

    # V9: R/J is i-poor
    rj, _ = cyclic_module(ring, jac)
    okv9 = is_poor(rj, "i")
    rep.add("V9", "the factor by the radical is i-poor",
            "pass" if okv9 else "fail")

    # V10: chain profile of a non-semisimple ring has a simple i-poor module
    if semisimple or not ip.flags["is_chain"]:
        rep.add("V10", "chain profile admits a simple i-poor module",
                "skipped",
                "semisimple ring" if semisimple else "profile not a chain")
    else:
        simples = [submodule_as_module(s)[0]
                   for s in minimal_right_ideals(ring)]
        okv10 = any(is_poor(s, "i") for s in simples)
        rep.add("V10", "chain profile admits a simple i-poor module",
                "pass" if okv10 else "fail")

    # V11: no middle class forces J^2 = 0
    if semisimple or ip.size > 2:
        rep.add("V11", "no middle class forces a square-zero radical",
                "skipped",
                "semisimple ring" if semisimple else "middle class present")
    else:
        jsq = Submodule(reg, [ring.el_mul(a, b)
                              for a in jac.gens.rows for b in jac.gens.rows])
        rep.add("V11", "no middle class forces a square-zero radical",
                "pass" if jsq.size() == 1 else "fail")

    # V12: super QF iff every factor is QF, with a bounded fingerprint check
    sflag, cert = is_super_qf(ring)
    try:
        pool = enumerate_modules(ring, max_free_rank, max_order)
    except BoundExceededError:
        pool = None
    if pool is None:
        rep.add("V12", "super QF fingerprint agreement within bounds",
                "skipped", "module enumeration out of bounds")
    elif sflag:
        bad = None
        for m in pool:
            if inj_fingerprint(m) != proj_fingerprint(m):
                bad = m
                break
        rep.add("V12", "super QF fingerprint agreement within bounds",
                "pass" if bad is None else "fail", bad)
    elif qf:
        found = any(inj_fingerprint(m) != proj_fingerprint(m) for m in pool)
        rep.add("V12", "non-super QF ring shows a fingerprint discrepancy",
                "pass" if found else "fail",
                None if found else f"bound rank {max_free_rank}")
    else:
        rep.add("V12", "super QF fingerprint agreement within bounds",
                "skipped", "ring is not QF")

    # V13: filters are exactly the up-sets of two-sided ideals
    filters = set(all_linear_filters(ring))
    etas = {eta_filter(ring, i) for i in two_sided_ideals(ring)}
    rep.add("V13", "every linear filter is the up-set of a two-sided ideal",
            "pass" if filters == etas else "fail")

    # V14: without i-middle class, quasi-injective non-semisimple => injective
    if semisimple or ip.size > 2:
        rep.add("V14", "quasi-injective collapse without middle class",
                "skipped",
                "semisimple ring" if semisimple else "middle class present")
    else:
        pool = pool if pool is not None else []
        bad = None
        for m in pool:
            if m.order() == 1:
                continue
            if module_times_ideal(m, jac).size() == 1:
                continue  # semisimple module
            if is_quasi(m, "injective") and not is_injective(m):
                bad = m
                break
        rep.add("V14", "quasi-injective collapse without middle class",
                "pass" if bad is None else "fail", bad)

    # V15: local ring with chain profile iff linearly ordered ideals
    if not is_local(ring):
        rep.add("V15", "local ring: chain profile iff chain of ideals",
                "skipped", "ring is not local")
    else:
        ts = two_sided_ideals(ring)
        chain_ideals = all(a.contains_sub(b) or b.contains_sub(a)
                           for a, b in itertools.combinations(ts, 2))
        rep.add("V15", "local ring: chain profile iff chain of ideals",
                "pass" if ip.flags["is_chain"] == chain_ideals else "fail")

    # V16: QF with nonzero radical — simple artinian factor by the socle,
    # radical free of nontrivial ideals, homogeneous semisimple radical:
    # all three agree
    if not qf or semisimple:
        rep.add("V16", "QF equivalences for the socle factor and the radical",
                "skipped",
                "semisimple ring" if semisimple else "ring is not QF")
    else:
        soc = socle(reg)
        if soc.size() == ring.order():
            cond1 = False
        else:
            fac, _, _ = quotient_ring(ring, soc.gens.rows)
            cond1 = is_simple_artinian(fac)
        cond2 = not [i for i in two_sided_ideals(ring)
                     if 1 < i.size() < jac.size()
                     and jac.contains_sub(i)]
        cond3 = socle_homogeneous(radical_as_module(ring))
        okv16 = cond1 == cond2 == cond3
        rep.add("V16", "QF equivalences for the socle factor and the radical",
                "pass" if okv16 else "fail",
                None if okv16 else (cond1, cond2, cond3))

    return rep


def classify_report(ring: FiniteRing) -> dict:
    """The predicate bundle rendered by the command layer."""
    sqf, cert = is_super_qf(ring)
    ip = i_profile(ring)
    pp = p_profile(ring)
    return {
        "label": ring.label,
        "order": ring.order(),
        "semisimple": is_semisimple_ring(ring),
        "local": is_local(ring),
        "chain_ring": is_chain_ring(ring),
        "uniform": is_uniform_ring(ring),
        "qf": is_qf(ring),
        "super_qf": sqf,
        "super_qf_certificate": (None if cert is None
                                 else [list(r) for r in cert.gens.rows]),
        "i_middle_class": ip.size > 2,
        "p_middle_class": pp.size > 2,
        "profile_nodes": ip.size,
        "radical_order": jacobson_radical(ring).size(),
    }
