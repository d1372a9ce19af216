"""Modules: submodule enumeration, socle/radical, isomorphism testing.

Submodule counts are cross-checked against an exhaustive subgroup-closure
oracle that never touches the linear algebra.
"""

import pytest

from ringscope.errors import BoundExceededError, InputError
from ringscope.modules import (
    RightModule,
    Submodule,
    annihilator,
    cyclic_module,
    cyclic_modules_up_to_iso,
    cyclic_span,
    direct_sum,
    element_annihilator,
    enumerate_modules,
    full_submodule,
    is_isomorphic_modules,
    minimal_submodules,
    quotient_module,
    radical_series,
    regular_module,
    singular_submodule,
    socle,
    socle_series,
    submodule_as_module,
    submodule_intersection,
    submodules,
    verify_module_axioms,
    zero_submodule,
)
from ringscope.ring import zmod

from conftest import SMALL_CORPUS, corpus
from oracle_utils import brute_subgroup_spans


def test_submodule_counts_match_subgroup_oracle():
    expected = {"z8": 4, "z4xf2": 6, "t2f2": 7, "m2f2": 5}
    for name, count in expected.items():
        reg = regular_module(corpus(name))
        subs = submodules(reg)
        assert len(subs) == count
        oracle = brute_subgroup_spans(reg)
        assert {frozenset(s.elements()) for s in subs} == oracle


def test_submodules_are_action_stable_and_sorted():
    reg = regular_module(corpus("quiver_f2"))
    subs = submodules(reg)
    assert len(subs) == 28
    assert all(s.is_action_stable() for s in subs)
    sizes = [s.size() for s in subs]
    assert sizes == sorted(sizes)
    assert subs[0] == zero_submodule(reg)
    assert subs[-1] == full_submodule(reg)


def test_module_axioms_reject_broken_action():
    ring = zmod(4)
    # "action" of 1 sends the order-2 generator to an order-4 element
    m = RightModule(ring, (2,), [[(1,)]])
    bad = RightModule(ring, (2, 4), [[(0, 1), (0, 1)]])
    assert verify_module_axioms(m) is None
    assert verify_module_axioms(bad) is not None


def test_cyclic_span_z8():
    reg = regular_module(corpus("z8"))
    assert cyclic_span(reg, (2,)).size() == 4
    assert cyclic_span(reg, (6,)).size() == 4
    assert cyclic_span(reg, (4,)).size() == 2


def test_socle_and_series_z8():
    reg = regular_module(corpus("z8"))
    assert socle(reg).size() == 2          # (4)
    chain, loewy = socle_series(reg)
    assert loewy == 3
    assert [s.size() for s in chain] == [1, 2, 4, 8]
    rad = radical_series(reg)
    assert [s.size() for s in rad] == [8, 4, 2, 1]


def test_socle_of_t2_and_quiver():
    assert socle(regular_module(corpus("t2f2"))).size() == 4
    _, loewy = socle_series(regular_module(corpus("t2f2")))
    assert loewy == 2
    _, loewy = socle_series(regular_module(corpus("quiver_f2")))
    assert loewy == 2


def test_annihilator_of_direct_sum_is_intersection():
    for name in ("z8", "t2f2", "f2xy_j2"):
        ring = corpus(name)
        cyc = cyclic_modules_up_to_iso(ring)
        a, b = cyc[1], cyc[-1]
        lhs = annihilator(direct_sum([a, b]))
        rhs = submodule_intersection(annihilator(a), annihilator(b))
        assert lhs == rhs


def test_element_annihilator_brute_force():
    for name in ("z8", "t2f2"):
        ring = corpus(name)
        reg = regular_module(ring)
        for x in reg.elements():
            ann = element_annihilator(reg, x)
            brute = {tuple(r) for r in ring.elements()
                     if reg.act(x, r) == reg.zero}
            assert set(ann.elements()) == brute


def test_singular_submodule_z8():
    reg = regular_module(corpus("z8"))
    # annihilators of 2 and 4 are essential (the ring is uniform); 1 is free
    assert set(singular_submodule(reg).elements()) == {(0,), (2,), (4,), (6,)}


def test_singular_submodule_monotone_under_submodules():
    reg = regular_module(corpus("t2f2"))
    z = singular_submodule(reg)
    for s in submodules(reg):
        mod, incl, _ = submodule_as_module(s)
        zs = singular_submodule(mod)
        for row in zs.gens.rows:
            assert z.contains(incl.apply(row))


def test_quotient_module_projection_and_section():
    reg = regular_module(corpus("z8"))
    k = Submodule(reg, [(4,)])
    q, proj = quotient_module(reg, k)
    assert q.order() == 4
    assert proj.is_valid()
    for i in range(q.rank):
        lifted = proj.section[i]
        assert proj.apply(lifted) == q.generator(i)


def test_quotient_rejects_unstable_span():
    reg = regular_module(corpus("t2f2"))
    # single basis vector E11 does not span a right ideal
    with pytest.raises(InputError):
        quotient_module(reg, Submodule(reg, [(1, 0, 0)]))


def test_cyclic_class_counts():
    expected = {"z8": 4, "t2f2": 6, "m2f2": 3, "f2xy_j2": 6, "f2xy_x2y2": 7}
    for name, count in expected.items():
        reps = cyclic_modules_up_to_iso(corpus(name))
        assert len(reps) == count
        for a, b in zip(reps, reps[1:]):
            assert not is_isomorphic_modules(a, b)[0]


def test_cyclic_classes_z8_orders():
    assert [m.order() for m in cyclic_modules_up_to_iso(corpus("z8"))] == \
        [1, 2, 4, 8]


def test_isomorphic_minimal_ideals_of_matrix_ring():
    ring = corpus("m2f2")
    atoms = minimal_submodules(regular_module(ring))
    assert len(atoms) == 3
    mods = [submodule_as_module(a)[0] for a in atoms]
    for other in mods[1:]:
        flag, witness = is_isomorphic_modules(mods[0], other)
        assert flag
        assert witness.is_valid()
        assert witness.image_span().span_size() == other.order()


def test_non_isomorphic_same_order():
    # over Z/4 x F/2: simple at the Z/4 spot vs simple at the F/2 spot
    ring = corpus("z4xf2")
    reg = regular_module(ring)
    a = submodule_as_module(Submodule(reg, [(2, 0)]))[0]
    b = submodule_as_module(Submodule(reg, [(0, 1)]))[0]
    assert a.order() == b.order() == 2
    assert not is_isomorphic_modules(a, b)[0]


def test_isomorphism_witness_is_bijective_map():
    ring = corpus("t2f2")
    reg = regular_module(ring)
    flag, witness = is_isomorphic_modules(reg, reg)
    assert flag
    images = {witness.apply(x) for x in reg.elements()}
    assert len(images) == reg.order()


def test_enumerate_modules_z8():
    mods = enumerate_modules(corpus("z8"), max_free_rank=1, max_order=8)
    assert [m.order() for m in mods] == [1, 2, 4, 8]
    mods2 = enumerate_modules(corpus("z8"), max_free_rank=2, max_order=64)
    # quotients of Z/8 ⊕ Z/8: one class per pair d2 | d1 | 8
    assert sorted(tuple(sorted(m.orders)) for m in mods2) == sorted([
        (), (2,), (4,), (8,), (2, 2), (2, 4), (2, 8), (4, 4), (4, 8), (8, 8)])


def test_enumeration_bound_is_enforced():
    with pytest.raises(BoundExceededError):
        enumerate_modules(corpus("m2z4"), max_free_rank=2)


def test_socle_cross_check_runs_on_corpus():
    # socle() hard-verifies minimal-sum == radical-annihilator internally
    for name in SMALL_CORPUS:
        reg = regular_module(corpus(name))
        assert socle(reg).is_action_stable()
