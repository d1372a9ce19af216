"""Profile lattices, fingerprints, poverty, and witness search."""

import pytest

from ringscope.ideals import ideals_in_radical, jacobson_radical
from ringscope.lattice import are_isomorphic, lattice_product
from ringscope.modules import (
    Submodule,
    cyclic_module,
    cyclic_modules_up_to_iso,
    direct_sum,
    regular_module,
    submodule_as_module,
)
from ringscope.profile import (
    find_witness,
    has_middle_class,
    i_profile,
    inj_fingerprint,
    is_poor,
    killed_by,
    p_profile,
    profile,
    proj_fingerprint,
    rises_bounded,
    semisimple_cyclics,
)
from ringscope.ring import zmod

from conftest import SMALL_CORPUS, corpus, simple_modules


def test_profile_sizes():
    expected = {"z8": 3, "z4xf2": 2, "t2f2": 2, "m2f2": 1,
                "quiver_f2": 4, "f2xy_j2": 5, "f2xy_x2y2": 6}
    for name, size in expected.items():
        ring = corpus(name)
        assert i_profile(ring).size == size
        assert p_profile(ring).size == size


def test_profiles_modular_and_coatomic_everywhere():
    for name in SMALL_CORPUS:
        rep = i_profile(corpus(name))
        assert rep.flags["modular"]
        assert rep.flags["coatomic"]


def test_profile_anti_isomorphic_to_radical_ideals():
    for name in SMALL_CORPUS:
        ring = corpus(name)
        rep = i_profile(ring)
        lat, nodes = ideals_in_radical(ring)
        ok, _ = are_isomorphic(rep.lattice, lat, anti=True)
        assert ok
        assert len(nodes) == rep.size


def test_i_and_p_profiles_agree_as_lattices():
    for name in SMALL_CORPUS:
        ring = corpus(name)
        ok, _ = are_isomorphic(i_profile(ring).lattice,
                               p_profile(ring).lattice)
        assert ok


def test_middle_class_flags():
    expected = {"z8": True, "z4xf2": False, "t2f2": False, "m2f2": False,
                "quiver_f2": True, "f2xy_j2": True, "f2xy_x2y2": True}
    for name, flag in expected.items():
        ring = corpus(name)
        assert has_middle_class(ring, "i") == flag
        assert has_middle_class(ring, "p") == flag


def test_fingerprint_intersection_law():
    for name in ("z8", "t2f2", "f2xy_j2"):
        ring = corpus(name)
        cyc = cyclic_modules_up_to_iso(ring)
        a, b = cyc[1], cyc[-1]
        lhs = inj_fingerprint(direct_sum([a, b]))
        assert lhs.members == (inj_fingerprint(a).members
                               & inj_fingerprint(b).members)
        lhs = proj_fingerprint(direct_sum([a, b]))
        assert lhs.members == (proj_fingerprint(a).members
                               & proj_fingerprint(b).members)


def test_product_law():
    prod = corpus("z4xf2")
    z4 = zmod(4)
    f2 = zmod(2)
    for kind in ("i", "p"):
        lhs = profile(prod, kind).lattice
        rhs = lattice_product(profile(z4, kind).lattice,
                              profile(f2, kind).lattice)
        ok, _ = are_isomorphic(lhs, rhs)
        assert ok


def test_semisimple_cyclics():
    ring = corpus("z8")
    fp = semisimple_cyclics(ring)
    reps = fp.modules()
    assert sorted(m.order() for m in reps) == [1, 2]
    assert semisimple_cyclics(corpus("m2f2")).members == \
        frozenset(range(len(cyclic_modules_up_to_iso(corpus("m2f2")))))


def test_poverty():
    for name in SMALL_CORPUS:
        ring = corpus(name)
        rj = cyclic_module(ring, jacobson_radical(ring))[0]
        assert is_poor(rj, "i")
        assert is_poor(direct_sum(simple_modules(ring)), "p")
    # the unique simple over Z/8 is i-poor on its own
    ring = corpus("z8")
    reg = regular_module(ring)
    simple = submodule_as_module(Submodule(reg, [(4,)]))[0]
    assert is_poor(simple, "i")


def test_regular_module_has_full_domains():
    for name in ("z8", "t2f2", "f2xy_x2y2"):
        ring = corpus(name)
        all_classes = frozenset(range(len(cyclic_modules_up_to_iso(ring))))
        assert proj_fingerprint(regular_module(ring)).members == all_classes


def test_killed_by_matches_proj_fingerprint_on_nodes():
    for name in ("z8", "quiver_f2", "f2xy_j2"):
        ring = corpus(name)
        for ideal in p_profile(ring).ideals:
            w = cyclic_module(ring, ideal)[0]
            assert proj_fingerprint(w) == killed_by(ring, ideal)


def test_rises_bounded():
    ring = corpus("z8")
    reg = regular_module(ring)
    rj = cyclic_module(ring, jacobson_radical(ring))[0]
    verdict, witness = rises_bounded(rj, reg)
    assert verdict == "refuted"
    # the witness is rj-injective (semisimple target) but not injective
    from ringscope.hom import is_injective, is_relatively_injective

    assert is_relatively_injective(witness, rj)[0]
    assert not is_injective(witness)
    verdict, bounds = rises_bounded(reg, reg)
    assert verdict == "consistent_up_to_bound"
    assert bounds == (1, 64)


def test_find_witness_p_always_verified():
    for name in ("z8", "t2f2", "f2xy_j2"):
        ring = corpus(name)
        for ideal in p_profile(ring).ideals:
            w = find_witness(ring, ideal, "p")
            assert proj_fingerprint(w) == killed_by(ring, ideal)


def test_find_witness_i_on_qf_ring():
    ring = corpus("z8")
    for ideal in i_profile(ring).ideals:
        w = find_witness(ring, ideal, "i")
        assert w is not None
        assert inj_fingerprint(w) == killed_by(ring, ideal)


def test_profile_kind_validation():
    with pytest.raises(ValueError):
        profile(corpus("z8"), "x")


def test_profile_report_flags_quiver():
    rep = i_profile(corpus("quiver_f2"))
    assert rep.flags["has_middle_class"]
    assert not rep.flags["is_chain"]
    assert rep.flags["length"] == 2
    assert len(rep.flags["atoms"]) == 2 and len(rep.flags["coatoms"]) == 2
