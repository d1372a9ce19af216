"""Shared fixtures: bundled rings are loaded once per session so that
per-ring caches (ideal lists, hom groups) are reused across tests."""

from functools import lru_cache

import pytest

from ringscope.cli import load_ring

# the bundled rings small enough for exhaustive ideal/filter enumeration
SMALL_CORPUS = ("z8", "z4xf2", "t2f2", "m2f2", "quiver_f2",
                "f2xy_j2", "f2xy_x2y2")


@lru_cache(maxsize=None)
def corpus(name):
    return load_ring(name)


@pytest.fixture(scope="session")
def ring_of():
    return corpus


def simple_modules(ring):
    """One representative per isomorphism class of simple right modules,
    read off the semisimple module R/J."""
    from ringscope.ideals import jacobson_radical
    from ringscope.modules import (cyclic_module, is_isomorphic_modules,
                                   minimal_submodules, submodule_as_module)

    rj = cyclic_module(ring, jacobson_radical(ring))[0]
    reps = []
    for atom in minimal_submodules(rj):
        mod = submodule_as_module(atom)[0]
        if not any(is_isomorphic_modules(mod, r)[0] for r in reps):
            reps.append(mod)
    return reps
