"""The compiled and pure-Python Howell kernels must agree bit for bit."""

import itertools
import random

import pytest

from ringscope import _backend
from ringscope._howell_py import howell_mod as howell_py


def _brute_span(rows, ncols, n):
    """Every element of the row span, by closure (small cases only)."""
    seen = {tuple([0] * ncols)}
    frontier = list(seen)
    rows = [tuple(x % n for x in r) for r in rows]
    while frontier:
        v = frontier.pop()
        for r in rows:
            w = tuple((a + b) % n for a, b in zip(v, r))
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen


def test_backend_exposes_kernel():
    assert _backend.BACKEND in ("cython", "python")
    assert callable(_backend.howell_mod)


def test_kernels_agree_exhaustive_small():
    for n in (2, 3, 4, 6):
        vecs = list(itertools.product(range(n), repeat=2))
        for r1 in vecs:
            for r2 in vecs:
                a = howell_py([list(r1), list(r2)], 2, n)
                b = _backend.howell_mod([list(r1), list(r2)], 2, n)
                assert [tuple(r) for r in a] == [tuple(r) for r in b]


def test_kernels_agree_random():
    rng = random.Random(20260826)
    for _ in range(300):
        n = rng.choice([2, 4, 8, 12, 16, 36, 60, 256])
        rows = rng.randrange(0, 5)
        cols = rng.randrange(1, 5)
        m = [[rng.randrange(n) for _ in range(cols)] for _ in range(rows)]
        a = howell_py([list(r) for r in m], cols, n)
        b = _backend.howell_mod([list(r) for r in m], cols, n)
        assert [tuple(r) for r in a] == [tuple(r) for r in b]


def test_howell_is_idempotent():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.choice([4, 8, 9, 12, 30])
        m = [[rng.randrange(n) for _ in range(3)] for _ in range(3)]
        h = [list(r) for r in howell_py(m, 3, n)]
        h2 = howell_py([list(r) for r in h], 3, n)
        assert [tuple(r) for r in h2] == [tuple(r) for r in h]


def test_howell_canonicalizes_span():
    # generator order must not matter
    rng = random.Random(99)
    for _ in range(100):
        n = rng.choice([4, 6, 8, 12])
        m = [[rng.randrange(n) for _ in range(3)] for _ in range(3)]
        shuf = [list(r) for r in m]
        rng.shuffle(shuf)
        a = howell_py([list(r) for r in m], 3, n)
        b = howell_py(shuf, 3, n)
        assert [tuple(r) for r in a] == [tuple(r) for r in b]


def test_howell_span_matches_brute_force():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.choice([2, 4, 6])
        m = [[rng.randrange(n) for _ in range(2)] for _ in range(2)]
        h = howell_py([list(r) for r in m], 2, n)
        assert _brute_span([list(r) for r in h], 2, n) == _brute_span(m, 2, n)


def test_howell_property_leading_span():
    # any span element with zero first entry lies in the span of the
    # trailing rows -- the defining extra condition beyond echelon form
    rng = random.Random(11)
    for _ in range(40):
        n = rng.choice([4, 8, 12])
        m = [[rng.randrange(n) for _ in range(3)] for _ in range(2)]
        h = [list(r) for r in howell_py(m, 3, n)]
        full = _brute_span(m, 3, n)
        tail = [r for r in h if r[0] % n == 0]
        tail_span = _brute_span(tail, 3, n) if tail else {(0, 0, 0)}
        for v in full:
            if v[0] == 0:
                assert v in tail_span


def test_forced_python_backend(monkeypatch):
    import importlib

    monkeypatch.setenv("RINGSCOPE_BACKEND", "py")
    mod = importlib.reload(_backend)
    try:
        assert mod.BACKEND == "python"
    finally:
        monkeypatch.delenv("RINGSCOPE_BACKEND")
        importlib.reload(_backend)
