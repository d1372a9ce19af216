"""Finite lattices: construction, structure flags, isomorphism, products.

Elements are kept as opaque labels; the order lives in a boolean numpy
matrix.  Meets and joins are derived from the order and their existence
is what makes the poset a lattice — failures are reported with the
offending pair.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import BoundExceededError, InputError, NotALatticeError

LATTICE_SIZE_GUARD = 64


class FiniteLattice:
    """Bounded lattice on elements 0..n-1 with explicit meet/join tables."""

    def __init__(self, labels, leq: np.ndarray, meet: np.ndarray,
                 join: np.ndarray):
        self.labels = list(labels)
        self.leq = np.asarray(leq, dtype=bool)
        self.meet = np.asarray(meet, dtype=int)
        self.join = np.asarray(join, dtype=int)
        n = len(self.labels)
        if self.leq.shape != (n, n):
            raise InputError("order matrix shape mismatch")
        bottoms = [i for i in range(n) if self.leq[i].all()]
        tops = [i for i in range(n) if self.leq[:, i].all()]
        self.bottom = bottoms[0]
        self.top = tops[0]

    @property
    def size(self) -> int:
        return len(self.labels)

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    def covers(self) -> list:
        """Covering pairs (a, b) with a < b and nothing strictly between."""
        n = self.size
        out = []
        for a in range(n):
            for b in range(n):
                if a == b or not self.leq[a, b]:
                    continue
                if not any(c != a and c != b and self.leq[a, c] and self.leq[c, b]
                           for c in range(n)):
                    out.append((a, b))
        return out

    def atoms(self) -> list:
        return [b for (a, b) in self.covers() if a == self.bottom]

    def coatoms(self) -> list:
        return [a for (a, b) in self.covers() if b == self.top]

    def height(self) -> int:
        """Length of a longest chain from bottom to top (number of steps)."""
        n = self.size
        order = sorted(range(n), key=lambda i: int(self.leq[:, i].sum()))
        depth = [0] * n
        for b in order:
            for a in range(n):
                if a != b and self.leq[a, b]:
                    depth[b] = max(depth[b], depth[a] + 1)
        return depth[self.top]

    def is_chain(self) -> bool:
        n = self.size
        return all(self.leq[a, b] or self.leq[b, a]
                   for a in range(n) for b in range(n))


def _transitive_closure(mat: np.ndarray) -> np.ndarray:
    n = mat.shape[0]
    out = mat.copy()
    for k in range(n):
        out |= np.outer(out[:, k], out[k, :])
    return out


def build_lattice(elements, order_pairs=None, *, leq=None) -> FiniteLattice:
    """Lattice from either generating order pairs or a comparison predicate.

    order_pairs are (a, b) meaning a ≤ b, completed to a reflexive and
    transitive relation.  Raises NotALatticeError naming a pair without a
    unique meet or join.
    """
    elements = list(elements)
    n = len(elements)
    if n == 0:
        raise InputError("a lattice needs at least one element")
    if n > LATTICE_SIZE_GUARD:
        raise BoundExceededError(f"lattice size {n} exceeds guard")
    idx = {e: i for i, e in enumerate(elements)}
    mat = np.eye(n, dtype=bool)
    if leq is not None:
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                if leq(a, b):
                    mat[i, j] = True
    else:
        for a, b in order_pairs or []:
            mat[idx[a], idx[b]] = True
        mat = _transitive_closure(mat)
    for i in range(n):
        for j in range(i + 1, n):
            if mat[i, j] and mat[j, i]:
                raise InputError(
                    f"order is not antisymmetric on {elements[i]!r}, {elements[j]!r}")
    meet = np.full((n, n), -1, dtype=int)
    join = np.full((n, n), -1, dtype=int)
    for i in range(n):
        for j in range(n):
            pair = (elements[i], elements[j])
            lower = [k for k in range(n) if mat[k, i] and mat[k, j]]
            best = [k for k in lower if all(mat[t, k] for t in lower)]
            if len(best) != 1:
                raise NotALatticeError(f"no meet for {pair!r}", pair)
            meet[i, j] = best[0]
            upper = [k for k in range(n) if mat[i, k] and mat[j, k]]
            best = [k for k in upper if all(mat[k, t] for t in upper)]
            if len(best) != 1:
                raise NotALatticeError(f"no join for {pair!r}", pair)
            join[i, j] = best[0]
    return FiniteLattice(elements, mat, meet, join)


def _pentagon_witness(lat: FiniteLattice):
    """Five elements forming N₅, or None when the lattice is modular."""
    n = lat.size
    for a in range(n):
        for b in range(n):
            if not lat.leq[a, b] or a == b:
                continue
            for c in range(n):
                lhs = lat.join[a, lat.meet[c, b]]
                rhs = lat.meet[lat.join[a, c], b]
                if lhs != rhs:
                    bot = lat.meet[lhs, c]
                    top = lat.join[rhs, c]
                    witness = (bot, lhs, rhs, c, top)
                    assert len(set(witness)) == 5
                    assert lat.leq[lhs, rhs]
                    return witness
    return None


def _diamond_witness(lat: FiniteLattice):
    """Five elements forming M₃ in a modular lattice, or None."""
    n = lat.size
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = lat.meet[a, lat.join[b, c]]
                rhs = lat.join[lat.meet[a, b], lat.meet[a, c]]
                if lhs == rhs:
                    continue
                m = lat.meet
                j = lat.join
                bot = j[j[m[a, b], m[a, c]], m[b, c]]
                top = m[m[j[a, b], j[a, c]], j[b, c]]
                x = j[m[a, top], bot]
                y = j[m[b, top], bot]
                z = j[m[c, top], bot]
                witness = (bot, x, y, z, top)
                assert len(set(witness)) == 5
                return witness
    return None


def structure_report(lat: FiniteLattice) -> dict:
    """Lattice-theoretic flags plus sublattice certificates for failures."""
    pent = _pentagon_witness(lat)
    modular = pent is None
    report = {
        "size": lat.size,
        "chain": lat.is_chain(),
        "length": lat.height(),
        "atoms": lat.atoms(),
        "coatoms": lat.coatoms(),
        "modular": modular,
        "distributive": False,
        "atomic": False,
        "coatomic": False,
    }
    if not modular:
        report["pentagon"] = pent
        report["diamond"] = None
    else:
        diam = _diamond_witness(lat)
        report["distributive"] = diam is None
        if diam is not None:
            report["diamond"] = diam
    # atomic: every nonzero element sits above an atom;
    # coatomic: every non-top element sits below a coatom
    atoms = set(report["atoms"])
    coatoms = set(report["coatoms"])
    report["atomic"] = all(
        i == lat.bottom or any(lat.leq[a, i] for a in atoms)
        for i in range(lat.size))
    report["coatomic"] = all(
        i == lat.top or any(lat.leq[i, c] for c in coatoms)
        for i in range(lat.size))
    return report


def _profile_invariant(lat: FiniteLattice, i: int, flip: bool):
    col = lat.leq[:, i].sum()
    row = lat.leq[i, :].sum()
    return (row, col) if flip else (col, row)


def are_isomorphic(a: FiniteLattice, b: FiniteLattice, anti: bool = False):
    """(flag, mapping): order (anti-)isomorphism as a list, a→b indices."""
    if a.size != b.size:
        return False, None
    if a.size > LATTICE_SIZE_GUARD:
        raise BoundExceededError("lattice too large for isomorphism search")
    n = a.size
    inv_a = [_profile_invariant(a, i, False) for i in range(n)]
    inv_b = [_profile_invariant(b, i, anti) for i in range(n)]
    if sorted(inv_a) != sorted(inv_b):
        return False, None
    cand = [[j for j in range(n) if inv_b[j] == inv_a[i]] for i in range(n)]
    order = sorted(range(n), key=lambda i: len(cand[i]))
    assign = [-1] * n
    used = [False] * n

    def compatible(i, j, placed):
        for t in placed:
            u = assign[t]
            fwd = b.leq[u, j] if not anti else b.leq[j, u]
            bwd = b.leq[j, u] if not anti else b.leq[u, j]
            if bool(a.leq[t, i]) != bool(fwd):
                return False
            if bool(a.leq[i, t]) != bool(bwd):
                return False
        return True

    placed = []

    def backtrack(pos):
        if pos == n:
            return True
        i = order[pos]
        for j in cand[i]:
            if used[j] or not compatible(i, j, placed):
                continue
            assign[i] = j
            used[j] = True
            placed.append(i)
            if backtrack(pos + 1):
                return True
            placed.pop()
            used[j] = False
            assign[i] = -1
        return False

    if backtrack(0):
        return True, list(assign)
    return False, None


def lattice_product(a: FiniteLattice, b: FiniteLattice) -> FiniteLattice:
    if a.size * b.size > LATTICE_SIZE_GUARD:
        raise BoundExceededError("product lattice exceeds size guard")
    labels = [(x, y) for x in a.labels for y in b.labels]
    na, nb = a.size, b.size

    def pos(i, j):
        return i * nb + j

    n = na * nb
    leq = np.zeros((n, n), dtype=bool)
    meet = np.zeros((n, n), dtype=int)
    join = np.zeros((n, n), dtype=int)
    for i1 in range(na):
        for j1 in range(nb):
            p = pos(i1, j1)
            for i2 in range(na):
                for j2 in range(nb):
                    q = pos(i2, j2)
                    leq[p, q] = a.leq[i1, i2] and b.leq[j1, j2]
                    meet[p, q] = pos(a.meet[i1, i2], b.meet[j1, j2])
                    join[p, q] = pos(a.join[i1, i2], b.join[j1, j2])
    return FiniteLattice(labels, leq, meet, join)


def to_dot(lat: FiniteLattice, labels=None) -> str:
    """Hasse diagram as DOT text; edges point from smaller to larger."""
    names = [str(x) for x in (labels if labels is not None else lat.labels)]
    lines = ["digraph lattice {", "  rankdir=BT;"]
    for i, name in enumerate(names):
        lines.append(f'  n{i} [label="{name}"];')
    for a, b in sorted(lat.covers()):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines)
