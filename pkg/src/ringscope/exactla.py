"""Exact linear algebra over finite abelian groups presented as ⊕ Z/m_k.

Everything downstream (submodules, hom groups, ideals) reduces to row-span
computations here.  A span is canonicalized by the Howell form: two
matrices have equal row spans iff their Howell forms are identical.
Columns may carry individual moduli; internally a column of modulus m is
scaled by n/m and the single-modulus kernel (see ``_backend``) does the
actual elimination mod n.
"""

from __future__ import annotations

import itertools
import math
from functools import reduce

from ._backend import howell_mod
from .errors import BoundExceededError, InputError


def lcm_all(values) -> int:
    return reduce(math.lcm, values, 1)


class ModMatrix:
    """A matrix whose rows live in ⊕_k Z/col_moduli[k].

    Immutable; hashable on (col_moduli, rows).  ``n`` is the working
    modulus (a common multiple of all column moduli, by default the lcm).
    """

    __slots__ = ("n", "col_moduli", "rows", "_howell")

    def __init__(self, col_moduli, rows, n: int | None = None):
        col_moduli = tuple(int(m) for m in col_moduli)
        if any(m < 1 for m in col_moduli):
            raise InputError("column moduli must be positive")
        if n is None:
            n = lcm_all(col_moduli)
        if any(n % m for m in col_moduli):
            raise InputError("every column modulus must divide n")
        norm = []
        for r in rows:
            r = tuple(int(x) % m for x, m in zip(r, col_moduli, strict=True))
            norm.append(r)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "col_moduli", col_moduli)
        object.__setattr__(self, "rows", tuple(norm))
        object.__setattr__(self, "_howell", None)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("ModMatrix is immutable")

    @property
    def ncols(self) -> int:
        return len(self.col_moduli)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def __eq__(self, other):
        return (isinstance(other, ModMatrix)
                and self.col_moduli == other.col_moduli
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.col_moduli, self.rows))

    def __repr__(self):
        return f"ModMatrix({list(self.col_moduli)}, {[list(r) for r in self.rows]})"

    # -- scaled (single-modulus) view -------------------------------------

    def _scales(self):
        n = self.n
        return [n // m for m in self.col_moduli]

    def _scaled_rows(self):
        sc = self._scales()
        return [[x * s for x, s in zip(r, sc)] for r in self.rows]

    # -- canonical form ----------------------------------------------------

    def howell_form(self) -> "ModMatrix":
        """The unique canonical matrix with the same row span."""
        if self._howell is not None:
            return self._howell
        sc = self._scales()
        h = howell_mod(self._scaled_rows(), self.ncols, self.n)
        rows = [tuple(x // s for x, s in zip(r, sc)) for r in h]
        out = ModMatrix(self.col_moduli, rows, self.n)
        object.__setattr__(out, "_howell", out)
        object.__setattr__(self, "_howell", out)
        return out

    def _howell_scaled(self):
        sc = self._scales()
        h = self.howell_form()
        return [[x * s for x, s in zip(r, sc)] for r in h.rows]

    def stack(self, other: "ModMatrix") -> "ModMatrix":
        if self.col_moduli != other.col_moduli:
            raise InputError("column moduli mismatch in stack")
        return ModMatrix(self.col_moduli, self.rows + other.rows, self.n)

    def span_size(self) -> int:
        n = self.n
        size = 1
        for r in self._howell_scaled():
            g = next(x for x in r if x)
            size *= n // g
        return size

    def contains(self, vec) -> bool:
        return self.residual(vec) is None

    def residual(self, vec):
        """None if vec lies in the span, else the irreducible remainder."""
        n = self.n
        sc = self._scales()
        v = [int(x) % m * s for x, m, s in zip(vec, self.col_moduli, sc)]
        for row in self._howell_scaled():
            j = next(i for i, x in enumerate(row) if x)
            g = row[j]
            if v[j] % g == 0:
                q = v[j] // g
                if q:
                    v = [(a - q * b) % n for a, b in zip(v, row)]
        if any(v):
            return tuple(x // s if x % s == 0 else x for x, s in zip(v, sc))
        return None

    def span_elements(self):
        """Iterate every element of the row span (|span| tuples)."""
        h = self.howell_form()
        n = self.n
        scaled = self._howell_scaled()
        counts = []
        for r in scaled:
            g = next(x for x in r if x)
            counts.append(n // g)
        mods = self.col_moduli
        zero = tuple(0 for _ in mods)
        if not counts:
            yield zero
            return
        for coeffs in itertools.product(*(range(c) for c in counts)):
            v = list(zero)
            for q, row in zip(coeffs, h.rows):
                if q:
                    v = [(a + q * b) % m for a, b, m in zip(v, row, mods)]
            yield tuple(v)

    def members(self, bound: int = 1 << 16) -> frozenset:
        size = self.span_size()
        if size > bound:
            raise BoundExceededError(f"span of size {size} exceeds bound {bound}")
        return frozenset(self.span_elements())

    # -- solving -----------------------------------------------------------

    def solve(self, vec):
        """Solve x · self = vec for x over Z/n.

        Returns (particular, kernel) where kernel is a ModMatrix whose
        rows span all homogeneous solutions (column moduli all n), or
        None when no solution exists.
        """
        if len(vec) != self.ncols:
            raise InputError("right-hand side has wrong length")
        n, L, c = self.n, self.nrows, self.ncols
        sc = self._scales()
        aug = []
        for i, r in enumerate(self.rows):
            row = [x * s for x, s in zip(r, sc)] + [0] * L
            row[c + i] = 1
            aug.append(row)
        h = howell_mod(aug, c + L, n)
        b = [int(x) % m * s for x, m, s in zip(vec, self.col_moduli, sc)]
        part = [0] * L
        kernel_rows = []
        for row in h:
            j = next(i for i, x in enumerate(row) if x)
            if j >= c:
                kernel_rows.append(tuple(row[c:]))
                continue
            g = row[j]
            if b[j] % g == 0:
                q = b[j] // g
                if q:
                    b = [(a - q * x) % n for a, x in zip(b, row[:c])]
                    part = [(a + q * x) % n for a, x in zip(part, row[c:])]
        if any(b):
            return None
        kernel = ModMatrix((n,) * L, kernel_rows, n).howell_form()
        return tuple(part), kernel

    def kernel(self) -> "ModMatrix":
        """Howell basis of {x : x · self = 0} over Z/n."""
        _, ker = self.solve((0,) * self.ncols)
        return ker


def zero_matrix(col_moduli, n: int | None = None) -> ModMatrix:
    return ModMatrix(col_moduli, (), n)


def solve_affine(coeff_rows, eq_moduli, rhs, unknown_moduli):
    """Solve Σ_l x_l · coeff_rows[l] ≡ rhs, equation e taken mod eq_moduli[e],
    with unknown l valued in Z/unknown_moduli[l].

    The system must be well defined on ⊕ Z/unknown_moduli, i.e. shifting
    x_l by unknown_moduli[l] must fix every equation (asserted).  Returns
    (particular | None, kernel ModMatrix over unknown_moduli); the kernel
    spans the full homogeneous solution group.
    """
    eq_moduli = tuple(int(m) for m in eq_moduli)
    unknown_moduli = tuple(int(m) for m in unknown_moduli)
    big = lcm_all(eq_moduli + unknown_moduli)
    mat = ModMatrix(eq_moduli, coeff_rows, big)
    for l, u in enumerate(unknown_moduli):
        row = mat.rows[l] if l < mat.nrows else None
        assert row is not None
        assert all((u * x) % m == 0 for x, m in zip(row, eq_moduli)), \
            "system not well defined modulo the unknown moduli"
    sol = mat.solve(rhs)
    if sol is None:
        return None, zero_matrix(unknown_moduli)
    part, ker = sol
    part = tuple(x % u for x, u in zip(part, unknown_moduli))
    rows = [tuple(x % u for x, u in zip(r, unknown_moduli)) for r in ker.rows]
    kernel = ModMatrix(unknown_moduli, rows).howell_form()
    return part, kernel


# -- integer Smith normal form and quotient presentations ------------------


def smith_normal_form(mat):
    """Smith form with transforms: returns (D, U, V, Vinv), U·A·V = D.

    Plain integer arithmetic; intended for the small matrices arising in
    quotient presentations.  D is r×c diagonal with d_i | d_{i+1} ≥ 0.
    """
    A = [list(map(int, row)) for row in mat]
    r = len(A)
    c = len(A[0]) if r else 0
    U = [[int(i == j) for j in range(r)] for i in range(r)]
    V = [[int(i == j) for j in range(c)] for i in range(c)]
    Vinv = [[int(i == j) for j in range(c)] for i in range(c)]

    def row_op(i, k, q):  # row_i -= q * row_k
        A[i] = [a - q * b for a, b in zip(A[i], A[k])]
        U[i] = [a - q * b for a, b in zip(U[i], U[k])]

    def col_op(j, k, q):  # col_j -= q * col_k
        for row in A:
            row[j] -= q * row[k]
        for row in V:
            row[j] -= q * row[k]
        Vinv[k] = [a + q * b for a, b in zip(Vinv[k], Vinv[j])]

    def row_swap(i, k):
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]

    def col_swap(j, k):
        for row in A:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]
        Vinv[j], Vinv[k] = Vinv[k], Vinv[j]

    t = 0
    while t < min(r, c):
        # pivot: min abs nonzero in trailing submatrix
        piv = None
        for i in range(t, r):
            for j in range(t, c):
                if A[i][j] and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        row_swap(t, piv[0])
        col_swap(t, piv[1])
        dirty = False
        for i in range(t + 1, r):
            q = A[i][t] // A[t][t]
            if q:
                row_op(i, t, q)
            if A[i][t]:
                dirty = True
        for j in range(t + 1, c):
            q = A[t][j] // A[t][t]
            if q:
                col_op(j, t, q)
            if A[t][j]:
                dirty = True
        if dirty:
            continue
        # enforce divisibility of the rest by the pivot
        bad = None
        for i in range(t + 1, r):
            for j in range(t + 1, c):
                if A[i][j] % A[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            row_op(t, bad, -1)  # row_t += row_bad, reprocess
            continue
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    D = A
    return D, U, V, Vinv


def quotient_presentation(orders, rel_rows):
    """Present (⊕ Z/orders) / ⟨rel_rows⟩ as ⊕ Z/new_orders.

    Returns (new_orders, proj, lift):
      proj: d×k integer matrix, x ↦ x·proj (entries reduced per new order);
      lift: k×d integer matrix, section sending new basis j to a preimage.
    Coordinates with invariant factor 1 are dropped.
    """
    d = len(orders)
    if d == 0:
        return (), [], []
    A = [list(map(int, r)) for r in rel_rows]
    for i, m in enumerate(orders):
        A.append([m if j == i else 0 for j in range(d)])
    D, _, V, Vinv = smith_normal_form(A)
    diag = [D[i][i] for i in range(d)]
    assert all(x >= 1 for x in diag)
    keep = [i for i, di in enumerate(diag) if di != 1]
    new_orders = tuple(diag[i] for i in keep)
    proj = [[V[t][i] % diag[i] for i in keep] for t in range(d)]
    lift = [[Vinv[i][t] % orders[t] for t in range(d)] for i in keep]
    return new_orders, proj, lift


def apply_matrix(vec, mat, out_moduli):
    """Row-vector times matrix, reduced per output modulus."""
    k = len(out_moduli)
    out = [0] * k
    for x, row in zip(vec, mat):
        if x:
            for j in range(k):
                out[j] += x * row[j]
    return tuple(o % m for o, m in zip(out, out_moduli))


def howell_span(col_moduli, rows) -> ModMatrix:
    """Canonical span of a bunch of vectors in ⊕ Z/col_moduli."""
    return ModMatrix(col_moduli, rows).howell_form()
