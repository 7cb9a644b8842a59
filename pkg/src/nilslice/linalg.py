"""Exact sparse linear algebra over the rationals and small extensions.

Matrices are lists of sparse rows ({column: scalar}); scalars are Fractions,
ints, or any field element supporting +, -, *, / and truthiness.  Everything
here is exact; the only modular arithmetic is in eig_multiplicities, whose
result is still exact because the recovered multiplicities are below the
prime used.
"""

from fractions import Fraction

import numpy as np


def _row_scale(row, c):
    return {j: c * v for j, v in row.items()}


def _row_submul(row, c, other):
    # row -= c * other, dropping zeros
    out = dict(row)
    for j, v in other.items():
        w = out.get(j)
        if w is None:
            out[j] = -c * v
        else:
            w = w - c * v
            if w:
                out[j] = w
            else:
                del out[j]
    return out


class Echelon:
    """Incremental reduced echelon form of a set of sparse rows."""

    def __init__(self):
        self.rows = []        # echelon rows, pivot coefficient 1
        self.pivots = []      # pivot column per row
        self.pivot_of = {}    # column -> row index

    def reduce(self, row):
        """Reduce `row` against the current echelon; returns the residue."""
        row = dict(row)
        while row:
            j = min(c for c in row)
            i = self.pivot_of.get(j)
            if i is None:
                # no pivot hits the leading column: later columns can still
                # be reducible, but they cannot reintroduce column j
                reducible = [c for c in row if c in self.pivot_of]
                if not reducible:
                    break
                c = min(reducible)
                row = _row_submul(row, row[c], self.rows[self.pivot_of[c]])
            else:
                row = _row_submul(row, row[j], self.rows[i])
        return row

    def add(self, row):
        """Insert a row; returns pivot column or None if dependent."""
        row = self.reduce(row)
        if not row:
            return None
        j = min(row)
        inv = row[j]
        row = {k: v / inv for k, v in row.items()}
        # back-substitute into existing rows
        for i, r in enumerate(self.rows):
            if j in r:
                self.rows[i] = _row_submul(r, r[j], row)
        self.pivot_of[j] = len(self.rows)
        self.rows.append(row)
        self.pivots.append(j)
        return j

    @property
    def rank(self):
        return len(self.rows)


def rank(rows):
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def kernel(rows, ncols):
    """Basis of {x : M x = 0} where M has the given sparse rows."""
    # Echelonize the rows, then read off free columns.
    ech = Echelon()
    for r in rows:
        ech.add(r)
    pivot_cols = set(ech.pivots)
    basis = []
    for j in range(ncols):
        if j in pivot_cols:
            continue
        vec = {j: Fraction(1)}
        for pc, row in zip(ech.pivots, ech.rows):
            c = row.get(j)
            if c:
                vec[pc] = -c
        basis.append(vec)
    return basis


def solve(rows, rhs, ncols):
    """One solution x of M x = rhs, or None if inconsistent.

    rows: sparse rows of M; rhs: dense or sparse vector indexed like rows.
    """
    if not isinstance(rhs, dict):
        rhs = {i: v for i, v in enumerate(rhs) if v}
    ech = Echelon()
    augmented = []  # parallel rhs entries, reduced alongside
    AUG = ncols  # sentinel column for the rhs
    for i, r in enumerate(rows):
        row = dict(r)
        b = rhs.get(i, 0)
        if b:
            row[AUG] = b
        ech.add(row)
    # Rows with pivot == AUG are inconsistencies.
    if any(pc == AUG for pc in ech.pivots):
        return None
    # With free variables at 0, each row reads x_pc = rhs-part.
    sol = {}
    for pc, row in zip(ech.pivots, ech.rows):
        b = row.get(AUG)
        if b:
            sol[pc] = b
    return sol


def intersect_spans(vecs_a, vecs_b, ncols):
    """Basis of span(vecs_a) ∩ span(vecs_b); vectors are sparse dicts."""
    # Solve sum a_i u_i - sum b_j v_j = 0 via kernel in coefficient space.
    na, nb = len(vecs_a), len(vecs_b)
    rows_by_coord = {}
    for i, u in enumerate(vecs_a):
        for c, v in u.items():
            rows_by_coord.setdefault(c, {})[i] = v
    for j, u in enumerate(vecs_b):
        for c, v in u.items():
            rows_by_coord.setdefault(c, {})[na + j] = -v
    ker = kernel(list(rows_by_coord.values()), na + nb)
    out = []
    for k in ker:
        vec = {}
        for i in range(na):
            a = k.get(i)
            if a:
                for c, v in vecs_a[i].items():
                    w = vec.get(c, 0) + a * v
                    if w:
                        vec[c] = w
                    else:
                        vec.pop(c, None)
        if vec:
            out.append(vec)
    return out


def in_span(vecs, target):
    """Is `target` in the span of `vecs`?"""
    ech = Echelon()
    for v in vecs:
        ech.add(v)
    return not ech.reduce(target)


# ---------------------------------------------------------------------------
# Exact eigenvalue multiplicities of an integer semisimple matrix.

_EIG_PRIME = 179424673  # < sqrt(2^63 / 300); multiplicities < p lift exactly


def eig_multiplicities(entries, n, candidates, prime=_EIG_PRIME):
    """Multiplicities of the given integer eigenvalues of an n x n integer
    matrix known to be semisimple with spectrum inside `candidates`.

    entries: {(i, j): int}.  Uses power traces mod a prime p: the traces of
    A^m determine the multiplicities through a Vandermonde system, and since
    every multiplicity is an integer in [0, n] with n < p, solving mod p
    recovers them exactly.
    """
    p = prime
    A = np.zeros((n, n), dtype=np.int64)
    for (i, j), v in entries.items():
        A[i, j] = v % p
    cands = sorted(set(int(c) for c in candidates))
    k = len(cands)
    traces = [n % p]
    P = np.eye(n, dtype=np.int64)
    for _ in range(1, k):
        P = (P @ A) % p
        traces.append(int(np.trace(P)) % p)
    # Solve V^T m = traces (mod p), V[m][j] = cands[j]^m.
    rows = [[pow(c % p, m, p) for c in cands] + [traces[m]] for m in range(k)]
    mults = _solve_mod_p(rows, k, p)
    if mults is None:
        raise ArithmeticError("eigenvalue candidates not independent mod p")
    out = {}
    for c, m in zip(cands, mults):
        if m:
            if m > n:
                raise ArithmeticError("bad multiplicity lift")
            out[c] = m
    if sum(out.values()) != n:
        raise ArithmeticError("spectrum not contained in candidate set")
    return out


def _solve_mod_p(aug_rows, k, p):
    for col in range(k):
        piv = next((r for r in range(col, k) if aug_rows[r][col] % p), None)
        if piv is None:
            return None
        aug_rows[col], aug_rows[piv] = aug_rows[piv], aug_rows[col]
        inv = pow(aug_rows[col][col], p - 2, p)
        aug_rows[col] = [(v * inv) % p for v in aug_rows[col]]
        for r in range(k):
            if r != col and aug_rows[r][col]:
                c = aug_rows[r][col]
                aug_rows[r] = [(a - c * b) % p for a, b in zip(aug_rows[r], aug_rows[col])]
    return [aug_rows[i][k] for i in range(k)]


# ---------------------------------------------------------------------------
# Quadratic extension Q(sqrt(d)), used for the one irrational witness.

class QuadExt:
    """a + b*sqrt(d) with rational a, b and a fixed squarefree integer d."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=6):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError("mixed extensions")
            return other
        return QuadExt(other, 0, self.d)

    def __add__(self, o):
        o = self._coerce(o)
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        o = self._coerce(o)
        return QuadExt(self.a * o.a + self.d * self.b * o.b,
                       self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def inverse(self):
        nrm = self.a * self.a - self.d * self.b * self.b
        if not nrm:
            raise ZeroDivisionError
        return QuadExt(self.a / nrm, -self.b / nrm, self.d)

    def __truediv__(self, o):
        return self * self._coerce(o).inverse()

    def __rtruediv__(self, o):
        return self._coerce(o) * self.inverse()

    def __eq__(self, o):
        try:
            o = self._coerce(o)
        except (ValueError, TypeError):
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __repr__(self):
        return f"({self.a}+{self.b}*sqrt({self.d}))"
