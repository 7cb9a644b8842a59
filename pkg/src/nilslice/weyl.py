"""Weyl groups as permutation groups of the roots, their conjugacy classes,
and exact character tables via Dixon's method.

Groups up to |W(E7)| = 2,903,040 are materialized as numpy arrays of root
permutations (uint8 rows).  Character values of Weyl groups are rational
integers; Dixon's algorithm runs over F_p and the lift is exact because
degrees and values are bounded by sqrt(|W|) < p/2.  Orthogonality is then
re-verified exactly over the integers.
"""

import hashlib
import json
import os
from fractions import Fraction

import numpy as np

from .rootsys import build_root_system




class WeylGroup:
    """Materialized Weyl group of a root system (or reflection subgroup)."""

    def __init__(self, rs, generator_perms=None, name=None):
        self.rs = rs
        self.npoints = 2 * len(rs.positive_roots)
        if generator_perms is None:
            generator_perms = [rs.simple_reflection_permutation(i)
                               for i in range(rs.rank)]
            name = name or rs.cartan_type
        if self.npoints > 255:
            raise ValueError("permutation domain too large")
        self.generators = [np.array(g, dtype=np.uint8)
                           for g in generator_perms]
        self.name = name or "subgroup"
        self._enumerate()
        self._classify()

    # -- enumeration ---------------------------------------------------------

    def _key_cols(self):
        # a Weyl element is determined by the images of the simple roots;
        # for subgroups use enough columns to separate elements
        rs = self.rs
        cols = [rs.root_index[s] for s in rs.simple_roots]
        return np.array(cols, dtype=np.int64)

    def _enumerate(self):
        n = self.npoints
        ident = np.arange(n, dtype=np.uint8)
        elements = [ident]
        radix = np.array([n ** i for i in range(len(self._key_cols()))],
                         dtype=np.int64)
        cols = self._key_cols()

        def keys_of(arr):
            return arr[:, cols].astype(np.int64) @ radix

        known = keys_of(np.stack(elements))
        order = np.argsort(known)
        known_sorted = known[order]
        frontier = np.stack(elements)
        all_rows = [frontier]
        total = 1
        while len(frontier) and self.generators:
            cands = []
            for g in self.generators:
                cands.append(frontier[:, g])
            cands = np.concatenate(cands)
            k = keys_of(cands)
            # dedupe within candidates
            uniq, idx = np.unique(k, return_index=True)
            cands = cands[idx]
            k = uniq
            # drop already-known
            pos = np.searchsorted(known_sorted, k)
            pos = np.clip(pos, 0, len(known_sorted) - 1)
            fresh = known_sorted[pos] != k
            cands = cands[fresh]
            k = k[fresh]
            if not len(cands):
                break
            all_rows.append(cands)
            total += len(cands)
            known_sorted = np.sort(np.concatenate([known_sorted, k]))
            frontier = cands
        self.elements = np.concatenate(all_rows)
        self.order = len(self.elements)
        keys = keys_of(self.elements)
        self._key_sorted = np.sort(keys)
        self._key_order = np.argsort(keys)

    def index_of(self, perm_rows):
        """Indices of permutation rows (2d array) in self.elements."""
        cols = self._key_cols()
        radix = np.array([self.npoints ** i for i in range(len(cols))],
                         dtype=np.int64)
        k = perm_rows[:, cols].astype(np.int64) @ radix
        pos = np.searchsorted(self._key_sorted, k)
        if np.any(pos >= len(self._key_sorted)) or \
                np.any(self._key_sorted[np.clip(pos, 0, None)] != k):
            raise KeyError("permutation not in group")
        return self._key_order[pos]

    # -- conjugacy classes ----------------------------------------------------

    def _classify(self):
        n = self.order
        class_of = np.full(n, -1, dtype=np.int32)
        reps = []
        sizes = []
        gens = self.generators
        for start in range(n):
            if class_of[start] >= 0:
                continue
            cid = len(reps)
            reps.append(self.elements[start])
            frontier = np.array([start])
            class_of[start] = cid
            count = 1
            while len(frontier):
                rows = self.elements[frontier]
                new = []
                for g in gens:
                    # conjugate g w g (generators are involutions):
                    # (g o w o g)(x) = g[w[g[x]]]
                    conj = g[rows[:, g]]
                    idx = self.index_of(conj)
                    mask = class_of[idx] < 0
                    fresh = idx[mask]
                    if len(fresh):
                        fresh = np.unique(fresh)
                        fresh = fresh[class_of[fresh] < 0]
                        class_of[fresh] = cid
                        count += len(fresh)
                        new.append(fresh)
                frontier = np.concatenate(new) if new else np.array([], dtype=np.int64)
            sizes.append(int(count))
        self.class_of = class_of
        self.class_reps = reps
        self.class_sizes = sizes
        self.nclasses = len(reps)
        assert sum(sizes) == self.order

    def class_of_perm(self, perm_row):
        idx = self.index_of(perm_row.reshape(1, -1))
        return int(self.class_of[idx[0]])

    def inverse_perm(self, perm_row):
        inv = np.empty_like(perm_row)
        inv[perm_row] = np.arange(len(perm_row), dtype=perm_row.dtype)
        return inv

    def inverse_class_map(self):
        out = []
        for rep in self.class_reps:
            out.append(self.class_of_perm(self.inverse_perm(rep)))
        return out

    def reflection_matrix(self, perm_row):
        """Matrix of the element on the simple-root basis (integer)."""
        rs = self.rs
        rank = rs.rank
        n = len(rs.positive_roots)
        m = [[0] * rank for _ in range(rank)]
        for j in range(rank):
            img = int(perm_row[rs.root_index[rs.simple_roots[j]]])
            vec = rs.positive_roots[img] if img < n else \
                tuple(-c for c in rs.positive_roots[img - n])
            for i in range(rank):
                m[i][j] = vec[i]
        return m

    def char_poly_on_reflection(self, perm_row):
        """Characteristic polynomial coefficients of the reflection matrix."""
        m = self.reflection_matrix(perm_row)
        n = len(m)
        # Faddeev-LeVerrier over exact rationals
        from fractions import Fraction as F
        A = [[F(x) for x in row] for row in m]
        coeffs = [F(1)]
        Mk = [[F(0)] * n for _ in range(n)]
        for k in range(1, n + 1):
            # Mk = A*Mk + c_{k-1} I
            prev = Mk
            Mk = [[sum(A[i][l] * prev[l][j] for l in range(n))
                   for j in range(n)] for i in range(n)]
            for i in range(n):
                Mk[i][i] += coeffs[k - 1]
            ck = -sum(sum(A[i][l] * Mk[l][i] for l in range(n))
                      for i in range(n)) / k
            coeffs.append(ck)
        return coeffs  # x^n + c1 x^{n-1} + ... + cn


# ---------------------------------------------------------------------------
# Dixon character table

def _find_prime(order, exponent):
    p = max(2 * _isqrt(order) + 1, 2 * 600 + 1)
    p += (exponent - (p - 1) % exponent) % exponent
    while True:
        if (p - 1) % exponent == 0 and _is_prime(p):
            return p
        p += exponent


def _isqrt(n):
    x = int(n ** 0.5)
    while x * x > n:
        x -= 1
    while (x + 1) * (x + 1) <= n:
        x += 1
    return x


def _is_prime(n):
    if n < 2:
        return False
    for sp in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % sp == 0:
            return n == sp
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class CharacterTable:
    """Exact integer character table with class data."""

    def __init__(self, group, rows, degrees):
        self.group = group
        self.rows = rows          # list of lists of ints, per irreducible
        self.degrees = degrees
        self.nclasses = group.nclasses

    def verify_orthogonality(self):
        W = self.group
        order = W.order
        invmap = W.inverse_class_map()
        for i, chi in enumerate(self.rows):
            for j, psi in enumerate(self.rows):
                tot = 0
                for c in range(self.nclasses):
                    tot += W.class_sizes[c] * chi[c] * psi[invmap[c]]
                if tot != (order if i == j else 0):
                    raise ArithmeticError(
                        f"orthogonality fails at rows {i},{j}")
        # column orthogonality
        for c in range(self.nclasses):
            for d in range(self.nclasses):
                tot = sum(chi[c] * chi[invmap[d]] for chi in self.rows)
                want = order // W.class_sizes[c] if c == d else 0
                if tot != want:
                    raise ArithmeticError(
                        f"column orthogonality fails at {c},{d}")
        return True

    def b_invariants(self):
        """Lowest symmetric-power degree containing each irreducible."""
        W = self.group
        rank = W.rs.rank
        N = len(W.rs.positive_roots)
        # fake degree series: prod(1-q^{d_i}) / |W| * sum |C| chi(C)/det(1-qw)
        degs = W.rs.fundamental_degrees
        maxdeg = N + 1
        series = []
        for rep in W.class_reps:
            cp = W.char_poly_on_reflection(rep)
            # char(x) = x^n + c1 x^(n-1) + ... + cn, so
            # det(1 - q w) = q^n char(1/q) = 1 + c1 q + ... + cn q^n
            det = [Fraction(x) for x in cp]
            inv = _series_inverse(det, maxdeg)
            series.append(inv)
        numer = [Fraction(1)]
        for d in degs:
            term = [Fraction(0)] * (d + 1)
            term[0], term[d] = Fraction(1), Fraction(-1)
            numer = _series_mul(numer, term, maxdeg)
        out = []
        for chi in self.rows:
            acc = [Fraction(0)] * (maxdeg + 1)
            for c, inv in enumerate(series):
                w = Fraction(W.class_sizes[c] * chi[c], W.order)
                for k in range(maxdeg + 1):
                    acc[k] += w * inv[k]
            fake = _series_mul(acc, numer, maxdeg)
            b = next(k for k, v in enumerate(fake) if v)
            out.append(b)
        return out


def _series_inverse(poly, maxdeg):
    inv = [Fraction(0)] * (maxdeg + 1)
    inv[0] = 1 / poly[0]
    for k in range(1, maxdeg + 1):
        s = Fraction(0)
        for j in range(1, min(k, len(poly) - 1) + 1):
            s += poly[j] * inv[k - j]
        inv[k] = -s / poly[0]
    return inv


def _series_mul(a, b, maxdeg):
    out = [Fraction(0)] * (maxdeg + 1)
    for i, x in enumerate(a[:maxdeg + 1]):
        if not x:
            continue
        for j, y in enumerate(b[:maxdeg + 1 - i]):
            if y:
                out[i + j] += x * y
    return out


def character_table(W, max_order=3_000_000):
    """Dixon's algorithm; exact integer table, orthogonality re-verified."""
    if W.order > max_order:
        raise ValueError(
            f"{W.name}: order {W.order} exceeds the computable bound; "
            "an ingested table is required")
    n = W.nclasses
    orders = []
    for rep in W.class_reps:
        k = 1
        cur = rep
        ident = np.arange(W.npoints, dtype=rep.dtype)
        while not np.array_equal(cur, ident):
            cur = cur[rep]
            k += 1
        orders.append(k)
    exponent = 1
    for k in orders:
        exponent = exponent * k // _gcd(exponent, k)
    p = _find_prime(W.order, exponent)
    # class multiplication matrices for a few small classes
    cmms = []
    by_size = sorted(range(n), key=lambda c: (W.class_sizes[c], c))
    reps_idx = [W.index_of(rep.reshape(1, -1))[0] for rep in W.class_reps]
    for r in by_size[1:]:
        cmms.append(_cmm(W, r, reps_idx, p))
        if _splits(cmms, n, p):
            break
    spaces = _common_eigenspaces(cmms, n, p)
    assert len(spaces) == n, "class algebra did not split"
    # recover characters from eigenvalue rows
    invmap = W.inverse_class_map()
    rows, degrees = [], []
    # identify the identity class
    ident = np.arange(W.npoints, dtype=np.uint8)
    id_class = W.class_of_perm(ident)
    for space in spaces:
        v = np.asarray(space).reshape(-1)
        scale = int(v[id_class]) % p
        if scale == 0:
            raise ArithmeticError("eigenvector vanishes at identity")
        inv = pow(int(scale), p - 2, p)
        omega = [(int(x) * inv) % p for x in v]
        # 1/deg^2 = (1/|G|) sum_C omega(C) omega(C^-1) / |C|
        s = 0
        for c in range(n):
            s += omega[c] * omega[invmap[c]] * pow(W.class_sizes[c], p - 2, p)
        s = s % p
        s = (s * pow(W.order % p, p - 2, p)) % p
        # s = 1/deg^2 mod p
        deg_sq = pow(s, p - 2, p)
        deg = _sqrt_mod(deg_sq, p)
        if deg is None:
            raise ArithmeticError("degree is not a square mod p")
        if deg > p // 2:
            deg = p - deg
        chi = []
        for c in range(n):
            val = (omega[c] * deg) % p
            val = (val * pow(W.class_sizes[c] % p, p - 2, p)) % p
            chi.append(val - p if val > p // 2 else val)
        rows.append(chi)
        degrees.append(deg)
    order = sorted(range(n), key=lambda i: (degrees[i], rows[i]))
    ct = CharacterTable(W, [rows[i] for i in order],
                        [degrees[i] for i in order])
    assert sum(d * d for d in ct.degrees) == W.order
    ct.verify_orthogonality()
    return ct


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _sqrt_mod(a, p):
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, tt = 0, t
        while tt != 1:
            tt = tt * tt % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _cmm(W, r, reps_idx, p):
    """Matrix of multiplication by class-sum r on the class algebra."""
    n = W.nclasses
    members = np.where(W.class_of == r)[0]
    rows = W.elements[members]
    # invert all members
    inv = np.empty_like(rows)
    ar = np.arange(W.npoints, dtype=rows.dtype)
    for i in range(len(rows)):
        inv[i, rows[i]] = ar
    M = np.zeros((n, n), dtype=np.int64)
    for k, zidx in enumerate(reps_idx):
        z = W.elements[zidx]
        prod = inv[:, z]  # x^{-1} z for every x in the class
        idx = W.index_of(prod)
        cls = W.class_of[idx]
        cnt = np.bincount(cls, minlength=n)
        M[:, k] = cnt
    # M[j, k] = c_{rjk}; the character eigenvectors omega satisfy
    # sum_k c_{rjk} omega_k = omega_r omega_j, i.e. they are row
    # eigenvectors of M^T
    return M.T % p


def _splits(cmms, n, p):
    spaces = _common_eigenspaces(cmms, n, p)
    return len(spaces) == n


def _common_eigenspaces(cmms, n, p):
    spaces = [np.eye(n, dtype=np.int64)]
    for M in cmms:
        if len(spaces) == n:
            break
        new = []
        for S in spaces:
            if S.shape[0] == 1:
                new.append(S)
                continue
            sub = _eigensplit(S, M, p)
            new.extend(sub)
        spaces = new
    return spaces


def _eigensplit(S, M, p):
    """Split row space S under the action of M (mod p)."""
    A = (S @ M) % p
    # write A in the basis of S: solve X S = A
    X = _solve_matrix(S, A, p)
    vals = _eigenvalues(X, p)
    out = []
    for lam in vals:
        B = (X - lam * np.eye(X.shape[0], dtype=np.int64)) % p
        null = _nullspace(B, p)
        if len(null):
            out.append((null @ S) % p)
    total = sum(s.shape[0] for s in out)
    assert total == S.shape[0], "eigensplit lost dimensions"
    return out


def _nullspace(B, p):
    """Rows v with v @ B = 0 (mod p)."""
    k = B.shape[0]
    a = B.T % p  # solve a v^T = 0
    n_rows, n_cols = a.shape
    a = a.copy()
    pivots = {}
    r = 0
    for c in range(n_cols):
        piv = None
        for i in range(r, n_rows):
            if a[i, c]:
                piv = i
                break
        if piv is None:
            continue
        a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots[c] = r
        r += 1
    free = [c for c in range(n_cols) if c not in pivots]
    out = np.zeros((len(free), k), dtype=np.int64)
    for idx, c in enumerate(free):
        out[idx, c] = 1
        for pc, pr in pivots.items():
            v = a[pr, c]
            if v:
                out[idx, pc] = (-v) % p
    return out


def _solve_matrix(S, A, p):
    """X with X S = A (rows of A in row space of S), mod p."""
    k, n = S.shape
    aug = np.concatenate([S.T, A.T], axis=1) % p
    # column reduce S^T: solve S^T X^T = A^T
    a = aug.copy()
    piv_rows = []
    r = 0
    for c in range(k):
        piv = None
        for i in range(r, n):
            if a[i, c] % p:
                piv = i
                break
        assert piv is not None
        a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        piv_rows.append(r)
        r += 1
    X = a[:k, k:].T % p
    return X


def _eigenvalues(X, p):
    """All eigenvalues of X over F_p (X is diagonalizable here)."""
    n = X.shape[0]
    vals = set()
    # characteristic polynomial via Hessenberg-free elimination: for the
    # small n here, just try all roots of charpoly computed by expansion
    # of det(X - t I) via Berkowitz would be heavy; instead use the fact
    # that eigenvalues are among roots found by scanning det(X - tI) = 0
    # computed with gaussian elimination per candidate; n <= 112 and the
    # candidate eigenvalues come from the CMM structure, so scan smartly:
    # compute charpoly mod p via Faddeev over F_p (n^4 but n small).
    cp = _charpoly_modp(X, p)
    # roots by scanning is too slow for large p; factor via gcd with x^p-x
    roots = _roots_modp(cp, p)
    return roots


def _charpoly_modp(X, p):
    n = X.shape[0]
    A = X % p
    coeffs = [1]
    M = np.zeros_like(A)
    for k in range(1, n + 1):
        M = (A @ M) % p
        M = (M + coeffs[k - 1] * np.eye(n, dtype=np.int64)) % p
        ck = (-int(np.trace((A @ M) % p)) * pow(k, p - 2, p)) % p
        coeffs.append(ck)
    return coeffs  # x^n + c1 x^{n-1} + ...


def _roots_modp(coeffs, p):
    """Roots in F_p of the monic polynomial x^n + c1 x^(n-1) + ... + cn."""
    poly = list(reversed([c % p for c in coeffs]))  # low-degree first

    def pmod(a, b):
        a = a[:]
        binv = pow(b[-1], p - 2, p)
        while len(a) >= len(b):
            if a[-1] == 0:
                a.pop()
                continue
            f = a[-1] * binv % p
            off = len(a) - len(b)
            for i in range(len(b)):
                a[off + i] = (a[off + i] - f * b[i]) % p
            a.pop()
        while a and a[-1] == 0:
            a.pop()
        return a

    def pgcd(a, b):
        while b:
            a, b = b, pmod(a, b)
        return a

    def pmulmod(u, v, m):
        out = [0] * (len(u) + len(v) - 1)
        for i, x in enumerate(u):
            if x:
                for j, y in enumerate(v):
                    if y:
                        out[i + j] = (out[i + j] + x * y) % p
        return pmod(out, m)

    def ppowmod(base, e, m):
        acc = [1]
        base = pmod(base[:], m)
        while e:
            if e & 1:
                acc = pmulmod(acc, base, m)
            base = pmulmod(base, base, m)
            e >>= 1
        return acc

    # split part: gcd(x^p - x, poly)
    xp = ppowmod([0, 1], p, poly)
    xpx = xp[:] + [0] * max(0, 2 - len(xp))
    xpx[1] = (xpx[1] - 1) % p
    while xpx and xpx[-1] == 0:
        xpx.pop()
    split = pgcd(poly, xpx) if xpx else poly
    roots = set()

    import random as _r
    rng = _r.Random(0xD17)

    def find(f):
        f = [c * pow(f[-1], p - 2, p) % p for c in f]
        deg = len(f) - 1
        if deg == 0:
            return
        if deg == 1:
            roots.add((-f[0]) % p)
            return
        while True:
            a = rng.randrange(p)
            acc = ppowmod([a, 1], (p - 1) // 2, f)
            acc = acc[:] if acc else [0]
            acc[0] = (acc[0] - 1) % p
            g = pgcd(f, acc)
            if 0 < len(g) - 1 < deg:
                find(g)
                find(_poly_div(f, g, p))
                return

    if len(split) > 1:
        find(split)
    return sorted(roots)


def _poly_div(a, b, p):
    a = a[:]
    q = [0] * (len(a) - len(b) + 1)
    binv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        if a[-1] == 0:
            a.pop()
            continue
        f = a[-1] * binv % p
        off = len(a) - len(b)
        q[off] = f
        for i in range(len(b)):
            a[off + i] = (a[off + i] - f * b[i]) % p
        a.pop()
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    return q
