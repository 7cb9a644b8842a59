"""Exact Chevalley-basis Lie algebras for the simple types up to rank 8.

Basis order: simple coroots h_1..h_r, then e_alpha for the positive roots in
the frozen root order, then f_alpha in the same order.  All coefficients are
Fractions (or field elements from linalg.QuadExt); no floating point.

Structure constants are built by the extraspecial-pair recursion, with signs
fixed by the frozen root order.  The table is validated by the Jacobi tests
in the test suite (exhaustive for G2/F4/E6).
"""

from fractions import Fraction
from functools import lru_cache

from .linalg import Echelon, kernel, solve, eig_multiplicities
from .rootsys import RootSystem, build_root_system


class ChevalleyAlgebra:
    def __init__(self, root_system):
        rs = root_system
        self.rs = rs
        self.rank = rs.rank
        npos = len(rs.positive_roots)
        self.npos = npos
        self.dim = rs.rank + 2 * npos
        # root ids: 0..npos-1 positive, npos..2*npos-1 negative
        self.nroots = 2 * npos
        self._build_constants()
        # coroot vectors per positive root
        self.coroots = [rs.coroot_coords(r) for r in rs.positive_roots]

    # -- index helpers ------------------------------------------------------

    def root_vec(self, rid):
        r = self.rs.positive_roots[rid % self.npos]
        return r if rid < self.npos else tuple(-c for c in r)

    def rid_of_vec(self, vec):
        vec = tuple(vec)
        i = self.rs.root_index.get(vec)
        if i is not None:
            return i
        i = self.rs.root_index.get(tuple(-c for c in vec))
        if i is not None:
            return i + self.npos
        return None

    def neg(self, rid):
        return rid + self.npos if rid < self.npos else rid - self.npos

    def basis_index_of_root(self, rid):
        return self.rank + rid

    def root_of_basis_index(self, idx):
        """root id for a root-vector basis index, else None (Cartan)."""
        return idx - self.rank if idx >= self.rank else None

    def basis_name(self, idx):
        if idx < self.rank:
            return f"h{idx + 1}"
        rid = idx - self.rank
        vec = self.root_vec(rid)
        sign = "e" if rid < self.npos else "f"
        core = "".join(str(abs(c)) for c in self.root_vec(rid % self.npos))
        return f"{sign}[{core}]" if self.rank > 1 else f"{sign}[{vec}]"

    # -- structure constants -------------------------------------------------

    def _build_constants(self):
        rs = self.rs
        npos = self.npos
        pos = rs.positive_roots
        index = rs.root_index

        def is_pos_root(v):
            return v in index

        def sub(x, y):
            return tuple(a - b for a, b in zip(x, y))

        def string_p(alpha, beta):
            # p = max k with beta - k*alpha a root
            p = 0
            cur = sub(beta, alpha)
            while is_pos_root(cur) or is_pos_root(tuple(-c for c in cur)):
                p += 1
                cur = sub(cur, alpha)
            return p

        Npp = {}  # (i, j) positive-root indices, i < j, sum a positive root

        self._Npp = Npp
        self._N = {}
        for g_idx, gamma in enumerate(pos):
            pairs = []
            for a_idx in range(g_idx):
                beta = sub(gamma, pos[a_idx])
                b_idx = index.get(beta)
                if b_idx is not None and a_idx <= b_idx:
                    pairs.append((a_idx, b_idx))
            if not pairs:
                continue
            pairs.sort()
            eps, eta = pairs[0]
            Npp[(eps, eta)] = string_p(pos[eps], pos[eta]) + 1
            self._set_signed(eps, eta, Npp[(eps, eta)])
            for (a_idx, b_idx) in pairs[1:]:
                # Jacobi on (e_eps, e_eta, e_{-alpha}) grounds N(alpha, beta)
                # in constants of strictly smaller height:
                #   N(eps,eta) N(gamma,-alpha)
                #     = -N(eta,-alpha) N(eta-alpha,eps)
                #       - N(-alpha,eps) N(eps-alpha,eta)
                # and N(gamma,-alpha) = -(beta,beta)/(gamma,gamma) N(alpha,beta).
                alpha = pos[a_idx]
                na = self.neg(a_idx)
                t = 0
                ea = sub(pos[eta], alpha)
                rid_ea = self.rid_of_vec(ea)
                if rid_ea is not None and any(ea):
                    t += self.nconst(eta, na) * self.nconst(rid_ea, eps)
                sa = sub(pos[eps], alpha)
                rid_sa = self.rid_of_vec(sa)
                if rid_sa is not None and any(sa):
                    t += self.nconst(na, eps) * self.nconst(rid_sa, eta)
                ratio = Fraction(rs.inner(gamma, gamma),
                                 rs.inner(pos[b_idx], pos[b_idx]))
                val = ratio * Fraction(t, Npp[(eps, eta)])
                assert val.denominator == 1, (gamma, alpha)
                p = string_p(pos[a_idx], pos[b_idx])
                assert abs(int(val)) == p + 1, (gamma, alpha, val, p)
                Npp[(a_idx, b_idx)] = int(val)
                self._set_signed(a_idx, b_idx, int(val))

    def _set_signed(self, i, j, v):
        """Populate the signed table from one positive-pair constant."""
        N, npos, rs = self._N, self.npos, self.rs
        pos = rs.positive_roots

        def put(a, b, val):
            N[(a, b)] = val
            N[(b, a)] = -val
            N[(self.neg(a), self.neg(b))] = -val
            N[(self.neg(b), self.neg(a))] = val

        put(i, j, v)

    def nconst(self, a, b):
        """N_{a,b} for root ids a, b with root(a)+root(b) a root."""
        got = self._N.get((a, b))
        if got is not None:
            return got
        val = self._nconst_compute(a, b)
        self._N[(a, b)] = val
        return val

    def _nconst_compute(self, a, b):
        rs, npos = self.rs, self.npos
        va, vb = self.root_vec(a), self.root_vec(b)
        w = tuple(x + y for x, y in zip(va, vb))
        wid = self.rid_of_vec(w)
        assert wid is not None and any(w)
        apos, bpos = a < npos, b < npos
        if apos and bpos or (not apos and not bpos):
            # filled at construction for pos-pos; neg-neg by the convention
            raise AssertionError("pure pairs should be tabulated")
        if not apos:
            # N(a,b) = -N(b,a), reduce to (pos, neg)
            return -self.nconst(b, a)
        # a positive, b negative
        if wid < npos:
            # N(x,y) = -(w,w)/(x,x) * N(-y, w)
            ratio = Fraction(rs.inner(w, w), rs.inner(va, va))
            val = ratio * self.nconst_pp(self.neg(b), wid)
            assert val.denominator == 1
            return -int(val)
        # w negative: N(x,y) = N(-y,-x) with -y positive, -x negative
        return self.nconst(self.neg(b), self.neg(a))

    def nconst_pp(self, i, j):
        got = self._N.get((i, j))
        if got is None:
            return 0
        return got

    # -- brackets -------------------------------------------------------------

    def bracket_basis(self, i, j):
        """[basis_i, basis_j] as a sparse coefficient dict."""
        r = self.rank
        if i < r and j < r:
            return {}
        if i < r:
            rid = j - r
            c = self._coroot_eval(i, rid)
            return {j: Fraction(c)} if c else {}
        if j < r:
            out = self.bracket_basis(j, i)
            return {k: -v for k, v in out.items()}
        ra, rb = i - r, j - r
        va, vb = self.root_vec(ra), self.root_vec(rb)
        w = tuple(x + y for x, y in zip(va, vb))
        if not any(w):
            # [e_a, e_-a] = +/- h_a
            pos_id = ra % self.npos
            sign = 1 if ra < self.npos else -1
            return {k: Fraction(sign * c)
                    for k, c in enumerate(self.coroots[pos_id]) if c}
        wid = self.rid_of_vec(w)
        if wid is None:
            return {}
        c = self.nconst(ra, rb)
        return {r + wid: Fraction(c)} if c else {}

    def _coroot_eval(self, i, rid):
        """<root(rid), alpha_i^vee>."""
        return self.rs.eval_coroot(self.root_vec(rid), i)

    def bracket(self, x, y):
        """Bracket of sparse coefficient dicts (or LieElements)."""
        dx = x.coeffs if isinstance(x, LieElement) else x
        dy = y.coeffs if isinstance(y, LieElement) else y
        out = {}
        for i, ci in dx.items():
            if not ci:
                continue
            for j, cj in dy.items():
                if not cj:
                    continue
                for k, v in self.bracket_basis(i, j).items():
                    w = out.get(k, 0) + ci * cj * v
                    if w:
                        out[k] = w
                    else:
                        out.pop(k, None)
        if isinstance(x, LieElement) or isinstance(y, LieElement):
            return LieElement(self, out)
        return out

    # -- derived operators ----------------------------------------------------

    def ad_rows(self, x):
        """Rows of ad(x): row i maps j -> coefficient of basis_i in [x, b_j]."""
        dx = x.coeffs if isinstance(x, LieElement) else x
        rows = {}
        for j in range(self.dim):
            col = {}
            for i, ci in dx.items():
                if not ci:
                    continue
                for k, v in self.bracket_basis(i, j).items():
                    w = col.get(k, 0) + ci * v
                    if w:
                        col[k] = w
                    else:
                        col.pop(k, None)
            for k, v in col.items():
                rows.setdefault(k, {})[j] = v
        return [rows.get(i, {}) for i in range(self.dim)]

    def ad_entries(self, x):
        out = {}
        for i, row in enumerate(self.ad_rows(x)):
            for j, v in row.items():
                out[(i, j)] = v
        return out

    def apply_ad(self, x, v):
        """[x, v] for sparse dicts (column action)."""
        return self.bracket(x if not isinstance(x, LieElement) else x.coeffs,
                            v if not isinstance(v, LieElement) else v.coeffs)

    def killing_form(self, x, y):
        dx = x.coeffs if isinstance(x, LieElement) else x
        dy = y.coeffs if isinstance(y, LieElement) else y
        # kappa(x, y) = trace(ad x ad y), computed basis-wise
        tot = 0
        for j in range(self.dim):
            v = self.apply_ad(dy, {j: Fraction(1)})
            if v:
                w = self.apply_ad(dx, v)
                c = w.get(j)
                if c:
                    tot += c
        return tot

    def is_nilpotent(self, x):
        """ad(x)^dim == 0, decided on the image chain (never full powers)."""
        dx = x.coeffs if isinstance(x, LieElement) else x
        ech = Echelon()
        basis = []
        for j in range(self.dim):
            img = self.apply_ad(dx, {j: Fraction(1)})
            if img and ech.add(img) is not None:
                basis.append(img)
        dim_prev = None
        while True:
            d = len(basis)
            if d == 0:
                return True
            if d == dim_prev:
                return False
            dim_prev = d
            ech2 = Echelon()
            nxt = []
            for v in basis:
                img = self.apply_ad(dx, v)
                if img and ech2.add(img) is not None:
                    nxt.append(img)
            basis = nxt

    # -- Cartan/weight bucket helpers ------------------------------------------

    def cartan_element(self, diagram):
        """h in coroot coordinates whose simple-root values are `diagram`.

        diagram: values alpha_i(h).  Returns sparse coeff dict over the h_i.
        """
        # solve A^T c = diagram where (A^T)_{ji} = a[i][j]
        a = self.rs.cartan_matrix
        r = self.rank
        rows = [{i: Fraction(a[i][j]) for i in range(r) if a[i][j]}
                for j in range(r)]
        sol = solve(rows, [Fraction(v) for v in diagram], r)
        assert sol is not None
        return {i: v for i, v in sol.items() if v}

    def weight_of_rid(self, h_coeffs, rid):
        """alpha(h) for h a Cartan coefficient dict, alpha = root(rid)."""
        vec = self.root_vec(rid)
        tot = 0
        for i, c in h_coeffs.items():
            tot += c * self.rs.eval_coroot(vec, i)
        return tot

    def graded_basis(self, h_coeffs):
        """Basis indices bucketed by ad-h eigenvalue (h in the Cartan)."""
        buckets = {}
        for i in range(self.rank):
            buckets.setdefault(0, []).append(i)
        for rid in range(self.nroots):
            w = self.weight_of_rid(h_coeffs, rid)
            buckets.setdefault(w, []).append(self.rank + rid)
        return buckets


class LieElement:
    """Sparse exact-coefficient element of a ChevalleyAlgebra."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs=None):
        self.algebra = algebra
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return LieElement(self.algebra, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, c):
        return LieElement(self.algebra, {k: c * v for k, v in self.coeffs.items()})

    def __neg__(self):
        return (-1) * self

    def __eq__(self, other):
        return isinstance(other, LieElement) and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other):
        if other.algebra is not self.algebra:
            raise ValueError("elements of different algebras")

    def bracket(self, other):
        self._check(other)
        return self.algebra.bracket(self, other)

    def __repr__(self):
        alg = self.algebra
        terms = [f"{v}*{alg.basis_name(k)}" for k, v in sorted(self.coeffs.items())]
        return " + ".join(terms) if terms else "0"


class SL2Triple:
    """e, h, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h (verified)."""

    def __init__(self, e, h, f):
        alg = e.algebra
        if alg.bracket(h, e) != 2 * e or alg.bracket(h, f) != (-2) * f \
                or alg.bracket(e, f) != h:
            raise ValueError("not an sl2 triple")
        self.e, self.h, self.f = e, h, f
        self.algebra = alg


def root_element(alg, vec, negative=False, coeff=1):
    rid = alg.rid_of_vec(vec)
    if rid is None:
        raise ValueError(f"{vec} is not a root")
    if negative:
        rid = alg.neg(rid)
    return LieElement(alg, {alg.basis_index_of_root(rid): Fraction(coeff)})


def cartan_lie_element(alg, diagram):
    return LieElement(alg, alg.cartan_element(diagram))


@lru_cache(maxsize=None)
def algebra(cartan_type):
    return ChevalleyAlgebra(build_root_system(cartan_type))


# ---------------------------------------------------------------------------
# Jacobson-Morozov and spectrum utilities (used by orbits and slicecore).

def jm_neutral(alg, x):
    """h completing the nilpotent x to an sl2 (h = [x, y], (ad x)^2 y = -2x)."""
    dx = x.coeffs if isinstance(x, LieElement) else x
    cols = {}
    for j in range(alg.dim):
        col1 = alg.apply_ad(dx, {j: Fraction(1)})
        col2 = alg.apply_ad(dx, col1)
        for i, v in col2.items():
            cols.setdefault(i, {})[j] = v
    rowlist = [cols.get(i, {}) for i in range(alg.dim)]
    rhs = {i: -2 * v for i, v in dx.items()}
    y = solve(rowlist, rhs, alg.dim)
    if y is None:
        raise ValueError("element is not nilpotent (no JM neutral element)")
    h = alg.apply_ad(dx, y)
    return h


def jm_triple(alg, x):
    """Full sl2 triple through nilpotent x (deterministic)."""
    dx = x.coeffs if isinstance(x, LieElement) else x
    if not dx:
        raise ValueError("zero element has no sl2 triple")
    h = jm_neutral(alg, dx)
    # f: [h,f] = -2f and [e,f] = h
    rows = {}
    nrow = 0
    hrows = alg.ad_rows(h)
    for i in range(alg.dim):
        row = dict(hrows[i])
        row[i] = row.get(i, 0) + 2
        row = {j: v for j, v in row.items() if v}
        rows[nrow] = (row, 0)
        nrow += 1
    xrows = alg.ad_rows(dx)
    for i in range(alg.dim):
        rows[nrow] = (dict(xrows[i]), h.get(i, 0))
        nrow += 1
    rowlist = [rows[i][0] for i in range(nrow)]
    rhs = {i: rows[i][1] for i in range(nrow) if rows[i][1]}
    f = solve(rowlist, rhs, alg.dim)
    if f is None:
        raise ValueError("JM completion failed (is x nilpotent?)")
    e = LieElement(alg, dx)
    return SL2Triple(e, LieElement(alg, h), LieElement(alg, f))


def ad_h_multiplicities(alg, h):
    """Exact eigenvalue multiplicities of ad(h) for semisimple integral h."""
    dh = h.coeffs if isinstance(h, LieElement) else h
    entries = alg.ad_entries(dh)
    maxht = max(sum(r) for r in alg.rs.positive_roots)
    bound = 2 * maxht + 2
    cands = range(-bound, bound + 1)
    frac_entries = {}
    denom = 1
    for k, v in entries.items():
        v = Fraction(v)
        frac_entries[k] = v
        denom = denom * v.denominator // _gcd_int(denom, v.denominator)
    if denom == 1:
        int_entries = {k: int(v) for k, v in frac_entries.items()}
        return eig_multiplicities(int_entries, alg.dim, cands)
    # clear denominators: eigenvalues scale by denom
    int_entries = {k: int(v * denom) for k, v in frac_entries.items()}
    scaled = eig_multiplicities(int_entries, alg.dim,
                                [c * denom for c in cands])
    return {c // denom: m for c, m in scaled.items()}


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a
