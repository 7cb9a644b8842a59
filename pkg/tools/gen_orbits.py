#!/usr/bin/env python3
"""Regenerate the orbit catalogs and golden-atlas data files.

Weighted Dynkin diagrams and orbit dimensions are computed from scratch
(enumeration of dominant {0,1,2}-vectors with a mod-p rank certificate);
Bala-Carter labels are derived by embedding distinguished orbits of standard
Levi subsystems.  Ingested data (closure edges with their golden singularity
labels, component groups, special flags) is merged in from the tables below.

Run from the repo root:  python3 tools/gen_orbits.py [types...]
"""

import json
import os
import random
import sys
from fractions import Fraction

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from nilslice.liealg import algebra
from nilslice.rootsys import build_root_system, dominantize
from nilslice.linalg import solve

P = 2_147_483_629


def gf_rank(mat, p=P):
    a = mat % p
    n, m = a.shape
    r = 0
    for c in range(m):
        piv = None
        for i in range(r, n):
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
        r += 1
        if r == n:
            break
    return r


def ad_matrix_modp(alg, coeffs, p=P):
    n = alg.dim
    m = np.zeros((n, n), dtype=np.int64)
    for j in range(n):
        col = alg.apply_ad(coeffs, {j: Fraction(1)})
        for i, v in col.items():
            v = Fraction(v)
            m[i, j] = (v.numerator * pow(v.denominator, p - 2, p)) % p
    return m


def diagram_buckets(alg, diag):
    buckets = {0: alg.rank}
    for rid in range(alg.nroots):
        w = sum(c * v for c, v in zip(alg.root_vec(rid), diag))
        buckets[w] = buckets.get(w, 0) + 1
    return buckets


def g2_roots_of(alg, diag):
    out = []
    for rid in range(alg.nroots):
        if sum(c * v for c, v in zip(alg.root_vec(rid), diag)) == 2:
            out.append(rid)
    return out


def _grading(alg, diag):
    buckets = {0: list(range(alg.rank))}
    for rid in range(alg.nroots):
        w = sum(c * v for c, v in zip(alg.root_vec(rid), diag))
        buckets.setdefault(w, []).append(alg.rank + rid)
    return buckets


def _jm_f_system(alg, diag, e_coeffs):
    """Rows/rhs of [e, f] = h with f restricted to g_{-2}.

    diag: the vector of simple-root values of h (need not be dominant).
    """
    buckets = _grading(alg, diag)
    g0 = buckets.get(0, [])
    gm2 = buckets.get(-2, [])
    g0pos = {b: i for i, b in enumerate(g0)}
    rows = [dict() for _ in g0]
    for k, b in enumerate(gm2):
        col = alg.apply_ad(e_coeffs, {b: Fraction(1)})
        for i, v in col.items():
            rows[g0pos[i]][k] = v
    h = alg.cartan_element(diag)
    rhs = {}
    for i, b in enumerate(g0):
        v = h.get(b) if b < alg.rank else None
        if v:
            rhs[i] = v
    return rows, rhs, len(gm2)


def _solvable_modp(rows, rhs, ncols, p=P):
    n = len(rows)
    a = np.zeros((n, ncols + 1), dtype=np.int64)
    for i, row in enumerate(rows):
        for j, v in row.items():
            v = Fraction(v)
            a[i, j] = (v.numerator * pow(v.denominator, p - 2, p)) % p
    for i, v in rhs.items():
        v = Fraction(v)
        a[i, ncols] = (v.numerator * pow(v.denominator, p - 2, p)) % p
    r_full = gf_rank(a.copy(), p)
    r_mat = gf_rank(a[:, :ncols].copy(), p)
    return r_full == r_mat


def random_g2_element(alg, diag, rng, bound=23):
    g2 = [r for r in g2_roots_of(alg, diag) if r < alg.npos]
    return {alg.basis_index_of_root(r): Fraction(rng.randint(1, bound))
            for r in g2}


def certify_diagram(alg, diag, rng, attempts=4):
    """Return orbit dim if diag is a weighted Dynkin diagram, else None.

    Certificate: for generic e in g_2, the system [e, f] = h with f in g_{-2}
    is solvable; a solution gives an honest sl2 triple with characteristic
    diag, and then dim = dim g - dim g_0 - dim g_1 by sl2 theory.  The mod-p
    check is a prefilter; a passing candidate is confirmed by an exact solve.
    """
    b = diagram_buckets(alg, diag)
    d0, d1 = b.get(0, 0), b.get(1, 0)
    target = alg.dim - d0 - d1
    if target == 0:
        return 0 if not any(diag) else None
    if target % 2:
        return None
    g2 = [r for r in g2_roots_of(alg, diag) if r < alg.npos]
    if not g2:
        return None
    for _ in range(attempts):
        e = random_g2_element(alg, diag, rng)
        rows, rhs, ncols = _jm_f_system(alg, diag, e)
        if not _solvable_modp(rows, rhs, ncols):
            continue
        if solve(rows, rhs, ncols) is not None:
            return target
    return None


def enumerate_diagrams(ct, rng):
    alg = algebra(ct)
    out = {}
    stack = [()]
    for _ in range(alg.rank):
        stack = [s + (v,) for s in stack for v in (0, 1, 2)]
    for diag in stack:
        d = certify_diagram(alg, diag, rng)
        if d is not None:
            out[diag] = d
    return out


DIST_NAMES = {
    "G2": ["G2", "G2(a1)"],
    "F4": ["F4", "F4(a1)", "F4(a2)", "F4(a3)"],
    "E6": ["E6", "E6(a1)", "E6(a3)"],
    "E7": ["E7", "E7(a1)", "E7(a2)", "E7(a3)", "E7(a4)", "E7(a5)"],
    "E8": ["E8", "E8(a1)", "E8(a2)", "E8(a3)", "E8(a4)", "E8(b4)",
           "E8(a5)", "E8(b5)", "E8(a6)", "E8(b6)", "E8(a7)"],
}


def distinguished_orbits(ct, rng):
    """[(name, diagram)] of distinguished orbits of the simple type ct."""
    letter, rank = ct[0], int(ct[1:])
    if letter == "A":
        return [(ct, tuple([2] * rank))]
    alg = algebra(ct)
    diags = enumerate_diagrams(ct, rng)
    dist = []
    for diag, dim in diags.items():
        if any(v == 1 for v in diag):
            continue
        b = diagram_buckets(alg, diag)
        if b.get(0, 0) == b.get(2, 0) and dim > 0:
            dist.append((diag, dim))
    dist.sort(key=lambda t: -t[1])
    if ct in DIST_NAMES:
        names = DIST_NAMES[ct]
        assert len(dist) == len(names), (ct, dist)
        return [(names[i], d) for i, (d, _) in enumerate(dist)]
    # classical B/C/D: regular, then (a1), (a2), ... by decreasing dimension
    names = [ct] + [f"{ct}(a{i})" for i in range(1, len(dist))]
    return [(names[i], d) for i, (d, _) in enumerate(dist)]


def match_base(rs, comp_roots, comp_type):
    """Bijection canonical-simple-index -> ambient root, matching Cartans."""
    sub = build_root_system(comp_type)
    n = sub.rank
    # pairing in the ambient system
    def pairing(x, y):  # <x, y^vee>
        return 2 * rs.inner(x, y) // rs.inner(y, y)

    import itertools
    for perm in itertools.permutations(comp_roots):
        ok = True
        for i in range(n):
            for j in range(n):
                if sub.cartan_matrix[i][j] != pairing(perm[j], perm[i]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return list(perm)
    raise AssertionError(f"no base match for {comp_type}")


def component_split(rs, subset):
    """Split a set of simple-root indices into connected components."""
    comps = []
    seen = set()
    for i in subset:
        if i in seen:
            continue
        todo, comp = [i], []
        seen.add(i)
        while todo:
            x = todo.pop()
            comp.append(x)
            for j in subset:
                if j not in seen and rs.cartan_matrix[x][j]:
                    seen.add(j)
                    todo.append(j)
        comps.append(sorted(comp))
    return comps


def comp_type_name(rs, comp_vecs, ambient_has_lengths):
    from nilslice.rootsys import detect_cartan_type
    tnames, _ = detect_cartan_type(
        comp_vecs + [tuple(-c for c in v) for v in comp_vecs], rs.inner)
    assert len(tnames) == 1
    t = tnames[0]
    if ambient_has_lengths:
        # tilde marks components made of short ambient roots
        maxn = max(rs.inner(r, r) for r in rs.positive_roots)
        if all(rs.inner(v, v) < maxn for v in comp_vecs):
            return t, True
    return t, False


def levi_h_vector(rs, base_vecs, comp_diag):
    """Cartan element (coroot coords) with <beta_i, h> = comp_diag[i]."""
    n = len(base_vecs)
    coroots = [rs.coroot_coords(b) for b in base_vecs]
    # h = sum c_k coroot_k ; <beta_i, h> = sum_k c_k <beta_i, coroot_k>
    rows = []
    for i in range(n):
        row = {}
        for k in range(n):
            val = sum(coroots[k][m] * rs.eval_coroot(base_vecs[i], m)
                      for m in range(rs.rank))
            if val:
                row[k] = Fraction(val)
        rows.append(row)
    sol = solve(rows, [Fraction(v) for v in comp_diag], n)
    assert sol is not None
    h = [Fraction(0)] * rs.rank
    for k, c in sol.items():
        for m in range(rs.rank):
            h[m] += c * coroots[k][m]
    assert all(x.denominator == 1 for x in h)
    return [int(x) for x in h]


def format_label(parts):
    """Assemble a Bala-Carter label out of component names."""
    def rank_of(name):
        core = name.split("(")[0].replace("~", "")
        return int(core[1:])

    def sortkey(name):
        return (-rank_of(name), name.replace("~", "").replace("(", ""))

    parts = sorted(parts, key=sortkey)
    out = []
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        k = j - i
        out.append((f"{k}" if k > 1 else "") + parts[i])
        i = j
    return "+".join(out)


def bala_carter(ct, diagram_dims, rng):
    """Map diagram -> label via distinguished orbits of standard Levis."""
    alg = algebra(ct)
    rs = alg.rs
    has_lengths = ct[0] in "BCFG"
    dist_cache = {}
    found = {}          # diagram -> label
    construction = {}   # diagram -> (simple-root subset, h in coroot coords)
    import itertools
    for size in range(rs.rank + 1):
        for subset in itertools.combinations(range(rs.rank), size):
            comps = component_split(rs, subset)
            comp_infos = []
            ok = True
            for comp in comps:
                vecs = [rs.simple_roots[i] for i in comp]
                tname, tilde = comp_type_name(rs, vecs, has_lengths)
                if tname not in dist_cache:
                    dist_cache[tname] = distinguished_orbits(tname, rng)
                base = match_base(rs, vecs, tname)
                comp_infos.append((tname, tilde, base))
            if not ok:
                continue
            choices = [dist_cache[t] for t, _, _ in comp_infos]
            for combo in itertools.product(*choices):
                h = [0] * rs.rank
                names = []
                for (tname, tilde, base), (dname, ddiag) in zip(comp_infos, combo):
                    hv = levi_h_vector(rs, base, ddiag)
                    h = [a + b for a, b in zip(h, hv)]
                    names.append(_tilde_name(dname) if tilde else dname)
                values = rs.diagram_of_coroot_vec(h)
                dom, _ = dominantize(rs, values)
                assert dom in diagram_dims, (ct, subset, combo, dom)
                label = format_label(names) if names else "0"
                if dom in found:
                    assert found[dom] == label, \
                        f"{ct}: diagram {dom} labelled {found[dom]} and {label}"
                else:
                    found[dom] = label
                    construction[dom] = (tuple(subset), tuple(h))
    assert set(found) == set(diagram_dims), (
        ct, set(diagram_dims) - set(found))
    # primed labels: non-conjugate Levis of equal type; the convention is
    # that '' marks the class with the larger reductive centralizer
    bylab = {}
    for diag, lab in found.items():
        bylab.setdefault(lab, []).append(diag)
    rng2 = random.Random(f"prime-{ct}")
    alg = algebra(ct)
    for lab, diags in bylab.items():
        if len(diags) == 1:
            continue
        assert len(diags) == 2, (ct, lab, diags)
        a, b = diags
        ca, cb = cs_dim(alg, a, rng2), cs_dim(alg, b, rng2)
        assert ca != cb, (ct, lab)
        hi, lo = (a, b) if ca > cb else (b, a)
        found[hi] = f"({lab})''"
        found[lo] = f"({lab})'"
    return found, construction


def _tilde_name(dname):
    # C3(a1) -> C~3(a1) style is never needed; tildes only arise on A-types
    if "(" in dname:
        core, rest = dname.split("(", 1)
        return core[0] + "~" + core[1:] + "(" + rest
    return dname[0] + "~" + dname[1:]


def cs_dim(alg, diag, rng):
    """dim c(s) = dim g0 - rank(ad e : g0 -> g2) for generic e in g2 (mod p)."""
    g2 = [r for r in g2_roots_of(alg, diag) if r < alg.npos]
    coeffs = {alg.basis_index_of_root(r): Fraction(rng.randint(1, 97))
              for r in g2}
    if not coeffs:
        return alg.dim  # zero orbit
    buckets = {}
    for i in range(alg.rank):
        buckets.setdefault(0, []).append(i)
    for rid in range(alg.nroots):
        w = sum(c * v for c, v in zip(alg.root_vec(rid), diag))
        buckets.setdefault(w, []).append(alg.rank + rid)
    zero, two = buckets.get(0, []), buckets.get(2, [])
    pos = {b: k for k, b in enumerate(two)}
    m = np.zeros((len(two), len(zero)), dtype=np.int64)
    for k, j in enumerate(zero):
        col = alg.apply_ad(coeffs, {j: Fraction(1)})
        for i, v in col.items():
            if i in pos:
                m[pos[i], k] = int(Fraction(v)) % P
    return len(zero) - gf_rank(m)


def _span_dim(alg, rids):
    from nilslice.linalg import Echelon
    ech = Echelon()
    for r in rids:
        ech.add({i: Fraction(c) for i, c in enumerate(alg.root_vec(r)) if c})
    return ech.rank


def representative(alg, diag, dim, rng, levi):
    """Certified representative inside the Bala-Carter Levi.

    The support is restricted to the Levi's 2-eigenspace so that the kernel
    of the support in the Cartan is a maximal toral subalgebra of c(s); this
    is what centralizer profiles downstream rely on.
    """
    subset, h_coroot = levi
    rs = alg.rs
    if not subset:
        return []
    # support in the Levi's own frame, mapped to the dominant frame along
    # the dominantization word
    hvals = rs.diagram_of_coroot_vec(h_coroot)
    _, word = dominantize(rs, hvals)
    support = []
    for r in rs.positive_roots:
        if not all(c == 0 or i in subset for i, c in enumerate(r)):
            continue
        if sum(c * v for c, v in zip(r, hvals)) != 2:
            continue
        img = r
        for i in word:
            img = rs.reflect_root(img, i)
        assert sum(c * v for c, v in zip(img, diag)) == 2
        rid = alg.rid_of_vec(img)
        assert rid is not None and rid < alg.npos, (diag, img)
        support.append(rid)
    g2 = sorted(set(support))
    if not g2:
        return []
    bc_rank = len(subset)

    def ok_modp(sub, coeffs):
        cd = {alg.basis_index_of_root(r): c for r, c in zip(sub, coeffs)}
        rows, rhs, ncols = _jm_f_system(alg, diag, cd)
        return _solvable_modp(rows, rhs, ncols)

    def ok_exact(sub, coeffs):
        cd = {alg.basis_index_of_root(r): c for r, c in zip(sub, coeffs)}
        rows, rhs, ncols = _jm_f_system(alg, diag, cd)
        return solve(rows, rhs, ncols) is not None

    assert _span_dim(alg, g2) == bc_rank, (diag, "Levi 2-space too small")
    coeffs = None
    for _ in range(8):
        trial = [Fraction(rng.randint(1, 23)) for _ in g2]
        if ok_modp(g2, trial):
            coeffs = trial
            break
    assert coeffs, f"generic element not in the orbit for {diag}"
    sub, cf = list(g2), list(coeffs)
    i = 0
    while i < len(sub):
        trial_s = sub[:i] + sub[i + 1:]
        trial_c = cf[:i] + cf[i + 1:]
        if trial_s and _span_dim(alg, trial_s) == bc_rank \
                and ok_modp(trial_s, trial_c):
            sub, cf = trial_s, trial_c
        else:
            i += 1
    # prefer unit coefficients where the certificate allows
    for i in range(len(sub)):
        trial = cf[:i] + [Fraction(1)] + cf[i + 1:]
        if ok_modp(sub, trial):
            cf = trial
    if not ok_exact(sub, cf):  # mod-p false positive: keep generic element
        sub, cf = list(g2), coeffs
        assert ok_exact(sub, cf), f"no representative found for {diag}"
    return [[list(alg.root_vec(r)), str(c)] for r, c in zip(sub, cf)]


# ---------------------------------------------------------------------------
# Ingested data: golden edges (paper's closing graphs), component groups,
# special flags.

GOLDEN_EDGES = {
    "G2": [
        ("G2", "G2(a1)", "G2"), ("G2(a1)", "A~1", "A1"),
        ("A~1", "A1", "m"), ("A1", "0", "g2"),
    ],
    "F4": [
        ("F4", "F4(a1)", "F4"), ("F4(a1)", "F4(a2)", "C3"),
        ("F4(a2)", "B3", "A1"), ("F4(a2)", "C3", "A1"),
        ("C3", "F4(a3)", "4G2"), ("B3", "F4(a3)", "G2"),
        ("F4(a3)", "C3(a1)", "A1"), ("C3(a1)", "A~2+A1", "m"),
        ("C3(a1)", "B2", "[2A1]+"), ("B2", "A2+A~1", "A1"),
        ("A2+A~1", "A2", "a2+"), ("A~2+A1", "A2+A~1", "m"),
        ("A~2+A1", "A~2", "g2"), ("A~2", "A1+A~1", "A1"),
        ("A2", "A1+A~1", "A1"), ("A1+A~1", "A~1", "a3+"),
        ("A~1", "A1", "c3"), ("A1", "0", "f4"),
    ],
    "E6": [
        ("E6", "E6(a1)", "E6"), ("E6(a1)", "D5", "A5"),
        ("D5", "E6(a3)", "C3"), ("E6(a3)", "A5", "A1"),
        ("E6(a3)", "D5(a1)", "A2"), ("A5", "A4+A1", "A2"),
        ("D5(a1)", "A4+A1", "A2"), ("D5(a1)", "D4", "a2"),
        ("A4+A1", "A4", "A1"), ("D4", "D4(a1)", "G2"),
        ("A4", "D4(a1)", "3C2"), ("D4(a1)", "A3+A1", "A1"),
        ("A3+A1", "A3", "b2"), ("A3+A1", "2A2+A1", "m"),
        ("A3", "A2+2A1", "A1"), ("2A2+A1", "2A2", "g2"),
        ("2A2+A1", "A2+2A1", "tau"), ("2A2", "A2+A1", "A2"),
        ("A2+2A1", "A2+A1", "a2"), ("A2+A1", "A2", "[2a2]+"),
        ("A2", "3A1", "A1"), ("3A1", "2A1", "b3"),
        ("2A1", "A1", "a5"), ("A1", "0", "e6"),
    ],
    "E7": [
        ("E7", "E7(a1)", "E7"), ("E7(a1)", "E7(a2)", "D6"),
        ("E7(a2)", "E6", "A1"), ("E7(a2)", "E7(a3)", "C4"),
        ("E6", "E6(a1)", "F4"), ("E7(a3)", "D6", "A1"),
        ("E7(a3)", "E6(a1)", "B3"), ("D6", "E7(a4)", "C3"),
        ("E6(a1)", "E7(a4)", "C3"), ("E7(a4)", "A6", "A1"),
        ("E7(a4)", "D5+A1", "A1"), ("E7(a4)", "D6(a1)", "A1"),
        ("D6(a1)", "D5", "A1"), ("D6(a1)", "E7(a5)", "3C3"),
        ("A6", "E7(a5)", "G2"), ("D5+A1", "D5", "A1"),
        ("D5+A1", "E7(a5)", "G2"), ("D5", "E6(a3)", "C3"),
        ("E7(a5)", "E6(a3)", "A1"), ("E7(a5)", "D6(a2)", "A1"),
        ("D6(a2)", "A5+A1", "m"), ("D6(a2)", "(A5)'", "A1"),
        ("D6(a2)", "D5(a1)+A1", "A1"), ("E6(a3)", "(A5)'", "A1"),
        ("E6(a3)", "D5(a1)+A1", "A1"), ("A5+A1", "(A5)''", "g2"),
        ("A5+A1", "A4+A2", "A1"), ("(A5)'", "A4+A2", "A1"),
        ("(A5)''", "A4", "B3"), ("D5(a1)+A1", "A4+A2", "A1"),
        ("D5(a1)+A1", "D5(a1)", "A1"), ("D5(a1)", "D4+A1", "b2"),
        ("D5(a1)", "A4+A1", "A2+"), ("A4+A2", "A4+A1", "A2+"),
        ("D4+A1", "D4", "c3"), ("D4+A1", "A3+A2+A1", "A1"),
        ("A4+A1", "A3+A2+A1", "a2/S2"), ("A4+A1", "A4", "a2+"),
        ("A3+A2+A1", "A3+A2", "A1"), ("A4", "A3+A2", "C2"),
        ("A3+A2", "D4(a1)+A1", "[2A1]+"), ("D4", "D4(a1)", "G2"),
        ("D4(a1)+A1", "D4(a1)", "[3A1]++"), ("D4(a1)+A1", "A3+2A1", "A1"),
        ("D4(a1)", "(A3+A1)'", "A1"), ("A3+2A1", "(A3+A1)'", "A1"),
        ("A3+2A1", "(A3+A1)''", "b3"), ("(A3+A1)'", "A3", "b3"),
        ("(A3+A1)'", "2A2+A1", "m"), ("(A3+A1)''", "A3", "A1"),
        ("(A3+A1)''", "2A2", "A1"), ("2A2+A1", "2A2", "g2"),
        ("2A2+A1", "A2+3A1", "g2"), ("2A2", "A2+2A1", "A1"),
        ("A3", "A2+2A1", "A1"), ("A2+3A1", "A2+2A1", "A1"),
        ("A2+2A1", "A2+A1", "a3+"), ("A2+A1", "A2", "a5+"),
        ("A2+A1", "4A1", "c3"), ("4A1", "(3A1)'", "c3"),
        ("4A1", "(3A1)''", "f4"), ("A2", "(3A1)'", "A1"),
        ("(3A1)'", "2A1", "b4"), ("(3A1)''", "2A1", "A1"),
        ("2A1", "A1", "d6"), ("A1", "0", "e7"),
    ],
    "E8": [
        ("E8", "E8(a1)", "E8"), ("E8(a1)", "E8(a2)", "E7"),
        ("E8(a2)", "E8(a3)", "C6"), ("E8(a3)", "E8(a4)", "F4"),
        ("E8(a3)", "E7", "A1"), ("E7", "E8(b4)", "F4"),
        ("E8(a4)", "E8(b4)", "C4"), ("E8(b4)", "E7(a1)", "A1"),
        ("E8(b4)", "E8(a5)", "C3"), ("E7(a1)", "E8(b5)", "3(C5)"),
        ("E8(a5)", "E8(b5)", "G2"), ("E8(a5)", "D7", "A1"),
        ("E8(b5)", "E7(a2)", "A1"), ("E8(b5)", "E8(a6)", "(G2)"),
        ("D7", "E8(a6)", "(G2)"), ("E7(a2)", "E6+A1", "m"),
        ("E7(a2)", "D7(a1)", "(B3)"), ("E8(a6)", "D7(a1)", "C2"),
        ("E6+A1", "E6", "g2"), ("E6+A1", "E8(b6)", "(G2)"),
        ("D7(a1)", "E7(a3)", "A1"), ("D7(a1)", "E8(b6)", "mu"),
        ("E6", "E6(a1)", "F4"), ("E7(a3)", "D6", "b2"),
        ("E7(a3)", "E6(a1)+A1", "(A4+)"), ("E8(b6)", "E6(a1)+A1", "A2+"),
        ("E8(b6)", "A7", "A1"), ("D6", "D5+A2", "(C2)"),
        ("E6(a1)+A1", "E6(a1)", "a2+"), ("E6(a1)+A1", "D7(a2)", "(A2+)"),
        ("A7", "D7(a2)", "(A2+)"), ("D7(a2)", "D5+A2", "(C2)"),
        ("E6(a1)", "E7(a4)", "C3"), ("D5+A2", "E7(a4)", "A1"),
        ("D5+A2", "A6+A1", "A1"), ("E7(a4)", "D6(a1)", "[2A1]+"),
        ("E7(a4)", "A6", "A1"), ("A6+A1", "A6", "A1"),
        ("D6(a1)", "D5+A1", "A1"), ("D6(a1)", "E8(a7)", "10G2"),
        ("A6", "E8(a7)", "5G2"), ("D5+A1", "D5", "b3"),
        ("D5+A1", "E7(a5)", "G2"), ("E8(a7)", "E7(a5)", "A1"),
        ("E7(a5)", "E6(a3)+A1", "m"), ("E7(a5)", "D6(a2)", "[2A1]+"),
        ("D6(a2)", "A5+A1", "m"), ("D6(a2)", "D5(a1)+A2", "A1"),
        ("D5", "E6(a3)", "C3"), ("E6(a3)+A1", "E6(a3)", "g2"),
        ("E6(a3)+A1", "A5+A1", "A1"), ("E6(a3)+A1", "D5(a1)+A2", "m"),
        ("E6(a3)", "A5", "A1"), ("E6(a3)", "D5(a1)+A1", "A1"),
        ("A5+A1", "A5", "g2"), ("A5+A1", "A4+A3", "m"),
        ("D5(a1)+A2", "A4+A3", "m"), ("D5(a1)+A2", "D4+A2", "a2+"),
        ("A4+A3", "A4+A2+A1", "chi"), ("D4+A2", "A4+A2+A1", "A1"),
        ("D4+A2", "D5(a1)+A1", "A1"), ("A5", "A4+A2", "A1"),
        ("A4+A2+A1", "A4+A2", "A1"), ("D5(a1)+A1", "A4+A2", "A1"),
        ("D5(a1)+A1", "D5(a1)", "a3+"), ("D5(a1)", "D4+A1", "c3"),
        ("D5(a1)", "A4+A1", "A2+"), ("A4+A2", "A4+2A1", "A1"),
        ("A4+2A1", "2A3", "b2"), ("A4+2A1", "A4+A1", "a2+"),
        ("D4+A1", "D4", "f4"), ("D4+A1", "A3+A2+A1", "A1"),
        ("A4+A1", "D4(a1)+A2", "a2+"), ("A4+A1", "A4", "a4+"),
        ("2A3", "D4(a1)+A2", "a2+"), ("D4(a1)+A2", "A3+A2+A1", "A1"),
        ("A3+A2+A1", "A3+A2", "b2"), ("A4", "A3+A2", "C2"),
        ("A3+A2", "D4(a1)+A1", "[3A1]++"), ("D4", "D4(a1)", "G2"),
        ("D4(a1)+A1", "D4(a1)", "d4++"), ("D4(a1)+A1", "A3+2A1", "b2"),
        ("D4(a1)", "A3+A1", "A1"), ("A3+2A1", "A3+A1", "b3"),
        ("A3+2A1", "2A2+2A1", "m'"), ("A3+A1", "A3", "b5"),
        ("A3+A1", "2A2+A1", "m"), ("2A2+2A1", "2A2+A1", "g2"),
        ("2A2+A1", "2A2", "[2g2]+"), ("2A2", "A2+3A1", "A1"),
        ("A3", "A2+2A1", "A1"), ("A2+3A1", "A2+2A1", "b3"),
        ("A2+2A1", "A2+A1", "a5+"), ("A2+A1", "4A1", "c4"),
        ("A2+A1", "A2", "e6+"), ("A2", "3A1", "A1"),
        ("4A1", "3A1", "f4"), ("3A1", "2A1", "b6"),
        ("2A1", "A1", "e7"), ("A1", "0", "e8"),
    ],
}

COMPONENT_GROUPS = {
    "G2": {"G2(a1)": "S3"},
    "F4": {"A~1": "S2", "A2": "S2", "B2": "S2", "C3(a1)": "S2",
           "F4(a3)": "S4", "F4(a2)": "S2", "F4(a1)": "S2"},
    "E6": {"A2": "S2", "D4(a1)": "S3", "E6(a3)": "S2"},
    "E7": {"A2": "S2", "A2+A1": "S2", "D4(a1)": "S3", "A3+A2": "S2",
           "A4": "S2", "D4(a1)+A1": "S2", "A4+A1": "S2", "D6(a2)": "S2",
           "E6(a3)": "S2", "E7(a5)": "S3", "D6(a1)": "S2", "E7(a4)": "S2",
           "E6(a1)": "S2", "E7(a3)": "S2"},
    "E8": {"A2": "S2", "A2+A1": "S2", "D4(a1)": "S3", "2A2": "S2",
           "A3+A2": "S2", "D4(a1)+A1": "S3", "A4": "S2", "D4(a1)+A2": "S2",
           "A4+A1": "S2", "D5(a1)": "S2", "A4+A2": "1", "D4+A2": "S2",
           "E6(a3)": "S2", "D6(a2)": "S2", "E6(a3)+A1": "1",
           "E7(a5)": "S3", "E8(a7)": "S5", "A6": "1", "D6(a1)": "S2",
           "E7(a4)": "S2", "D5+A2": "S2", "E6(a1)": "S2", "E7(a3)": "S2",
           "E6(a1)+A1": "S2", "D7(a2)": "S2", "A7": "S2", "E8(b6)": "S3",
           "D7(a1)": "S2", "E7(a2)": "1", "E8(a6)": "S3", "E8(b5)": "S3",
           "E7(a1)": "1", "E8(a5)": "S2", "E8(b4)": "S2", "E8(a4)": "S2",
           "E8(a3)": "S2", "E8(a2)": "1", "D7": "1"},
}

SPECIAL = {
    # non-special orbits per type (everything else is special)
    "G2": {"A1", "A~1"},
    "F4": {"A2+A~1", "A~2+A1", "B2", "C3(a1)"},
    "E6": {"3A1", "2A2", "2A2+A1", "A5"},
    "E7": {"(3A1)'", "2A2", "A2+3A1", "2A2+A1", "(A3+A1)'", "A3+2A1",
           "A3+A2+A1", "D4+A1", "(A5)'", "A5+A1", "D5(a1)+A1", "D6(a2)",
           "D5+A1", "A6"},
    "E8": {"3A1", "A2+3A1", "2A2+A1", "2A2+2A1", "A3+A1", "A3+2A1",
           "D4+A1", "A3+A2+A1", "2A3", "A4+2A1", "A4+A2+A1", "D4+A2",
           "A4+A3", "A5+A1", "D5(a1)+A2", "E6(a3)+A1", "D6(a2)",
           "E7(a5)", "D5+A1", "A6+A1", "E6+A1", "D7", "A6"},
}


def build_catalog(ct, outdir):
    rng = random.Random(f"nilslice-catalog-{ct}")
    alg = algebra(ct)
    print(f"[{ct}] enumerating diagrams...")
    diagram_dims = enumerate_diagrams(ct, rng)
    print(f"[{ct}] {len(diagram_dims)} diagrams; labeling...")
    labels, construction = bala_carter(ct, diagram_dims, rng)
    bylabel = {lab: diag for diag, lab in labels.items()}
    golden = GOLDEN_EDGES[ct]
    node_set = {u for u, _, _ in golden} | {l for _, l, _ in golden}
    missing = node_set - set(bylabel)
    extra = set(bylabel) - node_set
    assert not missing, (ct, "graph nodes without computed orbit", missing)
    assert not extra, (ct, "computed orbits not in the graphs", extra)
    covers = {}
    branch = {}
    for u, l, lab in golden:
        covers.setdefault(u, []).append(l)
        k = _branch_count(lab)
        if k != 1:
            branch.setdefault(u, {})[l] = k
    comp = COMPONENT_GROUPS[ct]
    nonspecial = SPECIAL[ct]
    records = []
    print(f"[{ct}] representatives...")
    for lab, diag in sorted(bylabel.items(), key=lambda kv: (diagram_dims[kv[1]], kv[0])):
        dim = diagram_dims[diag]
        levi = construction[diag]
        rep = representative(alg, diag, dim, rng, levi)
        records.append({
            "label": lab,
            "diagram": list(diag),
            "dim": dim,
            "component_group": comp.get(lab, "1"),
            "special": lab not in nonspecial,
            "cs_type": None,
            "bc_levi_rank": len(levi[0]),
            "closure_covers": covers.get(lab, []),
            "branches": branch.get(lab, {}),
            "representative": rep,
            "provenance": "diagram/dim computed in-repo (certified); "
                          "label via Bala-Carter Levi embedding; covers and "
                          "branches ingested from the atlas graphs; "
                          "component group after Carter pp.401-407",
        })
    doc = {"schema": "nilslice-orbit-catalog/1", "cartan_type": ct,
           "orbits": records}
    path = os.path.join(outdir, f"orbits_{ct.lower()}.json")
    with open(path, "w") as f:
        json.dump(doc, f, indent=1)
    print(f"[{ct}] wrote {path} ({len(records)} orbits)")
    gdoc = {"schema": "nilslice-golden-atlas/1", "cartan_type": ct,
            "edges": [{"upper": u, "lower": l, "label": lab}
                      for u, l, lab in golden]}
    gpath = os.path.join(outdir, f"golden_{ct.lower()}.json")
    with open(gpath, "w") as f:
        json.dump(gdoc, f, indent=1)
    print(f"[{ct}] wrote {gpath} ({len(golden)} edges)")


def _branch_count(label):
    """Number of irreducible components encoded by a golden edge label."""
    core = label.lstrip("[(")
    num = ""
    for ch in core:
        if ch.isdigit():
            num += ch
        else:
            break
    nxt = core[len(num):len(num) + 1]
    if num and (nxt.isalpha() or nxt == "("):
        return int(num)
    return 1


def main():
    types = sys.argv[1:] or ["G2", "F4", "E6", "E7", "E8"]
    outdir = os.path.join(os.path.dirname(__file__), "..", "src",
                          "nilslice", "data")
    os.makedirs(outdir, exist_ok=True)
    for ct in types:
        build_catalog(ct, outdir)


if __name__ == "__main__":
    main()
