"""Modular search for slice witnesses with prescribed coefficients.

A witness x = e + e0 + sum c_i x_i landing in an orbit below the dense one
satisfies algebraic equations in the c_i.  For up to two free coefficients we
scan the grid over a couple of small prime fields, looking at the graded
kernel dimensions of ad(x) (cheap: the H-grading splits everything into
small blocks), reconstruct candidates as small rationals, and confirm them
exactly through the graded identification.  Everything returned has been
verified exactly; the modular part is only a search heuristic.
"""

import itertools
from fractions import Fraction

import numpy as np

SCAN_PRIMES = (10007, 10501)
MAX_DEN = 48
MAX_NUM = 600


class GradedPencil:
    """ad(x(c)) split into the H-grading blocks, reduced mod p."""

    def __init__(self, alg, H, base_coeffs, slot_vectors, p):
        self.p = p
        buckets = {0: list(range(alg.rank))}
        for rid in range(alg.nroots):
            w = alg.weight_of_rid(H, rid)
            buckets.setdefault(w, []).append(alg.rank + rid)
        self.blocks = []
        self.static_kernel = 0
        nslots = len(slot_vectors)
        for j, dom in sorted(buckets.items()):
            cod = buckets.get(j + 2)
            if not cod:
                # everything maps to zero from this bucket
                self.static_kernel += len(dom)
                continue
            pos = {b: i for i, b in enumerate(cod)}
            A = np.zeros((len(cod), len(dom)), dtype=np.int64)
            Bs = [np.zeros((len(cod), len(dom)), dtype=np.int64)
                  for _ in range(nslots)]
            depends = [False] * nslots
            for k, b in enumerate(dom):
                col = alg.apply_ad(base_coeffs, {b: Fraction(1)})
                for i, v in col.items():
                    A[pos[i], k] = _modfrac(v, p)
                for s, vec in enumerate(slot_vectors):
                    col = alg.apply_ad(vec, {b: Fraction(1)})
                    for i, v in col.items():
                        Bs[s][pos[i], k] = _modfrac(v, p)
                        depends[s] = True
            if not any(depends):
                # constant block: its kernel contribution never changes
                self.static_kernel += len(dom) - _gf_rank(A, p)
                continue
            self.blocks.append((len(dom), A,
                                [B if dep else None
                                 for B, dep in zip(Bs, depends)]))

    def kernel_dim(self, cvals):
        p = self.p
        total = self.static_kernel
        for dom_size, A, Bs in self.blocks:
            M = A
            changed = False
            for c, B in zip(cvals, Bs):
                if c and B is not None:
                    M = (M + c * B) % p if changed or M is not A else \
                        (A + c * B) % p
                    changed = True
            total += dom_size - _gf_rank(M if changed else A.copy(), p)
        return total


def _modfrac(v, p):
    v = Fraction(v)
    return (v.numerator * pow(v.denominator, p - 2, p)) % p


def _gf_rank(mat, p):
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
        if piv != r:
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


def _crt(residues):
    """Combined residue and modulus for {p: r} over coprime moduli."""
    M, X = 1, 0
    for p, r in residues.items():
        g = pow(M, -1, p)
        k = ((r - X) * g) % p
        X += M * k
        M *= p
    return X % M, M


def _reconstruct(residues, max_num=None, max_den=None):
    """Small rational consistent with residues {p: r}, or None (CRT lift)."""
    from math import gcd
    max_num = max_num or MAX_NUM
    max_den = max_den or MAX_DEN
    X, M = _crt(residues)
    for den in range(1, max_den + 1):
        a = (X * den) % M
        a = a - M if a > M // 2 else a
        if abs(a) <= max_num and gcd(abs(a), den) == 1:
            return Fraction(a, den)
    return None


def jordan_profile(alg, diagram):
    """rank((ad x)^k) for x in the orbit with the given weighted diagram."""
    d = {}
    d[0] = alg.rank
    for rid in range(alg.nroots):
        w = sum(c * v for c, v in zip(alg.root_vec(rid), diagram))
        d[w] = d.get(w, 0) + 1
    # number of ad-Jordan blocks of size s+1 is d_s - d_{s+2} (s >= 0)
    out = {}
    maxs = max(d)
    k = 1
    while True:
        rank = 0
        for s in range(0, maxs + 1):
            blocks = d.get(s, 0) - d.get(s + 2, 0)
            if blocks > 0:
                rank += blocks * max(0, s + 1 - k)
        out[k] = rank
        if rank == 0:
            break
        k += 1
    return out


def blockwise_rank_chain(alg, H, x_coeffs, depth):
    """Exact ranks of (ad x)^k for k <= depth, for x in the 2-eigenspace of
    the Cartan element H.  Works over any exact field (Fractions/QuadExt)."""
    from .linalg import Echelon
    buckets = {0: list(range(alg.rank))}
    for rid in range(alg.nroots):
        w = alg.weight_of_rid(H, rid)
        buckets.setdefault(w, []).append(alg.rank + rid)
    ranks = {}
    # track images blockwise: start from basis vectors of each bucket
    vectors = {j: [{b: Fraction(1)} for b in dom]
               for j, dom in buckets.items()}
    for k in range(1, depth + 1):
        new_vectors = {}
        total = 0
        for j, vecs in vectors.items():
            imgs = []
            ech = Echelon()
            for v in vecs:
                img = alg.apply_ad(x_coeffs, v)
                if img and ech.add(dict(img)) is not None:
                    imgs.append(img)
            if imgs:
                new_vectors[j + 2] = imgs
                total += len(imgs)
        ranks[k] = total
        vectors = new_vectors
        if total == 0:
            break
    return ranks


def full_line_scan(alg, H, base_coeffs, slot_vectors, target_kernel, p):
    """All (c1[, c2]) in F_p^k with graded kernel dim == target_kernel."""
    pencil = GradedPencil(alg, H, base_coeffs, slot_vectors, p)
    found = []
    if len(slot_vectors) == 1:
        for c in range(p):
            if pencil.kernel_dim((c,)) == target_kernel:
                found.append((c,))
    elif len(slot_vectors) == 2:
        for c1 in range(p):
            for c2 in range(p):
                if pencil.kernel_dim((c1, c2)) == target_kernel:
                    found.append((c1, c2))
    return found


def _squarefree_split(q):
    """q = s^2 * d with d squarefree (q a positive rational); returns (s, d)
    as (Fraction, int)."""
    from fractions import Fraction as F
    num, den = q.numerator, q.denominator
    sn, dn = _sf_int(num)
    sd, dd = _sf_int(den)
    # q = (sn^2 dn)/(sd^2 dd) = (sn/(sd*dd))^2 * dn*dd
    return F(sn, sd * dd), dn * dd


def _sf_int(n):
    s, d = 1, 1
    f = 2
    while f * f <= n:
        e = 0
        while n % f == 0:
            n //= f
            e += 1
        s *= f ** (e // 2)
        if e % 2:
            d *= f
        f += 1
    d *= n
    return s, d


def quadratic_candidates(alg, H, base_coeffs, slot_vectors, target_kernel,
                         primes=(101, 103)):
    """Witness candidates over Q or a quadratic extension.

    Scans full residue grids mod two primes.  Single solutions matched
    across primes reconstruct rational tuples ("rational", coords).  Galois
    pairs of solutions reconstruct via their symmetric functions:
    ("pair", (sigma, pi) per coordinate) meaning c = (sigma +- sqrt(D))/2
    with D = sigma^2 - 4 pi, sign correlations left to the verifier.
    """
    sols = {}
    for p in primes:
        sols[p] = full_line_scan(alg, H, base_coeffs, slot_vectors,
                                 target_kernel, p)
    p1, p2 = primes
    nslots = len(slot_vectors)
    out = []
    # rational: match single solutions across the primes
    for s1 in sols[p1]:
        for s2 in sols[p2]:
            coords = []
            for k in range(nslots):
                r = _reconstruct({p1: s1[k], p2: s2[k]})
                if r is None:
                    break
                coords.append(r)
            else:
                key = ("rational", tuple(coords))
                if key not in out:
                    out.append(key)
    # quadratic: conjugate pairs within each prime, matched across primes
    import itertools
    pairs1 = list(itertools.combinations(sols[p1], 2))
    pairs2 = list(itertools.combinations(sols[p2], 2))
    for a1, b1 in pairs1:
        for a2, b2 in pairs2:
            sympairs = []
            for k in range(nslots):
                sig = _reconstruct({p1: (a1[k] + b1[k]) % p1,
                                    p2: (a2[k] + b2[k]) % p2})
                pi = _reconstruct({p1: (a1[k] * b1[k]) % p1,
                                   p2: (a2[k] * b2[k]) % p2},
                                  max_num=4000, max_den=576)
                if sig is None or pi is None:
                    break
                sympairs.append((sig, pi))
            else:
                key = ("pair", tuple(sympairs))
                if key not in out:
                    out.append(key)
    return out


def modular_witness_search(alg, H, base_coeffs, slot_vectors, target_kernel,
                           scan_range=None):
    """Candidate coefficient tuples (as Fractions) for the slots.

    target_kernel: dim of the centralizer of the target orbit.  Scans each
    prime field for points where the graded kernel dimension of ad(x(c))
    equals target_kernel, then reconstructs tuples consistent across primes.
    Only candidates with every slot nonzero are returned (zero patterns are
    the caller's business).
    """
    nslots = len(slot_vectors)
    if nslots == 0 or nslots > 2:
        return []
    sols_per_prime = {}
    for p in SCAN_PRIMES:
        pencil = GradedPencil(alg, H, base_coeffs, slot_vectors, p)
        found = []
        rng = scan_range or range(1, 1 + 2 * MAX_DEN * 3)
        # scan c = a/b mod p over small rationals directly: enumerate the
        # values of a/b mod p for |a| <= bound, 1 <= b <= MAX_DEN is too
        # big; instead scan the full residue line for 1 slot and a reduced
        # rational grid for 2 slots.
        if nslots == 1:
            for c in range(1, p if p < 1200 else 1200):
                if pencil.kernel_dim((c,)) == target_kernel:
                    found.append((c,))
            # also scan small rationals explicitly (covers |a/b| beyond 1200)
            for num in range(-24, 25):
                for den in range(1, 13):
                    if num == 0:
                        continue
                    c = (num * pow(den, p - 2, p)) % p
                    if pencil.kernel_dim((c,)) == target_kernel:
                        found.append((c,))
        else:
            vals = set()
            for num in range(-16, 17):
                for den in (1, 2, 3, 4, 6, 8):
                    if num:
                        vals.add((num * pow(den, p - 2, p)) % p)
            vals = sorted(vals)
            for c1 in vals:
                for c2 in vals:
                    if pencil.kernel_dim((c1, c2)) == target_kernel:
                        found.append((c1, c2))
        sols_per_prime[p] = found
    # reconstruct: match solutions across primes coordinate-wise
    first = SCAN_PRIMES[0]
    out = []
    for sol in sols_per_prime.get(first, []):
        cands = []
        for k in range(nslots):
            residues = {first: sol[k]}
            # pair with any consistent solution mod the other primes
            recon = None
            for p in SCAN_PRIMES[1:]:
                for other in sols_per_prime.get(p, []):
                    r = _reconstruct({first: sol[k], p: other[k]})
                    if r is not None:
                        recon = r
                        break
                if recon is None:
                    break
            if recon is None:
                recon = _reconstruct({first: sol[k]})
            if recon is None:
                break
            cands.append(recon)
        if len(cands) == nslots:
            out.append(tuple(cands))
    # dedupe
    uniq = []
    for c in out:
        if c not in uniq:
            uniq.append(c)
    return uniq
