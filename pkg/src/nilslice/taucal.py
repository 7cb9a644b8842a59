"""Calibration of the order-3 quotient parametrization inside E6.

The parametrization lives in e + l1 + l2 + V + W with l1 + l2 = c(s) a sum
of two sl3's and V, W the two 9-dimensional blocks of g^f(-2).  The matrix
units of V and W are built from the transcribed highest weight vectors by
bracketing with the sl3 generators; the only freedom is which simple root
plays E_21 in each factor (and the transcribed signs), which is fixed by a
deterministic search validated through orbit identification.
"""

import itertools
from fractions import Fraction
from functools import lru_cache

from .liealg import algebra, LieElement, root_element
from .linalg import solve, kernel
from .orbits import load_catalog, identify_orbit
from .poly import Poly
from .polycheck import tau_parametrization


def _el(alg, terms):
    out = {}
    for vec, c in terms:
        rid = alg.rid_of_vec(tuple(vec))
        out[alg.basis_index_of_root(rid)] = Fraction(c)
    return LieElement(alg, out)


@lru_cache(maxsize=None)
def tau_frame():
    """Frame dict: e, f, h, e0, H, l1/l2 generators, V/W matrix units."""
    alg = algebra("E6")
    cat = load_catalog("E6")
    rs = alg.rs
    beta2 = (1, 1, 2, 3, 2, 1)
    e = _el(alg, [((0, 1, 0, 0, 0, 0), 1), (beta2, 1)])
    f = _el(alg, [(tuple(-c for c in (0, 1, 0, 0, 0, 0)), 2),
                  (tuple(-c for c in beta2), 2)])
    h = e.bracket(f)
    assert h.bracket(e) == 2 * e and h.bracket(f) == (-2) * f
    assert identify_orbit(alg, cat, e) == "A2"
    # l1 = <a1, a3>, l2 = <a5, a6>
    S = rs.simple_roots
    E = {i: root_element(alg, S[i]) for i in (0, 2, 4, 5)}
    F = {i: root_element(alg, S[i], negative=True) for i in (0, 2, 4, 5)}
    e1 = root_element(alg, tuple(a + b for a, b in zip(S[0], S[2])))
    e2 = root_element(alg, tuple(a + b for a, b in zip(S[4], S[5])))
    # highest weight vectors of V and W (transcribed)
    v1 = _el(alg, [(tuple(-c for c in (0, 1, 1, 2, 1, 0)), 3)])
    w1 = _el(alg, [(tuple(-c for c in (0, 1, 0, 1, 0, 0)), 3)])

    def try_frame(p1, p2, sv, sw):
        # p1 = (x, y): phi1(E_12) = E[x], phi1(E_23) = E[y]; same for p2.
        a, b = p1
        c, d = p2
        V = {(1, 3): sv * v1}
        W = {(1, 3): sw * w1}

        def build(block, row_ops, col_ops):
            # module laws: unit_{i+1,j} = [row_op_i, unit_{ij}] (left
            # multiplication); unit_{i,j-1} = -[col_op_j, unit_{ij}]
            # (dual action on columns)
            for j in (3, 2, 1):
                if j < 3:
                    block[(1, j)] = (-1) * col_ops[j + 1].bracket(
                        block[(1, j + 1)])
                for i in (2, 3):
                    block[(i, j)] = row_ops[i - 1].bracket(block[(i - 1, j)])
            return block

        # V: rows under l1 (E_21 = F[a], E_32 = F[b]); columns under l2
        # (E_32 = F[d], E_21 = F[c])
        build(V, {1: F[a], 2: F[b]}, {3: F[d], 2: F[c]})
        # W = V*: rows under l2, columns under l1
        build(W, {1: F[c], 2: F[d]}, {3: F[b], 2: F[a]})
        return V, W

    # x0 = regular nilpotent in c(s); x = e + x0 + v1 + w1 must be 2A2+A1
    x0 = E[0] + E[2] + E[4] + E[5]
    assert not x0.bracket(e).coeffs
    target_checks = []
    for p1, p2, sv, sw in itertools.product(
            ((0, 2), (2, 0)), ((4, 5), (5, 4)), (1, -1), (1, -1)):
        V, W = try_frame(p1, p2, sv, sw)
        # module laws: all nine units nonzero and V(i,j) has the right
        # t-weights; then validate with a rational specialization
        if any(not V[k] or not W[k] for k in V):
            continue
        frame = {"alg": alg, "e": e, "f": f, "h": h, "E": E, "F": F,
                 "e1": e1, "e2": e2, "V": V, "W": W, "x0": x0,
                 "calibration": (p1, p2, sv, sw)}
        if _specialization_ok(frame, cat):
            frame["e0"] = e1 + e2
            frame["H"] = _H_of(frame)
            return frame
    raise RuntimeError("tau frame calibration failed")


def _H_of(frame):
    alg = frame["alg"]
    # H = h + h0 with h0 the Cartan of the regular sl2 through e0 = e1+e2:
    # [h0, e1] = 2 e1 needs the sum of the two sl3 principal coweights; for
    # the graded identification we only need H with x in its 2-eigenspace:
    # e has H-weight 2, l1/l2-nilcone entries weight 2, V/W entries 2.
    # Use h + h0 with h0 = coroot combination: e1, e2 have h0-weight 2,
    # simple vectors weight... the regular h0 of c(s) works:
    rs = alg.rs
    # h0 = sum over positive roots of l1, l2 of their coroots
    h0 = {}
    for pair in (((0,), (2,), (0, 2)), ((4,), (5,), (4, 5))):
        for supp in pair:
            root = [0] * 6
            for i in supp:
                root[i] += 1
            cr = rs.coroot_coords(tuple(root))
            for i, c in enumerate(cr):
                if c:
                    h0[i] = h0.get(i, 0) + c
    H = dict(frame["h"].coeffs)
    for i, c in h0.items():
        H[i] = H.get(i, 0) + c
        if not H[i]:
            del H[i]
    return H


def _specialization_ok(frame, cat):
    from .slicecore import identify_graded, SliceError
    alg = frame["alg"]
    vals = {"s": Fraction(2), "t": Fraction(1), "u": Fraction(1),
            "v": Fraction(3)}
    x = tau_slice_element(frame, vals)
    H = _H_of(frame)
    try:
        return identify_graded(alg, cat, x, H) == "2A2+A1"
    except SliceError:
        return False


def tau_slice_element(frame, vals):
    """The parametrized slice element at rational (s,t,u,v)."""
    alg = frame["alg"]
    V, Xst, Xuv, Vblk, Wblk = tau_parametrization()
    sub = {k: Fraction(v) for k, v in vals.items()}

    def ev(p):
        return p.evaluate(sub)

    x = frame["e"]
    # l1 block: X_st in the basis E_ij of l1; l2 block: X_uv
    x = x + _matrix_into_sl3(frame, 1, [[ev(c) for c in row] for row in Xst])
    x = x + _matrix_into_sl3(frame, 2, [[ev(c) for c in row] for row in Xuv])
    for (i, j), unit in frame["V"].items():
        c = ev(Vblk[i - 1][j - 1])
        if c:
            x = x + c * unit
    for (i, j), unit in frame["W"].items():
        c = ev(Wblk[i - 1][j - 1])
        if c:
            x = x + c * unit
    return x


def _matrix_into_sl3(frame, which, m):
    """Trace-zero 3x3 matrix into the chosen sl3 summand of c(s)."""
    alg = frame["alg"]
    (p1, p2, sv, sw) = frame["calibration"]
    gens = p1 if which == 1 else p2
    a, b = gens
    E, F = frame["E"], frame["F"]
    e12, e23 = E[a], E[b]
    f21, f32 = F[a], F[b]
    e13 = e12.bracket(e23)
    f31 = f32.bracket(f21)
    h12 = e12.bracket(f21)
    h23 = e23.bracket(f32)
    out = LieElement(alg, {})
    out = out + m[0][1] * e12 + m[1][2] * e23 + m[0][2] * e13
    out = out + m[1][0] * f21 + m[2][1] * f32 + m[2][0] * f31
    # diagonal: diag(d1,d2,d3), trace 0: d1*h12' combination:
    # [h12, e12] = 2 e12: h12 ~ diag(1,-1,0); h23 ~ diag(0,1,-1)
    out = out + m[0][0] * h12 + (m[0][0] + m[1][1]) * h23
    return out
