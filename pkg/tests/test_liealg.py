import itertools
import random
from fractions import Fraction

import pytest

from nilslice.liealg import (
    algebra, LieElement, SL2Triple, root_element, cartan_lie_element,
    jm_triple, ad_h_multiplicities,
)
from nilslice.linalg import kernel, rank


DIMS = {"A1": 3, "G2": 14, "F4": 52, "E6": 78, "E7": 133, "E8": 248}


@pytest.mark.parametrize("ct,dim", sorted(DIMS.items()))
def test_dimension(ct, dim):
    assert algebra(ct).dim == dim


def _basis_elements(alg):
    return [LieElement(alg, {i: Fraction(1)}) for i in range(alg.dim)]


def _jacobi_ok(alg, i, j, k):
    bb = alg.bracket_basis
    acc = {}

    def add_term(first, second, third):
        for m, c in bb(first, second).items():
            for n, d in bb(m, third).items():
                w = acc.get(n, 0) + c * d
                if w:
                    acc[n] = w
                else:
                    acc.pop(n, None)

    add_term(i, j, k)
    add_term(j, k, i)
    add_term(k, i, j)
    return not acc


@pytest.mark.parametrize("ct", ["A2", "B2", "G2"])
def test_jacobi_exhaustive_small(ct):
    alg = algebra(ct)
    for i, j, k in itertools.combinations(range(alg.dim), 3):
        assert _jacobi_ok(alg, i, j, k), (ct, i, j, k)


def test_jacobi_sampled_f4_e6():
    rng = random.Random(11)
    for ct in ["F4", "E6"]:
        alg = algebra(ct)
        for _ in range(4000):
            i, j, k = (rng.randrange(alg.dim) for _ in range(3))
            assert _jacobi_ok(alg, i, j, k), (ct, i, j, k)


def test_structure_constant_magnitudes():
    for ct in ["G2", "F4", "E7"]:
        alg = algebra(ct)
        for (i, j), v in alg._Npp.items():
            assert abs(v) in (1, 2, 3)
        if ct != "G2":
            assert all(abs(v) <= 2 for v in alg._Npp.values())


def test_antisymmetry_and_negation_convention():
    alg = algebra("F4")
    for (a, b), v in list(alg._N.items()):
        assert alg.nconst(b, a) == -v
        assert alg.nconst(alg.neg(a), alg.neg(b)) == -v


def test_e_f_bracket_is_coroot():
    alg = algebra("G2")
    for rid, r in enumerate(alg.rs.positive_roots):
        e = root_element(alg, r)
        f = root_element(alg, r, negative=True)
        h = e.bracket(f)
        # h acts on e_r with eigenvalue 2
        he = h.bracket(e)
        assert he == 2 * e


def test_bracket_rejects_mixed_algebras():
    a, b = algebra("A2"), algebra("B2")
    x = LieElement(a, {0: Fraction(1)})
    y = LieElement(b, {0: Fraction(1)})
    with pytest.raises(ValueError):
        x.bracket(y)


def test_self_bracket_zero():
    alg = algebra("F4")
    rng = random.Random(3)
    for _ in range(10):
        x = LieElement(alg, {rng.randrange(alg.dim): Fraction(rng.randint(-4, 4))
                             for _ in range(5)})
        assert not x.bracket(x)


def test_ad_cartan_diagonal_and_traceless():
    alg = algebra("G2")
    h = cartan_lie_element(alg, (1, 1))
    rows = alg.ad_rows(h)
    for i, row in enumerate(rows):
        for j in row:
            assert i == j
    # trace(ad x) = 0 for a random x
    rng = random.Random(5)
    x = LieElement(alg, {rng.randrange(alg.dim): Fraction(1) for _ in range(6)})
    rows = alg.ad_rows(x)
    assert sum(row.get(i, 0) for i, row in enumerate(rows)) == 0


def test_minimal_orbit_ad_powers_g2():
    # brute force over orbit representatives in G2: ad(e)^3 = 0 exactly for
    # the minimal orbit (and 0), and then ad(e)^2 g is the line through e
    alg = algebra("G2")
    theta = alg.rs.positive_roots[-1]  # highest root: minimal orbit rep
    e_min = root_element(alg, theta)

    def ad3_zero(x):
        for j in range(alg.dim):
            v = alg.apply_ad(x.coeffs, {j: Fraction(1)})
            v = alg.apply_ad(x.coeffs, v)
            if alg.apply_ad(x.coeffs, v):
                return False
        return True

    assert ad3_zero(e_min)
    # ad^2 image is the line through e itself
    img = []
    for j in range(alg.dim):
        v = alg.apply_ad(e_min.coeffs, {j: Fraction(1)})
        v = alg.apply_ad(e_min.coeffs, v)
        if v:
            img.append(v)
    eidx = alg.basis_index_of_root(alg.rid_of_vec(theta))
    assert all(set(v) == {eidx} for v in img) and img
    # non-minimal representatives fail
    e_reg = root_element(alg, alg.rs.simple_roots[0]) + \
        root_element(alg, alg.rs.simple_roots[1])
    assert not ad3_zero(e_reg)
    e_short = root_element(alg, alg.rs.simple_roots[0])  # A~1 orbit
    assert not ad3_zero(e_short)


def test_is_nilpotent():
    alg = algebra("G2")
    for r in alg.rs.positive_roots:
        assert alg.is_nilpotent(root_element(alg, r))
    assert not alg.is_nilpotent(cartan_lie_element(alg, (1, 0)))
    assert not alg.is_nilpotent(cartan_lie_element(alg, (2, 2)))


def test_kernel_of_ad_f_regular_g2():
    # for regular e in G2, dim ker(ad f) = rank + ... the centralizer of a
    # regular nilpotent has dimension equal to the rank
    alg = algebra("G2")
    e = root_element(alg, alg.rs.simple_roots[0]) + \
        root_element(alg, alg.rs.simple_roots[1])
    t = jm_triple(alg, e)
    rows = alg.ad_rows(t.f)
    ker = kernel(rows, alg.dim)
    assert len(ker) == 2


def test_jm_triple_single_root():
    alg = algebra("F4")
    r = alg.rs.positive_roots[3]
    e = root_element(alg, r)
    t = jm_triple(alg, e)
    assert t.e == e
    # h is the coroot of r
    hr = LieElement(alg, {k: Fraction(c)
                          for k, c in enumerate(alg.rs.coroot_coords(r)) if c})
    assert t.h == hr


def test_sl2_triple_validation():
    alg = algebra("A2")
    e = root_element(alg, alg.rs.positive_roots[0])
    f = root_element(alg, alg.rs.positive_roots[0], negative=True)
    h = e.bracket(f)
    SL2Triple(e, h, f)
    with pytest.raises(ValueError):
        SL2Triple(e, h, 2 * f)


def test_ad_h_multiplicities_regular_g2():
    alg = algebra("G2")
    e = root_element(alg, alg.rs.simple_roots[0]) + \
        root_element(alg, alg.rs.simple_roots[1])
    t = jm_triple(alg, e)
    mults = ad_h_multiplicities(alg, t.h)
    # regular orbit: eigenvalue 2k has multiplicity = #roots of height k
    assert mults[0] == 2
    assert sum(mults.values()) == 14
    assert mults[2] == 2 and mults[4] == 1 and mults[10] == 1
    assert all(mults[-k] == mults[k] for k in (2, 4, 6, 8, 10))


def test_sl2_theory_dims():
    # dim g = dim ker(ad e) + dim im(ad e), ker(ad f) complementary to im(ad e)
    alg = algebra("F4")
    theta = alg.rs.positive_roots[-1]
    e = root_element(alg, theta)
    t = jm_triple(alg, e)
    rows_e = alg.ad_rows(t.e)
    ker_e = kernel(rows_e, alg.dim)
    rk_e = alg.dim - len(ker_e)
    assert len(ker_e) + rk_e == alg.dim
    rows_f = alg.ad_rows(t.f)
    ker_f = kernel(rows_f, alg.dim)
    assert len(ker_f) == len(ker_e)
    combined = [{i: Fraction(v) for i, v in vec.items()} for vec in ker_f]
    im_e = []
    for j in range(alg.dim):
        col = alg.apply_ad(t.e.coeffs, {j: Fraction(1)})
        if col:
            im_e.append(col)
    assert rank(combined + im_e) == alg.dim


def test_frenkel_kac_equivalence_simply_laced():
    # independent construction for ADE: bimultiplicative cocycle signs;
    # check my table differs from it only by a sign rescaling of the basis
    from nilslice.rootsys import build_root_system
    for ct in ["A3", "D4"]:
        rs = build_root_system(ct)
        alg = algebra(ct)
        n = rs.rank
        # eps(alpha_i, alpha_j): -1 if i == j or (i < j and joined), else +1
        def eps_simple(i, j):
            if i == j:
                return -1
            if i < j and rs.cartan_matrix[i][j] != 0:
                return -1
            return 1

        def eps(x, y):
            out = 1
            for i in range(n):
                for j in range(n):
                    if x[i] and y[j]:
                        out *= eps_simple(i, j) ** (abs(x[i] * y[j]) % 2)
            return out

        pos = rs.positive_roots
        # solve for sigma: sigma(a)sigma(b) eps(a,b) = sigma(a+b) N(a,b)
        sigma = {}
        for s in rs.simple_roots:
            sigma[s] = 1
        for g in pos:
            if g in sigma:
                continue
            for a in pos:
                b = tuple(x - y for x, y in zip(g, a))
                if b in sigma and a in sigma:
                    i, j = rs.root_index[a], rs.root_index[b]
                    nv = alg.nconst_pp(i, j) or -alg.nconst_pp(j, i)
                    assert abs(nv) == 1
                    sigma[g] = sigma[a] * sigma[b] * eps(a, b) * nv
                    break
            assert g in sigma
        # now verify consistency on every positive special pair
        for (i, j), v in alg._Npp.items():
            a, b = pos[i], pos[j]
            g = tuple(x + y for x, y in zip(a, b))
            assert sigma[a] * sigma[b] * eps(a, b) == sigma[g] * v, (ct, a, b)
