import math
import random

import pytest

from nilslice.rootsys import (
    build_root_system, detect_cartan_type, dominantize, apply_word,
    reflect_diagram, weyl_orbit_diagrams, levi_roots, NotARootSystem,
)


COUNTS = {"G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120,
          "A1": 1, "A2": 3, "B2": 4, "D4": 12}


@pytest.mark.parametrize("ct,npos", sorted(COUNTS.items()))
def test_positive_root_counts(ct, npos):
    rs = build_root_system(ct)
    assert len(rs.positive_roots) == npos


def test_weyl_order_from_degrees():
    rs = build_root_system("F4")
    order = math.prod(rs.fundamental_degrees)
    assert order == 1152
    assert math.prod(build_root_system("E8").fundamental_degrees) == 696729600


def test_cartan_matrix_shape():
    for ct in ["A1", "G2", "F4", "E6", "E7", "E8"]:
        rs = build_root_system(ct)
        a = rs.cartan_matrix
        for i in range(rs.rank):
            assert a[i][i] == 2
            for j in range(rs.rank):
                if i != j:
                    assert a[i][j] <= 0
    assert build_root_system("A1").cartan_matrix == [[2]]


def test_unsupported_type_rejected():
    with pytest.raises(ValueError):
        build_root_system("H4")
    with pytest.raises(ValueError):
        build_root_system("E9")


def test_simple_reflection_permutes_other_positives():
    # reflection through a simple root permutes the positive roots other
    # than that root, for every supported exceptional type
    for ct in ["G2", "F4", "E6"]:
        rs = build_root_system(ct)
        n = len(rs.positive_roots)
        for i in range(rs.rank):
            perm = rs.simple_reflection_permutation(i)
            for k, r in enumerate(rs.positive_roots):
                if r == rs.simple_roots[i]:
                    assert perm[k] == k + n  # goes negative
                else:
                    assert perm[k] < n


def test_dominantize_fixed_point_and_word():
    rs = build_root_system("F4")
    v = (1, 0, 2, 3)
    w, word = dominantize(rs, v)
    assert w == v and word == []
    v = (-1, 2, 0, -3)
    w, word = dominantize(rs, v)
    assert all(c >= 0 for c in w)
    assert apply_word(rs, w, word[::-1]) == v


def test_dominantize_g2_paper_case():
    # h with diagram (-1, 1) is the minimal-orbit element of G2: dominant
    # form (0, 1)
    rs = build_root_system("G2")
    w, _ = dominantize(rs, (-1, 1))
    assert w == (0, 1)


def test_dominantize_negative_of_regular_dominant():
    # brute-force oracle over the Weyl orbit for small rank: the dominant
    # representative of -v is the unique dominant diagram in the orbit of -v
    # (equal to v itself whenever -1 lies in the Weyl group, e.g. B2, G2)
    for ct in ["A2", "B2", "G2", "A3"]:
        rs = build_root_system(ct)
        v = tuple(range(1, rs.rank + 1))
        neg = tuple(-c for c in v)
        orbit = weyl_orbit_diagrams(rs, neg)
        dominants = [u for u in orbit if all(c >= 0 for c in u)]
        assert len(dominants) == 1
        w, word = dominantize(rs, neg)
        assert w == dominants[0]
        assert apply_word(rs, w, word[::-1]) == neg
        if ct in ("B2", "G2"):
            assert w == v


def test_dominantize_random_roundtrip():
    rng = random.Random(7)
    rs = build_root_system("E6")
    for _ in range(25):
        v = tuple(rng.randint(-4, 4) for _ in range(6))
        w, word = dominantize(rs, v)
        assert all(c >= 0 for c in w)
        assert apply_word(rs, w, word[::-1]) == v


def _roots_with_negatives(rs):
    return rs.positive_roots + [tuple(-c for c in r) for r in rs.positive_roots]


@pytest.mark.parametrize("ct", ["A1", "A2", "B2", "D4", "G2", "F4", "E6"])
def test_detect_identity(ct):
    rs = build_root_system(ct)
    names, torus = detect_cartan_type(_roots_with_negatives(rs), rs.inner,
                                      ambient_rank=rs.rank)
    assert names == [rs.cartan_type]
    assert torus == 0


def test_detect_empty_is_torus():
    names, torus = detect_cartan_type([], lambda x, y: 0, ambient_rank=3)
    assert names == [] and torus == 3


def test_detect_sub_system_inside_f4():
    # the long roots of F4 form a D4
    rs = build_root_system("F4")
    longs = [r for r in _roots_with_negatives(rs) if rs.inner(r, r) == 4]
    names, torus = detect_cartan_type(longs, rs.inner, ambient_rank=4)
    assert names == ["D4"] and torus == 0
    shorts = [r for r in _roots_with_negatives(rs) if rs.inner(r, r) == 2]
    names, _ = detect_cartan_type(shorts, rs.inner)
    assert names == ["D4"]  # short roots of F4, rescaled, also form D4


def test_detect_rejects_non_root_set():
    rs = build_root_system("A2")
    vecs = [rs.positive_roots[0], tuple(-c for c in rs.positive_roots[0]),
            (5, 7), (-5, -7)]
    with pytest.raises(NotARootSystem):
        detect_cartan_type(vecs, rs.inner)


def test_levi_roots():
    rs = build_root_system("F4")
    base = [rs.simple_roots[0], rs.simple_roots[1]]  # long A2
    sub = levi_roots(rs, base)
    assert len(sub) == 6
    names, _ = detect_cartan_type(sub, rs.inner)
    assert names == ["A2"]
