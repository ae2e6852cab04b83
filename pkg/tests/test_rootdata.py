from collections import Counter

import pytest

from finchar.rootdata import (CapExceeded, ParabolicSpec, RootDatumError, all_parabolics,
                              build_root_datum, enumerate_weyl, explicit_root_datum, group,
                              inversion_set, minimal_coset_reps, pair, parabolic_for_lambda,
                              validate_cartan)

# (group, number of roots, |W|, degrees of basic invariants)
CASES = [
    ("SL_2", 2, 2, (2,)),
    ("PGL_2", 2, 2, (2,)),
    ("GL_3", 6, 6, (2, 3)),
    ("SL_3", 6, 6, (2, 3)),
    ("Sp_4", 8, 8, (2, 4)),
    ("PSp_4", 8, 8, (2, 4)),
    ("G2", 12, 12, (2, 6)),
    ("B3", 18, 48, (2, 4, 6)),
    ("C3_adjoint", 18, 48, (2, 4, 6)),
    ("GL_4", 12, 24, (2, 3, 4)),
]


@pytest.mark.parametrize("name,nroots,order,degrees", CASES)
def test_counts(name, nroots, order, degrees):
    d = group(name)
    assert len(d.roots) == nroots
    assert len(d.weyl_group()) == order


@pytest.mark.parametrize("name,nroots,order,degrees", CASES)
def test_poincare_polynomial(name, nroots, order, degrees):
    d = group(name)
    got = Counter(w.length for w in d.weyl_group())
    # product of q-integers [d_i]_q = 1 + q + ... + q^(d_i - 1)
    poly = [1]
    for deg in degrees:
        new = [0] * (len(poly) + deg - 1)
        for i, c in enumerate(poly):
            for j in range(deg):
                new[i + j] += c
        poly = new
    assert [got.get(k, 0) for k in range(len(poly))] == poly


@pytest.mark.parametrize("name", [c[0] for c in CASES])
def test_root_invariants(name):
    d = group(name)
    vecs = {a.vector for a in d.roots}
    for a in d.roots:
        assert (-a).vector in vecs
        assert pair(a.vector, a.coroot) == 2
        assert a.positive == (a.height > 0)
        for i in range(d.rank):
            assert d.reflect(a.vector, d.root(d.simple_roots[i])) in vecs
        coords = a.simple_coords
        assert all(c >= 0 for c in coords) or all(c <= 0 for c in coords)
    for i in range(d.rank):
        assert pair(d.rho, d.simple_coroots[i]) == 1


def test_exceptional_counts():
    assert len(group("F4").roots) == 48
    assert len(group("E6").roots) == 72
    assert len(group("E6").weyl_group()) == 51840


def test_lengths_and_inversions():
    d = group("GL_3")
    assert sorted(w.length for w in d.weyl_group()) == [0, 1, 1, 2, 2, 3]
    for w in d.weyl_group():
        inv = inversion_set(w, d)
        assert len(inv) == w.length
        assert all(a.positive for a in inv)
    assert len(inversion_set(d.longest_element(), d)) == 3
    assert inversion_set(d.identity, d) == []
    a1 = group("SL_2")
    s = [w for w in a1.weyl_group() if w.length == 1][0]
    assert [a.vector for a in inversion_set(s, a1)] == [a1.simple_roots[0]]


def test_minimal_coset_reps():
    assert len(minimal_coset_reps(group("GL_3"), ParabolicSpec({1}))) == 3
    assert len(minimal_coset_reps(group("GL_4"), ParabolicSpec({0, 2}))) == 6
    d = group("Sp_4")
    assert len(minimal_coset_reps(d, ParabolicSpec.borel())) == 8


@pytest.mark.parametrize("name", ["GL_3", "Sp_4", "G2", "SL_4", "B3"])
def test_length_additivity(name):
    d = group(name)
    for P in all_parabolics(d):
        WP = P.weyl_subgroup(d)
        reps = minimal_coset_reps(d, P)
        assert len(reps) * len(WP) == len(d.weyl_group())
        for v in reps:
            for w in WP:
                assert d.multiply(v, w).length == v.length + w.length


def test_parabolic_for_lambda():
    d = group("GL_3")
    assert parabolic_for_lambda(d, (2, 1, 0)) == ParabolicSpec.borel()
    assert parabolic_for_lambda(d, (1, 0, 0)).levi_simples == {1}
    assert parabolic_for_lambda(d, (0, 0, 0)).levi_simples == {0, 1}
    with pytest.raises(RootDatumError):
        parabolic_for_lambda(d, (0, 1, 0))


def test_errors():
    with pytest.raises(RootDatumError):
        validate_cartan([[2, -2], [-2, 2]])  # affine, not finite type
    with pytest.raises(RootDatumError):
        build_root_datum("B", 3, "GL")
    with pytest.raises(RootDatumError):
        explicit_root_datum([(2,)], [(2,)])
    with pytest.raises(CapExceeded):
        enumerate_weyl(build_root_datum("A", 4), cap=10)


def test_explicit_datum_matches_named():
    d = explicit_root_datum([(2, -1), (-1, 2)], [(1, 0), (0, 1)])
    assert len(d.roots) == 6 and len(d.weyl_group()) == 6
