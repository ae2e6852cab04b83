import itertools
from fractions import Fraction

import pytest

from finchar.exactnum import CycNum
from finchar.oracle import (char_at, char_at_regular, dominant_character, weyl_dim, weyl_orbit)
from finchar.rootdata import CapExceeded, RootDatumError, group
from finchar.torus import TorsionElement, invert, is_regular, torsion_elements


def dominant_weights(d, top):
    """Dominant weights with all Dynkin labels <= top (GL: last coordinate 0)."""
    out = []
    for lam in itertools.product(range(-top - 2, top + 3), repeat=d.lattice_rank):
        labels = d.dynkin_labels(lam)
        if all(0 <= x <= top for x in labels):
            if d.label.kind == "GL" and lam[-1] != 0:
                continue
            out.append(lam)
    return out


def test_sl2_strings():
    d = group("SL_2")
    for m in range(6):
        table = dominant_character(d, (m,))
        assert table.dimension == m + 1
        assert sorted(w for orb in table.orbits for (w,) in orb) == list(range(-m, m + 1, 2))
        assert weyl_dim(d, (m,)) == m + 1


def test_sl3_adjoint():
    d = group("SL_3")
    table = dominant_character(d, (1, 1))
    assert table.mults[(0, 0)] == 2
    assert table.dimension == 8 == weyl_dim(d, (1, 1))


def test_gl6_third_exterior_power():
    d = group("GL_6")
    lam = (1, 1, 1, 0, 0, 0)
    assert dominant_character(d, lam).dimension == 20 == weyl_dim(d, lam)
    t = TorsionElement.from_numerators(d, 2, (0, 0, 0, 1, 1, 1))
    assert char_at(t, lam).is_zero()


def test_g2_fundamental_dimensions():
    d = group("G2")
    # alpha_1 is the short simple root
    assert weyl_dim(d, (1, 0)) == 7 == dominant_character(d, (1, 0)).dimension
    assert weyl_dim(d, (0, 1)) == 14 == dominant_character(d, (0, 1)).dimension
    assert weyl_dim(d, (0, 0)) == 1


def test_gl2_odd_difference_vanishes():
    d = group("GL_2")
    t = TorsionElement.from_numerators(d, 2, (0, 1))
    for a in range(-3, 5):
        for b in range(-4, a + 1):
            val = char_at(t, (a, b))
            assert val.is_zero() == ((a - b) % 2 == 1)


def test_identity_gives_dimension():
    for name in ["SL_3", "Sp_4", "G2", "GL_3"]:
        d = group(name)
        e = TorsionElement.identity(d)
        for lam in dominant_weights(d, 2):
            assert char_at(e, lam) == weyl_dim(d, lam)


def test_regular_quarter_turn_in_sl2():
    d = group("SL_2")
    t = TorsionElement(d, (Fraction(1, 4),))
    for n in range(0, 17, 4):
        assert char_at_regular(t, (n,)) == 1 == char_at(t, (n,))


def test_adjoint_a1_order_two():
    d = group("PGL_2")
    t = TorsionElement.from_numerators(d, 2, (1,))
    for n in range(1, 9, 2):
        assert char_at_regular(t, (n,)) == -1 == char_at(t, (n,))
    assert char_at_regular(t, (0,)) == 1


def test_non_regular_rejected():
    d = group("SL_2")
    with pytest.raises(ZeroDivisionError):
        char_at_regular(TorsionElement.identity(d), (1,))


@pytest.mark.parametrize("name", ["SL_2", "PGL_2", "SL_3", "GL_3", "Sp_4", "G2"])
def test_weyl_quotient_agrees_on_regular_elements(name):
    d = group(name)
    lams = dominant_weights(d, 3)
    for r in (1, 2, 3, 4):
        for t in torsion_elements(d, r):
            if not is_regular(t):
                continue
            for lam in lams:
                assert char_at_regular(t, lam) == char_at(t, lam)


@pytest.mark.parametrize("name", ["SL_3", "Sp_4", "G2"])
def test_conjugation_and_integrality(name):
    d = group(name)
    for t in torsion_elements(d, 4):
        for lam in dominant_weights(d, 2):
            val = char_at(t, lam)
            assert val.is_integral()
            assert char_at(invert(t), lam) == val.conjugate()


def test_orbits_and_caps():
    d = group("GL_3")
    assert weyl_orbit(d, (1, 0, 0)) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    with pytest.raises(CapExceeded):
        dominant_character(group("G2"), (3, 3), cap=5)
    with pytest.raises(RootDatumError):
        dominant_character(d, (0, 1, 0))
