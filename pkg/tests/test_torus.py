from fractions import Fraction

import pytest

from finchar.exactnum import CycNum
from finchar.rootdata import group
from finchar.torus import (TorsionElement, TorsionError, centralizer, conjugate_by, eval_weight,
                           invert, is_regular, torsion_elements)


def sl2_quarter():
    d = group("SL_2")
    # alpha^vee is the unit cocharacter here, so x = alpha^vee / 4
    return TorsionElement(d, (Fraction(1, 4),))


def test_eval_weight_examples():
    d = group("GL_3")
    t = TorsionElement.from_numerators(d, 2, (0, 0, 1))
    assert eval_weight(t, (1, 0, -1)) == -1
    assert eval_weight(TorsionElement.identity(d), (3, -1, 2)) == 1
    assert eval_weight(sl2_quarter(), (1,)) == CycNum.root_of_unity(4)


def test_order_normalisation():
    d = group("GL_3")
    t = TorsionElement.from_numerators(d, 4, (2, 0, 6))
    assert t.order == 2 and t.numerators == (1, 0, 1)
    with pytest.raises(TorsionError):
        TorsionElement.from_numerators(d, 2, (1, 0))


def test_centralizer_examples():
    d = group("GL_3")
    c = centralizer(TorsionElement.identity(d))
    assert len(c.roots) == 6 and len(c.weyl) == 6
    c = centralizer(TorsionElement.from_numerators(d, 2, (0, 0, 1)))
    assert {a.vector for a in c.roots} == {(1, -1, 0), (-1, 1, 0)}
    assert len(c.weyl) == 2
    assert not centralizer(sl2_quarter()).roots
    assert is_regular(sl2_quarter())
    assert not is_regular(TorsionElement.from_numerators(d, 2, (0, 0, 1)))
    assert not is_regular(TorsionElement.identity(group("SL_2")))


def test_invert():
    d = group("SL_2")
    assert invert(TorsionElement.identity(d)) == TorsionElement.identity(d)
    t2 = TorsionElement.from_numerators(group("GL_3"), 2, (1, 0, 1))
    assert invert(t2) == t2
    assert invert(sl2_quarter()).x == (Fraction(3, 4),)


@pytest.mark.parametrize("name", ["SL_2", "PGL_2", "GL_3", "SL_3", "Sp_4", "G2"])
def test_centralizer_properties(name):
    d = group(name)
    W = len(d.weyl_group())
    L = d.lattice_rank
    basis = [tuple(int(i == k) for i in range(L)) for k in range(L)]
    for r in (1, 2, 3, 4):
        for t in torsion_elements(d, r):
            cent = centralizer(t)
            assert W % len(cent.weyl) == 0
            vecs = cent.root_vectors
            for a in cent.roots:
                assert (-a).vector in vecs
                for b in cent.roots:
                    assert d.reflect(b.vector, a) in vecs
            for w in cent.weyl:
                assert conjugate_by(t, w) == t
                for mu in basis:
                    assert eval_weight(t, w.act(mu)) == eval_weight(t, mu)


@pytest.mark.parametrize("name", ["SL_3", "GL_3"])
def test_weight_evaluation_multiplicative_and_conjugate(name):
    d = group(name)
    mus = [(1,) * d.lattice_rank, tuple(range(d.lattice_rank)), d.simple_roots[0]]
    for t in torsion_elements(d, 3):
        for a in mus:
            for b in mus:
                s = tuple(x + y for x, y in zip(a, b))
                assert eval_weight(t, s) == eval_weight(t, a) * eval_weight(t, b)
            assert eval_weight(invert(t), a) == eval_weight(t, a).conjugate()
