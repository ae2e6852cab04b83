from fractions import Fraction

import pytest

from finchar.exactnum import CycNum, NPoly
from finchar.fixedlocus import fixed_components
from finchar.jobs import fit_polynomial
from finchar.lefschetz import (LocalizationError, character_via_lefschetz, check_pole_cancellation,
                               component_polynomial, default_h, degree_integral, degree_report,
                               is_generic, leading_coefficient, localization_context,
                               localized_series, perturbed_h, resolve_h, total_polynomial)
from finchar.oracle import char_at, weyl_dim
from finchar.rootdata import ParabolicSpec, RootDatumError, group, minimal_coset_reps, pair
from finchar.torus import TorsionElement, eval_weight, invert, is_regular, torsion_elements


def gl3_sign():
    d = group("GL_3")
    return d, TorsionElement.from_numerators(d, 2, (0, 0, 1))


def test_identity_gives_weyl_dimension_polynomial():
    for name, lam in [("SL_3", (1, 1)), ("Sp_4", (1, 2)), ("G2", (1, 1)), ("GL_3", (2, 1, 0))]:
        d = group(name)
        e = TorsionElement.identity(d)
        comps = fixed_components(d, ParabolicSpec.borel(), e)
        assert len(comps) == 1
        poly = component_polynomial(comps[0], e, lam, 0)
        assert poly.degree == len(d.positive_roots)
        for n in range(4):
            assert poly(n) == weyl_dim(d, tuple(n * x for x in lam))
        lead = leading_coefficient(comps[0], e, lam, 0)
        expected = Fraction(1)
        for a in d.positive_roots:
            expected *= Fraction(pair(lam, a.coroot)) / pair(d.rho, a.coroot)
        assert lead == expected == poly.poly.leading()


def test_regular_element_components_are_constants():
    d = group("SL_3")
    t = TorsionElement.from_numerators(d, 3, (1, 1))
    assert is_regular(t)
    lam = (1, 1)
    for p in range(3):
        for c in fixed_components(d, ParabolicSpec.borel(), t):
            poly = component_polynomial(c, t, lam, p)
            assert c.dim == 0 and poly.degree <= 0
            den = CycNum.rational(1)
            for a in d.positive_roots:
                den = den * (1 - eval_weight(t, c.v.act(a.vector)))
            twist = eval_weight(t, tuple(-p * x for x in c.v.act(lam)))
            assert poly.poly.coefficient(0) == twist / den


def test_character_examples():
    d = group("SL_2")
    quarter = TorsionElement(d, (Fraction(1, 4),))
    assert character_via_lefschetz(quarter, (1,), 0) == 1
    assert character_via_lefschetz(quarter, (1,), 4) == 1
    d6 = group("GL_6")
    t6 = TorsionElement.from_numerators(d6, 2, (0, 0, 0, 1, 1, 1))
    assert character_via_lefschetz(t6, (1, 1, 1, 0, 0, 0), 1).is_zero()
    with pytest.raises(ValueError):
        character_via_lefschetz(quarter, (1,), -1)


def test_gl3_sign_borel_against_oracle_fit():
    d, t = gl3_sign()
    lam = (2, 1, 0)
    comps = fixed_components(d, ParabolicSpec.borel(), t)
    polys = [component_polynomial(c, t, lam, 0) for c in comps]
    assert all(p.degree == 1 for p in polys)
    samples = [(n, char_at(invert(t), (2 * n, n, 0))) for n in (0, 2, 4, 6)]
    fit = fit_polynomial(samples, 2, 0)
    total = NPoly()
    for p in polys:
        total = total + p.poly
    assert fit == total
    for c, p in zip(comps, polys):
        assert leading_coefficient(c, t, lam, 0) == p.poly.coefficient(1)


@pytest.mark.parametrize("name", ["SL_2", "PGL_2", "SL_3", "GL_3", "Sp_4", "G2"])
def test_poles_cancel_and_h_is_irrelevant(name):
    d = group(name)
    lam = {1: (1,), 2: (1, 1), 3: (2, 1, 0)}[d.lattice_rank]
    assert all(x > 0 for x in d.dynkin_labels(lam))
    h1, h2 = default_h(d), perturbed_h(d, seed=3)
    for t in torsion_elements(d, 3) + torsion_elements(d, 2):
        for c in fixed_components(d, ParabolicSpec.borel(), t):
            for p in range(t.order):
                assert check_pole_cancellation(localized_series(c, t, lam, p, h1)) == []
                assert (component_polynomial(c, t, lam, p, h1).poly
                        == component_polynomial(c, t, lam, p, h2).poly)


def test_singular_weight_borel_matches_ample_parabolic():
    d = group("GL_3")
    lam = (1, 0, 0)
    for t in torsion_elements(d, 2) + torsion_elements(d, 3):
        for p in range(t.order):
            a = total_polynomial(t, lam, p)
            b = total_polynomial(t, lam, p, ParabolicSpec.borel())
            assert a.poly == b.poly


def test_parabolic_must_carry_lambda():
    d, t = gl3_sign()
    with pytest.raises(RootDatumError):
        total_polynomial(t, (2, 1, 0), 0, ParabolicSpec({0}))


def test_generic_h_handling():
    d = group("Sp_4")
    assert is_generic(d, default_h(d))
    h = resolve_h(d, (0, 0), seed=1)
    assert is_generic(d, h) and h == perturbed_h(d, 1)
    comp = fixed_components(d, ParabolicSpec.borel(), TorsionElement.identity(d))[0]
    with pytest.raises(LocalizationError):
        localization_context(comp, TorsionElement.identity(d), (Fraction(1), Fraction(1)))


def test_fixed_point_weights_pair_nonzero():
    d, t = gl3_sign()
    h = default_h(d)
    for c in fixed_components(d, ParabolicSpec.borel(), t):
        ctx = localization_context(c, t, h)
        assert len(ctx.fixed_points) == 2  # |W'| / |W'_Q| = 2 / 1
        for tan in ctx.tangent_weights:
            assert all(pair(g.vector, h) != 0 for g in tan)


def test_leading_coefficient_for_points():
    d = group("SL_3")
    t = TorsionElement.from_numerators(d, 3, (1, 1))
    for c in fixed_components(d, ParabolicSpec.borel(), t):
        assert degree_integral(c, t, (1, 1)) == 1
        for p in range(3):
            assert leading_coefficient(c, t, (1, 1), p) == component_polynomial(c, t, (1, 1), p).poly.coefficient(0)


def test_degree_reports():
    d, t = gl3_sign()
    rep = degree_report(t, (2, 1, 0))
    assert rep.passed and rep.max_dim == 1
    even = rep.residues[0]
    assert even.exact_degree_expected and even.degree == 1
    assert even.leading_closed_form.as_rational() > 0
    # regular element: all components are points and every coset contributes
    d3 = group("SL_3")
    reg = TorsionElement.from_numerators(d3, 3, (1, 1))
    rep = degree_report(reg, (1, 1))
    assert rep.max_dim == 0 and len(rep.dims) == len(minimal_coset_reps(d3, ParabolicSpec.borel()))
    # the P^2 example: dims {0, 1}, unique maximiser
    tp = TorsionElement.from_numerators(d, 2, (0, 1, 1))
    rep = degree_report(tp, (1, 0, 0))
    assert sorted(rep.dims) == [0, 1] and rep.unique_maximizer and rep.passed
    assert all(r.degree == 1 for r in rep.residues)


def test_polynomial_in_lambda_smoke():
    # SL_2 at -1: ch(V(m)) = (-1)^m (m + 1), a polynomial on each class of m mod 2
    d = group("SL_2")
    t = TorsionElement(d, (Fraction(1, 2),))
    samples = [(m, character_via_lefschetz(t, (m,), 1)) for m in (1, 3, 5, 7)]
    fit = fit_polynomial(samples, 2, 1)
    assert fit == NPoly([-1, -1])
