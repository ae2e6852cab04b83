"""Characters at torsion elements from the fixed components of G/P.

For each component X_P^t(v) the contribution D_v(n) to ch(t^-1, V(n lam)) is
computed by torus localization: deform t to s = t * exp(eps h) for a generic
rational cocharacter h, sum the contributions of the T-fixed points u v P/P
(u running over W'/W'_Q) and take the eps^0 coefficient.  Tangent directions
give simple poles in eps which must cancel inside each component; normal
directions give unit series because e^beta(t) != 1 there.

With n restricted to a residue class p mod r, e^{-n v lam}(t) = e^{-p v lam}(t),
and n is carried symbolically, so every component yields a polynomial in n.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .exactnum import CycNum, EpsSeries, NPoly, exp_linear, one_minus_unit_exp
from .fixedlocus import FixedComponent, fixed_components
from .rootdata import ParabolicSpec, Root, RootDatum, RootDatumError, WeylElement, pair, parabolic_for_lambda
from .torus import TorsionElement, centralizer, eval_weight


class LocalizationError(ArithmeticError):
    """Raised when the localized sum over a component is inconsistent."""


# ---------------------------------------------------------------------------
# generic cocharacters


def is_generic(d: RootDatum, h: Sequence) -> bool:
    return all(pair(a.vector, h) != 0 for a in d.positive_roots)


def default_h(d: RootDatum) -> tuple[Fraction, ...]:
    """rho^vee; pairs with every root to its (nonzero) height."""
    return d.rho_check


def perturbed_h(d: RootDatum, seed: int = 0, start: int = 1) -> tuple[Fraction, ...]:
    """First generic rho^vee + k * v, k = start, start+1, ..., for a seeded small integer v."""
    rng = random.Random(seed)
    v = [rng.randint(-3, 3) for _ in range(d.lattice_rank)]
    if not any(v):
        v[0] = 1
    k = start
    while True:
        h = tuple(x + k * y for x, y in zip(d.rho_check, v))
        if is_generic(d, h):
            return h
        k += 1


def resolve_h(d: RootDatum, h=None, seed: int = 0) -> tuple[Fraction, ...]:
    if h is None:
        h = default_h(d)
    h = tuple(Fraction(x) for x in h)
    if not is_generic(d, h):
        h = perturbed_h(d, seed)
    return h


# ---------------------------------------------------------------------------
# localization data


@dataclass(frozen=True)
class LocalizationContext:
    h: tuple[Fraction, ...]
    fixed_points: tuple[WeylElement, ...]
    tangent_weights: tuple[tuple[Root, ...], ...] = field(repr=False)
    denominators: tuple[EpsSeries, ...] = field(repr=False)


def _coset_points(comp: FixedComponent, t: TorsionElement) -> list[WeylElement]:
    """Minimal-length representatives u of W'/W'_Q."""
    anchor = [0] * t.datum.lattice_rank
    for b in comp.normal_weights:
        anchor = [x + y for x, y in zip(anchor, b.vector)]
    for g in comp.tangent_weights:
        anchor = [x - y for x, y in zip(anchor, g.vector)]
    reps: dict = {}
    for u in centralizer(t).weyl:
        key = u.act(anchor)
        if key not in reps or (u.length, u.word) < (reps[key].length, reps[key].word):
            reps[key] = u
    pts = sorted(reps.values(), key=lambda u: (u.length, u.word))
    if len(pts) * comp.stabilizer_weyl_order != len(centralizer(t).weyl):
        raise LocalizationError("fixed points of a component do not match |W'|/|W'_Q|")
    return pts


@lru_cache(maxsize=8192)
def localization_context(comp: FixedComponent, t: TorsionElement, h: tuple) -> LocalizationContext:
    d = t.datum
    if not is_generic(d, h):
        raise LocalizationError(f"cocharacter {h} is not generic")
    trunc = comp.dim + 2
    points = _coset_points(comp, t)
    tangents, dens = [], []
    for u in points:
        tan = tuple(d.root(u.act(g.vector)) for g in comp.tangent_weights)
        series = EpsSeries.one(trunc)
        for g in tan:
            # weight beta = -g of the denominator; e^beta(t) = 1 on the component
            series = series * one_minus_unit_exp(1, -pair(g.vector, h), trunc).inverse()
        for b in comp.normal_weights:
            ub = u.act(b.vector)
            unit = eval_weight(t, b.vector)
            series = series * one_minus_unit_exp(unit, pair(ub, h), trunc).unit_inverse()
        tangents.append(tan)
        dens.append(series)
    return LocalizationContext(h, tuple(points), tuple(tangents), tuple(dens))


@lru_cache(maxsize=16384)
def _untwisted_sum(comp: FixedComponent, t: TorsionElement, lam: tuple, h: tuple) -> EpsSeries:
    ctx = localization_context(comp, t, h)
    v_lam = comp.v.act(lam)
    trunc = comp.dim + 2
    total = None
    for u, den in zip(ctx.fixed_points, ctx.denominators):
        rate = -pair(u.act(v_lam), h)
        term = exp_linear(rate, 0, trunc) * den
        total = term if total is None else total + term
    return total


def localized_series(comp: FixedComponent, t: TorsionElement, lam: Sequence[int],
                     p: int, h=None, seed: int = 0) -> EpsSeries:
    """Sum over the component's T-fixed points of the localized contributions.

    The result has NPoly coefficients in n; its negative-power coefficients
    must vanish and its eps^0 coefficient is D_v(n) on the class n = p mod r.
    """
    h = resolve_h(t.datum, h, seed)
    lam = tuple(lam)
    total = _untwisted_sum(comp, t, lam, h)
    twist = eval_weight(t, tuple(-(p % t.order) * x for x in comp.v.act(lam)))
    return total * twist


def check_pole_cancellation(series: EpsSeries) -> list[int]:
    """Exponents k < 0 whose coefficient is nonzero (empty when poles cancel)."""
    return [k for k in range(series.valuation, 0) if not series.coefficient_at(k).is_zero()]


# ---------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class CharPolynomial:
    residue: int
    order: int
    poly: NPoly
    component: WeylElement | None = None

    @property
    def degree(self) -> int:
        return self.poly.degree

    def __call__(self, n: int) -> CycNum:
        if n % self.order != self.residue:
            raise ValueError(f"n = {n} is not in the residue class {self.residue} mod {self.order}")
        return self.poly(n)

    def to_json(self) -> dict:
        return {"residue": self.residue, "order": self.order,
                "component": None if self.component is None else list(self.component.word),
                "degree": self.degree, "coeffs": self.poly.to_json()}


def component_polynomial(comp: FixedComponent, t: TorsionElement, lam: Sequence[int],
                         p: int, h=None, seed: int = 0) -> CharPolynomial:
    """D_v(n, lam) as a polynomial in n on the residue class p mod r."""
    p %= t.order
    series = localized_series(comp, t, lam, p, h, seed)
    bad = check_pole_cancellation(series)
    if bad:
        raise LocalizationError(f"poles at eps^{bad} fail to cancel for v = {comp.v.word}")
    poly = series.coefficient_at(0)
    if poly.degree > comp.dim:
        raise LocalizationError(f"component polynomial has degree {poly.degree} > dim {comp.dim}")
    return CharPolynomial(p, t.order, poly, comp.v)


def _check_extends(d: RootDatum, lam: Sequence[int], P: ParabolicSpec) -> None:
    labels = d.dynkin_labels(lam)
    if any(x < 0 for x in labels):
        raise RootDatumError(f"weight {tuple(lam)} is not dominant")
    bad = [i for i in P.levi_simples if labels[i] != 0]
    if bad:
        raise RootDatumError(f"weight {tuple(lam)} does not extend to the parabolic "
                             f"(nonzero on Levi simples {bad})")


def resolve_parabolic(d: RootDatum, lam: Sequence[int], P: ParabolicSpec | None) -> ParabolicSpec:
    if P is None:
        return parabolic_for_lambda(d, lam)
    _check_extends(d, lam, P)
    return P


def component_polynomials(t: TorsionElement, lam: Sequence[int], p: int,
                          P: ParabolicSpec | None = None, h=None,
                          seed: int = 0) -> list[CharPolynomial]:
    d = t.datum
    P = resolve_parabolic(d, lam, P)
    return [component_polynomial(c, t, lam, p, h, seed) for c in fixed_components(d, P, t)]


def total_polynomial(t: TorsionElement, lam: Sequence[int], p: int,
                     P: ParabolicSpec | None = None, h=None, seed: int = 0) -> CharPolynomial:
    """chi(n) = ch(t^-1, V(n lam)) as a polynomial on n = p mod r."""
    parts = component_polynomials(t, lam, p, P, h, seed)
    poly = NPoly()
    for c in parts:
        poly = poly + c.poly
    return CharPolynomial(p % t.order, t.order, poly, None)


def character_via_lefschetz(t: TorsionElement, lam: Sequence[int], n: int,
                            P: ParabolicSpec | None = None, h=None, seed: int = 0) -> CycNum:
    """ch(t^-1, V(n lam)) as the sum of the fixed-component contributions."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return total_polynomial(t, lam, n % t.order, P, h, seed)(n)


# ---------------------------------------------------------------------------
# leading coefficients and degrees


def degree_integral(comp: FixedComponent, t: TorsionElement, lam: Sequence[int]) -> Fraction:
    """Closed form of the top self-intersection of the restricted line bundle.

    d_v! * prod over alpha in R'^+ & vR_P^+ of <v lam, alpha^vee> / <rho', alpha^vee>.
    """
    rho_p = centralizer(t).rho_prime
    v_lam = comp.v.act(lam)
    val = Fraction(factorial(comp.dim))
    for g in comp.tangent_weights:
        a = -g
        val *= Fraction(pair(v_lam, a.coroot)) / pair(rho_p, a.coroot)
    return val


def normal_factor(comp: FixedComponent, t: TorsionElement) -> CycNum:
    """1 / prod over normal weights beta of (1 - e^beta(t))."""
    den = CycNum.rational(1, t.order)
    for b in comp.normal_weights:
        den = den * (1 - eval_weight(t, b.vector))
    return den.inverse()


def leading_coefficient(comp: FixedComponent, t: TorsionElement, lam: Sequence[int], p: int) -> CycNum:
    """Closed-form coefficient of n^{d_v} in D_v(n) on the residue class p."""
    v_lam = comp.v.act(lam)
    twist = eval_weight(t, tuple(-(p % t.order) * x for x in v_lam))
    return twist * normal_factor(comp, t) * (degree_integral(comp, t, lam) / factorial(comp.dim))


@dataclass
class ResidueDegree:
    residue: int
    degree: int
    leading_closed_form: CycNum
    leading_series: CycNum
    vanishes: bool
    exact_degree_expected: bool
    passed: bool

    def to_json(self) -> dict:
        return {"residue": self.residue, "degree": self.degree,
                "leading_closed_form": self.leading_closed_form.to_json(),
                "leading_series": self.leading_series.to_json(),
                "vanishes": self.vanishes,
                "exact_degree_expected": self.exact_degree_expected,
                "passed": self.passed}


@dataclass
class DegreeReport:
    dims: list[int]
    max_dim: int
    maximizers: list[tuple[int, ...]]
    unique_maximizer: bool
    integrals_positive: bool
    residues: list[ResidueDegree]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.residues)

    def to_json(self) -> dict:
        return {"dims": self.dims, "max_dim": self.max_dim,
                "maximizers": [list(w) for w in self.maximizers],
                "unique_maximizer": self.unique_maximizer,
                "integrals_positive": self.integrals_positive,
                "residues": [r.to_json() for r in self.residues], "passed": self.passed}


def degree_report(t: TorsionElement, lam: Sequence[int], P: ParabolicSpec | None = None,
                  h=None, seed: int = 0, residues: Sequence[int] | None = None) -> DegreeReport:
    """Degree of chi on each residue class against max d_v.

    Exact degree is asserted when the maximizing component is unique, or when
    t has order 2 and the class is even; otherwise the summed leading
    coefficient is only reported.  ``residues`` restricts the classes examined.
    """
    d = t.datum
    P = resolve_parabolic(d, lam, P)
    comps = fixed_components(d, P, t)
    dims = [c.dim for c in comps]
    top = max(dims)
    maxi = [c for c in comps if c.dim == top]
    ample = P == parabolic_for_lambda(d, lam)
    positive = all(degree_integral(c, t, lam) > 0 for c in comps) if ample else False
    rows = []
    for p in (range(t.order) if residues is None else sorted(set(residues))):
        total = total_polynomial(t, lam, p, P, h, seed)
        closed = CycNum.rational(0, t.order)
        for c in maxi:
            closed = closed + leading_coefficient(c, t, lam, p)
        series_lead = total.poly.coefficient(top)
        expected = ample and (len(maxi) == 1 or (t.order == 2 and p == 0))
        ok = total.degree <= top and series_lead == closed
        if expected:
            ok = ok and total.degree == top
            if t.order == 2 and p == 0:
                ok = ok and closed.is_rational() and closed.as_rational() > 0
        rows.append(ResidueDegree(p, total.degree, closed, series_lead, closed.is_zero(),
                                  expected, ok))
    return DegreeReport(dims, top, [c.v.word for c in maxi], len(maxi) == 1, positive, rows)
