"""Brute-force characters: Freudenthal multiplicities, Weyl dimension and Weyl quotient.

This is the ground truth the fixed-point engine is checked against; it shares
nothing with it beyond the root datum and the torus evaluation e^mu(t).
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .exactnum import CycNum
from .rootdata import CapExceeded, RootDatum, RootDatumError, pair
from .torus import TorsionElement, eval_weight, is_regular

DEFAULT_MAX_WEIGHTS = int(os.environ.get("FINCHAR_MAX_WEIGHTS", 2 * 10**6))


@dataclass(frozen=True, eq=False)
class WeightTable:
    """Dominant weight multiplicities of V(highest_weight)."""

    datum: RootDatum = field(repr=False)
    highest_weight: tuple[int, ...]
    mults: dict = field(repr=False)  # dominant weight (X coordinates) -> multiplicity

    @cached_property
    def dimension(self) -> int:
        return sum(m * len(orb) for orb, m in zip(self.orbits, self.mults.values()))

    @cached_property
    def orbits(self) -> list[np.ndarray]:
        """One integer array of shape (orbit size, L) per dominant weight."""
        return [weyl_orbit_array(self.datum, mu) for mu in self.mults]

    @cached_property
    def expanded(self) -> tuple[np.ndarray, np.ndarray]:
        """(weights, multiplicities): every weight of the module once, as arrays."""
        L = self.datum.lattice_rank
        if not self.orbits:
            return np.zeros((0, L), dtype=np.int64), np.zeros(0, dtype=np.int64)
        mult = np.concatenate([np.full(len(orb), m, dtype=np.int64)
                               for orb, m in zip(self.orbits, self.mults.values())])
        return np.concatenate(self.orbits).reshape(-1, L), mult


ORBIT_STACK_LIMIT = 50_000


def weyl_orbit_array(d: RootDatum, mu: Sequence[int]) -> np.ndarray:
    """The W-orbit of mu as the sorted distinct rows of an integer array."""
    if len(d.weyl_group()) <= ORBIT_STACK_LIMIT:
        return np.unique(d.weyl_stack @ np.asarray(mu, dtype=np.int64), axis=0)
    return np.asarray(_orbit_bfs(d, tuple(mu)), dtype=np.int64).reshape(-1, d.lattice_rank)


def weyl_orbit(d: RootDatum, mu: Sequence[int]) -> list[tuple[int, ...]]:
    """The W-orbit of mu, sorted."""
    return [tuple(int(x) for x in row) for row in weyl_orbit_array(d, mu)]


def _orbit_bfs(d: RootDatum, mu: tuple) -> list[tuple[int, ...]]:
    seen = {mu}
    frontier = [mu]
    while frontier:
        nxt = []
        for nu in frontier:
            for a, c in zip(d.simple_roots, d.simple_coroots):
                k = pair(nu, c)
                if k:
                    img = tuple(x - k * y for x, y in zip(nu, a))
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
        frontier = nxt
    return sorted(seen)


def _check_dominant(d: RootDatum, lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if len(lam) != d.lattice_rank:
        raise RootDatumError(f"weight {lam} has wrong length for lattice rank {d.lattice_rank}")
    if not d.is_dominant(lam):
        raise RootDatumError(f"weight {lam} is not dominant")
    return lam


def dominant_character(d: RootDatum, lam: Sequence[int],
                       cap: int = DEFAULT_MAX_WEIGHTS) -> WeightTable:
    """Multiplicities of the dominant weights of V(lam) by Freudenthal's recursion."""
    return _dominant_character(d, _check_dominant(d, lam), cap)


@lru_cache(maxsize=256)
def _dominant_character(d: RootDatum, lam: tuple[int, ...], cap: int) -> WeightTable:
    n = d.rank
    cartan = d.cartan
    pos = d.positive_roots
    labels0 = d.dynkin_labels(lam)

    # weights are lam - sum c_i alpha_i; track depth c and Dynkin labels
    def labels(c):
        return tuple(labels0[j] - sum(c[i] * cartan[i][j] for i in range(n)) for j in range(n))

    # dominant weights below lam: chains of dominant weights differing by positive roots
    dominant = {(0,) * n: labels0}
    frontier = [(0,) * n]
    while frontier:
        nxt = []
        for c in frontier:
            for a in pos:
                c2 = tuple(x + y for x, y in zip(c, a.simple_coords))
                if c2 in dominant:
                    continue
                lab = labels(c2)
                if min(lab) >= 0:
                    dominant[c2] = lab
                    nxt.append(c2)
                    if len(dominant) > cap:
                        raise CapExceeded("max_weights", cap,
                                          f"more than {cap} dominant weights below {lam}")
        frontier = nxt

    # invariant form: (mu, nu) = sum over positive roots of <mu, b^vee><nu, b^vee>
    lam_p = [pair(lam, b.coroot) for b in pos]
    simple_p = [[pair(a, b.coroot) for b in pos] for a in d.simple_roots]
    rho_p = [int(pair(d.rho, b.coroot)) for b in pos]
    root_p = [[pair(a.vector, b.coroot) for b in pos] for a in pos]

    def coroot_pairings(c):
        return [lam_p[k] - sum(c[i] * simple_p[i][k] for i in range(n)) for k in range(len(pos))]

    def form(x, y):
        return sum(p * q for p, q in zip(x, y))

    top = [p + q for p, q in zip(lam_p, rho_p)]
    top_norm = form(top, top)

    dom_cache: dict = {}

    def dominant_depth(c):
        if c in dom_cache:
            return dom_cache[c]
        c0 = c
        lab = list(labels(c))
        c = list(c)
        while True:
            i = next((i for i, x in enumerate(lab) if x < 0), None)
            if i is None:
                break
            k = lab[i]
            c[i] += k  # s_i: c_i -> c_i + <mu, alpha_i^vee>
            for j in range(n):
                lab[j] -= k * cartan[i][j]
        dom_cache[c0] = tuple(c)
        return dom_cache[c0]

    root_norms = [form(ap, ap) for ap in root_p]
    steps = [a.simple_coords for a in pos]
    mults: dict = {}
    for c in sorted(dominant, key=lambda c: (sum(c), c)):
        if not any(c):
            mults[c] = 1
            continue
        mu_p = coroot_pairings(c)
        shifted = [p + q for p, q in zip(mu_p, rho_p)]
        lhs = top_norm - form(shifted, shifted)
        acc = 0
        for step, ap, aa in zip(steps, root_p, root_norms):
            base = form(mu_p, ap)
            k = 1
            c2 = c
            while True:
                c2 = tuple([x - y for x, y in zip(c2, step)])
                if min(c2) < 0:
                    break
                m = mults.get(dom_cache[c2] if c2 in dom_cache else dominant_depth(c2), 0)
                if not m:
                    break
                acc += m * (base + k * aa)
                k += 1
        num = 2 * acc
        if lhs <= 0 or num % lhs:
            raise ArithmeticError(f"Freudenthal recursion failed at depth {c}")
        mults[c] = num // lhs

    table = {}
    for c, m in mults.items():
        if m:
            mu = tuple(x - sum(c[i] * d.simple_roots[i][k] for i in range(n))
                       for k, x in enumerate(lam))
            table[mu] = m
    wt = WeightTable(d, lam, table)
    orbit_pairs = sum(len(o) for o in wt.orbits)
    if orbit_pairs > cap:
        raise CapExceeded("max_weights", cap, f"{orbit_pairs} weight-orbit pairs exceed {cap}")
    return wt


def weyl_dim(d: RootDatum, lam: Sequence[int]) -> int:
    lam = _check_dominant(d, lam)
    val = Fraction(1)
    for a in d.positive_roots:
        val *= Fraction(pair(lam, a.coroot) + pair(d.rho, a.coroot)) / pair(d.rho, a.coroot)
    assert val.denominator == 1
    return int(val)


def char_at(t: TorsionElement, lam: Sequence[int], cap: int = DEFAULT_MAX_WEIGHTS) -> CycNum:
    """Trace of t on V(lam): sum of m_mu e^mu(t) over all weights."""
    table = dominant_character(t.datum, lam, cap)
    weights, mults = table.expanded
    r = t.order
    exps = (weights @ np.asarray(t.numerators, dtype=np.int64)) % r
    counts = np.zeros(r, dtype=np.int64)
    np.add.at(counts, exps, mults)
    return CycNum(r, [int(c) for c in counts])


def char_at_regular(t: TorsionElement, lam: Sequence[int]) -> CycNum:
    """Weyl's quotient sum_w sgn(w) e^{w(lam+rho)} / sum_w sgn(w) e^{w rho} at t."""
    d = t.datum
    lam = _check_dominant(d, lam)
    if not is_regular(t):
        raise ZeroDivisionError("Weyl denominator vanishes at a non-regular element")
    num = CycNum.rational(0, t.order)
    den = CycNum.rational(0, t.order)
    rho = d.rho
    shifted = tuple(x + y for x, y in zip(lam, rho))
    for w in d.weyl_group():
        # multiply through by e^-rho so that every exponent is a character
        wr = w.act(rho)
        num = num + w.sign * eval_weight(t, tuple(a - b for a, b in zip(w.act(shifted), rho)))
        den = den + w.sign * eval_weight(t, tuple(a - b for a, b in zip(wr, rho)))
    if den.is_zero():
        raise ZeroDivisionError("Weyl denominator vanishes at t")
    return num / den
