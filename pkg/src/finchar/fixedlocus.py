"""Connected components of the fixed locus (G/P)^t.

Components are indexed by the set Y of minimal coset representatives v whose
inversion set avoids the centralizer roots R'.  Each component is a flag
variety of the centralizer's identity component, with tangent weights
vR_P^- & R' and normal weights vR_P^+ \\ R'.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .rootdata import (ParabolicSpec, Root, RootDatum, WeylElement, inversion_set,
                       minimal_coset_reps, reflection_subgroup)
from .torus import TorsionElement, centralizer


class FixedLocusError(ValueError):
    pass


@dataclass(frozen=True)
class FixedComponent:
    v: WeylElement
    dim: int
    tangent_weights: tuple[Root, ...]
    normal_weights: tuple[Root, ...]
    levi_roots: tuple[Root, ...]
    stabilizer: tuple[WeylElement, ...] = field(repr=False)

    @property
    def stabilizer_weyl_order(self) -> int:
        return len(self.stabilizer)

    @property
    def v_word(self) -> tuple[int, ...]:
        return self.v.word

    def to_json(self) -> dict:
        return {"v_word": list(self.v.word),
                "dim": self.dim,
                "tangent": [list(a.vector) for a in self.tangent_weights],
                "normal": [list(a.vector) for a in self.normal_weights]}


def compute_YS(d: RootDatum, P: ParabolicSpec, t: TorsionElement) -> list[WeylElement]:
    cent = centralizer(t)
    return [v for v in minimal_coset_reps(d, P)
            if not any(cent.contains(a.vector) for a in inversion_set(v, d))]


def component_data(v: WeylElement, d: RootDatum, P: ParabolicSpec,
                   t: TorsionElement) -> FixedComponent:
    if v not in compute_YS(d, P, t):
        raise FixedLocusError(f"v = s{list(v.word)} does not index a fixed component")
    return _component(v, d, P, t)


def _component(v: WeylElement, d: RootDatum, P: ParabolicSpec, t: TorsionElement) -> FixedComponent:
    cent = centralizer(t)
    tangent, normal = [], []
    for a in P.unipotent_roots(d):
        b = d.root(v.act(a.vector))
        if cent.contains(b.vector):
            tangent.append(-b)
        else:
            normal.append(b)
    levi = tuple(d.root(v.act(a.vector)) for a in P.levi_roots(d)
                 if cent.contains(v.act(a.vector)))
    stab = reflection_subgroup(d, [a for a in levi if a.positive])
    return FixedComponent(v, len(tangent), tuple(tangent), tuple(normal), levi, tuple(stab))


def fixed_components(d: RootDatum, P: ParabolicSpec, t: TorsionElement) -> list[FixedComponent]:
    return list(_fixed_components(d, P, t))


@lru_cache(maxsize=4096)
def _fixed_components(d: RootDatum, P: ParabolicSpec, t: TorsionElement) -> tuple[FixedComponent, ...]:
    ys = compute_YS(d, P, t)
    return tuple(_component(v, d, P, t) for v in ys)


@dataclass
class CountingReport:
    weyl_order: int
    parabolic_weyl_order: int
    coset_count: int
    centralizer_weyl_order: int
    ys_count: int
    orbit_sizes: list[int]
    orbit_sum: tuple[int, int]
    lower_bound: tuple[int, Fraction]
    borel_quotient: tuple[int, int] | None

    @property
    def passed(self) -> bool:
        ok = self.orbit_sum[0] == self.orbit_sum[1] and self.lower_bound[0] >= self.lower_bound[1]
        if self.borel_quotient is not None:
            ok = ok and self.borel_quotient[0] == self.borel_quotient[1]
        return ok

    def to_json(self) -> dict:
        return {"weyl_order": self.weyl_order, "coset_count": self.coset_count,
                "centralizer_weyl_order": self.centralizer_weyl_order,
                "ys_count": self.ys_count, "orbit_sizes": self.orbit_sizes,
                "sum_orbit_sizes_vs_cosets": list(self.orbit_sum),
                "ys_count_vs_lower_bound": [self.lower_bound[0], str(self.lower_bound[1])],
                "borel_ys_count_vs_quotient": list(self.borel_quotient) if self.borel_quotient else None,
                "passed": self.passed}


def verify_counting(d: RootDatum, P: ParabolicSpec, t: TorsionElement) -> CountingReport:
    """Component-orbit counting identities for (G/P)^t."""
    W = d.weyl_group()
    WP = P.weyl_subgroup(d)
    cosets = minimal_coset_reps(d, P)
    w_prime = len(centralizer(t).weyl)
    comps = fixed_components(d, P, t)
    sizes = []
    for c in comps:
        q, rem = divmod(w_prime, c.stabilizer_weyl_order)
        if rem:
            raise FixedLocusError("stabilizer order does not divide the centralizer Weyl group")
        sizes.append(q)
    borel_quotient = None
    if not P.levi_simples:
        borel_quotient = (len(comps), len(W) // w_prime if len(W) % w_prime == 0 else -1)
    return CountingReport(len(W), len(WP), len(cosets), w_prime, len(comps), sizes,
                          (sum(sizes), len(cosets)), (len(comps), Fraction(len(cosets), w_prime)), borel_quotient)


@dataclass
class OrbitReport:
    blocks: list[list[tuple[int, ...]]]
    ys_words: list[tuple[int, ...]]
    expected_sizes: list[int]
    mismatches: list[str]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {"blocks": [[list(w) for w in b] for b in self.blocks],
                "ys": [list(w) for w in self.ys_words],
                "expected_sizes": self.expected_sizes,
                "mismatches": self.mismatches, "passed": self.passed}


def orbit_partition_crosscheck(d: RootDatum, P: ParabolicSpec, t: TorsionElement) -> OrbitReport:
    """Partition W^P into centralizer-Weyl orbits of T-fixed points and compare with Y.

    Each block must contain exactly one element of Y, that element must be the
    shortest in its block, and the block size must equal |W'| / |W'_Q|.
    """
    cosets = minimal_coset_reps(d, P)
    w_prime = centralizer(t).weyl
    anchor = P.rho_p(d)
    by_point = {w.act(anchor): w for w in cosets}
    comps = {c.v: c for c in fixed_components(d, P, t)}
    assigned = set()
    blocks, expected, problems = [], [], []
    for w in cosets:
        if w in assigned:
            continue
        orbit = {u.act(w.act(anchor)) for u in w_prime}
        block = sorted((by_point[p] for p in orbit), key=lambda x: (x.length, x.word))
        assigned.update(block)
        blocks.append([b.word for b in block])
        reps = [b for b in block if b in comps]
        if len(reps) != 1:
            problems.append(f"block {[b.word for b in block]} holds {len(reps)} elements of Y")
            continue
        rep = reps[0]
        if rep.length != block[0].length:
            problems.append(f"Y element {rep.word} is not the shortest in its block")
        size = len(w_prime) // comps[rep].stabilizer_weyl_order
        expected.append(size)
        if size != len(block):
            problems.append(f"block of {rep.word} has size {len(block)}, expected {size}")
    if len(blocks) != len(comps):
        problems.append(f"{len(blocks)} blocks but |Y| = {len(comps)}")
    return OrbitReport(blocks, [v.word for v in comps], expected, problems)
