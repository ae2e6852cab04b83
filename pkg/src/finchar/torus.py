"""Finite-order elements of the maximal torus and their centralizers.

A torsion element is ``t = exp(2 pi i x)`` for a rational cocharacter ``x``,
stored modulo the cocharacter lattice with entries in [0, 1).  Its order is
the least common denominator of ``x``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import Sequence

from .exactnum import CycNum
from .rootdata import Root, RootDatum, WeylElement, pair, reflection_subgroup


class TorsionError(ValueError):
    pass


@dataclass(frozen=True)
class TorsionElement:
    datum: RootDatum = field(repr=False, compare=True)
    x: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.x) != self.datum.lattice_rank:
            raise TorsionError(f"cocharacter has {len(self.x)} entries, "
                               f"expected {self.datum.lattice_rank}")
        object.__setattr__(self, "x", tuple(Fraction(c) % 1 for c in self.x))

    @classmethod
    def from_numerators(cls, datum: RootDatum, order: int, numerators: Sequence[int]) -> "TorsionElement":
        """The element exp(2 pi i * numerators / order)."""
        if order < 1:
            raise TorsionError(f"order must be positive, got {order}")
        return cls(datum, tuple(Fraction(int(k), order) for k in numerators))

    @classmethod
    def identity(cls, datum: RootDatum) -> "TorsionElement":
        return cls(datum, (Fraction(0),) * datum.lattice_rank)

    @cached_property
    def order(self) -> int:
        return lcm(*(c.denominator for c in self.x)) if self.x else 1

    @cached_property
    def numerators(self) -> tuple[int, ...]:
        """Integer vector r * x, where r is the order."""
        return tuple(int(c * self.order) for c in self.x)

    def exponent(self, mu: Sequence) -> int:
        """k in [0, r) with e^mu(t) = zeta_r^k."""
        val = pair(mu, self.x) * self.order
        val = Fraction(val)
        if val.denominator != 1:
            raise TorsionError(f"weight {tuple(mu)} pairs non-integrally with this element")
        return int(val) % self.order

    def __repr__(self):
        return f"TorsionElement(order={self.order}, numerators={self.numerators})"


def eval_weight(t: TorsionElement, mu: Sequence) -> CycNum:
    """e^mu(t) as an element of Q(zeta_r)."""
    return CycNum.root_of_unity(t.order, t.exponent(mu))


def invert(t: TorsionElement) -> TorsionElement:
    return TorsionElement(t.datum, tuple(-c for c in t.x))


def conjugate_by(t: TorsionElement, w: WeylElement) -> TorsionElement:
    """w t w^-1, i.e. the cocharacter w(x)."""
    return TorsionElement(t.datum, w.act_coweight(t.x))


@dataclass(frozen=True)
class CentralizerData:
    """Root data of the identity component of the centralizer of t."""

    roots: tuple[Root, ...]
    positive: tuple[Root, ...]
    rho_prime: tuple[Fraction, ...]
    weyl: tuple[WeylElement, ...] = field(repr=False)

    @cached_property
    def root_vectors(self) -> frozenset:
        return frozenset(a.vector for a in self.roots)

    def contains(self, vector: Sequence) -> bool:
        return tuple(vector) in self.root_vectors


@lru_cache(maxsize=4096)
def centralizer(t: TorsionElement) -> CentralizerData:
    d = t.datum
    roots = tuple(a for a in d.roots if t.exponent(a.vector) == 0)
    positive = tuple(a for a in roots if a.positive)
    rho = tuple(Fraction(sum(a.vector[k] for a in positive), 2) for k in range(d.lattice_rank))
    weyl = tuple(reflection_subgroup(d, positive))
    return CentralizerData(roots, positive, rho, weyl)


def is_regular(t: TorsionElement) -> bool:
    return not centralizer(t).roots


def torsion_elements(d: RootDatum, order: int) -> list[TorsionElement]:
    """Distinct elements exp(2 pi i k / order), k in [0, order)^L, in sweep order."""
    from itertools import product

    seen = {}
    for ks in product(range(order), repeat=d.lattice_rank):
        t = TorsionElement.from_numerators(d, order, ks)
        seen.setdefault(t.x, t)
    return list(seen.values())
