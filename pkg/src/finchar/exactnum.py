"""Exact arithmetic: cyclotomic fields, polynomials in n, truncated Laurent series in eps.

Rationals are :class:`fractions.Fraction` throughout.  A :class:`CycNum` is an
element of Q(zeta_r) stored in the power basis 1, zeta, ..., zeta^(phi(r)-1)
modulo the r-th cyclotomic polynomial, so every value has a canonical form and
zero testing is exact.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Iterable, Sequence

Rat = Fraction


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


# ---------------------------------------------------------------------------
# integer / rational polynomial helpers (coefficient lists, constant term first)

def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        c = Fraction(num[-1]) / lead
        q[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
        num.pop()
        while num and num[-1] == 0:
            num.pop()
    return q, num


def _strip(p: list) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_r, constant term first.

    Built by dividing x^r - 1 by Phi_d for every proper divisor d of r.

    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if r < 1:
        raise ValueError(f"cyclotomic order must be >= 1, got {r}")
    num = [Fraction(-1)] + [Fraction(0)] * (r - 1) + [Fraction(1)]
    for d in range(1, r):
        if r % d == 0:
            num, rem = _poly_divmod(num, [Fraction(c) for c in cyclotomic_polynomial(d)])
            assert not _strip(rem)
    num = _strip(num)
    assert all(c.denominator == 1 for c in num)
    return tuple(int(c) for c in num)


def euler_phi(r: int) -> int:
    return len(cyclotomic_polynomial(r)) - 1


@lru_cache(maxsize=None)
def _power_table(r: int, count: int) -> tuple[tuple[Fraction, ...], ...]:
    """Power-basis coordinates of x^k mod Phi_r for k < count."""
    phi = cyclotomic_polynomial(r)
    deg = len(phi) - 1
    rows = []
    cur = [Fraction(0)] * deg
    if deg:
        cur[0] = Fraction(1)
    for _ in range(count):
        rows.append(tuple(cur))
        # multiply by x, then reduce the overflow with the monic Phi_r
        top = cur[-1] if deg else Fraction(0)
        nxt = [Fraction(0)] + cur[:-1]
        if top:
            for i in range(deg):
                nxt[i] -= top * phi[i]
        cur = nxt
    return tuple(rows)


def _reduce(r: int, coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    deg = euler_phi(r)
    if len(coeffs) <= deg:
        return tuple(Fraction(c) for c in coeffs) + (Fraction(0),) * (deg - len(coeffs))
    table = _power_table(r, len(coeffs))
    out = [Fraction(0)] * deg
    for k, c in enumerate(coeffs):
        if c:
            row = table[k]
            for i in range(deg):
                if row[i]:
                    out[i] += c * row[i]
    return tuple(out)


class CycNum:
    """An element of the cyclotomic field Q(zeta_r), zeta_r = exp(2 pi i / r)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 1:
            raise ValueError("order must be >= 1")
        self.order = order
        self.coeffs = _reduce(order, [Fraction(c) for c in coeffs])

    # constructors ---------------------------------------------------------
    @classmethod
    def _raw(cls, order: int, coeffs: tuple) -> "CycNum":
        obj = cls.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    @classmethod
    def rational(cls, value, order: int = 1) -> "CycNum":
        return cls(order, [Fraction(value)])

    @classmethod
    def root_of_unity(cls, order: int, k: int = 1) -> "CycNum":
        """zeta_order ** k."""
        k %= order
        return cls._raw(order, _power_table(order, order)[k])

    @classmethod
    def from_exponent_counts(cls, order: int, counts: Sequence) -> "CycNum":
        """sum_k counts[k] * zeta_order**k for k in range(len(counts))."""
        return cls(order, counts)

    # field embedding --------------------------------------------------------
    def embed(self, order: int) -> "CycNum":
        """Image of self under Q(zeta_r) -> Q(zeta_order), zeta_r -> zeta_order**(order/r)."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})")
        step = order // self.order
        deg = euler_phi(order)
        if all(not c for c in self.coeffs[1:]) and deg:
            c0 = self.coeffs[0] if self.coeffs else Fraction(0)
            return CycNum._raw(order, (c0,) + (Fraction(0),) * (deg - 1))
        big = [Fraction(0)] * (step * len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            big[i * step] = c
        return CycNum._raw(order, _reduce(order, big))

    def _common(self, other) -> tuple["CycNum", "CycNum"]:
        if not isinstance(other, CycNum):
            other = CycNum.rational(other, self.order)
        if other.order == self.order:
            return self, other
        if self.order % other.order == 0:
            return self, other.embed(self.order)
        if other.order % self.order == 0:
            return self.embed(other.order), other
        m = _lcm(self.order, other.order)
        return self.embed(m), other.embed(m)

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        a, b = self._common(other)
        return CycNum._raw(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        a, b = self._common(other)
        return CycNum._raw(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum._raw(self.order, tuple(x * other for x in self.coeffs))
        if other.order == 1:
            c = other.coeffs[0]
            return CycNum._raw(self.order, tuple(x * c for x in self.coeffs))
        if self.order == 1:
            c = self.coeffs[0]
            return CycNum._raw(other.order, tuple(x * c for x in other.coeffs))
        a, b = self._common(other)
        n = len(a.coeffs)
        if n == 1:
            return CycNum._raw(a.order, (a.coeffs[0] * b.coeffs[0],))
        prod = [Fraction(0)] * (2 * n - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CycNum._raw(a.order, _reduce(a.order, prod))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_r."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if len(self.coeffs) == 1:
            return CycNum._raw(self.order, (1 / self.coeffs[0],))
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        # invariant: s_i * a == r_i (mod phi)
        r0, r1 = phi, _strip(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, rem = _poly_divmod(r0, r1)
            qs = _poly_mul(q, s1)
            s_new = _strip([(s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0)
                            for i in range(max(len(s0), len(qs)))])
            r0, r1 = r1, _strip(rem)
            s0, s1 = s1, s_new
        c = r1[0]
        return CycNum(self.order, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return CycNum._raw(self.order, tuple(x / other for x in self.coeffs))
        a, b = self._common(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycNum.rational(1, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "CycNum":
        """Image under the automorphism zeta -> zeta**-1 (complex conjugation)."""
        r = self.order
        out = [Fraction(0)] * r
        for k, c in enumerate(self.coeffs):
            out[(-k) % r] += c
        return CycNum(r, out)

    # predicates / conversion -------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum.rational(other, self.order)
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # equal values may live in different orders

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def is_integral(self) -> bool:
        """True when every power-basis coordinate is an integer (element of Z[zeta_r])."""
        return all(c.denominator == 1 for c in self.coeffs)

    def to_complex(self) -> complex:
        import cmath
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(float(c) * z ** k for k, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"order": self.order,
                "coeffs": [[c.numerator, c.denominator] for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "CycNum":
        return cls(int(data["order"]), [Fraction(int(n), int(d)) for n, d in data["coeffs"]])

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"CycNum[{self.order}]({body})"


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def as_cyc(value, order: int = 1) -> CycNum:
    if isinstance(value, CycNum):
        return value
    return CycNum.rational(value, order)


# ---------------------------------------------------------------------------
# polynomials in the formal variable n


class NPoly:
    """Polynomial in n with CycNum coefficients; coeffs[k] multiplies n**k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_cyc(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> "NPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> CycNum:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else CycNum.rational(0)

    def leading(self) -> CycNum:
        return self.coeffs[-1] if self.coeffs else CycNum.rational(0)

    def __call__(self, n) -> CycNum:
        acc = CycNum.rational(0)
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def __add__(self, other):
        if not isinstance(other, NPoly):
            other = NPoly([other])
        m = max(len(self.coeffs), len(other.coeffs))
        zero = CycNum.rational(0)
        return NPoly([(self.coeffs[i] if i < len(self.coeffs) else zero)
                      + (other.coeffs[i] if i < len(other.coeffs) else zero)
                      for i in range(m)])

    __radd__ = __add__

    def __neg__(self):
        return NPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, NPoly):
            other = NPoly([other])
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, NPoly):
            if isinstance(other, (int, Fraction)) and other == 0:
                return NPoly()
            return NPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return NPoly()
        if len(other.coeffs) == 1:
            y = other.coeffs[0]
            return NPoly([x * y for x in self.coeffs])
        if len(self.coeffs) == 1:
            x = self.coeffs[0]
            return NPoly([x * y for y in other.coeffs])
        out = [None] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        term = x * y
                        out[i + j] = term if out[i + j] is None else out[i + j] + term
        zero = CycNum.rational(0)
        return NPoly([zero if c is None else c for c in out])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, NPoly):
            other = NPoly([other])
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def compose_affine(self, scale, shift) -> "NPoly":
        """The polynomial m -> self(scale * m + shift)."""
        lin = NPoly([shift, scale])
        out = NPoly()
        for c in reversed(self.coeffs):
            out = out * lin + NPoly([c])
        return out

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    def __repr__(self):
        if not self.coeffs:
            return "NPoly(0)"
        return "NPoly(" + " + ".join(f"({c})*n^{k}" for k, c in enumerate(self.coeffs) if c) + ")"


# ---------------------------------------------------------------------------
# truncated Laurent series in eps with NPoly coefficients


class EpsSeries:
    """Truncated Laurent series sum_k coeffs[k] * eps**(valuation + k).

    Coefficients are known exactly for exponents up to and including
    ``truncation_order``; nothing beyond it is ever read.
    """

    __slots__ = ("valuation", "coeffs", "truncation_order")

    def __init__(self, valuation: int, coeffs: Iterable, truncation_order: int):
        cs = [c if isinstance(c, NPoly) else NPoly([c]) for c in coeffs]
        keep = truncation_order - valuation + 1
        if keep < 0:
            raise ValueError("truncation order below valuation")
        cs = cs[:keep]
        cs += [NPoly()] * (keep - len(cs))
        self.valuation = valuation
        self.coeffs = cs
        self.truncation_order = truncation_order

    @classmethod
    def one(cls, truncation_order: int) -> "EpsSeries":
        return cls(0, [NPoly([1])], truncation_order)

    def coefficient_at(self, k: int) -> NPoly:
        if k > self.truncation_order:
            raise ValueError(f"eps^{k} lies beyond truncation order {self.truncation_order}")
        if k < self.valuation:
            return NPoly()
        return self.coeffs[k - self.valuation]

    def normalized(self) -> "EpsSeries":
        """Drop leading zero coefficients (raising the valuation)."""
        i = 0
        while i < len(self.coeffs) and self.coeffs[i].is_zero():
            i += 1
        if i == len(self.coeffs):
            return EpsSeries(self.truncation_order, [], self.truncation_order)
        return EpsSeries(self.valuation + i, self.coeffs[i:], self.truncation_order)

    def __add__(self, other: "EpsSeries") -> "EpsSeries":
        val = min(self.valuation, other.valuation)
        top = min(self.truncation_order, other.truncation_order)
        return EpsSeries(val, [self.coefficient_at(k) + other.coefficient_at(k)
                               for k in range(val, top + 1)], top)

    def __mul__(self, other):
        if not isinstance(other, EpsSeries):
            return EpsSeries(self.valuation, [c * other for c in self.coeffs],
                             self.truncation_order)
        a, b = self.normalized(), other.normalized()
        val = a.valuation + b.valuation
        top = min(a.truncation_order + b.valuation, b.truncation_order + a.valuation)
        out = [NPoly()] * (top - val + 1)
        for i, x in enumerate(a.coeffs):
            if x.is_zero():
                continue
            for j, y in enumerate(b.coeffs):
                if i + j > top - val:
                    break
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
        return EpsSeries(val, out, top)

    __rmul__ = __mul__

    def inverse(self) -> "EpsSeries":
        s = self.normalized()
        if not s.coeffs:
            raise ZeroDivisionError("inverse of a series that vanishes to truncation order")
        lead = s.coeffs[0]
        if lead.degree != 0:
            raise ValueError("leading coefficient must be a nonzero constant in n")
        lead_inv = lead.coeffs[0].inverse()
        length = len(s.coeffs)
        inv = [NPoly([lead_inv])]
        for k in range(1, length):
            acc = NPoly()
            for j in range(1, k + 1):
                if not s.coeffs[j].is_zero():
                    acc = acc + s.coeffs[j] * inv[k - j]
            inv.append(acc * (-lead_inv))
        return EpsSeries(-s.valuation, inv, -s.valuation + length - 1)

    def unit_inverse(self) -> "EpsSeries":
        """Inverse of a unit power series: the eps^0 coefficient must be a nonzero constant."""
        if self.valuation > 0 or self.coefficient_at(0).is_zero() or any(
                not self.coefficient_at(k).is_zero() for k in range(self.valuation, 0)):
            raise ZeroDivisionError("series is not a unit: its eps^0 coefficient vanishes "
                                    "or it has a pole")
        return self.inverse()

    def __repr__(self):
        return (f"EpsSeries(val={self.valuation}, to={self.truncation_order}, "
                f"coeffs={self.coeffs})")


def exp_linear(c_n=0, c_const=0, truncation_order: int = 0) -> EpsSeries:
    """exp((c_n * n + c_const) * eps) truncated at eps**truncation_order."""
    if isinstance(c_const, (int, Fraction)) and c_const == 0:
        c = as_cyc(c_n)
        coeffs, power = [], CycNum.rational(1)
        zero = CycNum.rational(0)
        for k in range(truncation_order + 1):
            coeffs.append(NPoly([zero] * k + [power * Fraction(1, factorial(k))]))
            power = power * c
        return EpsSeries(0, coeffs, truncation_order)
    lin = NPoly([as_cyc(c_const), as_cyc(c_n)])
    coeffs = []
    power = NPoly([1])
    for k in range(truncation_order + 1):
        coeffs.append(power * Fraction(1, factorial(k)))
        power = power * lin
    return EpsSeries(0, coeffs, truncation_order)


def exp_scalar(c, truncation_order: int) -> EpsSeries:
    """exp(c * eps) for a constant c (no n dependence)."""
    return exp_linear(0, c, truncation_order)


def one_minus_unit_exp(unit, rate, truncation_order: int) -> EpsSeries:
    """The series 1 - unit * exp(rate * eps)."""
    e = exp_scalar(rate, truncation_order)
    coeffs = [NPoly([1]) - e.coeffs[0] * as_cyc(unit)]
    coeffs += [c * (-as_cyc(unit)) for c in e.coeffs[1:]]
    return EpsSeries(0, coeffs, truncation_order)
