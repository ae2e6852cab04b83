"""Root data of connected reductive groups, their Weyl groups and parabolic subsets.

Characters X(T) and cocharacters X_*(T) are both modelled as Z^L with the
standard dot product as the perfect pairing.  Roots are generated by
reflection closure of the simple roots; Weyl group elements are integer
matrices acting on X(T) by left multiplication on column vectors.

Simple-root indices are 0-based throughout the Python API.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

Vector = tuple[int, ...]

DEFAULT_MAX_WEYL = 10**6


class RootDatumError(ValueError):
    """Raised for invalid group descriptors or inconsistent root data."""


class CapExceeded(RuntimeError):
    """Raised when an enumeration would exceed a configured resource cap."""

    def __init__(self, cap_name: str, cap: int, message: str = ""):
        self.cap_name = cap_name
        self.cap = cap
        super().__init__(message or f"{cap_name} cap of {cap} exceeded")

    def __reduce__(self):
        return (CapExceeded, (self.cap_name, self.cap, self.args[0]))


def pair(mu: Sequence, y: Sequence):
    """The pairing <mu, y> between a character and a cocharacter."""
    return sum(a * b for a, b in zip(mu, y))


def _det(rows: list[list[Fraction]]) -> Fraction:
    m = [list(map(Fraction, r)) for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return det


def validate_cartan(cartan: Sequence[Sequence[int]]) -> None:
    """Check that ``cartan[i][j] = <alpha_i, alpha_j^vee>`` is a Cartan matrix of finite type."""
    n = len(cartan)
    for i in range(n):
        if cartan[i][i] != 2:
            raise RootDatumError(f"Cartan diagonal entry ({i},{i}) is {cartan[i][i]}, expected 2")
        for j in range(n):
            if i != j:
                if cartan[i][j] > 0:
                    raise RootDatumError(f"positive off-diagonal Cartan entry at ({i},{j})")
                if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                    raise RootDatumError(f"Cartan entries ({i},{j}) and ({j},{i}) disagree on zero")
    for size in range(1, n + 1):
        for idx in combinations(range(n), size):
            if _det([[cartan[i][j] for j in idx] for i in idx]) <= 0:
                raise RootDatumError(f"principal minor on {idx} is not positive: not of finite type")


# ---------------------------------------------------------------------------
# classical Cartan matrices (Bourbaki labelling)

def _euclidean_simple_roots(kind: str, rank: int) -> list[list[Fraction]]:
    F = Fraction

    def e(i, dim, c=1):
        v = [F(0)] * dim
        v[i] = F(c)
        return v

    def sub(a, b):
        return [x - y for x, y in zip(a, b)]

    def add(a, b):
        return [x + y for x, y in zip(a, b)]

    if kind == "A":
        return [sub(e(i, rank + 1), e(i + 1, rank + 1)) for i in range(rank)]
    if kind in "BCD":
        base = [sub(e(i, rank), e(i + 1, rank)) for i in range(rank - 1)]
        if kind == "B":
            return base + [e(rank - 1, rank)]
        if kind == "C":
            return base + [e(rank - 1, rank, 2)]
        return base + [add(e(rank - 2, rank), e(rank - 1, rank))]
    if kind == "E":
        h = F(1, 2)
        roots = [[h, -h, -h, -h, -h, -h, -h, h],
                 add(e(0, 8), e(1, 8))]
        roots += [sub(e(i - 2, 8), e(i - 3, 8)) for i in range(3, 9)]
        return roots[:rank]
    if kind == "F":
        h = F(1, 2)
        return [sub(e(1, 4), e(2, 4)), sub(e(2, 4), e(3, 4)), e(3, 4), [h, -h, -h, -h]]
    if kind == "G":
        return [[F(1), F(-1), F(0)], [F(-2), F(1), F(1)]]
    raise RootDatumError(f"unknown Cartan type {kind!r}")


_VALID_RANKS = {"A": lambda n: n >= 1, "B": lambda n: n >= 2, "C": lambda n: n >= 2,
                "D": lambda n: n >= 3, "E": lambda n: n in (6, 7, 8),
                "F": lambda n: n == 4, "G": lambda n: n == 2}


def cartan_matrix(kind: str, rank: int) -> list[list[int]]:
    """Cartan matrix with entries <alpha_i, alpha_j^vee> for a finite type."""
    kind = kind.upper()
    if kind not in _VALID_RANKS or not _VALID_RANKS[kind](rank):
        raise RootDatumError(f"no finite root system of type {kind}{rank}")
    roots = _euclidean_simple_roots(kind, rank)
    ip = lambda a, b: sum(x * y for x, y in zip(a, b))
    out = []
    for a in roots:
        row = []
        for b in roots:
            v = 2 * ip(a, b) / ip(b, b)
            assert v.denominator == 1
            row.append(int(v))
        out.append(row)
    return out


# ---------------------------------------------------------------------------
# data types


@dataclass(frozen=True)
class Root:
    vector: Vector
    coroot: Vector
    positive: bool
    height: int
    simple_coords: Vector = field(repr=False)

    def __neg__(self) -> "Root":
        return Root(tuple(-x for x in self.vector), tuple(-x for x in self.coroot),
                    not self.positive, -self.height, tuple(-c for c in self.simple_coords))


@dataclass(frozen=True, eq=False)
class WeylElement:
    """A Weyl group element: integer matrix on X(T) plus a reduced word.

    ``word = (i1, ..., ik)`` means ``s_i1 s_i2 ... s_ik``.
    """

    matrix: np.ndarray = field(repr=False)
    inverse_matrix: np.ndarray = field(repr=False)
    word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    @cached_property
    def key(self) -> bytes:
        return self.matrix.tobytes()

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def act(self, mu: Sequence) -> tuple:
        """w(mu) for a character mu (integer or rational entries)."""
        return tuple(sum(int(m) * x for m, x in zip(row, mu)) for row in self.matrix)

    def act_inverse(self, mu: Sequence) -> tuple:
        return tuple(sum(int(m) * x for m, x in zip(row, mu)) for row in self.inverse_matrix)

    def act_coweight(self, y: Sequence) -> tuple:
        """w(y) for a cocharacter y; the contragredient action (w^-1)^T."""
        return tuple(sum(int(self.inverse_matrix[j][i]) * y[j] for j in range(len(y)))
                     for i in range(len(y)))

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1


@dataclass(frozen=True)
class ParabolicSpec:
    """A standard parabolic subgroup, given by the simple roots of its Levi factor."""

    levi_simples: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "levi_simples", frozenset(self.levi_simples))

    @classmethod
    def borel(cls) -> "ParabolicSpec":
        return cls(frozenset())

    def validate(self, datum: "RootDatum") -> None:
        bad = [i for i in self.levi_simples if not 0 <= i < datum.rank]
        if bad:
            raise RootDatumError(f"Levi simple indices {sorted(bad)} out of range for rank {datum.rank}")

    def levi_roots(self, datum: "RootDatum") -> list[Root]:
        """R_L: roots supported on the Levi simples."""
        return [a for a in datum.roots if self._in_levi(a)]

    def unipotent_roots(self, datum: "RootDatum") -> list[Root]:
        """R_P^+: positive roots of the unipotent radical."""
        return [a for a in datum.positive_roots if not self._in_levi(a)]

    def opposite_unipotent_roots(self, datum: "RootDatum") -> list[Root]:
        """R_P^-."""
        return [-a for a in self.unipotent_roots(datum)]

    def _in_levi(self, a: Root) -> bool:
        return all(c == 0 or i in self.levi_simples for i, c in enumerate(a.simple_coords))

    def weyl_subgroup(self, datum: "RootDatum") -> list[WeylElement]:
        """W_P: elements whose reduced words only use Levi simple reflections."""
        return [w for w in datum.weyl_group() if set(w.word) <= self.levi_simples]

    def rho_p(self, datum: "RootDatum") -> Vector:
        """2 * rho_P; its stabiliser in W is exactly W_P."""
        out = [0] * datum.lattice_rank
        for a in self.unipotent_roots(datum):
            out = [x + y for x, y in zip(out, a.vector)]
        return tuple(out)


@dataclass(frozen=True)
class GroupLabel:
    kind: str
    rank: int
    isogeny: str

    def __str__(self):
        if self.kind == "GL":
            return f"GL_{self.rank}"
        if self.kind == "explicit":
            return f"explicit(rank {self.rank})"
        return f"{self.kind}{self.rank} ({self.isogeny})"


@dataclass(frozen=True, eq=False)
class RootDatum:
    """Root datum (X, R, X_*, R^vee) with a chosen base of simple roots."""

    simple_roots: tuple[Vector, ...]
    simple_coroots: tuple[Vector, ...]
    lattice_rank: int
    label: GroupLabel
    max_roots: int = field(default=10_000, repr=False)

    def __post_init__(self):
        if len(self.simple_roots) != len(self.simple_coroots):
            raise RootDatumError("need as many simple coroots as simple roots")
        for v in self.simple_roots + self.simple_coroots:
            if len(v) != self.lattice_rank:
                raise RootDatumError(f"vector {v} does not have lattice rank {self.lattice_rank}")
        validate_cartan(self.cartan)
        self.roots  # generate eagerly so invalid data fails at construction

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @staticmethod
    def pairing(mu: Sequence, y: Sequence):
        return pair(mu, y)

    @cached_property
    def cartan(self) -> list[list[int]]:
        return [[pair(a, c) for c in self.simple_coroots] for a in self.simple_roots]

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        n = self.rank
        start = []
        for i, (a, c) in enumerate(zip(self.simple_roots, self.simple_coroots)):
            coords = tuple(1 if j == i else 0 for j in range(n))
            start.append((tuple(a), tuple(c), coords))
        seen = {s[0]: s for s in start}
        queue = deque(start)
        while queue:
            vec, cov, coords = queue.popleft()
            for i, (a, c) in enumerate(zip(self.simple_roots, self.simple_coroots)):
                k = pair(vec, c)
                nv = tuple(x - k * y for x, y in zip(vec, a))
                if nv in seen:
                    continue
                kc = pair(a, cov)
                nc = tuple(x - kc * y for x, y in zip(cov, c))
                ncoords = tuple(x - (k if j == i else 0) for j, x in enumerate(coords))
                seen[nv] = (nv, nc, ncoords)
                queue.append(seen[nv])
                if len(seen) > self.max_roots:
                    raise RootDatumError("reflection closure did not terminate: not of finite type")
        out = []
        for vec, cov, coords in seen.values():
            if all(c >= 0 for c in coords):
                pos = True
            elif all(c <= 0 for c in coords):
                pos = False
            else:
                raise RootDatumError(f"root {vec} is neither positive nor negative")
            if pair(vec, cov) != 2:
                raise RootDatumError(f"coroots inconsistent with roots: <{vec}, {cov}> != 2")
            out.append(Root(vec, cov, pos, sum(coords), coords))
        out.sort(key=lambda a: (-a.positive, abs(a.height), a.simple_coords))
        return tuple(out)

    @cached_property
    def root_index(self) -> dict[Vector, Root]:
        return {a.vector: a for a in self.roots}

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(a for a in self.roots if a.positive)

    def root(self, vector: Sequence) -> Root:
        return self.root_index[tuple(vector)]

    def is_root(self, vector: Sequence) -> bool:
        return tuple(vector) in self.root_index

    @cached_property
    def rho(self) -> tuple[Fraction, ...]:
        """Half the sum of the positive roots, in X(T) (x) Q."""
        return tuple(Fraction(sum(a.vector[k] for a in self.positive_roots), 2)
                     for k in range(self.lattice_rank))

    @cached_property
    def rho_check(self) -> tuple[Fraction, ...]:
        """Half the sum of the positive coroots, in X_*(T) (x) Q."""
        return tuple(Fraction(sum(a.coroot[k] for a in self.positive_roots), 2)
                     for k in range(self.lattice_rank))

    def dynkin_labels(self, mu: Sequence) -> tuple:
        return tuple(pair(mu, c) for c in self.simple_coroots)

    def is_dominant(self, mu: Sequence) -> bool:
        return all(x >= 0 for x in self.dynkin_labels(mu))

    def reflect(self, mu: Sequence, alpha: Root) -> tuple:
        """s_alpha(mu) = mu - <mu, alpha^vee> alpha."""
        k = pair(mu, alpha.coroot)
        return tuple(x - k * a for x, a in zip(mu, alpha.vector))

    def dominant_conjugate(self, mu: Sequence) -> tuple:
        mu = tuple(mu)
        while True:
            labels = self.dynkin_labels(mu)
            i = next((i for i, x in enumerate(labels) if x < 0), None)
            if i is None:
                return mu
            mu = tuple(x - labels[i] * a for x, a in zip(mu, self.simple_roots[i]))

    def reflection_matrix(self, vector: Sequence, coroot: Sequence) -> np.ndarray:
        return (np.eye(self.lattice_rank, dtype=np.int64)
                - np.outer(np.asarray(vector, dtype=np.int64), np.asarray(coroot, dtype=np.int64)))

    @cached_property
    def simple_reflections(self) -> tuple[np.ndarray, ...]:
        return tuple(self.reflection_matrix(a, c)
                     for a, c in zip(self.simple_roots, self.simple_coroots))

    # Weyl group --------------------------------------------------------------
    def weyl_group(self, cap: int = DEFAULT_MAX_WEYL) -> list[WeylElement]:
        return enumerate_weyl(self, cap)

    def weyl_element(self, matrix: np.ndarray) -> WeylElement:
        """Look up the group element with the given matrix."""
        try:
            return self._weyl_lookup[np.asarray(matrix, dtype=np.int64).tobytes()]
        except KeyError:
            raise RootDatumError("matrix is not an element of the Weyl group") from None

    @cached_property
    def _weyl_lookup(self) -> dict[bytes, WeylElement]:
        return {w.key: w for w in self.weyl_group()}

    @cached_property
    def weyl_stack(self) -> np.ndarray:
        """All Weyl matrices stacked in enumeration order, shape (|W|, L, L)."""
        return np.stack([w.matrix for w in self.weyl_group()])

    @cached_property
    def identity(self) -> WeylElement:
        return self.weyl_group()[0]

    def multiply(self, u: WeylElement, w: WeylElement) -> WeylElement:
        return self.weyl_element(u.matrix @ w.matrix)

    def reflection(self, alpha: Root) -> WeylElement:
        return self.weyl_element(self.reflection_matrix(alpha.vector, alpha.coroot))

    def longest_element(self) -> WeylElement:
        return max(self.weyl_group(), key=lambda w: w.length)

    def __repr__(self):
        return f"RootDatum({self.label}, lattice_rank={self.lattice_rank})"


# ---------------------------------------------------------------------------
# operations


def build_root_datum(kind: str, rank: int, isogeny: str = "simply-connected") -> RootDatum:
    """Root datum for a named group.

    ``kind`` is a Cartan type letter A-G (with ``isogeny`` "simply-connected"
    or "adjoint") or "GL" for GL_rank with characters Z^rank.
    """
    kind = kind.upper()
    if kind == "GL" or isogeny.upper() == "GL":
        if kind not in ("GL", "A"):
            raise RootDatumError(f"GL isogeny only exists for type A, not {kind}")
        n = rank if kind == "GL" else rank + 1
        if n < 1:
            raise RootDatumError("GL_n needs n >= 1")
        roots = []
        for i in range(n - 1):
            v = [0] * n
            v[i], v[i + 1] = 1, -1
            roots.append(tuple(v))
        return RootDatum(tuple(roots), tuple(roots), n, GroupLabel("GL", n, "GL"))
    cartan = cartan_matrix(kind, rank)
    iso = isogeny.lower().replace("_", "-")
    if iso in ("simply-connected", "sc"):
        roots = tuple(tuple(row) for row in cartan)
        coroots = tuple(tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank))
        iso = "simply-connected"
    elif iso in ("adjoint", "ad"):
        roots = tuple(tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank))
        coroots = tuple(tuple(cartan[i][j] for i in range(rank)) for j in range(rank))
        iso = "adjoint"
    else:
        raise RootDatumError(f"unknown isogeny {isogeny!r}")
    return RootDatum(roots, coroots, rank, GroupLabel(kind, rank, iso))


def explicit_root_datum(simple_roots: Sequence[Sequence[int]],
                        simple_coroots: Sequence[Sequence[int]],
                        lattice_rank: int | None = None) -> RootDatum:
    roots = tuple(tuple(int(x) for x in v) for v in simple_roots)
    coroots = tuple(tuple(int(x) for x in v) for v in simple_coroots)
    if lattice_rank is None:
        lattice_rank = len(roots[0]) if roots else 0
    return RootDatum(roots, coroots, lattice_rank, GroupLabel("explicit", len(roots), "explicit"))


_NAMED = {
    "SL": lambda n: ("A", n - 1, "simply-connected"),
    "PGL": lambda n: ("A", n - 1, "adjoint"),
    "GL": lambda n: ("GL", n, "GL"),
    "SP": lambda n: ("C", n // 2, "simply-connected"),
    "PSP": lambda n: ("C", n // 2, "adjoint"),
    "SPIN": lambda n: ("B" if n % 2 else "D", n // 2, "simply-connected"),
}


def group(name: str) -> RootDatum:
    """Parse names such as ``SL_2``, ``PGL2``, ``GL_3``, ``Sp_4``, ``G2``, ``B3_adjoint``."""
    raw = name.replace(" ", "")
    stem = raw.rstrip("0123456789_").upper()
    digits = raw[len(stem):].strip("_")
    if stem in _NAMED and digits.isdigit():
        return build_root_datum(*_NAMED[stem](int(digits)))
    head, _, iso = raw.partition("_")
    if len(head) >= 2 and head[0].upper() in "ABCDEFG" and head[1:].isdigit():
        return build_root_datum(head[0], int(head[1:]), iso or "simply-connected")
    raise RootDatumError(f"cannot parse group name {name!r}")


def enumerate_weyl(d: RootDatum, cap: int = DEFAULT_MAX_WEYL) -> list[WeylElement]:
    """All Weyl group elements in breadth-first (length-increasing) order."""
    cached = d.__dict__.get("_weyl_cache")
    if cached is not None and len(cached) <= cap:
        return cached
    eye = np.eye(d.lattice_rank, dtype=np.int64)
    ident = WeylElement(eye, eye.copy(), ())
    seen = {ident.key: ident}
    order = [ident]
    frontier = [ident]
    gens = d.simple_reflections
    while frontier:
        nxt = []
        for w in frontier:
            for i, s in enumerate(gens):
                m = s @ w.matrix
                key = m.tobytes()
                if key in seen:
                    continue
                u = WeylElement(m, w.inverse_matrix @ s, (i,) + w.word)
                seen[key] = u
                order.append(u)
                nxt.append(u)
                if len(order) > cap:
                    raise CapExceeded("max_weyl", cap, f"|W| exceeds the cap of {cap}")
        frontier = nxt
    d.__dict__["_weyl_cache"] = order
    return order


def inversion_set(v: WeylElement, d: RootDatum) -> list[Root]:
    """R^+ intersected with v R^-: positive roots sent negative by v^-1."""
    return [a for a in d.positive_roots if not d.root(v.act_inverse(a.vector)).positive]


def minimal_coset_reps(d: RootDatum, P: ParabolicSpec) -> list[WeylElement]:
    """W^P = {v : v(alpha_i) > 0 for every Levi simple root alpha_i}."""
    P.validate(d)
    cache = d.__dict__.setdefault("_coset_cache", {})
    if P not in cache:
        W = d.weyl_group()
        keep = np.ones(len(W), dtype=bool)
        if P.levi_simples:
            # a root is positive iff it pairs positively with rho^vee
            levi = np.asarray([d.simple_roots[i] for i in sorted(P.levi_simples)], dtype=np.int64)
            images = np.einsum("wij,kj->wki", d.weyl_stack, levi)
            heights = images @ np.asarray([int(2 * x) for x in d.rho_check], dtype=np.int64)
            keep = (heights > 0).all(axis=1)
        cache[P] = [w for w, k in zip(W, keep) if k]
    return list(cache[P])


def parabolic_for_lambda(d: RootDatum, lam: Sequence[int]) -> ParabolicSpec:
    """P_lambda: Levi simples are the simple coroots on which lambda vanishes."""
    labels = d.dynkin_labels(lam)
    if any(x < 0 for x in labels):
        raise RootDatumError(f"weight {tuple(lam)} is not dominant (labels {labels})")
    return ParabolicSpec(frozenset(i for i, x in enumerate(labels) if x == 0))


def all_parabolics(d: RootDatum) -> list[ParabolicSpec]:
    out = []
    for k in range(d.rank + 1):
        out.extend(ParabolicSpec(frozenset(c)) for c in combinations(range(d.rank), k))
    return out


def reflection_subgroup(d: RootDatum, roots: Iterable[Root]) -> list[WeylElement]:
    """The subgroup of W generated by the reflections s_alpha for the given roots."""
    gens = [d.reflection_matrix(a.vector, a.coroot) for a in roots]
    ident = d.identity
    seen = {ident.key: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                m = g @ w.matrix
                key = m.tobytes()
                if key not in seen:
                    seen[key] = d.weyl_element(m)
                    nxt.append(seen[key])
        frontier = nxt
    return sorted(seen.values(), key=lambda w: (w.length, w.word))
