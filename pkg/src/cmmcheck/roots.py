"""The root system A_{n-1}: weights in epsilon-coordinates and the S_n action.

A weight is a zero-sum vector of ``n`` rationals.  The weight lattice P is
the set of such vectors whose coordinates pairwise differ by integers; the
root lattice Q is the subset with integral coordinates.  The Weyl group is
the symmetric group acting by permuting coordinates, so the inner product is
the ordinary dot product.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterable, Sequence

__all__ = [
    "Weight",
    "RootSystem",
    "SignedOrbit",
    "RankMismatchError",
    "CosetMismatchError",
    "root_system",
    "inner",
    "from_fundamental",
    "is_dominant",
    "weyl_orbit",
    "signed_orbit",
    "dominance_le",
    "lower_dominant_weights",
    "star",
    "weights_in_ball",
    "permutations_with_sign",
    "to_fundamental",
    "dominant_weights_in_ball",
    "dominant_grid",
    "parse_fundamental",
]


class RankMismatchError(ValueError):
    pass


class CosetMismatchError(ValueError):
    """The two weights do not differ by an element of the root lattice."""


class Weight:
    """Zero-sum vector of rationals (epsilon-coordinates)."""

    __slots__ = ("coords", "_hash")

    def __init__(self, coords: Iterable):
        c = tuple(Fraction(x) for x in coords)
        if sum(c) != 0:
            raise ValueError(f"weight coordinates must sum to zero: {c}")
        self.coords = c
        self._hash = hash(c)

    @classmethod
    def _raw(cls, coords: tuple) -> "Weight":
        w = object.__new__(cls)
        w.coords = coords
        w._hash = hash(coords)
        return w

    @classmethod
    def zero(cls, n: int) -> "Weight":
        return cls._raw((Fraction(0),) * n)

    @property
    def n(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other: "Weight") -> None:
        if len(self.coords) != len(other.coords):
            raise RankMismatchError(f"rank mismatch: {len(self.coords)} vs {len(other.coords)}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight._raw(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight._raw(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight._raw(tuple(-a for a in self.coords))

    def __mul__(self, s) -> "Weight":
        s = Fraction(s)
        return Weight._raw(tuple(a * s for a in self.coords))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Weight):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Weight") -> bool:
        return self.coords < other.coords

    def permute(self, perm: Sequence[int]) -> "Weight":
        """Apply ``w`` with ``w(e_i) = e_{perm[i]}``."""
        out = [None] * len(self.coords)
        for i, p in enumerate(perm):
            out[p] = self.coords[i]
        return Weight._raw(tuple(out))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def in_weight_lattice(self) -> bool:
        c0 = self.coords[0]
        return all((c - c0).denominator == 1 for c in self.coords)

    def in_root_lattice(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def norm2(self) -> Fraction:
        return sum((a * a for a in self.coords), Fraction(0))

    def dominant(self) -> "Weight":
        """The dominant element of the W-orbit."""
        return Weight._raw(tuple(sorted(self.coords, reverse=True)))

    def is_regular(self) -> bool:
        return len(set(self.coords)) == len(self.coords)

    def sort_key(self) -> tuple:
        """Canonical display order: larger norm first, then lexicographically larger first."""
        return (-self.norm2(), tuple(-c for c in self.coords))

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coords) + "]"

    def __repr__(self) -> str:
        return f"Weight({self})"

    def __reduce__(self):
        return (Weight._raw, (self.coords,))


def inner(a: Weight, b: Weight) -> Fraction:
    a._check(b)
    return sum((x * y for x, y in zip(a.coords, b.coords)), Fraction(0))


@dataclass(frozen=True)
class RootSystem:
    n: int
    pos_roots: tuple
    simple_roots: tuple
    rho: Weight
    fundamental_weights: tuple

    @property
    def num_pos_roots(self) -> int:
        return len(self.pos_roots)

    @property
    def weyl_order(self) -> int:
        out = 1
        for i in range(2, self.n + 1):
            out *= i
        return out

    @property
    def rank(self) -> int:
        return self.n - 1


def _unit(n: int, i: int, j: int) -> Weight:
    c = [Fraction(0)] * n
    c[i] += 1
    c[j] -= 1
    return Weight._raw(tuple(c))


@lru_cache(maxsize=None)
def root_system(n: int) -> RootSystem:
    if n < 2:
        raise ValueError("A_{n-1} needs n >= 2")
    pos = tuple(_unit(n, i, j) for i in range(n) for j in range(i + 1, n))
    simple = tuple(_unit(n, i, i + 1) for i in range(n - 1))
    rho = Weight._raw(tuple(Fraction(n - 1, 2) - i for i in range(n)))
    fund = tuple(
        Weight._raw(tuple(Fraction(n - i, n) if t < i else Fraction(-i, n) for t in range(n)))
        for i in range(1, n)
    )
    return RootSystem(n, pos, simple, rho, fund)


def from_fundamental(n: int, a: Sequence[int]) -> Weight:
    """``sum a_i * omega_i`` in epsilon-coordinates."""
    if len(a) != n - 1:
        raise RankMismatchError(f"expected {n - 1} fundamental coefficients, got {len(a)}")
    if any(x < 0 for x in a):
        raise ValueError(f"fundamental coefficients must be nonnegative: {list(a)}")
    out = Weight.zero(n)
    for x, w in zip(a, root_system(n).fundamental_weights):
        if x:
            out = out + w * x
    return out


def to_fundamental(lam: Weight) -> tuple:
    """Coefficients ``(lam, alpha_i)`` on the fundamental weights."""
    c = lam.coords
    return tuple(c[i] - c[i + 1] for i in range(len(c) - 1))


def is_dominant(lam: Weight) -> bool:
    c = lam.coords
    return all(c[i] >= c[i + 1] for i in range(len(c) - 1))


def _parity(perm: Sequence[int]) -> int:
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def permutations_with_sign(n: int) -> tuple:
    return tuple((perm, _parity(perm)) for perm in itertools.permutations(range(n)))


def weyl_orbit(lam: Weight) -> set:
    return {Weight._raw(p) for p in set(itertools.permutations(lam.coords))}


@dataclass(frozen=True)
class SignedOrbit:
    """All ``(w(lam), sign(w))``; ``degenerate`` when ``lam`` lies on a wall."""

    terms: tuple
    degenerate: bool


def signed_orbit(lam: Weight) -> SignedOrbit:
    terms = tuple((lam.permute(p), s) for p, s in permutations_with_sign(lam.n))
    return SignedOrbit(terms, not lam.is_regular())


def _partial_sums(v: Weight) -> list:
    out, s = [], Fraction(0)
    for c in v.coords[:-1]:
        s += c
        out.append(s)
    return out


def dominance_le(mu: Weight, lam: Weight) -> bool:
    """``mu <= lam``: ``lam - mu`` is a nonnegative integer sum of simple roots."""
    d = lam - mu
    if not d.in_root_lattice():
        raise CosetMismatchError(f"{lam} - {mu} is not in the root lattice")
    return all(s >= 0 for s in _partial_sums(d))


def lower_dominant_weights(lam: Weight) -> list:
    """Dominant weights ``mu <= lam``, in increasing (norm, coordinates) order.

    Walks down from ``lam`` by subtracting positive roots; in type A every
    cover in the dominance order of dominant weights is such a step.
    """
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    roots = root_system(lam.n).pos_roots
    seen = {lam}
    stack = [lam]
    while stack:
        v = stack.pop()
        for a in roots:
            w = v - a
            if w not in seen and is_dominant(w):
                seen.add(w)
                stack.append(w)
    return sorted(seen, key=lambda w: (w.norm2(), w.coords))


def star(nu: Weight) -> Weight:
    """``-w0(nu)``, the highest weight of the dual representation."""
    return (-nu).dominant()


def ceil_sqrt(x: Fraction) -> int:
    """Smallest integer ``b >= 0`` with ``b*b >= x``."""
    if x <= 0:
        return 0
    f = -(-x.numerator // x.denominator)
    b = isqrt(f)
    return b if b * b >= x else b + 1


def _floor_sqrt(x: Fraction) -> int:
    if x <= 0:
        return 0
    b = isqrt(x.numerator // x.denominator)
    while (b + 1) * (b + 1) <= x:
        b += 1
    return b


def weights_in_ball(n: int, r) -> list:
    """All ``lam`` in P with ``(lam, lam) <= r``, sorted by (norm, coordinates).

    Every ``lam`` in P is ``x - mean(x)`` for a unique integer ``x`` with
    ``x[n-1] = 0``; then ``x[i] = lam[i] - lam[n-1]`` and
    ``(lam[i] - lam[j])**2 <= 2 * (lam, lam)`` bounds the box.
    """
    r = Fraction(r)
    if r < 0:
        raise ValueError("radius must be nonnegative")
    b = _floor_sqrt(2 * r)
    out = []
    rng = range(-b, b + 1)
    for head in itertools.product(rng, repeat=n - 1):
        x = head + (0,)
        m = Fraction(sum(x), n)
        w = Weight._raw(tuple(xi - m for xi in x))
        if w.norm2() <= r:
            out.append(w)
    out.sort(key=lambda w: (w.norm2(), w.coords))
    return out


def dominant_weights_in_ball(n: int, r) -> list:
    return [w for w in weights_in_ball(n, r) if is_dominant(w)]


def dominant_grid(n: int, max_coeff: int) -> list:
    """Dominant weights with every fundamental coefficient in ``0..max_coeff``."""
    out = [from_fundamental(n, a) for a in itertools.product(range(max_coeff + 1), repeat=n - 1)]
    out.sort(key=lambda w: (w.norm2(), w.coords))
    return out


def parse_fundamental(n: int, text: str) -> Weight:
    """Parse ``"a1,...,a_{n-1}"`` into a dominant weight."""
    parts = [p for p in text.replace(" ", "").split(",") if p != ""]
    try:
        a = [int(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"bad fundamental coefficients: {text!r}") from exc
    if len(a) == 1 and a[0] == 0 and n > 2:
        a = [0] * (n - 1)
    return from_fundamental(n, a)
