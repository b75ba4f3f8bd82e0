"""The group algebra of the weight lattice over Laurent polynomials in ``q``.

Elements are finite sums ``sum c_lam e^lam``.  Weights may be half-integral
(needed for the ``e^{alpha/2}`` factors of the q-deformed Weyl denominator);
constructors that should land in P check that they do.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .laurent import LaurentQ, RationalQ, qbracket
from .roots import (
    Weight,
    inner,
    is_dominant,
    permutations_with_sign,
    root_system,
    signed_orbit,
    weyl_orbit,
)

__all__ = [
    "WeightPoly",
    "FracPoly",
    "NotInvariantError",
    "InexactDivisionError",
    "wp_mul",
    "wp_bar",
    "wp_eval",
    "const_term",
    "weyl_denominator",
    "weyl_alternant",
    "delta_k",
    "weyl_character",
    "q_dimension",
    "q_dimension_product",
    "monomial_symmetric",
    "char_expand",
    "char_reconstruct",
    "phi_zero",
]


class NotInvariantError(ValueError):
    pass


class InexactDivisionError(ArithmeticError):
    """Division in the group algebra left a nonzero remainder."""


def _as_laurent(c) -> LaurentQ:
    return c if isinstance(c, LaurentQ) else LaurentQ.const(c)


class WeightPoly:
    """Immutable finite map ``Weight -> LaurentQ`` with no zero coefficients."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping | None = None):
        self.n = n
        clean = {}
        for w, c in (terms or {}).items():
            if len(w) != n:
                raise ValueError(f"weight {w} does not have rank {n}")
            c = _as_laurent(c)
            if c:
                clean[w] = clean[w] + c if w in clean else c
        self._terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def _make(cls, n: int, terms: dict) -> "WeightPoly":
        obj = object.__new__(cls)
        obj.n = n
        obj._terms = terms
        return obj

    @classmethod
    def monomial(cls, w: Weight, coeff=1) -> "WeightPoly":
        c = _as_laurent(coeff)
        return cls._make(w.n, {w: c} if c else {})

    @classmethod
    def one(cls, n: int) -> "WeightPoly":
        return cls._make(n, {Weight.zero(n): LaurentQ.one()})

    @classmethod
    def zero(cls, n: int) -> "WeightPoly":
        return cls._make(n, {})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def weights(self):
        return self._terms.keys()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, w: Weight) -> LaurentQ:
        return self._terms.get(w, LaurentQ.zero())

    def in_weight_lattice(self) -> bool:
        return all(w.in_weight_lattice() for w in self._terms)

    def sorted_items(self) -> list:
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key())

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "WeightPoly") -> "WeightPoly":
        out = dict(self._terms)
        for w, c in other._terms.items():
            v = out[w] + c if w in out else c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return WeightPoly._make(self.n, out)

    def __neg__(self) -> "WeightPoly":
        return WeightPoly._make(self.n, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "WeightPoly") -> "WeightPoly":
        return self + (-other)

    def scale(self, c) -> "WeightPoly":
        c = _as_laurent(c)
        if not c:
            return WeightPoly.zero(self.n)
        if c == LaurentQ.one():
            return self
        out = {}
        for w, v in self._terms.items():
            p = v * c
            if p:
                out[w] = p
        return WeightPoly._make(self.n, out)

    def shift(self, lam: Weight) -> "WeightPoly":
        """Multiply by ``e^lam``."""
        return WeightPoly._make(self.n, {w + lam: c for w, c in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, WeightPoly):
            return self.scale(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        for wb, cb in b.items():
            cbs = cb
            for wa, ca in a.items():
                w = Weight._raw(tuple(x + y for x, y in zip(wa.coords, wb.coords)))
                p = ca * cbs
                if w in out:
                    out[w] = out[w] + p
                else:
                    out[w] = p
        return WeightPoly._make(self.n, {w: c for w, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> "WeightPoly":
        out = WeightPoly.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def bar(self) -> "WeightPoly":
        return WeightPoly._make(self.n, {-w: c for w, c in self._terms.items()})

    def act(self, perm) -> "WeightPoly":
        """Weyl group action on exponents."""
        return WeightPoly._make(self.n, {w.permute(perm): c for w, c in self._terms.items()})

    def symmetrize(self) -> "WeightPoly":
        """Orbit sum ``sum_w w(f)``."""
        out = WeightPoly.zero(self.n)
        for p, _ in permutations_with_sign(self.n):
            out = out + self.act(p)
        return out

    def is_invariant(self) -> bool:
        for w, c in self._terms.items():
            for v in weyl_orbit(w):
                if self._terms.get(v) != c:
                    return False
        return True

    def const_term(self) -> LaurentQ:
        return self._terms.get(Weight.zero(self.n), LaurentQ.zero())

    def evaluate(self, mu: Weight, scale=1) -> LaurentQ:
        """Substitute ``e^nu -> q^(scale * (nu, mu))``."""
        s = Fraction(scale)
        out = LaurentQ.zero()
        for w, c in self._terms.items():
            out = out + c.shift(s * inner(w, mu))
        return out

    def divexact(self, g: "WeightPoly") -> "WeightPoly":
        """Exact quotient under the lexicographic group order on coordinates."""
        if not g:
            raise ZeroDivisionError("division by zero WeightPoly")
        if not self._terms:
            return self
        lead_w = max(g._terms, key=lambda w: w.coords)
        lead_c = g._terms[lead_w]
        floor = tuple(x - y for x, y in zip(min(self._terms, key=lambda w: w.coords).coords,
                                            min(g._terms, key=lambda w: w.coords).coords))
        rem = dict(self._terms)
        quo = {}
        while rem:
            top = max(rem, key=lambda w: w.coords)
            qw = top - lead_w
            if qw.coords < floor:
                raise InexactDivisionError("nonzero remainder in group-algebra division")
            try:
                qc = rem[top].divexact(lead_c)
            except ArithmeticError as exc:
                raise InexactDivisionError(str(exc)) from exc
            quo[qw] = qc
            for w, c in g._terms.items():
                k = w + qw
                v = rem.get(k, LaurentQ.zero()) - c * qc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return WeightPoly._make(self.n, quo)

    # -- comparisons and rendering -------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*e{w}" for w, c in self.sorted_items())

    def __repr__(self) -> str:
        return f"WeightPoly({self})"

    def __reduce__(self):
        return (WeightPoly._make, (self.n, self._terms))


class FracPoly:
    """``num / den`` with ``num`` a WeightPoly and ``den`` a common LaurentQ denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: WeightPoly, den: LaurentQ | None = None):
        self.num = num
        self.den = LaurentQ.one() if den is None else den
        if not self.den:
            raise ZeroDivisionError("FracPoly with zero denominator")

    @property
    def n(self) -> int:
        return self.num.n

    def __mul__(self, other):
        if isinstance(other, FracPoly):
            return FracPoly(self.num * other.num, self.den * other.den)
        if isinstance(other, WeightPoly):
            return FracPoly(self.num * other, self.den)
        return FracPoly(self.num.scale(other), self.den)

    def bar(self) -> "FracPoly":
        return FracPoly(self.num.bar(), self.den)

    def coeff(self, w: Weight) -> RationalQ:
        return RationalQ(self.num.coeff(w), self.den)

    def evaluate(self, mu: Weight, scale=1) -> RationalQ:
        return RationalQ(self.num.evaluate(mu, scale), self.den)

    def __eq__(self, other) -> bool:
        if isinstance(other, WeightPoly):
            other = FracPoly(other)
        if not isinstance(other, FracPoly):
            return NotImplemented
        return self.num.scale(other.den) == other.num.scale(self.den)

    __hash__ = None

    def __str__(self) -> str:
        if self.den == LaurentQ.one():
            return str(self.num)
        return f"[{self.num}] / ({self.den})"


def wp_mul(f: WeightPoly, g: WeightPoly) -> WeightPoly:
    return f * g


def wp_bar(f: WeightPoly) -> WeightPoly:
    return f.bar()


def wp_eval(f: WeightPoly, mu: Weight, scale=1) -> LaurentQ:
    return f.evaluate(mu, scale)


def const_term(f: WeightPoly) -> LaurentQ:
    return f.const_term()


def _half_factor(alpha: Weight, c: LaurentQ) -> WeightPoly:
    """``e^{alpha/2} - c e^{-alpha/2}``."""
    h = alpha * Fraction(1, 2)
    return WeightPoly._make(alpha.n, {h: LaurentQ.one(), -h: -c})


def weyl_alternant(lam: Weight) -> WeightPoly:
    """``sum_w sign(w) e^{w(lam)}``; zero when ``lam`` is on a wall."""
    orb = signed_orbit(lam)
    if orb.degenerate:
        return WeightPoly.zero(lam.n)
    return WeightPoly._make(lam.n, {w: LaurentQ.const(s) for w, s in orb.terms})


@lru_cache(maxsize=None)
def weyl_denominator(n: int) -> WeightPoly:
    """Product over positive roots of ``e^{a/2} - e^{-a/2}``, checked against the alternant."""
    rs = root_system(n)
    d = WeightPoly.one(n)
    for a in rs.pos_roots:
        d = d * _half_factor(a, LaurentQ.one())
    alt = weyl_alternant(rs.rho)
    if d != alt:
        raise AssertionError("Weyl denominator identity failed")
    return d


@lru_cache(maxsize=None)
def phi_zero(n: int, k: int) -> WeightPoly:
    """Product over positive roots and ``i = 1..k-1`` of ``e^{a/2} - q^{-2i} e^{-a/2}``."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    out = WeightPoly.one(n)
    for a in root_system(n).pos_roots:
        for i in range(1, k):
            out = out * _half_factor(a, LaurentQ.monomial(-2 * i))
    return out


@lru_cache(maxsize=None)
def delta_k(n: int, k: int) -> WeightPoly:
    """The q-deformed k-th power of the Weyl denominator."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    out = WeightPoly.one(n)
    for a in root_system(n).pos_roots:
        for i in range(k):
            out = out * _half_factor(a, LaurentQ.monomial(-2 * i))
    if not out.in_weight_lattice():
        raise AssertionError("delta_k has support outside the weight lattice")
    return out


@lru_cache(maxsize=None)
def weyl_character(nu: Weight) -> WeightPoly:
    """Weyl character, extended to all of P by the alternant quotient.

    Vanishes when ``nu + rho`` lies on a wall.
    """
    if not nu.in_weight_lattice():
        raise ValueError(f"{nu} is not in the weight lattice")
    rho = root_system(nu.n).rho
    alt = weyl_alternant(nu + rho)
    if not alt:
        return WeightPoly.zero(nu.n)
    return alt.divexact(weyl_denominator(nu.n))


def q_dimension(nu: Weight) -> LaurentQ:
    """``chi_nu(q^{2 rho})``."""
    return weyl_character(nu).evaluate(root_system(nu.n).rho, 2)


def q_dimension_product(nu: Weight) -> LaurentQ:
    """Product over positive roots of ``[(nu + rho, a)] / [(rho, a)]``."""
    rs = root_system(nu.n)
    shifted = nu + rs.rho
    num = LaurentQ.one()
    den = LaurentQ.one()
    for a in rs.pos_roots:
        num = num * qbracket(int(inner(shifted, a)))
        den = den * qbracket(int(inner(rs.rho, a)))
    return num.divexact(den)


def monomial_symmetric(mu: Weight) -> WeightPoly:
    return WeightPoly._make(mu.n, {w: LaurentQ.one() for w in weyl_orbit(mu)})


def char_expand(f: WeightPoly) -> dict:
    """Coefficients ``c_nu`` with ``f = sum c_nu chi_nu`` for W-invariant ``f``.

    Peels off the character of the largest remaining dominant weight (largest
    norm, ties broken lexicographically), which is dominance-maximal.
    """
    if not f.in_weight_lattice():
        raise ValueError("char_expand needs support in the weight lattice")
    if not f.is_invariant():
        raise NotInvariantError("char_expand needs a W-invariant element")
    rem = f
    out = {}
    while rem:
        nu = min((w for w in rem.weights() if is_dominant(w)), key=lambda w: w.sort_key())
        c = rem.coeff(nu)
        out[nu] = c
        rem = rem - weyl_character(nu).scale(c)
    return out


def char_reconstruct(n: int, coeffs: Mapping) -> WeightPoly:
    out = WeightPoly.zero(n)
    for nu, c in coeffs.items():
        out = out + weyl_character(nu).scale(c)
    return out

