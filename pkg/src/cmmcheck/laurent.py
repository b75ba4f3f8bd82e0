"""Exact Laurent polynomials in ``q`` with rational exponents, and their quotients.

A :class:`LaurentQ` is stored on a common exponent grid: an integer ``den``
and a dict mapping integer numerators to coefficients, so that the term
``c * q^(e/den)`` is ``{e: c}``.  The grid is always reduced, which makes the
internal representation canonical and lets ``==`` and ``hash`` work on it
directly.  Coefficients are ``int`` when integral and ``Fraction`` otherwise.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentQ",
    "RationalQ",
    "NotDivisibleError",
    "qbracket",
    "laurent_add",
    "laurent_mul",
    "rational_eq",
    "parse_laurent",
    "parse_rational",
    "laurent_gcd",
    "reduce_fraction",
]

Coeff = Union[int, Fraction]


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division of Laurent polynomials leaves a remainder."""


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _reduce(den: int, terms: dict) -> "LaurentQ":
    # caller guarantees no zero coefficients
    if not terms:
        return LaurentQ._make(1, {})
    g = den
    for e in terms:
        g = gcd(g, e)
        if g == 1:
            break
    if g != 1:
        den //= g
        terms = {e // g: c for e, c in terms.items()}
    return LaurentQ._make(den, terms)


class LaurentQ:
    """Immutable sparse Laurent polynomial in ``q`` with rational exponents."""

    __slots__ = ("_den", "_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        """Build from a mapping ``exponent -> coefficient`` (both rational)."""
        if isinstance(terms, LaurentQ):
            self._den, self._terms, self._hash = terms._den, terms._terms, terms._hash
            return
        fterms = {}
        for e, c in (terms or {}).items():
            e = Fraction(e)
            c = _norm(Fraction(c))
            if c:
                fterms[e] = fterms.get(e, 0) + c
        den = 1
        for e in fterms:
            den = _lcm(den, e.denominator)
        raw = {}
        for e, c in fterms.items():
            c = _norm(c)
            if c:
                raw[int(e * den)] = c
        r = _reduce(den, raw)
        self._den, self._terms, self._hash = r._den, r._terms, None

    @classmethod
    def _make(cls, den: int, terms: dict) -> "LaurentQ":
        obj = object.__new__(cls)
        obj._den = den
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def monomial(cls, exponent=0, coeff=1) -> "LaurentQ":
        e = Fraction(exponent)
        c = _norm(Fraction(coeff))
        if not c:
            return cls._make(1, {})
        return cls._make(e.denominator, {e.numerator: c})

    @classmethod
    def const(cls, c) -> "LaurentQ":
        return cls.monomial(0, c)

    @classmethod
    def zero(cls) -> "LaurentQ":
        return cls._make(1, {})

    @classmethod
    def one(cls) -> "LaurentQ":
        return cls._make(1, {0: 1})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        """Copy of the term map as ``Fraction exponent -> coefficient``."""
        return {Fraction(e, self._den): c for e, c in self._terms.items()}

    def items(self) -> list[tuple[Fraction, Coeff]]:
        """Terms sorted by increasing exponent."""
        return [(Fraction(e, self._den), self._terms[e]) for e in sorted(self._terms)]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, exponent) -> Coeff:
        e = Fraction(exponent) * self._den
        if e.denominator != 1:
            return 0
        return self._terms.get(e.numerator, 0)

    def min_exp(self) -> Fraction:
        if not self._terms:
            raise ValueError("zero polynomial has no minimal exponent")
        return Fraction(min(self._terms), self._den)

    def max_exp(self) -> Fraction:
        if not self._terms:
            raise ValueError("zero polynomial has no maximal exponent")
        return Fraction(max(self._terms), self._den)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant(self) -> Coeff:
        return self._terms.get(0, 0)

    # -- arithmetic ---------------------------------------------------------

    def _on_grid(self, den: int) -> dict:
        if den == self._den:
            return self._terms
        f = den // self._den
        return {e * f: c for e, c in self._terms.items()}

    @staticmethod
    def _coerce(other) -> "LaurentQ":
        if isinstance(other, LaurentQ):
            return other
        if isinstance(other, (int, Rational)):
            return LaurentQ.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        den = _lcm(self._den, other._den)
        out = dict(self._on_grid(den))
        for e, c in other._on_grid(den).items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _norm(v)
            else:
                out.pop(e, None)
        return _reduce(den, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentQ":
        return LaurentQ._make(self._den, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "LaurentQ":
        c = _norm(Fraction(c)) if not isinstance(c, int) else c
        if not c:
            return LaurentQ.zero()
        if c == 1:
            return self
        return LaurentQ._make(self._den, {e: _norm(v * c) for e, v in self._terms.items()})

    def shift(self, exponent) -> "LaurentQ":
        """Multiply by ``q^exponent``."""
        e = Fraction(exponent)
        if not e or not self._terms:
            return self
        den = _lcm(self._den, e.denominator)
        s = e.numerator * (den // e.denominator)
        return _reduce(den, {k + s: c for k, c in self._on_grid(den).items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentQ.zero()
        if len(a) < len(b):
            a, b = b, a
            da, db = other._den, self._den
        else:
            da, db = self._den, other._den
        den = _lcm(da, db)
        fa, fb = den // da, den // db
        if len(b) == 1:
            (eb, cb), = b.items()
            eb *= fb
            return _reduce(den, {e * fa + eb: _norm(c * cb) for e, c in a.items()})
        out: dict = {}
        get = out.get
        bl = [(e * fb, c) for e, c in b.items()]
        for ea, ca in a.items():
            ea *= fa
            for eb, cb in bl:
                k = ea + eb
                out[k] = get(k, 0) + ca * cb
        out = {e: _norm(c) for e, c in out.items() if c}
        return _reduce(den, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentQ":
        if k < 0:
            if self.is_monomial():
                (e, c), = self._terms.items()
                return LaurentQ._make(self._den, {-e: _norm(Fraction(1) / c)}) ** (-k)
            raise ValueError("negative power of a non-monomial")
        result = LaurentQ.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def truncate(self, order) -> "LaurentQ":
        """Drop every term whose exponent exceeds ``order``."""
        lim = Fraction(order) * self._den
        return _reduce(self._den, {e: c for e, c in self._terms.items() if e <= lim})

    def substitute_inverse(self) -> "LaurentQ":
        """``q -> q^{-1}``."""
        return LaurentQ._make(self._den, {-e: c for e, c in self._terms.items()})

    def divexact(self, other: "LaurentQ") -> "LaurentQ":
        """Exact quotient ``self / other``; raises :class:`NotDivisibleError` otherwise."""
        if not other._terms:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self._terms:
            return self
        den = _lcm(self._den, other._den)
        rem = dict(self._on_grid(den))
        dv = other._on_grid(den)
        dtop = max(dv)
        dbot = min(dv)
        lead = Fraction(dv[dtop])
        floor = min(rem) - dbot
        quo = {}
        while rem:
            top = max(rem)
            e = top - dtop
            if e < floor:
                raise NotDivisibleError(f"{self} is not divisible by {other}")
            c = _norm(rem[top] / lead)
            quo[e] = c
            for k, v in dv.items():
                kk = k + e
                w = rem.get(kk, 0) - c * v
                if w:
                    rem[kk] = _norm(w)
                else:
                    rem.pop(kk, None)
        return _reduce(den, quo)

    def content(self) -> Fraction:
        """Positive rational ``c`` such that ``self / c`` has coprime integer coefficients."""
        if not self._terms:
            return Fraction(1)
        num = 0
        dl = 1
        for c in self._terms.values():
            c = Fraction(c)
            num = gcd(num, c.numerator)
            dl = _lcm(dl, c.denominator)
        return Fraction(num, dl)

    def evaluate(self, x) -> Fraction:
        """Value at a positive rational ``q``; integer exponents only."""
        total = Fraction(0)
        for e, c in self.items():
            if e.denominator != 1:
                raise ValueError("evaluation at rational q needs integral exponents")
            total += c * Fraction(x) ** int(e)
        return total

    # -- comparisons and rendering -------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentQ):
            return self._den == other._den and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self == LaurentQ.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._den, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(_render_term(e, c) for e, c in self.items())

    def __repr__(self) -> str:
        return f"LaurentQ({self})"

    def __reduce__(self):
        return (LaurentQ._make, (self._den, self._terms))


def _render_term(e: Fraction, c) -> str:
    cs = str(c)
    if e == 0:
        return cs
    if e.denominator == 1:
        return f"{cs}*q^{e.numerator}"
    return f"{cs}*q^({e.numerator}/{e.denominator})"


_TERM = re.compile(r"^(-?\d+(?:/\d+)?)(?:\*q\^(?:(-?\d+)|\((-?\d+)/(\d+)\)))?$")


def parse_laurent(text: str) -> LaurentQ:
    """Inverse of ``str(LaurentQ)``."""
    text = text.strip()
    if text == "0":
        return LaurentQ.zero()
    terms: dict = {}
    for part in text.split(" + "):
        m = _TERM.match(part.strip())
        if not m:
            raise ValueError(f"bad Laurent term: {part!r}")
        c = Fraction(m.group(1))
        if m.group(2) is not None:
            e = Fraction(int(m.group(2)))
        elif m.group(3) is not None:
            e = Fraction(int(m.group(3)), int(m.group(4)))
        else:
            e = Fraction(0)
        terms[e] = terms.get(e, 0) + c
    return LaurentQ(terms)


def laurent_add(a: LaurentQ, b: LaurentQ) -> LaurentQ:
    return a + b


def laurent_mul(a: LaurentQ, b: LaurentQ) -> LaurentQ:
    return a * b


def qbracket(m: int) -> LaurentQ:
    """The quantum integer ``[m] = (q^m - q^-m) / (q - q^-1)``."""
    if m == 0:
        return LaurentQ.zero()
    if m < 0:
        return -qbracket(-m)
    return LaurentQ._make(1, {e: 1 for e in range(1 - m, m, 2)})


class RationalQ:
    """Quotient ``num / den`` of Laurent polynomials.

    The denominator is normalized so that its lowest term is ``1 * q^0``.
    No cancellation of common factors is attempted; equality is decided by
    cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = LaurentQ._coerce(num) if not isinstance(num, LaurentQ) else num
        if den is None:
            den = LaurentQ.one()
        elif not isinstance(den, LaurentQ):
            den = LaurentQ._coerce(den)
        if not den:
            raise ZeroDivisionError("RationalQ with zero denominator")
        lo = den.min_exp()
        lead = Fraction(den.coeff(lo))
        if lo != 0 or lead != 1:
            inv = 1 / lead
            den = den.shift(-lo).scale(inv)
            num = num.shift(-lo).scale(inv)
        if not num:
            den = LaurentQ.one()
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, x) -> "RationalQ":
        if isinstance(x, RationalQ):
            return x
        return cls(x)

    def is_laurent(self) -> bool:
        return self.den == LaurentQ.one()

    def simplify(self) -> "RationalQ":
        """Return ``num/den`` as a Laurent polynomial over 1 when ``den`` divides ``num``."""
        if self.is_laurent():
            return self
        try:
            return RationalQ(self.num.divexact(self.den))
        except NotDivisibleError:
            return self

    def to_laurent(self) -> LaurentQ:
        s = self.simplify()
        if not s.is_laurent():
            raise NotDivisibleError(f"{self} is not a Laurent polynomial")
        return s.num

    def __add__(self, other):
        other = RationalQ.coerce(other)
        if self.den == other.den:
            return RationalQ(self.num + other.num, self.den)
        return RationalQ(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalQ(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalQ.coerce(other))

    def __rsub__(self, other):
        return RationalQ.coerce(other) - self

    def __mul__(self, other):
        other = RationalQ.coerce(other)
        return RationalQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalQ.coerce(other)
        if not other.num:
            raise ZeroDivisionError("division by zero RationalQ")
        return RationalQ(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RationalQ.coerce(other) / self

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (RationalQ, LaurentQ, int, Rational)):
            other = RationalQ.coerce(other)
            return self.num * other.den == other.num * self.den
        return NotImplemented

    __hash__ = None  # equality is not structural

    def __str__(self) -> str:
        if self.is_laurent():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalQ({self})"


def rational_eq(a: RationalQ, b: RationalQ) -> bool:
    return RationalQ.coerce(a) == RationalQ.coerce(b)


def parse_rational(text: str) -> RationalQ:
    """Inverse of ``str(RationalQ)``."""
    text = text.strip()
    if text.startswith("("):
        m = re.match(r"^\((.*)\)/\((.*)\)$", text)
        if not m:
            raise ValueError(f"bad rational: {text!r}")
        return RationalQ(parse_laurent(m.group(1)), parse_laurent(m.group(2)))
    return RationalQ(parse_laurent(text))


def q_power(exponent) -> LaurentQ:
    return LaurentQ.monomial(exponent)


def product(factors: Iterable) -> LaurentQ:
    out = LaurentQ.one()
    for f in factors:
        out = out * f
    return out


def _prim_poly(p: LaurentQ, den: int) -> list:
    """Dense integer coefficient list (low to high) of ``p`` on grid ``den``, content removed."""
    terms = p._on_grid(den)
    lo = min(terms)
    hi = max(terms)
    dl = 1
    for c in terms.values():
        if type(c) is Fraction:
            dl = _lcm(dl, c.denominator)
    out = [0] * (hi - lo + 1)
    for e, c in terms.items():
        out[e - lo] = int(c * dl)
    g = 0
    for c in out:
        g = gcd(g, c)
    return [c // g for c in out]


def _poly_prem_gcd(a: list, b: list) -> list:
    # primitive PRS over Z on dense low-to-high coefficient lists
    if len(a) < len(b):
        a, b = b, a
    while b and any(b):
        lb = b[-1]
        r = list(a)
        while len(r) >= len(b) and any(r):
            lr = r[-1]
            shift = len(r) - len(b)
            r = [x * lb for x in r]
            for i, c in enumerate(b):
                r[i + shift] -= c * lr
            while r and r[-1] == 0:
                r.pop()
        while r and r[-1] == 0:
            r.pop()
        if r:
            g = 0
            for c in r:
                g = gcd(g, c)
            r = [c // g for c in r]
        a, b = b, r
    while a and a[0] == 0:
        a = a[1:]
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def laurent_gcd(a: LaurentQ, b: LaurentQ) -> LaurentQ:
    """Primitive polynomial gcd with lowest exponent 0 and positive top coefficient."""
    if not a:
        a, b = b, a
    if not a:
        return LaurentQ.zero()
    den = _lcm(a._den, b._den) if b else a._den
    pa = _prim_poly(a, den)
    if not b:
        g = pa
    else:
        g = _poly_prem_gcd(pa, _prim_poly(b, den))
    while g and g[0] == 0:
        g = g[1:]
    if g[-1] < 0:
        g = [-c for c in g]
    return _reduce(den, {i: c for i, c in enumerate(g) if c})


def reduce_fraction(den: LaurentQ, nums: list) -> tuple:
    """Cancel the common polynomial and scalar factor of ``den`` and every entry of ``nums``."""
    g = den
    for x in nums:
        if g.is_constant():
            break
        if x:
            g = laurent_gcd(g, x)
    if not g.is_constant():
        g = laurent_gcd(g, g)
        den = den.divexact(g)
        nums = [x.divexact(g) for x in nums]
    c = den.content()
    for x in nums:
        if x:
            c = Fraction(gcd(c.numerator, x.content().numerator),
                         _lcm(c.denominator, x.content().denominator))
    if c != 1:
        den = den.scale(1 / c)
        nums = [x.scale(1 / c) for x in nums]
    return den, nums
