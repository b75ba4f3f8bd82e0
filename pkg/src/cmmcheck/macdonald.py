"""Macdonald polynomials for A_{n-1} at parameters ``(q^2, t = q^{2k})``.

``P_lam`` is built by orthogonalizing ``m_lam`` against the monomial
symmetric functions of all dominant weights below ``lam``.  The linear
system has Laurent-polynomial entries and is solved by Cramer's rule with
Bareiss determinants, so the result comes out as an integral numerator over
one common denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .laurent import LaurentQ, RationalQ, reduce_fraction
from .roots import Weight, inner, is_dominant, lower_dominant_weights, root_system, weyl_orbit
from .weightpoly import (
    FracPoly,
    WeightPoly,
    delta_k,
    monomial_symmetric,
    phi_zero,
    weyl_denominator,
)

__all__ = [
    "MacdonaldPoly",
    "SingularSystemError",
    "bareiss_det",
    "inner_product_k",
    "inner_product_frac",
    "macdonald_poly",
    "phi",
    "norm_direct",
    "norm_formula",
]


class SingularSystemError(ArithmeticError):
    pass


def bareiss_det(m: list) -> LaurentQ:
    """Determinant of a square matrix of LaurentQ by fraction-free elimination."""
    a = [list(row) for row in m]
    size = len(a)
    if size == 0:
        return LaurentQ.one()
    sign = 1
    prev = LaurentQ.one()
    for k in range(size - 1):
        if not a[k][k]:
            for r in range(k + 1, size):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return LaurentQ.zero()
        piv = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * piv - a[i][k] * a[k][j]).divexact(prev)
            a[i][k] = LaurentQ.zero()
        prev = piv
    return a[-1][-1].scale(sign)


@lru_cache(maxsize=None)
def _weight_func(n: int, k: int) -> WeightPoly:
    d = delta_k(n, k)
    return d * d.bar()


def inner_product_k(f: WeightPoly, g: WeightPoly, n: int, k: int) -> LaurentQ:
    """``(1/|W|) * CT(delta_k * bar(delta_k) * f * bar(g))``."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    wf = _weight_func(n, k) * f
    total = LaurentQ.zero()
    for w, c in g.items():
        v = wf.coeff(w)
        if v:
            total = total + v * c
    return total.scale(Fraction(1, factorial(n)))


def inner_product_frac(f: FracPoly, g: FracPoly, k: int) -> RationalQ:
    return RationalQ(inner_product_k(f.num, g.num, f.n, k), f.den * g.den)


@dataclass(frozen=True)
class MacdonaldPoly:
    lam: Weight
    k: int
    poly: FracPoly
    basis: tuple  # dominant weights mu <= lam, ascending

    @property
    def n(self) -> int:
        return self.lam.n

    def monomial_coeff(self, mu: Weight) -> RationalQ:
        return self.poly.coeff(mu)

    def render(self, expand: bool = False) -> str:
        if expand:
            return f"P{self.lam} = {self.poly}"
        parts = []
        for mu in sorted(self.basis, key=lambda w: w.sort_key()):
            c = self.monomial_coeff(mu)
            if not c:
                continue
            if c == RationalQ(LaurentQ.one()):
                parts.append(f"m{mu}")
            else:
                parts.append(f"({c})*m{mu}")
        return f"P{self.lam} = " + " + ".join(parts)

    def __str__(self) -> str:
        return self.render()


def _gram_row(n: int, k: int, mu: Weight, nus: list) -> list:
    wm = _weight_func(n, k) * monomial_symmetric(mu)
    row = []
    for nu in nus:
        total = LaurentQ.zero()
        for v in weyl_orbit(nu):
            total = total + wm.coeff(v)
        row.append(total)
    return row


@lru_cache(maxsize=None)
def _macdonald_cached(lam: Weight, k: int, reverse: bool) -> MacdonaldPoly:
    n = lam.n
    basis = lower_dominant_weights(lam)
    lower = [mu for mu in basis if mu != lam]
    if reverse:
        lower = lower[::-1]
    num = monomial_symmetric(lam)
    den = LaurentQ.one()
    if lower:
        # G[i][j] = <m_{lower[j]}, m_{lower[i]}> up to the common 1/|W|
        cols = {mu: _gram_row(n, k, mu, lower) for mu in lower + [lam]}
        size = len(lower)
        a = [[cols[lower[j]][i] for j in range(size)] for i in range(size)]
        rhs = [-cols[lam][i] for i in range(size)]
        det = bareiss_det(a)
        if not det:
            raise SingularSystemError(f"singular Gram matrix for lam={lam}, k={k}")
        nums = []
        for j in range(size):
            aj = [row[:j] + [rhs[i]] + row[j + 1:] for i, row in enumerate(a)]
            nums.append(bareiss_det(aj))
        den, nums = reduce_fraction(det, nums)
        num = monomial_symmetric(lam).scale(den)
        for mu, c in zip(lower, nums):
            num = num + monomial_symmetric(mu).scale(c)
    lo = den.min_exp()
    lead = Fraction(den.coeff(lo))
    den = den.shift(-lo).scale(1 / lead)
    num = num.scale(LaurentQ.monomial(-lo, 1 / lead))
    return MacdonaldPoly(lam, k, FracPoly(num, den), tuple(basis))


def macdonald_poly(lam: Weight, k: int, reverse_order: bool = False) -> MacdonaldPoly:
    """``P_lam = m_lam + sum_{mu < lam} c_mu m_mu``, orthogonal to every lower ``m_mu``."""
    if not is_dominant(lam) or not lam.in_weight_lattice():
        raise ValueError(f"{lam} is not a dominant integral weight")
    if k < 1:
        raise ValueError("k must be a positive integer")
    return _macdonald_cached(lam, k, reverse_order)


@lru_cache(maxsize=None)
def _phi_zero_checked(n: int, k: int) -> WeightPoly:
    p0 = phi_zero(n, k)
    if p0 * weyl_denominator(n) != delta_k(n, k):
        raise AssertionError("phi_0 * delta != delta_k")
    return p0


def phi(lam: Weight, k: int) -> FracPoly:
    """Generalized character ``phi_lam = phi_0 * P_lam`` with ``phi_0 = delta_k / delta``."""
    p = macdonald_poly(lam, k)
    return FracPoly(_phi_zero_checked(lam.n, k) * p.poly.num, p.poly.den)


def norm_direct(lam: Weight, k: int) -> RationalQ:
    """``<P_lam, P_lam>_k`` from the constant-term inner product."""
    p = macdonald_poly(lam, k).poly
    return inner_product_frac(p, p, k)


def norm_formula(lam: Weight, k: int) -> RationalQ:
    """Closed product for ``<P_lam, P_lam>_k`` over positive roots and ``i = 1..k-1``."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    rs = root_system(lam.n)
    shifted = lam + rs.rho * k
    num = LaurentQ.one()
    den = LaurentQ.one()
    for a in rs.pos_roots:
        h = inner(a, shifted)
        for i in range(1, k):
            d = LaurentQ.one() - LaurentQ.monomial(-2 * h + 2 * i)
            if not d:
                raise ZeroDivisionError(f"vanishing factor in norm formula at alpha={a}, i={i}")
            num = num * (LaurentQ.one() - LaurentQ.monomial(-2 * h - 2 * i))
            den = den * d
    return RationalQ(num, den)
