"""The Gaussian ``sum_{lam in P} e^lam q^{lam^2}`` of the weight lattice.

Pairing a finitely supported element against the Gaussian under the
constant-term functional is a finite sum, so it is computed exactly.  The
series identities (the character expansion of the Gaussian, its sl_2
instance, and the shift property under evaluation) are compared up to an
explicit q-order at which both truncated sides are known to be complete.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentQ, qbracket
from .report import VerificationReport, make_report, stopwatch
from .roots import (
    Weight,
    ceil_sqrt,
    dominant_weights_in_ball,
    from_fundamental,
    inner,
    root_system,
    weights_in_ball,
)
from .weightpoly import WeightPoly, q_dimension, weyl_character

__all__ = [
    "TruncatedGaussian",
    "gaussian_pairing",
    "gaussian_truncated",
    "prop1_coefficient_check",
    "prop1_prefactor",
    "verify_eq5",
    "gaussian_eval_property",
]


class HalfWeightError(ValueError):
    pass


def gaussian_pairing(f: WeightPoly) -> LaurentQ:
    """``CT(f * gamma) = sum_lam f_{-lam} q^{lam^2}``."""
    total = LaurentQ.zero()
    for w, c in f.items():
        if not w.in_weight_lattice():
            raise HalfWeightError(f"{w} is not in the weight lattice")
        total = total + c.shift(w.norm2())
    return total


@dataclass(frozen=True)
class TruncatedGaussian:
    n: int
    order: Fraction
    terms: WeightPoly


def gaussian_truncated(n: int, order) -> TruncatedGaussian:
    order = Fraction(order)
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    terms = {w: LaurentQ.monomial(w.norm2()) for w in weights_in_ball(n, order)}
    return TruncatedGaussian(n, order, WeightPoly._make(n, terms))


def prop1_prefactor(n: int) -> LaurentQ:
    rs = root_system(n)
    out = LaurentQ.one()
    for a in rs.pos_roots:
        out = out * (LaurentQ.one() - LaurentQ.monomial(2 * inner(a, rs.rho)))
    return out


def prop1_coefficient_check(n: int, mu: Weight, order) -> VerificationReport:
    """Coefficient of ``e^mu`` in the Gaussian vs. its character expansion, up to ``q^order``.

    The term for dominant ``nu`` has lowest q-exponent ``(nu, nu + 2 rho)``
    minus the top degree ``2 (nu, rho)`` of its quantum dimension, i.e.
    ``nu^2``, so only ``nu`` in the ball of radius ``order`` contribute.
    """
    order = Fraction(order)
    with stopwatch() as t:
        rho = root_system(n).rho
        m2 = mu.norm2()
        lhs = LaurentQ.monomial(m2) if m2 <= order else LaurentQ.zero()
        series = LaurentQ.zero()
        for nu in dominant_weights_in_ball(n, order):
            c = weyl_character(nu).coeff(mu)
            if not c:
                continue
            series = series + (q_dimension(nu) * c).shift(inner(nu, nu + rho * 2))
        rhs = (prop1_prefactor(n) * series).truncate(order)
    return make_report("PROP1", {"n": n, "mu": mu, "order": order}, lhs, rhs, t[0])


def verify_eq5(order) -> VerificationReport:
    """The sl_2 instance, with ``x = e^{omega_1}``, multiplied through by ``1 - q^2``.

    Built from integers ``m`` and ``l`` directly rather than from the
    general machinery.
    """
    order = Fraction(order)
    with stopwatch() as t:
        w1 = from_fundamental(2, [1])
        one_minus_q2 = LaurentQ.one() - LaurentQ.monomial(2)
        lhs = {}
        m = 0
        while Fraction(m * m, 2) <= order:
            c = qbracket(m + 1).shift(Fraction(m * (m + 2), 2)) * one_minus_q2
            for j in range(m + 1):
                lhs[m - 2 * j] = lhs.get(m - 2 * j, LaurentQ.zero()) + c
            m += 1
        rhs = {}
        l = 0
        while Fraction(l * l, 2) <= order:
            for s in {l, -l}:
                rhs[s] = LaurentQ.monomial(Fraction(l * l, 2))
            l += 1
        lhs_wp = WeightPoly(2, {w1 * p: c.truncate(order) for p, c in lhs.items()})
        rhs_wp = WeightPoly(2, {w1 * p: c.truncate(order) for p, c in rhs.items()})
    return make_report("EQ5", {"order": order}, lhs_wp, rhs_wp, t[0])


def _complete_order(order: Fraction, s: Weight) -> Fraction:
    """Largest q-exponent below which evaluating the ball-truncated Gaussian at ``q^{2s}`` is exact.

    Outside the ball, ``mu^2 + 2(mu, s) >= |mu|^2 - 2|mu||s|``, which is
    increasing for ``|mu| >= |s|`` and exceeds ``order - 2 sqrt(order)|s|``.
    """
    s2 = s.norm2()
    if order <= s2:
        raise ValueError(f"truncation order {order} must exceed |s|^2 = {s2}")
    return order - ceil_sqrt(4 * order * s2)


def gaussian_eval_property(lam: Weight, order) -> VerificationReport:
    """``gamma(q^{2(lam+rho)}) = q^{-(lam, lam+2rho)} gamma(q^{2rho})`` up to a guaranteed order."""
    order = Fraction(order)
    with stopwatch() as t:
        n = lam.n
        rho = root_system(n).rho
        s = lam + rho
        ball = gaussian_truncated(n, order).terms
        shift = -inner(lam, lam + rho * 2)
        cmp_order = min(_complete_order(order, s), _complete_order(order, rho) + shift)
        lhs = ball.evaluate(s, 2).truncate(cmp_order)
        rhs = ball.evaluate(rho, 2).shift(shift).truncate(cmp_order)
    return make_report("GAUSS_EVAL", {"n": n, "lambda": lam, "order": order}, lhs, rhs, t[0],
                       compared_order=str(cmp_order), shift=str(shift))
