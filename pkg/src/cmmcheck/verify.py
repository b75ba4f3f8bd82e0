"""Exact checks of the Cherednik-Macdonald-Mehta identities and their corollaries.

Each ``verify_*`` function builds both sides of one identity instance from
independent code paths and returns a :class:`VerificationReport`.  There is
no tolerance anywhere: values are Laurent polynomials or quotients of them
and compared exactly.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Mapping

from .gaussian import gaussian_pairing, prop1_prefactor
from .laurent import LaurentQ, RationalQ
from .macdonald import inner_product_k, macdonald_poly, norm_direct, norm_formula, phi
from .report import VerificationReport, make_report, stopwatch
from .roots import Weight, inner, is_dominant, root_system, star
from .weightpoly import (
    WeightPoly,
    char_expand,
    char_reconstruct,
    delta_k,
    q_dimension,
    weyl_character,
    weyl_denominator,
)

__all__ = [
    "CmmInstance",
    "FormMismatchError",
    "cmm_lhs",
    "cmm_lhs_integrands",
    "cmm_rhs_eq1",
    "cmm_rhs_eq8",
    "verify_cmm",
    "verify_eq7",
    "verify_symmetry",
    "verify_norm",
    "verify_orthogonality",
    "eq7_coefficients",
    "random_coefficient_map",
    "run_tasks",
]


class FormMismatchError(AssertionError):
    """The two constructions of the same quantity disagreed."""


@dataclass(frozen=True)
class CmmInstance:
    n: int
    k: int
    lam: Weight
    mu: Weight

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be a positive integer")
        for w in (self.lam, self.mu):
            if w.n != self.n:
                raise ValueError(f"weight {w} does not have rank {self.n}")
            if not (w.in_weight_lattice() and is_dominant(w)):
                raise ValueError(f"{w} is not a dominant integral weight")

    def swapped(self) -> "CmmInstance":
        return CmmInstance(self.n, self.k, self.mu, self.lam)

    def params(self) -> dict:
        return {"n": self.n, "k": self.k, "lambda": self.lam, "mu": self.mu}


def _weyl_order(n: int) -> int:
    return factorial(n)


def cmm_lhs_integrands(inst: CmmInstance) -> tuple:
    """The two numerators ``delta_k bar(delta_k) P bar(P)`` and ``delta bar(delta) phi bar(phi)``.

    Both share the denominator ``den(P_lam) * den(P_mu)``.
    """
    p_l = macdonald_poly(inst.lam, inst.k).poly
    p_m = macdonald_poly(inst.mu, inst.k).poly
    dk = delta_k(inst.n, inst.k)
    f1 = dk * dk.bar() * p_l.num * p_m.num.bar()
    d = weyl_denominator(inst.n)
    f_l = phi(inst.lam, inst.k)
    f_m = phi(inst.mu, inst.k)
    f2 = d * d.bar() * f_l.num * f_m.num.bar()
    return f1, f2, p_l.den * p_m.den


def cmm_lhs(inst: CmmInstance) -> RationalQ:
    """``(1/|W|) CT(delta_k bar(delta_k) P_lam bar(P_mu) gamma)``, computed in both forms."""
    f1, f2, den = cmm_lhs_integrands(inst)
    v1 = gaussian_pairing(f1)
    v2 = gaussian_pairing(f2)
    if v1 != v2:
        raise FormMismatchError(f"delta_k-form and phi-form disagree for {inst}")
    return RationalQ(v1.scale(Fraction(1, _weyl_order(inst.n))), den).simplify()


def _q(e) -> LaurentQ:
    return LaurentQ.monomial(e)


def cmm_rhs_eq1(inst: CmmInstance) -> RationalQ:
    n, k, lam, mu = inst.n, inst.k, inst.lam, inst.mu
    rs = root_system(n)
    lk = lam + rs.rho * k
    pre = _q(lam.norm2() + inner(mu, mu + rs.rho * (2 * k)) - 2 * k * (k - 1) * rs.num_pos_roots)
    for a in rs.pos_roots:
        h = inner(a, lk)
        for i in range(k):
            pre = pre * (LaurentQ.one() - _q(2 * h + 2 * i))
    value = macdonald_poly(mu, k).poly.evaluate(lk, -2)
    return (value * pre).simplify()


def cmm_rhs_eq8(inst: CmmInstance) -> RationalQ:
    n, k, lam, mu = inst.n, inst.k, inst.lam, inst.mu
    rs = root_system(n)
    lk = lam + rs.rho * k
    mk = mu + rs.rho * k
    norm = norm_direct(lam, k)
    if norm != norm_formula(lam, k):
        raise FormMismatchError(f"norm formula disagrees with <P,P>_k for lam={lam}, k={k}")
    pre = _q(lk.norm2() + mk.norm2() - 2 * rs.rho.norm2()) * prop1_prefactor(n)
    pre = pre * q_dimension(lam + rs.rho * (k - 1))
    value = phi(mu, k).evaluate(lk, -2) * norm
    return (value * pre).simplify()


def _monomial_ratio(a: RationalQ, b: RationalQ):
    """``a / b`` rendered when it is a single monomial, else ``None``."""
    if not a or not b:
        return None
    r = (a / b).simplify()
    if r.is_laurent() and r.num.is_monomial():
        return str(r.num)
    return None


def verify_cmm(inst: CmmInstance, form: str = "both") -> VerificationReport:
    """LHS against the RHS of the Macdonald-polynomial form, the renormalized form, or both."""
    with stopwatch() as t:
        lhs = cmm_lhs(inst)
        r1 = cmm_rhs_eq1(inst) if form in ("both", "eq1") else None
        r8 = cmm_rhs_eq8(inst) if form in ("both", "eq8") else None
    extra = {}
    if form == "both":
        ok = lhs == r1 and lhs == r8
        extra["rhs_eq8"] = str(r8)
        if r1 != r8:
            extra["eq8_over_eq1"] = _monomial_ratio(r8, r1) or "not a monomial"
        rhs = r1
        ident = "EQ1"
    elif form == "eq1":
        rhs, ident = r1, "EQ1"
    elif form == "eq8":
        rhs, ident = r8, "EQ8"
    else:
        raise ValueError(f"unknown form {form!r}")
    rep = make_report(ident, inst.params(), lhs, rhs, t[0], **extra)
    if form == "both":
        rep.passed = ok
    if not rep.passed and lhs != rhs:
        rep.extra["rhs_over_lhs"] = _monomial_ratio(rhs, lhs) or "not a monomial"
    return rep


def eq7_coefficients(lam: Weight, mu: Weight, k: int) -> tuple:
    """``C^nu_{lam mu}`` as numerators over the common denominator, from ``phi_lam bar(phi_mu)``."""
    f_l = phi(lam, k)
    f_m = phi(mu, k)
    prod = f_l.num * f_m.num.bar()
    coeffs = char_expand(prod)
    if char_reconstruct(lam.n, coeffs) != prod:
        raise FormMismatchError("character expansion does not reconstruct its input")
    return coeffs, f_l.den * f_m.den


def verify_eq7(lam: Weight, mu: Weight, k: int, a: Mapping) -> VerificationReport:
    """``(1/|W|) CT(delta bar(delta) phi_lam bar(phi_mu) sum a_nu chi_nu) = sum a_{nu*} C^nu``."""
    n = lam.n
    with stopwatch() as t:
        f_l = phi(lam, k)
        f_m = phi(mu, k)
        d = weyl_denominator(n)
        test_fn = WeightPoly.zero(n)
        for nu, c in a.items():
            test_fn = test_fn + weyl_character(nu).scale(c)
        integrand = d * d.bar() * f_l.num * f_m.num.bar() * test_fn
        den = f_l.den * f_m.den
        lhs = RationalQ(integrand.const_term().scale(Fraction(1, _weyl_order(n))), den).simplify()
        coeffs, cden = eq7_coefficients(lam, mu, k)
        total = LaurentQ.zero()
        for nu, c in coeffs.items():
            total = total + c * _as_laurent(a.get(star(nu), 0))
        rhs = RationalQ(total, cden).simplify()
    params = {"n": n, "k": k, "lambda": lam, "mu": mu,
              "a": {str(nu): str(_as_laurent(c)) for nu, c in sorted(a.items(), key=lambda t: t[0].sort_key())}}
    return make_report("EQ7", params, lhs, rhs, t[0])


def _as_laurent(c) -> LaurentQ:
    return c if isinstance(c, LaurentQ) else LaurentQ.const(c)


def verify_symmetry(inst: CmmInstance) -> VerificationReport:
    with stopwatch() as t:
        lhs = cmm_rhs_eq8(inst)
        rhs = cmm_rhs_eq8(inst.swapped())
    return make_report("SYMMETRY", inst.params(), lhs, rhs, t[0])


def verify_norm(lam: Weight, k: int) -> VerificationReport:
    with stopwatch() as t:
        lhs = norm_direct(lam, k).simplify()
        rhs = norm_formula(lam, k).simplify()
    return make_report("NORM", {"n": lam.n, "k": k, "lambda": lam}, lhs, rhs, t[0])


def verify_orthogonality(lam: Weight, mu: Weight) -> VerificationReport:
    """``<chi_lam, chi_mu>_1`` against the Kronecker delta."""
    with stopwatch() as t:
        lhs = inner_product_k(weyl_character(lam), weyl_character(mu), lam.n, 1)
        rhs = LaurentQ.one() if lam == mu else LaurentQ.zero()
    return make_report("ORTHO", {"n": lam.n, "lambda": lam, "mu": mu}, lhs, rhs, t[0])


def random_coefficient_map(rng: random.Random, support: list, max_points: int = 3) -> dict:
    """At most ``max_points`` dominant weights with small random Laurent coefficients."""
    size = rng.randint(1, min(max_points, len(support)))
    out = {}
    for nu in rng.sample(support, size):
        c = LaurentQ.zero()
        for _ in range(rng.randint(1, 3)):
            c = c + LaurentQ.monomial(rng.randint(-3, 3), rng.choice([-2, -1, 1, 2, 3]))
        out[nu] = c if c else LaurentQ.one()
    return out


def _call(task):
    fn, args = task
    return fn(*args)


def default_threads() -> int:
    env = os.environ.get("CMM_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_tasks(tasks: Iterable[tuple[Callable, tuple]], threads: int = 1) -> list:
    """Run ``fn(*args)`` for each task; results come back in task order regardless of ``threads``."""
    tasks = list(tasks)
    if threads <= 1 or len(tasks) <= 1:
        return [_call(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_call, tasks, chunksize=max(1, len(tasks) // (4 * threads))))
