import itertools
from fractions import Fraction

import pytest
import sympy

from cmmcheck.laurent import LaurentQ, qbracket
from cmmcheck.roots import (
    Weight,
    dominant_grid,
    dominant_weights_in_ball,
    permutations_with_sign,
    root_system,
    weights_in_ball,
)
from cmmcheck.weightpoly import (
    InexactDivisionError,
    NotInvariantError,
    WeightPoly,
    char_expand,
    char_reconstruct,
    const_term,
    delta_k,
    monomial_symmetric,
    q_dimension,
    q_dimension_product,
    weyl_alternant,
    weyl_character,
    weyl_denominator,
    wp_bar,
    wp_eval,
    wp_mul,
)
from cmmcheck.macdonald import inner_product_k

from conftest import W, fw, one, q


def e(w, c=1):
    return WeightPoly.monomial(w, c)


def test_mul_examples():
    w1 = fw(2, 1)
    n2 = Weight.zero(2)
    assert wp_mul(e(w1), e(-w1)) == e(n2)
    d = weyl_denominator(2)
    alpha = W(1, -1)
    assert d * d == WeightPoly(2, {alpha: 1, n2: -2, -alpha: 1})
    f = d + e(n2, q)
    assert f * WeightPoly.one(2) == f


def test_bar_examples():
    w1 = fw(2, 1)
    assert wp_bar(e(w1)) == e(-w1)
    assert wp_bar(e(Weight.zero(2), q)) == e(Weight.zero(2), q)
    assert wp_bar(weyl_denominator(2)) == -weyl_denominator(2)


def test_eval_examples():
    w1 = fw(2, 1)
    rho = root_system(2).rho
    assert wp_eval(e(w1), rho, 2) == q
    f = WeightPoly(2, {w1: q, -w1: 3, Weight.zero(2): q ** 2})
    assert wp_eval(f, Weight.zero(2)) == q + 3 + q ** 2
    assert wp_eval(weyl_character(w1), rho, 2) == q + LaurentQ.monomial(-1)


def test_const_term_examples():
    alpha = W(1, -1)
    z = Weight.zero(2)
    assert const_term(e(fw(2, 1))) == LaurentQ.zero()
    assert const_term(WeightPoly(2, {z: 2, alpha: -1, -alpha: -1})) == 2
    assert const_term(WeightPoly.zero(2)) == LaurentQ.zero()


def test_weyl_denominator():
    w1 = fw(2, 1)
    assert weyl_denominator(2) == e(w1) - e(-w1)
    d3 = weyl_denominator(3)
    assert len(d3) == 6 and d3 == weyl_alternant(root_system(3).rho)
    d = weyl_denominator(2)
    assert const_term(d * d.bar()) == 2


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bar_antisymmetry_of_delta(n):
    d = weyl_denominator(n)
    assert d.bar() == d.scale((-1) ** root_system(n).num_pos_roots)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_delta_k1_is_alternant(n):
    assert delta_k(n, 1) == weyl_alternant(root_system(n).rho)


def test_delta_k_examples():
    alpha = W(1, -1)
    z = Weight.zero(2)
    qm2 = LaurentQ.monomial(-2)
    assert delta_k(2, 2) == WeightPoly(2, {alpha: 1, z: -(one + qm2), -alpha: qm2})
    d2 = delta_k(2, 2)
    assert const_term(d2 * d2.bar()).scale(Fraction(1, 2)) == one + qm2 + qm2 * qm2
    with pytest.raises(ValueError):
        delta_k(2, 0)


def test_delta_k_constant_term_oracle():
    # independent expansion in sympy with x = e^{alpha/2}
    x, qs = sympy.symbols("x q")
    for k in (1, 2, 3):
        expr = 1
        for i in range(k):
            expr *= (x - qs ** (-2 * i) / x) * (1 / x - qs ** (-2 * i) * x)
        ct = sympy.expand(sympy.expand(expr).coeff(x, 0) * qs ** (4 * k))
        expected = LaurentQ({deg - 4 * k: int(c) for (deg,), c in sympy.Poly(ct, qs).terms()})
        d = delta_k(2, k)
        assert const_term(d * d.bar()) == expected
        assert all(w.in_weight_lattice() for w in d.weights())


def test_weyl_character_examples():
    w1 = fw(2, 1)
    assert weyl_character(w1) == e(w1) + e(-w1)
    assert weyl_character(-w1) == WeightPoly.zero(2)
    assert weyl_character(Weight.zero(3)) == WeightPoly.one(3)
    with pytest.raises(ValueError):
        weyl_character(W(Fraction(1, 4), Fraction(-1, 4)))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_wall_vanishing_and_shifted_sign(n, rng):
    rho = root_system(n).rho
    ws = weights_in_ball(n, 5 if n < 4 else 3)
    for nu in rng.sample(ws, min(25, len(ws))):
        chi = weyl_character(nu)
        if not (nu + rho).is_regular():
            assert chi == WeightPoly.zero(n)
        for perm, sign in rng.sample(list(permutations_with_sign(n)), min(6, len(permutations_with_sign(n)))):
            dotted = (nu + rho).permute(perm) - rho
            assert weyl_character(dotted) == chi.scale(sign)


def test_alternant_division_exactness():
    d = weyl_denominator(3)
    for nu in dominant_grid(3, 2):
        alt = weyl_alternant(nu + root_system(3).rho)
        assert weyl_character(nu) * d == alt
    bad = e(W(1, 0, -1))
    with pytest.raises(InexactDivisionError):
        bad.divexact(d)


def test_q_dimension_examples():
    assert q_dimension(Weight.zero(3)) == one
    assert q_dimension(fw(2, 1)) == qbracket(2)
    assert q_dimension_product(fw(2, 1)) == qbracket(2)
    assert q_dimension(fw(2, 2)) == qbracket(3)


@pytest.mark.parametrize("n", [2, 3])
def test_q_dimension_two_ways(n):
    for nu in dominant_weights_in_ball(n, 8):
        assert q_dimension(nu) == q_dimension_product(nu)


def test_monomial_symmetric():
    assert monomial_symmetric(Weight.zero(2)) == WeightPoly.one(2)
    w1 = fw(2, 1)
    assert monomial_symmetric(w1) == e(w1) + e(-w1)
    m = monomial_symmetric(root_system(3).rho)
    assert len(m) == 6 and all(c == one for _, c in m.items())


def test_char_expand_examples():
    w1 = fw(2, 1)
    assert char_expand(weyl_character(w1)) == {w1: one}
    c = weyl_character(w1)
    assert char_expand(c * c) == {fw(2, 2): one, Weight.zero(2): one}
    assert char_expand(WeightPoly.one(2)) == {Weight.zero(2): one}
    with pytest.raises(NotInvariantError):
        char_expand(e(w1))


@pytest.mark.parametrize("n, mc", [(2, 3), (3, 2)])
def test_char_expand_reconstructs_products(n, mc):
    grid = dominant_grid(n, mc)
    for a, b in itertools.combinations_with_replacement(grid, 2):
        f = weyl_character(a) * weyl_character(b).scale(q + 2)
        coeffs = char_expand(f)
        assert char_reconstruct(n, coeffs) == f


@pytest.mark.parametrize("n, mc", [(2, 3), (3, 2)])
def test_character_orthogonality(n, mc):
    grid = dominant_grid(n, mc)
    for a, b in itertools.product(grid, repeat=2):
        v = inner_product_k(weyl_character(a), weyl_character(b), n, 1)
        assert v == (one if a == b else LaurentQ.zero())


def test_group_algebra_ring_axioms(rng):
    ws = weights_in_ball(3, 2)
    def rand():
        return WeightPoly(3, {rng.choice(ws): LaurentQ.monomial(rng.randint(-2, 2), rng.randint(-3, 3))
                              for _ in range(4)})
    for _ in range(20):
        a, b, c = rand(), rand(), rand()
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a * b).bar() == a.bar() * b.bar()
        assert a.bar().bar() == a
