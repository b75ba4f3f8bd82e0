import itertools
import random
from fractions import Fraction

import pytest

from cmmcheck.laurent import LaurentQ, RationalQ
from cmmcheck.macdonald import inner_product_frac, macdonald_poly, norm_direct, phi
from cmmcheck.roots import dominant_grid, dominant_weights_in_ball, Weight
from cmmcheck.verify import (
    CmmInstance,
    cmm_lhs,
    cmm_lhs_integrands,
    cmm_rhs_eq1,
    cmm_rhs_eq8,
    eq7_coefficients,
    random_coefficient_map,
    run_tasks,
    verify_cmm,
    verify_eq7,
    verify_orthogonality,
    verify_symmetry,
)
from cmmcheck.weightpoly import char_reconstruct

from conftest import fw, one, q

SMALL_GRID = [(2, k, 2) for k in (1, 2, 3)] + [(3, 1, 1), (3, 2, 1)]


def qp(e, c=1):
    return LaurentQ.monomial(e, c)


def test_instance_validation():
    with pytest.raises(ValueError):
        CmmInstance(2, 0, Weight.zero(2), Weight.zero(2))
    with pytest.raises(ValueError):
        CmmInstance(2, 1, Weight.zero(3), Weight.zero(2))
    with pytest.raises(ValueError):
        CmmInstance(2, 1, -fw(2, 1), Weight.zero(2))


def test_spot_values():
    z = Weight.zero(2)
    inst = CmmInstance(2, 1, z, z)
    for f in (cmm_lhs, cmm_rhs_eq1, cmm_rhs_eq8):
        assert f(inst) == 1 - q ** 2
    inst = CmmInstance(2, 1, fw(2, 1), z)
    expected = qp(Fraction(1, 2)) - qp(Fraction(9, 2))
    for f in (cmm_lhs, cmm_rhs_eq1, cmm_rhs_eq8):
        assert f(inst) == expected
    r = verify_cmm(CmmInstance(2, 2, z, z))
    assert r.passed
    assert r.lhs == qp(-4) - 1 - q ** 2 + q ** 6
    assert verify_cmm(CmmInstance(3, 1, fw(3, 1, 0), fw(3, 0, 1))).passed


@pytest.mark.parametrize("n, k, mc", SMALL_GRID)
def test_cmm_both_forms(n, k, mc):
    grid = dominant_grid(n, mc)
    for lam, mu in itertools.product(grid, grid):
        inst = CmmInstance(n, k, lam, mu)
        f1, f2, _ = cmm_lhs_integrands(inst)
        assert f1 == f2
        r = verify_cmm(inst)
        assert r.passed, r.to_text()
        assert "eq8_over_eq1" not in r.extra
        assert cmm_rhs_eq1(inst) == cmm_rhs_eq8(inst)


def test_report_modes():
    inst = CmmInstance(2, 2, fw(2, 1), fw(2, 1))
    assert verify_cmm(inst, "eq1").identity == "EQ1"
    assert verify_cmm(inst, "eq8").identity == "EQ8"
    with pytest.raises(ValueError):
        verify_cmm(inst, "eq9")


def test_eq7_trivial_map_is_orthogonality():
    for n, k, mc in SMALL_GRID:
        grid = dominant_grid(n, mc)
        for lam, mu in itertools.product(grid, grid):
            r = verify_eq7(lam, mu, k, {Weight.zero(n): one})
            assert r.passed
            if lam != mu:
                assert r.lhs == 0
            else:
                assert r.lhs == norm_direct(lam, k)


def test_eq7_random_maps(rng):
    for n, k, mc in SMALL_GRID:
        support = dominant_weights_in_ball(n, 4)
        grid = dominant_grid(n, mc)
        for lam, mu in itertools.product(grid, grid):
            a = random_coefficient_map(rng, support)
            assert 1 <= len(a) <= 3
            assert verify_eq7(lam, mu, k, a).passed


def test_eq7_coefficients_reconstruct():
    lam, mu = fw(3, 1, 1), fw(3, 1, 0)
    coeffs, den = eq7_coefficients(lam, mu, 2)
    prod = phi(lam, 2).num * phi(mu, 2).num.bar()
    assert char_reconstruct(3, coeffs) == prod


def test_symmetry_examples():
    z = Weight.zero(2)
    assert verify_symmetry(CmmInstance(2, 2, fw(2, 2), z)).passed
    assert verify_symmetry(CmmInstance(3, 1, fw(3, 1, 0), fw(3, 0, 1))).passed
    assert verify_symmetry(CmmInstance(2, 3, fw(2, 1), fw(2, 1))).passed


def test_orthogonality_reports():
    grid = dominant_grid(3, 1)
    for lam, mu in itertools.product(grid, grid):
        assert verify_orthogonality(lam, mu).passed


def test_run_tasks_order_independent_of_threads():
    tasks = [(verify_symmetry, (CmmInstance(2, 2, a, b),))
             for a in dominant_grid(2, 2) for b in dominant_grid(2, 2)]
    one_t = [r.to_dict() for r in run_tasks(tasks, 1)]
    many = [r.to_dict() for r in run_tasks(tasks, 3)]
    for d in one_t + many:
        d.pop("elapsed_ms")
    assert one_t == many


def test_reports_deterministic():
    inst = CmmInstance(2, 2, fw(2, 1), fw(2, 3))
    a, b = verify_cmm(inst).to_dict(), verify_cmm(inst).to_dict()
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b
    assert a["difference"] == "0"
