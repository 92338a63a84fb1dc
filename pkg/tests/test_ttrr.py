import random
from fractions import Fraction

import pytest

from qclassical import (QParam, RegularityError, TabulatedSource, XPoly,
                        apply_functional, expand_monic, limit_source,
                        moments, pearson_from_head, pearson_residual,
                        recover_coeffs, remark_source)
from qclassical.ttrr import InsufficientDataError

from conftest import fixture_suite, oracle_moments

F = Fraction


@pytest.fixture
def cqh(qp_half):
    return limit_source("cts_q_hermite", qp_half)


def test_expand_monic_first_steps(qp_half, cqh):
    src = TabulatedSource(qp_half, B=["2/3", "1/5"], C=["1/7"])
    assert expand_monic(src, 0) == XPoly.const(F(1))
    assert expand_monic(src, 1) == XPoly((F(-2, 3), F(1)))
    assert expand_monic(cqh, 2) == XPoly((F(-3, 16), F(0), F(1)))
    assert expand_monic(cqh, 3) == XPoly((F(0), F(-27, 64), F(0), F(1)))


def test_expand_monic_is_monic_of_right_degree(cqh):
    for n in range(9):
        p = expand_monic(cqh, n)
        assert p.degree == n
        assert p.coeff(n) == 1


def test_tabulated_rejects_zero_c(qp_half):
    with pytest.raises(RegularityError):
        TabulatedSource(qp_half, B=["0", "0"], C=["0"])


def test_tabulated_order_limit(qp_half):
    src = TabulatedSource(qp_half, B=["0", "0"], C=["1/4"])
    assert src.max_order == 1
    with pytest.raises(InsufficientDataError):
        src.B(2)
    with pytest.raises(InsufficientDataError):
        src.C(2)


def test_moments_examples(cqh):
    table = moments(cqh, 6)
    assert table.mu[0] == 1
    assert table.mu[1] == 0
    assert table.mu[2] == F(3, 16)
    assert table.mu[4] == F(81, 1024)
    assert table.mu[1] == cqh.B(0)


def test_moments_match_triangular_oracle(qp_half):
    for name, src in fixture_suite(qp_half):
        table = moments(src, 8)
        assert table.mu == oracle_moments(src, 8), name


def test_kappa_product_law(qp_half):
    for name, src in fixture_suite(qp_half):
        table = moments(src, 10)
        prod = F(1)
        for n in range(1, 11):
            prod *= src.C(n)
            assert table.kappa[n] == prod, name


def test_apply_functional_examples(qp_half, cqh):
    table = moments(cqh, 8)
    assert apply_functional(table, XPoly.const(F(1))) == 1
    assert apply_functional(table, XPoly.x_power(1)) == 0
    p2 = expand_monic(cqh, 2)
    assert apply_functional(table, p2 * p2) == F(45, 1024)
    with pytest.raises(InsufficientDataError):
        apply_functional(table, XPoly.x_power(9))


def test_orthogonality_brute_force(qp_half):
    for name, src in fixture_suite(qp_half):
        table = moments(src, 10)
        polys = [expand_monic(src, n) for n in range(6)]
        for n in range(6):
            for m in range(n):
                if n + m <= 10:
                    assert apply_functional(table, polys[n] * polys[m]) == 0, \
                        (name, n, m)


def test_recover_coeffs(qp_half, cqh):
    table = moments(cqh, 12)
    assert recover_coeffs(table, cqh, 0) == (F(0), F(3, 16))
    assert recover_coeffs(table, cqh, 1) == (F(0), F(15, 64))
    for name, src in fixture_suite(qp_half):
        tbl = moments(src, 12)
        for n in range(6):
            bn, cn1 = recover_coeffs(tbl, src, n)
            assert bn == src.B(n), (name, n)
            assert cn1 == src.C(n + 1), (name, n)


def test_recover_coeffs_needs_enough_moments(qp_half, cqh):
    table = moments(cqh, 5)
    with pytest.raises(InsufficientDataError):
        recover_coeffs(table, cqh, 2)


def _pair_for(src, qp):
    return pearson_from_head(src.B(0), src.B(1), src.C(1), src.C(2), qp)


def test_pearson_residual_vanishes_on_classical(qp_half):
    for name, src in fixture_suite(qp_half):
        if name.startswith("remark"):
            continue
        pair = _pair_for(src, qp_half)
        table = moments(src, 12)
        for n in range(11):
            assert pearson_residual(table, pair, n, qp_half) == 0, (name, n)


def test_pearson_residual_low_orders_vanish_by_construction(qp_half):
    # the pair is fitted to n = 0..3, so those residuals vanish even for
    # the non-classical counterexample
    src = remark_source(qp_half, 2, 3)
    pair = _pair_for(src, qp_half)
    table = moments(src, 12)
    for n in range(4):
        assert pearson_residual(table, pair, n, qp_half) == 0


def test_pearson_residual_nonzero_witness_for_counterexample(qp_half):
    src = remark_source(qp_half, 2, 3)
    pair = _pair_for(src, qp_half)
    table = moments(src, 12)
    witnesses = [n for n in range(4, 11)
                 if pearson_residual(table, pair, n, qp_half) != 0]
    assert witnesses, "expected a nonzero residual for the counterexample"


def test_pearson_residual_hand_check_n3(qp_half, cqh):
    # 8*mu_4 - (9/2)*mu_2 + 27/128 with mu_4 = 81/1024, mu_2 = 3/16
    table = moments(cqh, 6)
    assert 8 * table.mu[4] - F(9, 2) * table.mu[2] + F(27, 128) == 0
    pair = _pair_for(cqh, qp_half)
    assert pearson_residual(table, pair, 3, qp_half) == 0


def test_json_table_round_trip(qp_half, cqh):
    dumped = cqh.dump_tabulated(8).to_json()
    assert dumped["q_sqrt"] == "1/2"
    src = TabulatedSource.from_json(dumped)
    for n in range(8):
        assert src.B(n) == cqh.B(n)
    for n in range(1, 9):
        assert src.C(n) == cqh.C(n)
