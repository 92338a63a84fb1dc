import random
from fractions import Fraction

import pytest

from qclassical import (ExprEvalError, ExprSource, ExprSyntaxError, QParam,
                        eval_expr, limit_source, parse, parse_xpoly,
                        print_expr, remark_source)
from qclassical.sympoly import XPoly

from conftest import rand_s

F = Fraction


def ev(text, n, qp):
    return eval_expr(parse(text), n, qp)


def test_parse_valid_trees():
    parse("(1-q^(n+1))/4")
    parse("q^(n/2)")
    parse("-n*q + 3/4")


def test_syntax_error_offset():
    with pytest.raises(ExprSyntaxError) as exc:
        parse("1+*q")
    assert exc.value.offset == 2
    with pytest.raises(ExprSyntaxError):
        parse("(1-q")
    with pytest.raises(ExprSyntaxError):
        parse("2*y")


def test_eval_examples(qp_half):
    assert ev("(1-q^(n+1))/4", 2, qp_half) == F(63, 256)
    assert ev("q^(n/2)", 3, qp_half) == F(1, 8)
    assert ev("0.25", 5, qp_half) == F(1, 4)
    assert ev("2^3", 0, qp_half) == 8
    assert ev("-q^2", 0, qp_half) == F(-1, 16)  # ^ binds before unary minus


def test_eval_errors(qp_half):
    with pytest.raises(ExprEvalError):
        ev("1/(q^n - q^n)", 3, qp_half)
    with pytest.raises(ExprEvalError):
        ev("q^(n/3)", 1, qp_half)  # exponent 1/3 is not a half-integer
    with pytest.raises(ExprEvalError):
        ev("n^(1/2)", 4, qp_half)  # non-q base needs an integer exponent


def test_print_round_trip(qp_half):
    rng = random.Random(21)
    for text in ("(1-q^(n+1))/4", "q^(n/2)+n*n-3/7", "-(n-1)*(n+2)/2",
                 "1-2*q^(2*n-1)"):
        ast = parse(text)
        again = parse(print_expr(ast))
        for n in range(0, 8):
            assert eval_expr(ast, n, qp_half) == eval_expr(again, n, qp_half)


def test_precedence_and_associativity(qp_half):
    assert ev("2-3-4", 0, qp_half) == -5           # left assoc
    assert ev("2*3+4", 0, qp_half) == 10           # * over +
    assert ev("8/4/2", 0, qp_half) == 1            # left assoc
    assert ev("2^3^2", 0, qp_half) == 512          # right assoc: 2^(3^2)
    assert ev("-2^2", 0, qp_half) == -4


def test_oracle_agreement_with_families():
    rng = random.Random(22)
    for _ in range(5):
        qp = QParam.exact(rand_s(rng))
        cases = [
            (limit_source("cts_q_hermite", qp), "0", "(1-q^n)/4"),
            (limit_source("al_salam_chihara", qp, (F(1, 3), F(-1, 5))),
             "(1/3-1/5)*q^n/2", "(1-q^n)*(1+1/15*q^(n-1))/4"),
            (remark_source(qp, 2, 3), "0", "(1-2*q^n)*(1-3*q^n)/4"),
        ]
        for src, b_text, c_text in cases:
            es = ExprSource(qp, b_text, c_text)
            for n in range(13):
                assert es.B(n) == src.B(n)
                if n >= 1:
                    assert es.C(n) == src.C(n)


def test_expr_source_float_backend():
    qp = QParam.floating(0.25)
    es = ExprSource(qp, "0", "(1-q^n)/4")
    assert abs(es.C(1) - 0.1875) < 1e-12


def test_parse_xpoly(qp_half):
    p = parse_xpoly("3/4*x^2 - 3/8", qp_half)
    assert p == XPoly((F(-3, 8), F(0), F(3, 4)))
    p2 = parse_xpoly("(x-1)*(x+1)", qp_half)
    assert p2 == XPoly((F(-1), F(0), F(1)))
    p3 = parse_xpoly("q*x + q^(1/2)", qp_half)
    assert p3 == XPoly((F(1, 2), F(1, 4)))
    with pytest.raises(ExprEvalError):
        parse_xpoly("1/x", qp_half)
