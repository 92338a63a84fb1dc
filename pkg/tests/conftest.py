import random
from fractions import Fraction

import pytest

from qclassical import QParam, expand_monic


def rand_s(rng: random.Random) -> Fraction:
    """A random rational strictly inside (0, 1)."""
    den = rng.randint(2, 30)
    num = rng.randint(1, den - 1)
    return Fraction(num, den)


def rand_rat(rng: random.Random, lo: int = -3, hi: int = 3,
             nonzero: bool = False) -> Fraction:
    den = rng.randint(1, 12)
    while True:
        num = rng.randint(lo * den, hi * den)
        v = Fraction(num, den)
        if not (nonzero and v == 0):
            return v


def oracle_moments(src, N: int):
    """Independent moment oracle: triangular solve of <u, P_n> = 0.

    Monic P_n gives mu_n = -sum_{k<n} coeff_k(P_n) mu_k with mu_0 = 1,
    using nothing but the expanded polynomials (no Jacobi powers).
    """
    mu = [Fraction(1)]
    for n in range(1, N + 1):
        p = expand_monic(src, n)
        mu.append(-sum(p.coeff(k) * mu[k] for k in range(n)))
    return mu


@pytest.fixture
def qp_half():
    return QParam.exact(Fraction(1, 2))


def fixture_suite(qp, convert=lambda v: v):
    """The standard catalog of sources used across the test modules."""
    from qclassical import aw_source, limit_source, remark_source
    F = Fraction
    c = convert
    return [
        ("cts_q_hermite", limit_source("cts_q_hermite", qp)),
        ("al_salam_chihara", limit_source(
            "al_salam_chihara", qp, (c(F(1, 3)), c(F(-1, 5))))),
        ("cts_big_q_hermite", limit_source(
            "cts_big_q_hermite", qp, (c(F(1, 2)), c(F(-1, 2)), c(F(1, 3))))),
        ("askey_wilson", aw_source(
            qp, c(F(1, 2)), c(F(-1, 3)), c(F(1, 5)), c(F(2, 7)))),
        ("remark_2_3", remark_source(qp, c(2), c(3))),
        ("remark_half_third", remark_source(qp, c(F(1, 2)), c(F(1, 3)))),
        ("remark_neg2_3", remark_source(qp, c(-2), c(3))),
    ]
