"""Built-in coefficient generators: the Askey-Wilson recurrence and its
limiting cases, plus the non-classical counterexample used throughout the
test suite.

The limiting families carry hand-derived closed forms rather than being
taken as numeric limits of the four-parameter expressions, which are
singular at a1 = 0.  The one-line cancellations:

* al_salam_chihara: with a3 = a4 = 0 the four-parameter B_n collapses to
  (a1 + 1/a1 - (1 - a1 a2 q^n)/a1 - a1 (1 - q^n)) / 2 = (a1 + a2) q^n / 2,
  and C_{n+1} to (1 - q^{n+1})(1 - a1 a2 q^n)/4.
* cts_q_hermite: additionally a2 = 0, giving B_n = 0 and
  C_{n+1} = (1 - q^{n+1})/4.
* cts_big_q_hermite: a4 = 0 alone; every factor containing a4 or the
  product a1 a2 a3 a4 becomes 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .scalar import QParam, Scalar, format_scalar
from .ttrr import CallableSource


class AdmissibilityError(ValueError):
    """A parameter choice makes a denominator or a C_{n+1} factor vanish."""


@dataclass(frozen=True)
class AWParams:
    """The four Askey-Wilson parameters; a1 must be nonzero."""

    a1: Scalar
    a2: Scalar
    a3: Scalar
    a4: Scalar
    qp: QParam

    def __post_init__(self):
        vals = tuple(self.qp.coerce(a) for a in
                     (self.a1, self.a2, self.a3, self.a4))
        for name, v in zip(("a1", "a2", "a3", "a4"), vals):
            object.__setattr__(self, name, v)
        if self.qp.is_zero(self.a1):
            raise AdmissibilityError("a1 = 0: the recurrence divides by a1")

    @property
    def product(self) -> Scalar:
        return self.a1 * self.a2 * self.a3 * self.a4


def _nonzero(qp: QParam, value: Scalar, what: str) -> Scalar:
    if qp.is_zero(value):
        raise AdmissibilityError(f"vanishing factor {what}")
    return value


def aw_coeffs(p: AWParams, n: int) -> Tuple[Scalar, Scalar]:
    """(B_n, C_{n+1}) of the monic Askey-Wilson recurrence."""
    qp = p.qp
    q = qp.q
    a1, a2, a3, a4 = p.a1, p.a2, p.a3, p.a4
    P = p.product
    qn = q ** n
    num1 = ((1 - a1 * a2 * qn) * (1 - a1 * a3 * qn) * (1 - a1 * a4 * qn)
            * (1 - P * q ** (n - 1)))
    den1 = (a1 * _nonzero(qp, 1 - P * q ** (2 * n - 1), "1-a1a2a3a4*q^(2n-1)")
            * _nonzero(qp, 1 - P * q ** (2 * n), "1-a1a2a3a4*q^(2n)"))
    num2 = (a1 * (1 - qn) * (1 - a2 * a3 * q ** (n - 1))
            * (1 - a2 * a4 * q ** (n - 1)) * (1 - a3 * a4 * q ** (n - 1)))
    den2 = (_nonzero(qp, 1 - P * q ** (2 * n - 1), "1-a1a2a3a4*q^(2n-1)")
            * _nonzero(qp, 1 - P * q ** (2 * n - 2), "1-a1a2a3a4*q^(2n-2)"))
    bn = (a1 + 1 / a1 - num1 / den1 - num2 / den2) / 2

    cnum = ((1 - q ** (n + 1)) * (1 - P * q ** (n - 1))
            * (1 - a1 * a2 * qn) * (1 - a1 * a3 * qn) * (1 - a1 * a4 * qn)
            * (1 - a2 * a3 * qn) * (1 - a2 * a4 * qn) * (1 - a3 * a4 * qn))
    cden = (4 * _nonzero(qp, 1 - P * q ** (2 * n - 1), "1-a1a2a3a4*q^(2n-1)")
            * _nonzero(qp, 1 - P * q ** (2 * n), "1-a1a2a3a4*q^(2n)") ** 2
            * _nonzero(qp, 1 - P * q ** (2 * n + 1), "1-a1a2a3a4*q^(2n+1)"))
    return bn, cnum / cden


LIMIT_KINDS = ("cts_q_hermite", "al_salam_chihara", "cts_big_q_hermite")


def limit_family(kind: str, params: Sequence, qp: QParam, n: int) -> Tuple[Scalar, Scalar]:
    """(B_n, C_{n+1}) for a limiting case, by its own closed form."""
    q = qp.q
    ps = [qp.coerce(v) for v in params]
    if kind == "cts_q_hermite":
        if ps:
            raise ValueError("cts_q_hermite takes no parameters")
        return qp.zero(), (1 - q ** (n + 1)) / 4
    if kind == "al_salam_chihara":
        if len(ps) != 2:
            raise ValueError("al_salam_chihara takes (a1, a2)")
        a1, a2 = ps
        return (a1 + a2) * q ** n / 2, (1 - q ** (n + 1)) * (1 - a1 * a2 * q ** n) / 4
    if kind == "cts_big_q_hermite":
        if len(ps) != 3:
            raise ValueError("cts_big_q_hermite takes (a1, a2, a3)")
        a1, a2, a3 = ps
        if qp.is_zero(a1):
            raise AdmissibilityError("a1 = 0: the recurrence divides by a1")
        qn = q ** n
        bn = (a1 + 1 / a1 - (1 - a1 * a2 * qn) * (1 - a1 * a3 * qn) / a1
              - a1 * (1 - qn) * (1 - a2 * a3 * q ** (n - 1))) / 2
        cn1 = ((1 - q ** (n + 1)) * (1 - a1 * a2 * qn)
               * (1 - a1 * a3 * qn) * (1 - a2 * a3 * qn)) / 4
        return bn, cn1
    raise ValueError(f"unknown limiting family {kind!r}")


def remark_counterexample(a: Scalar, b: Scalar, qp: QParam, n: int) -> Tuple[Scalar, Scalar]:
    """B_n = 0, C_{n+1} = (1 - a q^{n+1})(1 - b q^{n+1})/4.

    Satisfies the necessary difference equations yet is not classical;
    a and b must be nonzero and different from one.
    """
    a = qp.coerce(a)
    b = qp.coerce(b)
    for name, v in (("a", a), ("b", b)):
        if qp.is_zero(v):
            raise ValueError(f"{name} must be nonzero")
        if qp.eq(v, qp.one()):
            raise ValueError(f"{name} must differ from one")
    q = qp.q
    return qp.zero(), (1 - a * q ** (n + 1)) * (1 - b * q ** (n + 1)) / 4


def aw_source(qp: QParam, a1, a2, a3, a4) -> CallableSource:
    p = AWParams(a1, a2, a3, a4, qp)
    return CallableSource(qp,
                          lambda n: aw_coeffs(p, n)[0],
                          lambda n: aw_coeffs(p, n - 1)[1],
                          name="askey_wilson")


def limit_source(kind: str, qp: QParam, params: Sequence = ()) -> CallableSource:
    params = tuple(params)
    return CallableSource(qp,
                          lambda n: limit_family(kind, params, qp, n)[0],
                          lambda n: limit_family(kind, params, qp, n - 1)[1],
                          name=kind)


def remark_source(qp: QParam, a, b) -> CallableSource:
    return CallableSource(qp,
                          lambda n: remark_counterexample(a, b, qp, n)[0],
                          lambda n: remark_counterexample(a, b, qp, n - 1)[1],
                          name="remark_counterexample")


FAMILY_CODES = {
    "aw": ("askey_wilson", 4),
    "cqh": ("cts_q_hermite", 0),
    "asc": ("al_salam_chihara", 2),
    "cbqh": ("cts_big_q_hermite", 3),
    "remark": ("remark_counterexample", 2),
}


def family_source(code: str, qp: QParam, params: Sequence = ()) -> CallableSource:
    """Resolve a CLI family code (aw|cqh|asc|cbqh|remark) to a source."""
    if code not in FAMILY_CODES:
        raise ValueError(f"unknown family {code!r}; choose from "
                         + "|".join(FAMILY_CODES))
    name, arity = FAMILY_CODES[code]
    params = tuple(params)
    if len(params) != arity:
        raise ValueError(f"family {code!r} needs {arity} parameters, "
                         f"got {len(params)} ({', '.join(format_scalar(qp.coerce(p)) for p in params) or 'none'})")
    if code == "aw":
        return aw_source(qp, *params)
    if code == "remark":
        return remark_source(qp, *params)
    return limit_source(name, qp, params)
