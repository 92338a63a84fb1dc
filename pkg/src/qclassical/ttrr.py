"""Three-term recurrence machinery.

Builds monic polynomials from x P_n = P_{n+1} + B_n P_n + C_n P_{n-1},
computes moments of the orthogonality functional (normalized <u,1> = 1)
as truncated powers of the monic Jacobi operator, applies the functional
to polynomials, and evaluates the moment residuals
<u, phi*D_q x^n + psi*S_q x^n> that vanish exactly when the functional
satisfies the distributional Pearson equation.
"""

from __future__ import annotations

import json
from typing import List, Optional, Sequence, Tuple

from .scalar import QParam, Scalar, format_scalar
from .sympoly import XPoly, dq_apply, sq_apply


class RegularityError(ValueError):
    """A recurrence coefficient C_n vanished; the functional is not regular."""


class InsufficientDataError(ValueError):
    """The source or moment table does not reach the requested order."""


class CoeffSource:
    """Provider of the recurrence coefficients B_n (n >= 0), C_n (n >= 1).

    ``max_order`` is None for unbounded sources; tabulated sources report
    the largest n for which both B_n and C_n are available.
    """

    kind = "abstract"
    max_order: Optional[int] = None

    def B(self, n: int) -> Scalar:
        raise NotImplementedError

    def C(self, n: int) -> Scalar:
        raise NotImplementedError

    def _check_order(self, n: int):
        if n < 0:
            raise InsufficientDataError(f"negative order {n}")
        if self.max_order is not None and n > self.max_order:
            raise InsufficientDataError(
                f"order {n} exceeds tabulated max {self.max_order}")


class TabulatedSource(CoeffSource):
    """Coefficients from explicit lists; C_n = 0 is rejected up front."""

    kind = "tabulated"

    def __init__(self, qp: QParam, B: Sequence, C: Sequence):
        self.qp = qp
        self._B = [qp.coerce(b) for b in B]
        self._C = [qp.coerce(c) for c in C]  # _C[i] holds C_{i+1}
        for i, c in enumerate(self._C):
            if qp.is_zero(c):
                raise RegularityError(f"C_{i + 1} = 0 is not allowed")
        self.max_order = min(len(self._B) - 1, len(self._C))

    @classmethod
    def from_json(cls, doc) -> "TabulatedSource":
        """Read {"q_sqrt": "1/2", "B": [...], "C": [...]}, rationals as text.

        An optional "q"/"tol" pair selects the float backend instead.
        """
        if isinstance(doc, (str, bytes)):
            doc = json.loads(doc)
        if "q_sqrt" in doc:
            qp = QParam.exact(doc["q_sqrt"])
        elif "q" in doc:
            qp = QParam.floating(float(doc["q"]), float(doc.get("tol", 1e-9)))
        else:
            raise ValueError("table needs a 'q_sqrt' or 'q' field")
        if "B_expr" in doc or "C_expr" in doc:
            from .expr import ExprSource
            return ExprSource(qp, doc["B_expr"], doc["C_expr"])
        return cls(qp, doc["B"], doc["C"])

    def to_json(self) -> dict:
        doc = {"B": [format_scalar(b) for b in self._B],
               "C": [format_scalar(c) for c in self._C]}
        if self.qp.backend == "exact":
            doc["q_sqrt"] = format_scalar(self.qp.s)
        else:
            doc["q"] = (self.qp.s * self.qp.s).real
            doc["tol"] = self.qp.tol
        return doc

    def B(self, n: int) -> Scalar:
        self._check_order(n)
        if n >= len(self._B):
            raise InsufficientDataError(f"B_{n} not tabulated")
        return self._B[n]

    def C(self, n: int) -> Scalar:
        if n < 1:
            raise InsufficientDataError("C_n is defined for n >= 1")
        if n > len(self._C):
            raise InsufficientDataError(f"C_{n} not tabulated")
        return self._C[n - 1]


class CallableSource(CoeffSource):
    """Coefficients from a pair of callables; used by the family catalog."""

    kind = "family"

    def __init__(self, qp: QParam, bfun, cfun, name: str = "callable"):
        self.qp = qp
        self._bfun = bfun
        self._cfun = cfun
        self.name = name
        self._bcache: dict = {}
        self._ccache: dict = {}

    def B(self, n: int) -> Scalar:
        self._check_order(n)
        if n not in self._bcache:
            self._bcache[n] = self._bfun(n)
        return self._bcache[n]

    def C(self, n: int) -> Scalar:
        if n < 1:
            raise InsufficientDataError("C_n is defined for n >= 1")
        if n not in self._ccache:
            c = self._cfun(n)
            if self.qp.is_zero(c):
                raise RegularityError(f"C_{n} = 0 is not allowed")
            self._ccache[n] = c
        return self._ccache[n]

    def dump_tabulated(self, N: int) -> TabulatedSource:
        return TabulatedSource(self.qp,
                               [self.B(n) for n in range(N + 1)],
                               [self.C(n) for n in range(1, N + 1)])


def expand_monic(src: CoeffSource, n: int) -> XPoly:
    """Monic P_n built by the recurrence with P_{-1} = 0, P_0 = 1."""
    if n < 0:
        raise InsufficientDataError("order must be nonnegative")
    prev = XPoly.zero()
    cur = XPoly.const(1)
    for k in range(n):
        nxt = cur.shift_x() - cur.scale(src.B(k))
        if k >= 1:
            nxt = nxt - prev.scale(src.C(k))
        prev, cur = cur, nxt
    return cur


class MomentTable:
    """Moments mu[k] = <u, x^k> with mu[0] = 1, plus kappa[n] = <u, P_n^2>.

    kappa[n] is the product C_1 * ... * C_n, which the recurrence forces.
    """

    def __init__(self, qp: QParam, mu: List[Scalar], kappa: List[Scalar]):
        self.qp = qp
        self.mu = mu
        self.kappa = kappa

    @property
    def order(self) -> int:
        return len(self.mu) - 1


def moments(src: CoeffSource, N: int) -> MomentTable:
    """Moments up to mu[N] via powers of the truncated Jacobi operator.

    The operator is banded (diagonal B_n, superdiagonal 1, subdiagonal
    C_n acting as described below), so after k steps the iteration vector
    has support <= k and truncating at size N+1 keeps mu[k] exact for
    every k <= N.
    """
    if N < 0:
        raise InsufficientDataError("need N >= 0")
    size = N + 1
    Bv = [src.B(i) for i in range(size)]
    Cv = [src.C(i) for i in range(1, size)]  # Cv[i] = C_{i+1}
    one = src.B(0) * 0 + 1 if size else 1
    v = [one] + [0] * (size - 1)
    mu = [one]
    for _ in range(N):
        w = [0] * size
        for i in range(size):
            acc = Bv[i] * v[i]
            if i > 0:
                acc += v[i - 1]
            if i < size - 1:
                acc += Cv[i] * v[i + 1]
            w[i] = acc
        v = w
        mu.append(v[0])
    kappa = [one]
    for n in range(1, N + 1):
        kappa.append(kappa[-1] * src.C(n))
    return MomentTable(src.qp if hasattr(src, "qp") else None, mu, kappa)


def apply_functional(m: MomentTable, p: XPoly) -> Scalar:
    """<u, p> as the moment-weighted sum of p's coefficients."""
    if p.degree > m.order:
        raise InsufficientDataError(
            f"degree {p.degree} exceeds moment table order {m.order}")
    return sum((c * m.mu[k] for k, c in enumerate(p.coeffs)), start=m.mu[0] * 0)


def recover_coeffs(m: MomentTable, src: CoeffSource, n: int) -> Tuple[Scalar, Scalar]:
    """(B_n, C_{n+1}) recomputed purely from moments and expanded P_n.

    B_n = <u, x P_n^2> / <u, P_n^2> and C_{n+1} = <u, P_{n+1}^2> / <u, P_n^2>;
    a self-test of the moment machinery against the source.
    """
    if 2 * n + 2 > m.order:
        raise InsufficientDataError(
            f"need moments up to {2 * n + 2}, table has {m.order}")
    pn = expand_monic(src, n)
    pn1 = expand_monic(src, n + 1)
    pn2 = pn * pn
    denom = apply_functional(m, pn2)
    bn = apply_functional(m, pn2.shift_x()) / denom
    cn1 = apply_functional(m, pn1 * pn1) / denom
    return bn, cn1


def pearson_residual(m: MomentTable, pp, n: int, qp: QParam) -> Scalar:
    """<u, phi * D_q x^n + psi * S_q x^n> for the pair pp = (phi, psi).

    Vanishes for every n exactly when u satisfies the distributional
    Pearson equation with this pair.
    """
    xn = XPoly.x_power(n, qp.one())
    poly = pp.phi * dq_apply(xn, qp) + pp.psi * sq_apply(xn, qp)
    return apply_functional(m, poly)
