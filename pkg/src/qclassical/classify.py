"""Recognition of classical orthogonal polynomial sequences on the
q-quadratic lattice, from recurrence coefficients alone.

Three cooperating pieces:

* :func:`pearson_from_head` extracts the Pearson pair (phi, psi) that a
  classical sequence must satisfy, using only B_0, B_1, C_1, C_2.
* :func:`necessary_check` stacks the two difference equations that the
  coefficient sequences of any classical OPS must solve, with the ansatz
  r_n = a_hat*q^n + b_hat*q^(-n); an empty null space rules classicality
  out.  A nonempty one does not confirm it (the counterexample family in
  :mod:`qclassical.families` passes this test and is not classical).
* :func:`thm2_generate` runs the sufficient direction: from the head
  coefficients it predicts the entire coefficient sequences that the
  unique candidate classical sequence would have; agreement to order N
  is the verdict "classical" (explicitly finite-order semantics).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .scalar import QParam, Scalar, alpha, alpha_n, format_scalar, gamma_n
from .sympoly import XPoly
from .ttrr import (CoeffSource, InsufficientDataError, MomentTable,
                   RegularityError, moments, pearson_residual)

CLASSICAL = "classical"
NOT_CLASSICAL = "not_classical"
INCONCLUSIVE_SINGULAR = "inconclusive_singular"
INCONCLUSIVE_DATA = "inconclusive_data"


class SingularDenominator(ArithmeticError):
    """A d_k needed by the coefficient generator vanished."""

    def __init__(self, index: int):
        super().__init__(f"d_{index} = 0: predicted coefficients undefined")
        self.index = index


@dataclass(frozen=True)
class PearsonPair:
    """The data of the distributional Pearson equation.

    phi(x) = (a*x - b_raised)(x - B_0) - (a + alpha) C_1 with psi = x - B_0,
    where ``a`` and ``b`` are the two scalars determined by the head
    coefficients (b = (a + alpha) B_1 - (B_0 + B_1)/(2 alpha)).
    """

    a: Scalar
    b: Scalar
    phi: XPoly
    psi: XPoly
    head: Tuple[Scalar, Scalar, Scalar, Scalar]

    def to_json(self) -> dict:
        return {"a": format_scalar(self.a), "b": format_scalar(self.b),
                "phi": self.phi.to_json(), "psi": self.psi.to_json()}


@dataclass(frozen=True)
class NecessaryReport:
    """Exact null space of the stacked difference-equation system."""

    rank: int
    basis: Tuple[Tuple[Scalar, Scalar], ...]
    orders_used: Tuple[int, int]

    @property
    def passes(self) -> bool:
        return len(self.basis) > 0

    def to_json(self) -> dict:
        return {"rank": self.rank,
                "basis": [[format_scalar(a), format_scalar(b)]
                          for a, b in self.basis]}


@dataclass
class Verdict:
    status: str
    order_checked: int
    pearson: Optional[PearsonPair] = None
    necessary: Optional[NecessaryReport] = None
    first_mismatch: Optional[dict] = None
    notes: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "order_checked": self.order_checked,
            "pearson": self.pearson.to_json() if self.pearson else None,
            "necessary": self.necessary.to_json() if self.necessary else None,
            "first_mismatch": self.first_mismatch,
            "notes": self.notes,
        }


def pearson_from_head(B0, B1, C1, C2, qp: QParam) -> PearsonPair:
    """Pearson pair of the candidate classical sequence with this head.

    Only B_0, B_1, C_1 and C_2 enter; the denominators 2*alpha*(4*alpha^2-1)
    and C_2 are nonzero whenever 0 < q < 1 and C_2 != 0.
    """
    B0, B1, C1, C2 = (qp.coerce(v) for v in (B0, B1, C1, C2))
    if qp.is_zero(C1):
        raise RegularityError("C_1 = 0 violates regularity")
    if qp.is_zero(C2):
        raise RegularityError("C_2 = 0 violates regularity")
    al = alpha(qp)
    al2 = al * al
    a = (al * (3 - 4 * al2) / (4 * al2 - 1)
         + ((B0 + B1) ** 2 + 4 * al2 * (C1 - B0 * B1 + al2 - 1))
         / (2 * al * (4 * al2 - 1) * C2))
    b = (a + al) * B1 - (B0 + B1) / (2 * al)
    psi = XPoly((-B0, qp.one()))
    phi = (XPoly((-b, a)) * psi) - XPoly.const((a + al) * C1)
    return PearsonPair(a=a, b=b, phi=phi, psi=psi, head=(B0, B1, C1, C2))


# -- the necessary test ---------------------------------------------------------

def _null_space_2col(rows: List[Tuple[Scalar, Scalar, float]], qp: QParam):
    """Exact rank and null-space basis of an m x 2 matrix.

    Each row carries a third entry, its formation scale: the magnitude of
    the intermediate terms it was assembled from.  The float backend uses
    it as the roundoff noise floor (high-order rows are built from data
    multiplied by q^(-n), which amplifies absolute error by that factor).
    Basis vectors are normalized so their first nonzero entry is 1.
    """
    if qp.backend == "exact":
        rows = [r[:2] for r in rows if r[0] != 0 or r[1] != 0]
        if not rows:
            return 0, ((qp.one(), qp.zero()), (qp.zero(), qp.one()))
        pa, pb = rows[0]
        for ra, rb in rows:
            # proportionality to the pivot row: cross product must vanish
            if ra * pb != rb * pa:
                return 2, ()
        # null vector of (pa, pb) is (pb, -pa); first nonzero entry scaled to 1
        if pb == 0:
            vec = (qp.zero(), qp.one())
        elif pa == 0:
            vec = (qp.one(), qp.zero())
        else:
            vec = (qp.one(), -pa / pb)
        return 1, (vec,)

    # float backend: residual test against the candidate null vector of the
    # dominant row, with a noise floor of tol times each row's formation scale
    live = [(a, b, w) for a, b, w in rows
            if max(abs(a), abs(b)) > qp.tol * max(1.0, w)]
    if not live:
        return 0, ((qp.one(), qp.zero()), (qp.zero(), qp.one()))
    pa, pb, _ = max(live, key=lambda r: abs(r[0]) + abs(r[1]))
    if abs(pb) >= abs(pa):
        v0, v1 = complex(1), -pa / pb
    else:
        v0, v1 = -pb / pa, complex(1)
    vnorm = max(abs(v0), abs(v1))
    for ra, rb, w in live:
        residual = ra * v0 + rb * v1
        cancel = abs(ra * v0) + abs(rb * v1)
        if abs(residual) > qp.tol * max(1.0, cancel, w * vnorm):
            return 2, ()
    if abs(v0) > qp.tol:
        vec = (complex(1), v1 / v0)
    else:
        vec = (complex(0), complex(1))
    return 1, (vec,)


def necessary_check(B: Sequence[Scalar], C: Sequence[Scalar],
                    qp: QParam, N: int) -> NecessaryReport:
    """Stack the two difference equations and solve for (a_hat, b_hat).

    ``B`` holds B_0..B_N; ``C`` holds C_1..C_N (so C[i] is C_{i+1}).
    With r_n = a_hat*q^n + b_hat*q^(-n) every stacked equation is linear
    homogeneous in (a_hat, b_hat); the report carries the exact rank and
    a basis of the null space.  First equation stacked for n = 0..N-3,
    second for n = 2..N-1 so every referenced index exists.
    """
    if N < 4:
        raise InsufficientDataError("the necessary test needs N >= 4")
    if len(B) < N + 1 or len(C) < N:
        raise InsufficientDataError(
            f"need B_0..B_{N} and C_1..C_{N}")
    q = qp.q
    al2 = alpha(qp) ** 2

    def Cv(n):  # C_n
        return C[n - 1]

    rows: List[Tuple[Scalar, Scalar, float]] = []

    def r_parts(n):
        return q ** n, q ** (-n)

    # r_{n+3} B_{n+2} - (r_{n+2} + r_{n+1}) B_{n+1} + r_n B_n = 0
    for n in range(0, N - 2):
        row = []
        wmax = 0.0
        for part in (0, 1):
            pairs = ((r_parts(n + 3)[part], B[n + 2]),
                     (-(r_parts(n + 2)[part] + r_parts(n + 1)[part]), B[n + 1]),
                     (r_parts(n)[part], B[n]))
            row.append(sum(wgt * dat for wgt, dat in pairs))
            # data carries absolute error ~ tol, amplified by the weights
            wmax = max(wmax, float(sum(abs(wgt) * max(1.0, float(abs(dat)))
                                       for wgt, dat in pairs)))
        rows.append((row[0], row[1], wmax))

    # r_n (B_n - q B_{n-1})(B_n - B_{n-1}/q)
    #   = (r_{n+1}+r_{n+2})(C_{n+1}-1/4) - 4 alpha^2 r_n (C_n-1/4)
    #     + (r_{n-1}+r_{n-2})(C_{n-1}-1/4)
    quarter = qp.coerce("1/4") if qp.backend == "exact" else qp.coerce(0.25)
    for n in range(2, N):
        lhs_poly = (B[n] - q * B[n - 1]) * (B[n] - B[n - 1] / q)
        row = []
        wmax = 0.0
        for part in (0, 1):
            pairs = ((r_parts(n)[part], lhs_poly),
                     (-(r_parts(n + 1)[part] + r_parts(n + 2)[part]), Cv(n + 1) - quarter),
                     (4 * al2 * r_parts(n)[part], Cv(n) - quarter),
                     (-(r_parts(n - 1)[part] + r_parts(n - 2)[part]), Cv(n - 1) - quarter))
            row.append(sum(wgt * dat for wgt, dat in pairs))
            wmax = max(wmax, float(sum(abs(wgt) * max(1.0, float(abs(dat)))
                                       for wgt, dat in pairs)))
        rows.append((row[0], row[1], wmax))

    rank, basis = _null_space_2col(rows, qp)
    return NecessaryReport(rank=rank, basis=tuple(basis), orders_used=(0, N))


# -- the sufficient generator ----------------------------------------------------

class Thm2State:
    """Memoized building blocks of the predicted coefficient sequences.

    d_n = a*gamma_n + alpha_n, e_n = (b + a*B_0)*gamma_n + B_0*alpha_n;
    both extend to negative n through gamma_{-n} = -gamma_n and
    alpha_{-n} = alpha_n, and d_0 = 1, e_0 = B_0.
    """

    def __init__(self, a: Scalar, b: Scalar, B0: Scalar, C1: Scalar, qp: QParam):
        self.a = a
        self.b = b
        self.B0 = B0
        self.C1 = C1
        self.qp = qp
        self._d: dict = {}
        self._e: dict = {}

    def d(self, n: int) -> Scalar:
        if n not in self._d:
            self._d[n] = self.a * gamma_n(self.qp, n) + alpha_n(self.qp, n)
        return self._d[n]

    def e(self, n: int) -> Scalar:
        if n not in self._e:
            self._e[n] = ((self.b + self.a * self.B0) * gamma_n(self.qp, n)
                          + self.B0 * alpha_n(self.qp, n))
        return self._e[n]

    def d_nonzero(self, n: int) -> Scalar:
        v = self.d(n)
        if self.qp.is_zero(v):
            raise SingularDenominator(n)
        return v

    def phi_bracket(self, n: int, z: Scalar) -> Scalar:
        """The quadratic phi^[n] evaluated at z."""
        qp = self.qp
        al2 = alpha(qp) ** 2
        half = qp.coerce("1/2") if qp.backend == "exact" else qp.coerce(0.5)
        lead = (al2 - 1) * gamma_n(qp, 2 * n) + self.a * alpha_n(qp, 2 * n)
        lin = ((self.b + self.a * self.B0) * alpha_n(qp, n)
               + (al2 - 1) * self.B0 * gamma_n(qp, n))
        const = (self.b * self.B0 - (self.a + alpha(qp)) * self.C1
                 + self.a * half)
        return lead * (z * z - half) - lin * z + const


def thm2_generate(a, b, B0, C1, qp: QParam, N: int) -> Tuple[List[Scalar], List[Scalar]]:
    """Predicted (B_hat_0..B_hat_N, C_hat_1..C_hat_N) of the candidate
    classical sequence determined by a, b, B_0 and C_1.

    B_hat_0 = B_0 and C_hat_1 = C_1 hold identically (e_0 = B_0,
    d_1 = a + alpha, phi^[0](B_0) = -(a + alpha) C_1).  Raises
    :class:`SingularDenominator` when a required d_k vanishes.
    """
    a, b, B0, C1 = (qp.coerce(v) for v in (a, b, B0, C1))
    st = Thm2State(a, b, B0, C1, qp)
    Bs: List[Scalar] = []
    Cs: List[Scalar] = []
    for n in range(N + 1):
        term = gamma_n(qp, n + 1) * st.e(n) / st.d_nonzero(2 * n)
        if n >= 1:
            term = term - gamma_n(qp, n) * st.e(n - 1) / st.d_nonzero(2 * n - 2)
        Bs.append(term)
    for n in range(N):
        # C_hat_{n+1} = -gamma_{n+1} d_{n-1} / (d_{2n-1} d_{2n+1}) * phi^[n](e_n/d_{2n})
        z = st.e(n) / st.d_nonzero(2 * n)
        val = st.phi_bracket(n, z)
        if n == 0:
            # d_{-1} cancels against d_{2n-1} = d_{-1} exactly
            c = -gamma_n(qp, 1) / st.d_nonzero(1) * val
        else:
            c = (-gamma_n(qp, n + 1) * st.d(n - 1)
                 / (st.d_nonzero(2 * n - 1) * st.d_nonzero(2 * n + 1)) * val)
        Cs.append(c)
    return Bs, Cs


# -- the combined verdict ----------------------------------------------------------

def classify(src: CoeffSource, qp: QParam, N: int = 12,
             validate_residuals: bool = False) -> Verdict:
    """Full pipeline: Pearson pair, sufficient-direction comparison to
    order N, necessary-test cross-evidence, optional residual validation.

    "classical" means: consistent with the predicted coefficient
    sequences up to order N (finite-order semantics; N is reported).
    A prediction mismatch or an empty null space each independently
    force "not_classical".
    """
    notes: List[str] = []
    if src.max_order is not None and src.max_order < N:
        if src.max_order < 4:
            return Verdict(status=INCONCLUSIVE_DATA, order_checked=src.max_order,
                           notes=[f"source provides only order {src.max_order}; "
                                  "need at least 4"])
        notes.append(f"order reduced to tabulated maximum {src.max_order}")
        N = src.max_order
    if N < 4:
        raise InsufficientDataError("classification needs N >= 4")

    head = (src.B(0), src.B(1), src.C(1), src.C(2))
    pair = pearson_from_head(*head, qp)

    Bsrc = [src.B(n) for n in range(N + 1)]
    Csrc = [src.C(n) for n in range(1, N + 1)]

    report = necessary_check(Bsrc, Csrc, qp, N)

    mismatch = None
    singular = None
    try:
        Bhat, Chat = thm2_generate(pair.a, pair.b, head[0], head[2], qp, N)
    except SingularDenominator as exc:
        singular = exc
        Bhat = Chat = None
    if Bhat is not None:
        # interleave so the first mismatch is found in B_0, C_1, B_1, C_2, ... order
        for n in range(N + 1):
            if not qp.eq(Bhat[n], Bsrc[n]):
                mismatch = {"kind": "B", "n": n,
                            "expected": format_scalar(Bhat[n]),
                            "actual": format_scalar(Bsrc[n])}
                break
            if n < N and not qp.eq(Chat[n], Csrc[n]):
                mismatch = {"kind": "C", "n": n + 1,
                            "expected": format_scalar(Chat[n]),
                            "actual": format_scalar(Csrc[n])}
                break
        if mismatch is None:
            for n, c in enumerate(Chat):
                if qp.is_zero(c):
                    notes.append(f"predicted C_{n + 1} = 0: regularity failure")
                    singular = SingularDenominator(-1)
                    break

    if mismatch is not None:
        status = NOT_CLASSICAL
    elif not report.passes:
        status = NOT_CLASSICAL
        notes.append("necessary difference equations admit no nonzero "
                     "(a_hat, b_hat)")
    elif singular is not None:
        status = INCONCLUSIVE_SINGULAR
        if singular.index >= -1:
            notes.append(str(singular))
        return Verdict(status=status, order_checked=N, pearson=pair,
                       necessary=report, notes=notes)
    else:
        status = CLASSICAL

    verdict = Verdict(status=status, order_checked=N, pearson=pair,
                      necessary=report, first_mismatch=mismatch, notes=notes)

    if validate_residuals:
        table = moments(src, N + 2)
        bad = [n for n in range(N + 1)
               if not qp.is_zero(pearson_residual(table, pair, n, qp))]
        if bad:
            verdict.notes.append(
                f"nonzero Pearson residuals at n = {bad}")
            if status == CLASSICAL:
                verdict.status = NOT_CLASSICAL
        else:
            verdict.notes.append(f"Pearson residuals vanish for n <= {N}")

    return verdict
