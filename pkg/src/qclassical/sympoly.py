"""Polynomials in x and their symmetric Laurent (Chebyshev-T) form.

``XPoly`` is an ordinary dense polynomial in x.  ``ZSym`` stores the same
polynomial on the basis zeta_k = (z^k + z^(-k))/2 with x = (z + 1/z)/2,
so zeta_k is exactly the Chebyshev polynomial T_k(x).  On that basis the
divided-difference operator and the averaging operator act by simple
s^k shifts, which is why both are computed there and converted back:

    S_q zeta_k = alpha_k * zeta_k
    D_q zeta_k = gamma_k * U_{k-1}(x)

with U_{k-1} the Chebyshev polynomial of the second kind.  No division
ever leaves the rationals, so the exact backend stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .scalar import QParam, Scalar, alpha_n, format_scalar, gamma_n


def _strip(coeffs) -> Tuple[Scalar, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class XPoly:
    """Dense polynomial in x; coeffs[k] is the coefficient of x^k.

    Trailing zeros are stripped; the zero polynomial has an empty
    coefficient tuple and reports degree -1.
    """

    coeffs: Tuple[Scalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def zero(cls) -> "XPoly":
        return cls(())

    @classmethod
    def const(cls, c: Scalar) -> "XPoly":
        return cls((c,))

    @classmethod
    def x_power(cls, k: int, one: Scalar = Fraction(1)) -> "XPoly":
        return cls((0,) * k + (one,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "XPoly") -> "XPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly(tuple(self.coeff(k) + other.coeff(k) for k in range(n)))

    def __sub__(self, other: "XPoly") -> "XPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly(tuple(self.coeff(k) - other.coeff(k) for k in range(n)))

    def __neg__(self) -> "XPoly":
        return XPoly(tuple(-c for c in self.coeffs))

    def scale(self, c: Scalar) -> "XPoly":
        return XPoly(tuple(c * a for a in self.coeffs))

    def shift_x(self) -> "XPoly":
        """Multiply by x."""
        if self.is_zero():
            return self
        return XPoly((0,) + self.coeffs)

    def __mul__(self, other: "XPoly") -> "XPoly":
        if self.is_zero() or other.is_zero():
            return XPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return XPoly(tuple(out))

    def __call__(self, x: Scalar) -> Scalar:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def almost_eq(self, other: "XPoly", qp: QParam) -> bool:
        n = max(len(self.coeffs), len(other.coeffs))
        return all(qp.eq(self.coeff(k), other.coeff(k)) for k in range(n))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if c == 0:
                continue
            mon = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            txt = format_scalar(c)
            neg = txt.startswith("-")
            if neg:
                txt = txt[1:]
            if mon:
                body = mon if txt == "1" else f"{txt}*{mon}"
            else:
                body = txt
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def to_json(self) -> list:
        """Coefficient strings, lowest degree first."""
        return [format_scalar(c) for c in self.coeffs]


@dataclass(frozen=True)
class ZSym:
    """Symmetric Laurent polynomial; coeffs[k] multiplies zeta_k."""

    coeffs: Tuple[Scalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0


def to_zsym(p: XPoly) -> ZSym:
    """Rewrite p(x) on the zeta basis, i.e. substitute x = (z + 1/z)/2.

    Built from the product rule zeta_1 * zeta_k = (zeta_{k+1} + zeta_{k-1})/2,
    which only ever divides by two.
    """
    if p.is_zero():
        return ZSym(())
    n = p.degree
    out = [0] * (n + 1)
    # power[k] = zeta-coefficients of x^j while iterating j = 0..n
    power = [Fraction(1)]
    out[0] += p.coeff(0) * power[0]
    for j in range(1, n + 1):
        nxt = [0] * (j + 1)
        for k, c in enumerate(power):
            if c == 0:
                continue
            if k == 0:
                nxt[1] += c
            else:
                nxt[k + 1] += c / 2
                nxt[k - 1] += c / 2
        power = nxt
        cj = p.coeff(j)
        if cj != 0:
            for k, c in enumerate(power):
                out[k] += cj * c
    return ZSym(tuple(out))


def _chebyshev_t(k: int) -> XPoly:
    t0, t1 = XPoly.const(Fraction(1)), XPoly.x_power(1)
    if k == 0:
        return t0
    for _ in range(k - 1):
        t0, t1 = t1, t1.shift_x().scale(Fraction(2)) - t0
    return t1


def to_xpoly(p: ZSym) -> XPoly:
    """Inverse of :func:`to_zsym`: zeta_k is Chebyshev T_k(x)."""
    out = XPoly.zero()
    for k, c in enumerate(p.coeffs):
        if c != 0:
            out = out + _chebyshev_t(k).scale(c)
    return out


def _chebyshev_u_zsym(m: int):
    """zeta-coefficients of U_m(x) = (z^{m+1} - z^{-m-1})/(z - 1/z).

    The quotient is z^m + z^{m-2} + ... + z^{-m}, i.e. coefficient 2 on
    zeta_m, zeta_{m-2}, ... and 1 on zeta_0 when m is even.
    """
    out = [0] * (m + 1)
    k = m
    while k > 0:
        out[k] = 2
        k -= 2
    if m % 2 == 0:
        out[0] = 1
    return out


def dq_apply(p: XPoly, qp: QParam) -> XPoly:
    """Askey-Wilson divided-difference operator: shifts z -> q^(+-1/2) z.

    Drops the degree of a nonconstant polynomial by exactly one and
    annihilates constants.
    """
    zs = to_zsym(p)
    if zs.degree < 1:
        return XPoly.zero()
    out = [0] * zs.degree  # degree drops by one
    for k in range(1, zs.degree + 1):
        c = zs.coeff(k)
        if c == 0:
            continue
        g = c * gamma_n(qp, k)
        for m, u in enumerate(_chebyshev_u_zsym(k - 1)):
            if u:
                out[m] += g * u
    return to_xpoly(ZSym(tuple(out)))


def sq_apply(p: XPoly, qp: QParam) -> XPoly:
    """Averaging companion of dq_apply; degree-preserving, S_q(1) = 1."""
    zs = to_zsym(p)
    out = tuple(c * alpha_n(qp, k) for k, c in enumerate(zs.coeffs))
    return to_xpoly(ZSym(out))


def xpoly_from_json(coeffs: Sequence[str], qp: QParam) -> XPoly:
    return XPoly(tuple(qp.coerce(c) for c in coeffs))
