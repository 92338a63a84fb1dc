"""Exact scalar arithmetic over the rationals parametrized by s = q^(1/2).

All q-dependent quantities in this package are built from the single base
value s = q^(1/2) with 0 < s < 1.  Working in s rather than q keeps every
half-integer power of q (which shows up constantly in the lattice
operators) inside the rationals, so the exact backend never needs
radicals.

Two backends are supported:

* ``exact``  -- scalars are :class:`fractions.Fraction`; every operation
  is exact and division by zero raises, it never returns a sentinel.
* ``float``  -- scalars are Python ``complex``; comparisons use a
  relative tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, complex]

EXACT = "exact"
FLOAT = "float"


class BackendError(ValueError):
    """A value is incompatible with the selected arithmetic backend."""


@dataclass(frozen=True)
class QParam:
    """The lattice base, stored as s = q^(1/2), with the backend choice.

    Invariant: 0 < s < 1, hence 0 < q = s^2 < 1.
    """

    s: Scalar
    backend: str = EXACT
    tol: float = 1e-9

    def __post_init__(self):
        if self.backend not in (EXACT, FLOAT):
            raise BackendError(f"unknown backend {self.backend!r}")
        if self.backend == EXACT:
            if not isinstance(self.s, Fraction):
                object.__setattr__(self, "s", _as_fraction(self.s))
            if not (0 < self.s < 1):
                raise ValueError(f"require 0 < s < 1, got s = {self.s}")
        else:
            sv = complex(self.s)
            if sv.imag != 0 or not (0 < sv.real < 1):
                raise ValueError(f"require real 0 < s < 1, got s = {sv}")
            object.__setattr__(self, "s", sv)
            if self.tol < 0:
                raise ValueError("tol must be nonnegative")

    @classmethod
    def exact(cls, s) -> "QParam":
        return cls(_as_fraction(s), EXACT)

    @classmethod
    def floating(cls, q: float, tol: float = 1e-9) -> "QParam":
        """Float backend from the value of q itself (s = sqrt(q))."""
        if not (0 < q < 1):
            raise ValueError(f"require 0 < q < 1, got q = {q}")
        return cls(complex(q) ** 0.5, FLOAT, tol)

    # -- scalar construction ------------------------------------------------

    @property
    def q(self) -> Scalar:
        return self.s * self.s

    def zero(self) -> Scalar:
        return Fraction(0) if self.backend == EXACT else complex(0)

    def one(self) -> Scalar:
        return Fraction(1) if self.backend == EXACT else complex(1)

    def coerce(self, value) -> Scalar:
        """Bring a user-supplied value into this backend's scalar type."""
        if self.backend == EXACT:
            if isinstance(value, Fraction):
                return value
            if isinstance(value, (int, str)):
                return _as_fraction(value)
            raise BackendError(
                f"exact backend accepts rationals, not {value!r}")
        if isinstance(value, str):
            return _parse_float_scalar(value)
        return complex(value)

    def spow(self, k: int) -> Scalar:
        """s^k for any integer k (q^(k/2) on the lattice)."""
        return self.s ** k

    def qpow(self, half_steps: int) -> Scalar:
        """q^(half_steps/2), i.e. s^half_steps."""
        return self.spow(half_steps)

    # -- comparisons --------------------------------------------------------

    def eq(self, a: Scalar, b: Scalar) -> bool:
        if self.backend == EXACT:
            return a == b
        scale = max(1.0, abs(a), abs(b))
        return abs(a - b) <= self.tol * scale

    def is_zero(self, a: Scalar) -> bool:
        if self.backend == EXACT:
            return a == 0
        return abs(a) <= self.tol


def _as_fraction(value) -> Fraction:
    """Parse "p/q", integer or decimal text into an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise ValueError(f"cannot make an exact rational from {value!r}")


def _parse_float_scalar(text: str) -> complex:
    text = text.strip()
    try:
        return complex(Fraction(text))
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return complex(text)
    except ValueError as exc:
        raise ValueError(f"not a numeric literal: {text!r}") from exc


def parse_scalar(text: str, qp: QParam) -> Scalar:
    return qp.coerce(text)


def format_scalar(value: Scalar) -> str:
    """Rationals print as "p/q" or integer text; floats as decimals."""
    if isinstance(value, Fraction):
        return str(value)
    c = complex(value)
    if c.imag == 0:
        return repr(c.real)
    return repr(c)


# -- the q-constants --------------------------------------------------------

def alpha_n(qp: QParam, n: int) -> Scalar:
    """(q^(n/2) + q^(-n/2)) / 2 = (s^n + s^-n) / 2; even in n."""
    sn = qp.spow(n)
    return (sn + 1 / sn) / 2


def gamma_n(qp: QParam, n: int) -> Scalar:
    """(q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2)); odd in n, gamma_1 = 1."""
    sn = qp.spow(n)
    return (sn - 1 / sn) / (qp.s - 1 / qp.s)


def alpha(qp: QParam) -> Scalar:
    """alpha_1, the constant that dominates all operator identities."""
    return alpha_n(qp, 1)
