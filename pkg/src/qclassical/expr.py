"""A small expression language for recurrence coefficients.

Users supply B_n and C_n as closed-form text in the variables ``n`` and
``q``, e.g. ``"(1-q^(n+1))/4"``.  Operators are + - * / ^ with the usual
precedence (^ binds tightest, then unary minus, then * /, then + -); ^
is right-associative, the others left.  Rational and decimal literals
are both exact (0.25 is read as 1/4).

Powers of q may have half-integer exponents: since the lattice base is
s = q^(1/2), the value q^(k/2) = s^k stays rational.  Any other base
must be raised to an integer power.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from .scalar import QParam, Scalar
from .ttrr import CoeffSource


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"syntax error at offset {offset}: {message}")
        self.offset = offset


class ExprEvalError(ValueError):
    """Division by zero or an inadmissible exponent during evaluation."""


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str  # "n" or "q"


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Bin:
    op: str  # one of + - * / ^
    left: "Expr"
    right: "Expr"


Expr = Union[Num, Var, Neg, Bin]


# -- tokenizer ----------------------------------------------------------------

_OPS = set("+-*/^()")


def _tokenize(text: str, allowed=("n", "q")):
    tokens = []  # (kind, value, offset)
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            tokens.append(("op", ch, i))
            i += 1
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and text[i + 1].isdigit()):
            j = i
            seen_dot = False
            while j < n and (text[j].isdigit() or (text[j] == "." and not seen_dot)):
                if text[j] == ".":
                    seen_dot = True
                j += 1
            tokens.append(("num", Fraction(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalnum():
                j += 1
            name = text[i:j]
            if name not in allowed:
                raise ExprSyntaxError(f"unknown variable {name!r}; "
                                      f"only {', '.join(allowed)} allowed", i)
            tokens.append(("var", name, i))
            i = j
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


# -- recursive-descent parser --------------------------------------------------

class _Parser:
    def __init__(self, text: str, allowed=("n", "q")):
        self.text = text
        self.tokens = _tokenize(text, allowed)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        kind, value, offset = self.peek()
        if kind != "op" or value != op:
            raise ExprSyntaxError(f"expected {op!r}", offset)
        return self.take()

    def parse(self) -> Expr:
        e = self.sum_()
        kind, value, offset = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"unexpected {value!r}", offset)
        return e

    def sum_(self) -> Expr:
        e = self.product()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.take()
                e = Bin(value, e, self.product())
            else:
                return e

    def product(self) -> Expr:
        e = self.unary()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "*/":
                self.take()
                e = Bin(value, e, self.unary())
            else:
                return e

    def unary(self) -> Expr:
        kind, value, _ = self.peek()
        if kind == "op" and value == "-":
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.take()
            # right-associative; a leading minus in the exponent is allowed
            return Bin("^", base, self.unary())
        return base

    def atom(self) -> Expr:
        kind, value, offset = self.take()
        if kind == "num":
            return Num(value)
        if kind == "var":
            return Var(value)
        if kind == "op" and value == "(":
            e = self.sum_()
            self.expect_op(")")
            return e
        raise ExprSyntaxError("expected a number, variable or '('", offset)


def parse(text: str) -> Expr:
    return _Parser(text).parse()


def print_expr(e: Expr) -> str:
    """Fully parenthesized text that re-parses to the same tree."""
    if isinstance(e, Num):
        v = e.value
        return str(v) if v.denominator == 1 else f"({v})"
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Neg):
        return f"(-{print_expr(e.arg)})"
    return f"({print_expr(e.left)}{e.op}{print_expr(e.right)})"


# -- evaluation -----------------------------------------------------------------

def _contains_q(e: Expr) -> bool:
    if isinstance(e, Var):
        return e.name == "q"
    if isinstance(e, Neg):
        return _contains_q(e.arg)
    if isinstance(e, Bin):
        return _contains_q(e.left) or _contains_q(e.right)
    return False


def _eval_exponent(e: Expr, n: int) -> Fraction:
    """Exponents are rational expressions in n alone."""
    if isinstance(e, Num):
        return e.value
    if isinstance(e, Var):
        if e.name == "q":
            raise ExprEvalError("q may not appear inside an exponent")
        return Fraction(n)
    if isinstance(e, Neg):
        return -_eval_exponent(e.arg, n)
    a = _eval_exponent(e.left, n)
    b = _eval_exponent(e.right, n)
    if e.op == "+":
        return a + b
    if e.op == "-":
        return a - b
    if e.op == "*":
        return a * b
    if e.op == "/":
        if b == 0:
            raise ExprEvalError(
                f"division by zero in exponent: {print_expr(e)}")
        return a / b
    # nested power: only integer exponents keep the value rational
    if b.denominator != 1:
        raise ExprEvalError(
            f"non-integer nested exponent in {print_expr(e)}")
    if a == 0 and b < 0:
        raise ExprEvalError(f"zero to a negative power in {print_expr(e)}")
    return a ** int(b)


def eval_expr(e: Expr, n: int, qp: QParam) -> Scalar:
    """Exact value at integer n; q^(k/2) is evaluated as s^k."""
    if isinstance(e, Num):
        return qp.coerce(e.value) if qp.backend != "exact" else e.value
    if isinstance(e, Var):
        if e.name == "n":
            return qp.coerce(n)
        return qp.q
    if isinstance(e, Neg):
        return -eval_expr(e.arg, n, qp)
    if e.op == "^":
        expo = _eval_exponent(e.right, n)
        if isinstance(e.left, Var) and e.left.name == "q":
            half_steps = 2 * expo
            if half_steps.denominator != 1:
                raise ExprEvalError(
                    f"q-exponent must be a half-integer, got {expo} "
                    f"in {print_expr(e)}")
            return qp.spow(int(half_steps))
        if expo.denominator != 1:
            raise ExprEvalError(
                f"non-integer exponent {expo} on a non-q base in {print_expr(e)}")
        base = eval_expr(e.left, n, qp)
        k = int(expo)
        if k < 0 and qp.is_zero(base):
            raise ExprEvalError(f"zero raised to a negative power in {print_expr(e)}")
        return base ** k
    a = eval_expr(e.left, n, qp)
    b = eval_expr(e.right, n, qp)
    if e.op == "+":
        return a + b
    if e.op == "-":
        return a - b
    if e.op == "*":
        return a * b
    # division
    if qp.is_zero(b):
        raise ExprEvalError(f"division by zero in {print_expr(e)}")
    return a / b


# -- polynomial text (for the operator subcommands) ------------------------------

def parse_xpoly(text: str, qp: QParam):
    """Parse polynomial text in x (q allowed in coefficients) to an XPoly."""
    from .sympoly import XPoly

    ast = _Parser(text, allowed=("x", "q")).parse()

    def ev(e) -> XPoly:
        if isinstance(e, Num):
            return XPoly.const(qp.coerce(e.value))
        if isinstance(e, Var):
            if e.name == "x":
                return XPoly.x_power(1, qp.one())
            return XPoly.const(qp.q)
        if isinstance(e, Neg):
            return -ev(e.arg)
        if e.op == "^":
            expo = _eval_exponent_const(e.right)
            if isinstance(e.left, Var) and e.left.name == "q":
                half = 2 * expo
                if half.denominator != 1:
                    raise ExprEvalError(f"q-exponent must be a half-integer "
                                        f"in {print_expr(e)}")
                return XPoly.const(qp.spow(int(half)))
            if expo.denominator != 1 or expo < 0:
                raise ExprEvalError(f"polynomial exponents must be nonnegative "
                                    f"integers in {print_expr(e)}")
            base = ev(e.left)
            out = XPoly.const(qp.one())
            for _ in range(int(expo)):
                out = out * base
            return out
        a, b = ev(e.left), ev(e.right)
        if e.op == "+":
            return a + b
        if e.op == "-":
            return a - b
        if e.op == "*":
            return a * b
        if b.degree > 0:
            raise ExprEvalError(f"cannot divide by a nonconstant polynomial "
                                f"in {print_expr(e)}")
        if b.is_zero():
            raise ExprEvalError(f"division by zero in {print_expr(e)}")
        c = b.coeff(0)
        return a.scale(1 / c)

    return ev(ast)


def _eval_exponent_const(e) -> Fraction:
    if isinstance(e, Num):
        return e.value
    if isinstance(e, Neg):
        return -_eval_exponent_const(e.arg)
    if isinstance(e, Bin) and e.op in "+-*/":
        a = _eval_exponent_const(e.left)
        b = _eval_exponent_const(e.right)
        if e.op == "+":
            return a + b
        if e.op == "-":
            return a - b
        if e.op == "*":
            return a * b
        if b == 0:
            raise ExprEvalError("division by zero in exponent")
        return a / b
    raise ExprEvalError(f"exponent must be a constant: {print_expr(e)}")


class ExprSource(CoeffSource):
    """Recurrence coefficients given as expression text in n and q."""

    kind = "expression"

    def __init__(self, qp: QParam, b_text: str, c_text: str):
        self.qp = qp
        self.b_text = b_text
        self.c_text = c_text
        self._b_ast = parse(b_text)
        self._c_ast = parse(c_text)

    def B(self, n: int) -> Scalar:
        self._check_order(n)
        return eval_expr(self._b_ast, n, self.qp)

    def C(self, n: int) -> Scalar:
        from .ttrr import InsufficientDataError, RegularityError
        if n < 1:
            raise InsufficientDataError("C_n is defined for n >= 1")
        c = eval_expr(self._c_ast, n, self.qp)
        if self.qp.is_zero(c):
            raise RegularityError(f"C_{n} evaluates to 0")
        return c
