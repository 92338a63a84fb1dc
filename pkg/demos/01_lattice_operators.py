"""The two lattice operators in action.

The divided-difference operator D_q lowers degree by one, like d/dx; its
averaging companion S_q preserves degree.  On the Chebyshev-T basis both
act by simple shifts, which is what keeps everything exact.
"""

from fractions import Fraction

from qclassical import (QParam, XPoly, ZSym, alpha, alpha_n, dq_apply,
                        gamma_n, sq_apply, to_xpoly, to_zsym)

qp = QParam.exact(Fraction(1, 2))   # s = q^(1/2) = 1/2, so q = 1/4
print(f"s = {qp.s}, q = {qp.q}, alpha = {alpha(qp)}")
print()

# the classical textbook identities, exactly
for k in (1, 2, 3, 4):
    xk = XPoly.x_power(k)
    print(f"D_q x^{k} = {dq_apply(xk, qp)}")
    print(f"S_q x^{k} = {sq_apply(xk, qp)}")
print()

# a polynomial and its symmetric Laurent (Chebyshev-T) coefficients
p = XPoly((Fraction(-3, 8), Fraction(0), Fraction(3, 4)))
print(f"p      = {p}")
print(f"zeta coefficients of p: {[str(c) for c in to_zsym(p).coeffs]}")
print()

# eigen-action on the basis: S_q T_k = alpha_k T_k
for k in range(5):
    tk = to_xpoly(ZSym((Fraction(0),) * k + (Fraction(1),)))
    out = sq_apply(tk, qp)
    print(f"S_q T_{k} = {out}   (= alpha_{k} * T_{k}, alpha_{k} = {alpha_n(qp, k)})")
    assert out == tk.scale(alpha_n(qp, k))

# and D_q T_k is gamma_k times a Chebyshev-U polynomial
print()
for k in range(1, 5):
    tk = to_xpoly(ZSym((Fraction(0),) * k + (Fraction(1),)))
    print(f"D_q T_{k} = {dq_apply(tk, qp)}   (gamma_{k} = {gamma_n(qp, k)})")
