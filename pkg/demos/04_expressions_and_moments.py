"""Coefficients as expression text, and the moment machinery underneath.

Coefficients can be given as closed-form text in n and q.  Behind every
verdict sits an exact moment functional: its moments come from powers of
the Jacobi operator, and the package can rebuild the recurrence
coefficients from moments alone as a self-test.
"""

from fractions import Fraction

from qclassical import (ExprSource, QParam, apply_functional, classify,
                        expand_monic, format_scalar, moments, recover_coeffs)

F = Fraction
qp = QParam.exact(F(1, 2))

# the q-Hermite recurrence, written as text
src = ExprSource(qp, "0", "(1-q^n)/4")
print("source: B_n = 0,  C_n = (1-q^n)/4")
print(f"classify -> {classify(src, qp, N=12).status}")
print()

# the first monic polynomials
for n in range(5):
    print(f"P_{n} = {expand_monic(src, n)}")
print()

# moments of the orthogonality functional, normalized <u, 1> = 1
table = moments(src, 8)
print("moments:", [format_scalar(m) for m in table.mu])
print("kappa  :", [format_scalar(k) for k in table.kappa])
print()

# orthogonality, brute force
p2, p3 = expand_monic(src, 2), expand_monic(src, 3)
print(f"<u, P_2 P_3> = {apply_functional(table, p2 * p3)}")
print(f"<u, P_2 P_2> = {format_scalar(apply_functional(table, p2 * p2))}")
print()

# the recurrence coefficients, recovered from moments alone
for n in range(3):
    bn, cn1 = recover_coeffs(table, src, n)
    print(f"recovered B_{n} = {format_scalar(bn)}, "
          f"C_{n + 1} = {format_scalar(cn1)} "
          f"(source: {format_scalar(src.B(n))}, {format_scalar(src.C(n + 1))})")
