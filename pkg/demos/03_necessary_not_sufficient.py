"""The necessary test is not sufficient.

The family B_n = 0, C_{n+1} = (1 - a q^{n+1})(1 - b q^{n+1})/4 solves the
difference-equation system that every classical sequence must solve, yet
it is not classical: the predicted coefficients diverge from the actual
ones at C_3.  Both signals are shown side by side.
"""

from fractions import Fraction

from qclassical import (QParam, classify, format_scalar, necessary_check,
                        remark_source, thm2_generate)

F = Fraction
qp = QParam.exact(F(1, 2))
src = remark_source(qp, 2, 3)

N = 10
B = [src.B(n) for n in range(N + 1)]
C = [src.C(n) for n in range(1, N + 1)]

report = necessary_check(B, C, qp, N)
print(f"necessary test: rank {report.rank}, null-space basis "
      f"{[(format_scalar(a), format_scalar(b)) for a, b in report.basis]}")
print("-> the necessary equations are satisfied")
print()

verdict = classify(src, qp, N=N)
print(f"classify: {verdict.status}")
m = verdict.first_mismatch
print(f"first mismatch: {m['kind']}_{m['n']} "
      f"predicted {m['expected']}, actual {m['actual']}")
print()

pair = verdict.pearson
_, Cs = thm2_generate(pair.a, pair.b, src.B(0), src.C(1), qp, 6)
print(" n   predicted C_n        actual C_n")
for n in range(1, 7):
    mark = "" if Cs[n - 1] == C[n - 1] else "   <- diverges"
    print(f" {n}   {format_scalar(Cs[n - 1]):<20} {format_scalar(C[n - 1])}{mark}")
