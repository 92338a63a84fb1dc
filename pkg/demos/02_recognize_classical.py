"""Recognizing classical orthogonal polynomial sequences.

Feed the classifier nothing but recurrence coefficients.  It extracts the
Pearson pair from the first four of them, predicts what the rest of the
coefficients would have to be if the sequence were classical, and checks.
"""

from fractions import Fraction

from qclassical import (QParam, aw_source, classify, format_scalar,
                        limit_source, pearson_from_head, thm2_generate)

F = Fraction
qp = QParam.exact(F(1, 2))

# -- continuous q-Hermite: B_n = 0, C_{n+1} = (1 - q^{n+1})/4 -------------------
src = limit_source("cts_q_hermite", qp)
verdict = classify(src, qp, N=12, validate_residuals=True)
print("continuous q-Hermite:")
print(f"  status      : {verdict.status} (order checked {verdict.order_checked})")
print(f"  pearson a, b: {format_scalar(verdict.pearson.a)}, "
      f"{format_scalar(verdict.pearson.b)}")
print(f"  phi         : {verdict.pearson.phi}")
print(f"  psi         : {verdict.pearson.psi}")
for note in verdict.notes:
    print(f"  note        : {note}")
print()

# -- a full four-parameter Askey-Wilson family ----------------------------------
src = aw_source(qp, F(1, 2), F(-1, 3), F(1, 5), F(2, 7))
verdict = classify(src, qp, N=12)
print("Askey-Wilson (1/2, -1/3, 1/5, 2/7):")
print(f"  status: {verdict.status}")
(ah, bh), = verdict.necessary.basis
print(f"  difference-equation null vector: (a_hat, b_hat) = "
      f"({format_scalar(ah)}, {format_scalar(bh)})")
print()

# -- predicting coefficients from a head alone -----------------------------------
head = (F(0), F(0), F(3, 16), F(15, 64))
pair = pearson_from_head(*head, qp)
Bs, Cs = thm2_generate(pair.a, pair.b, head[0], head[2], qp, 6)
print(f"head {tuple(map(str, head))} generates:")
print(f"  B: {[format_scalar(v) for v in Bs]}")
print(f"  C: {[format_scalar(v) for v in Cs]}")
print("  (compare (1 - q^n)/4 =", [format_scalar((1 - qp.q ** n) / 4)
                                   for n in range(1, 7)], ")")
