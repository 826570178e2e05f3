"""
Degenerate parameters: factorization and Sobolev-type Gram matrix
=================================================================

At alpha = -2N-1 the coefficient u_{2N+1} vanishes, and the family splits
into a finite block Q_0..Q_{2N} and factored tails
Q_{2N+1+m} = Q_{2N+1} * (flipped family)_m.
"""

from fractions import Fraction as F

from bigminus1 import ParamSet
from bigminus1.degenerate import (DegenerateCase, Kind, detect_degenerate, factor_base,
                                  factor_check, gram_degenerate, lambda_N, moment_form)

case = DegenerateCase(Kind.ALPHA_ODD, 1, F(1, 2), -2)
print(case.params, "-> flipped", case.flipped())
print("zero u_n at n =", detect_degenerate(case.params, 12))

# Q_3 = (x - 1)^2 (x + 1) divides every later Q_n
print("Q_3 =", factor_base(case))
print("tails factor:", all(factor_check(case, m) for m in range(7)))

# the discrete part is a moment matrix at the roots of Q_3
mf = moment_form(case)
print("points (x, highest derivative order):", mf.points)
for row in mf.A:
    print([str(a) for a in row])
print("A symmetric:", mf.is_symmetric(), "diagonal:", mf.is_diagonal(),
      "positive definite:", mf.is_positive_definite())

# lambda multiplies the continuous part
print("lambda:", lambda_N(case))

report = gram_degenerate(case, 2 * case.N + 5)
print("expected diagonal:", [str(q) for q in report.expected_diag])
print("pass:", report.passed, "offdiag:", report.max_offdiag_rel, "diag:", report.max_diag_rel_err)
