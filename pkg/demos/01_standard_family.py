"""
Standard parameters: recurrence, hypergeometric route and quadrature
====================================================================

Build Q_0..Q_6 at (alpha, beta, c) = (0, 0, 2) two ways, then check
orthogonality numerically on [-2, -1] U [1, 2].
"""

from fractions import Fraction as F

import numpy as np

from bigminus1 import ParamSet, q_hyper, q_seq, recurrence_b, recurrence_u, norm_h
from bigminus1.quadrature import gram_quadrature

params = ParamSet(0, 0, 2)
seq = q_seq(6, params)

# recurrence coefficients are exact rationals
for n in range(7):
    print(n, recurrence_b(n, params), recurrence_u(n, params), seq[n])

# the closed form agrees with the recurrence term by term
print("hypergeometric route agrees:", all(q_hyper(n, params) == seq[n] for n in range(7)))

# norms obey h_n = u_n h_{n-1}
print([str(norm_h(n, params)) for n in range(7)])

# numerical Gram matrix, normalized by its (0,0) entry
report = gram_quadrature(6, params)
np.set_printoptions(precision=3, suppress=True, linewidth=120)
print(report.entries / report.entries[0, 0])
print("max off-diagonal:", report.max_offdiag_rel, "pass:", report.passed)

# a half-integer parameter puts integrable singularities at x = +-1
report = gram_quadrature(8, ParamSet(F(1, 2), F(-1, 2), 3))
print("alpha=1/2 beta=-1/2 c=3 pass:", report.passed, report.max_diag_rel_err)
