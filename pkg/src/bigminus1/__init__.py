"""Exact and numerical tools for the monic big -1 Jacobi polynomials,
including the non-standard parameters alpha = -2N-1 and beta = -2N-1."""

from .bigm1 import (ParamSet, Perturb, QSeq, hyp2f1_poly, hyp2f1_reg, kappa, kappa_monic,
                    lemma1_check, norm_h, norm_h_eps, q_hyper, q_seq, recurrence_b,
                    recurrence_u, recurrence_u_eps)
from .degenerate import (DegenerateCase, Kind, MomentForm, basis_expand, bilinear_form,
                         detect_degenerate, factor_base, factor_check, gram_degenerate,
                         lambda_N, lemma2_check, moment_form, remark2_ratio_check, tau_power)
from .quadrature import GramReport, QuadConfig, functional_u, gram_quadrature, weight_eval
from .ratpoly import EpsPoly, EpsRat, Poly, eps_limit, pochhammer, pochhammer_eps

__version__ = "0.1.0"
