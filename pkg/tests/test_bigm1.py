from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bigminus1.bigm1 import (ParamSet, Perturb, hyp2f1_poly, hyp2f1_reg, kappa, kappa_monic,
                             lemma1_check, norm_h, norm_h_eps, q_hyper, q_seq, recurrence_b,
                             recurrence_u)
from bigminus1.errors import DegenerateDenominator, DegenerateParams, LowerParameterDegenerate
from bigminus1.ratpoly import EpsPoly, EpsRat, Poly, eps_limit, pochhammer, pochhammer_eps

X = Poly.gen()
P002 = ParamSet(0, 0, 2)


def test_paramset_rejects_unit_c():
    for c in (1, -1):
        with pytest.raises(ValueError):
            ParamSet(0, 0, c)


def test_recurrence_b_examples():
    assert recurrence_b(0, P002) == F(-1, 2)
    assert recurrence_b(0, ParamSet(-1, F(1, 2), 2)) == 1
    assert recurrence_b(0, ParamSet(F(1, 2), -1, 3)) == -3


def test_recurrence_u_examples():
    assert recurrence_u(1, P002) == F(9, 4)
    assert recurrence_u(0, ParamSet(F(5, 3), F(-7, 2), 9)) == 0
    assert recurrence_u(3, ParamSet(-3, F(1, 2), 2)) == 0


def test_recurrence_denominator_errors():
    with pytest.raises(DegenerateDenominator) as exc:
        recurrence_b(0, ParamSet(0, -2, 2))
    assert exc.value.n == 0
    with pytest.raises(DegenerateDenominator):
        recurrence_u(1, ParamSet(0, -2, 2))


def test_q_seq_examples():
    assert q_seq(1, P002)[1] == X + F(1, 2)
    assert q_seq(2, P002)[2] == X * X + X * F(1, 2) - F(9, 4)
    assert q_seq(3, ParamSet(-3, F(1, 2), 2))[3] == Poly([1, -1, -1, 1])


@pytest.mark.parametrize("params", [P002, ParamSet(F(1, 2), F(3, 2), F(-5, 2)), ParamSet(-3, F(1, 2), 2)])
def test_q_seq_monic_and_satisfies_recurrence(params):
    s = q_seq(10, params)
    for n, p in enumerate(s.polys):
        assert p.degree == n and p.is_monic()
    for n in range(1, 10):
        assert X * s[n] == s[n + 1] + s[n].scale(s.b[n]) + s[n - 1].scale(s.u[n])


def test_hyp2f1_poly_examples():
    assert hyp2f1_poly(0, F(7), F(1, 3)) == Poly([1])
    assert hyp2f1_poly(1, 2, F(1, 2)) == Poly([1, -4])
    with pytest.raises(LowerParameterDegenerate):
        hyp2f1_poly(1, 2, 0)


def test_hyp2f1_poly_brute_force():
    # direct term-by-term definition of the coefficients
    for m, a, low in [(3, F(2, 3), F(5, 2)), (5, F(-1, 2), F(3)), (4, F(7), F(-7, 2))]:
        want = [pochhammer(F(-m), k) * pochhammer(a, k) / (pochhammer(low, k) * pochhammer(F(1), k))
                for k in range(m + 1)]
        assert hyp2f1_poly(m, a, low) == Poly(want)


def test_hyp2f1_reg_examples():
    assert hyp2f1_reg(0, 1, 3) == Poly([0, -3])
    assert hyp2f1_reg(0, 2, F(1, 2)) == Poly([0, 0, F(3, 4)])
    assert hyp2f1_reg(1, 1, F(1, 2)) == Poly([0, -1, F(3, 4)])


def _reg_by_perturbation(n, N, a):
    """Independent oracle: shift the lower parameter to -N+1+eps, multiply by
    (-N+1+eps)_{n+N} and take eps -> 0 coefficient by coefficient."""
    m = n + N
    out = []
    for k in range(m + 1):
        top = EpsPoly([pochhammer(F(-m), k) * pochhammer(a, k) / pochhammer(F(1), k)])
        top = top * pochhammer_eps(-N + 1, 1, m)
        order, lead = eps_limit(EpsRat(top, pochhammer_eps(-N + 1, 1, k)))
        out.append(lead if order == 0 else F(0))
        assert order >= 0
    return Poly(out)


@pytest.mark.parametrize("n,N,a", [(0, 1, F(3)), (3, 2, F(1, 2)), (5, 3, F(7, 3)), (2, 4, F(-5, 2))])
def test_hyp2f1_reg_against_perturbation_oracle(n, N, a):
    assert hyp2f1_reg(n, N, a) == _reg_by_perturbation(n, N, a)


@pytest.mark.parametrize("n,N,a", [(0, 1, 3), (3, 2, F(1, 2)), (5, 3, F(7, 3))])
def test_lemma1_examples(n, N, a):
    assert lemma1_check(n, N, a)


def test_lemma1_detects_a_broken_identity():
    # the factorized side must not agree with an unrelated polynomial
    lhs = hyp2f1_reg(3, 2, F(1, 2))
    assert lhs != hyp2f1_reg(0, 2, F(1, 2)) * hyp2f1_poly(3, F(1, 2), 3)


def test_kappa_examples():
    assert kappa(0, ParamSet(F(7, 3), -5, 4)) == 1
    assert kappa(1, P002) == 3
    assert kappa(2, P002) == F(-3, 4)


def test_kappa_even_branch_is_monic_normalizer():
    for params in (P002, ParamSet(F(1, 2), F(3, 2), F(3, 2))):
        for n in range(0, 13, 2):
            assert kappa(n, params) == kappa_monic(n, params)


def test_kappa_odd_branch_misprint_is_visible():
    # at n=1 monicity needs (1+c)(alpha+1)/(alpha+beta+2), not the tabulated c+1
    for params in (P002, ParamSet(F(1, 2), F(3, 2), F(3, 2))):
        a, b, c = params.alpha, params.beta, params.c
        assert kappa_monic(1, params) == (1 + c) * (a + 1) / (a + b + 2)
        assert kappa(1, params) == c + 1
        assert kappa(1, params) != kappa_monic(1, params)


def test_q_hyper_examples():
    assert q_hyper(0, ParamSet(F(1, 3), F(2), 5)) == Poly([1])
    assert q_hyper(2, P002) == X * X + X * F(1, 2) - F(9, 4)
    assert q_hyper(1, P002) == X + F(1, 2)


def test_q_hyper_refuses_degenerate_lower_parameter():
    with pytest.raises(DegenerateParams):
        q_hyper(5, ParamSet(-3, F(1, 2), 2))
    with pytest.raises(DegenerateParams):
        q_hyper(1, ParamSet(-1, F(1, 2), 2))


halves = st.integers(-1, 9).map(lambda k: F(k, 2)).filter(lambda q: q > -1)


@settings(max_examples=40, deadline=None)
@given(halves, halves, st.sampled_from([F(3, 2), F(2), F(5), F(-3), F(1, 3)]), st.integers(0, 12))
def test_route_equivalence(a, b, c, n):
    # alpha = 0 gives (alpha+1)/2 = 1/2: all lower parameters are safe for alpha > -1
    params = ParamSet(a, b, c)
    assert q_hyper(n, params) == q_seq(n, params)[n]


@settings(max_examples=60, deadline=None)
@given(st.fractions(min_value=F(-19, 20), max_value=4, max_denominator=20),
       st.fractions(min_value=F(-19, 20), max_value=4, max_denominator=20),
       st.sampled_from([F(3, 2), F(2), F(5)]))
def test_positivity_of_u(a, b, c):
    params = ParamSet(a, b, c)
    for n in range(1, 21):
        assert recurrence_u(n, params) > 0


def test_norm_examples():
    assert norm_h(0, ParamSet(F(2, 7), F(-5, 3), 4)) == 2
    assert norm_h(1, P002) / norm_h(0, P002) == F(9, 4)
    assert norm_h(2, P002) / norm_h(1, P002) == F(1, 4)


@pytest.mark.parametrize("params", [P002, ParamSet(F(1, 2), F(3, 2), F(3, 2)),
                                    ParamSet(F(5, 3), F(-1, 4), -3)])
def test_norm_recursion_exact(params):
    for n in range(1, 13):
        assert norm_h(n, params) == recurrence_u(n, params) * norm_h(n - 1, params)


def test_norm_eps_examples():
    r = norm_h_eps(1, ParamSet(-1, 0, -2), Perturb.ALPHA)
    assert eps_limit(r) == (1, 2)
    assert eps_limit(norm_h_eps(0, ParamSet(F(3), F(1, 2), 7), Perturb.ALPHA)) == (0, 2)
    assert eps_limit(norm_h_eps(3, ParamSet(-3, F(1, 2), -2), Perturb.ALPHA))[0] == 1


@pytest.mark.parametrize("perturb", list(Perturb))
def test_norm_eps_reduces_to_exact_at_generic_params(perturb):
    params = ParamSet(F(1, 3), F(2, 5), F(7, 4))
    for n in range(8):
        assert eps_limit(norm_h_eps(n, params, perturb)) == (0, norm_h(n, params))


def test_norm_eps_slope_is_half_for_half_parameters():
    # alpha -> alpha + eps must shift (alpha+1)/2 by eps/2: compare with a literal substitution
    params = ParamSet(F(1, 3), F(2, 5), F(7, 4))
    e = F(1, 1000)
    for n in range(6):
        r = norm_h_eps(n, params, Perturb.ALPHA)
        assert r.num.evaluate(e) / r.den.evaluate(e) == norm_h(n, params.replace(alpha=params.alpha + e))
