from fractions import Fraction as F

import numpy as np
import pytest
from scipy import integrate

from bigminus1.bigm1 import ParamSet, norm_h, q_seq, recurrence_u
from bigminus1.errors import DomainError, NoConvergence, QuadratureDomainError
from bigminus1.quadrature import (QuadConfig, functional_u, gram_matrix, gram_quadrature,
                                  total_mass, weight_eval)
from bigminus1.ratpoly import Poly

ONE = Poly([1])


def _antiderivative(p: Poly) -> Poly:
    return Poly([0] + [a / (k + 1) for k, a in enumerate(p.coeffs)])


def exact_u(p: Poly, q: Poly, params: ParamSet) -> F:
    """Closed form when (alpha-1)/2 and (beta-1)/2 are nonnegative integers:
    the weight is then a polynomial on each branch."""
    a, b, c = params.alpha, params.beta, params.c
    ea, eb = (a - 1) / 2, (b - 1) / 2
    assert ea.denominator == 1 and eb.denominator == 1 and ea >= 0 and eb >= 0
    w = Poly([1, 1]) * Poly([c, -1]) * Poly([-1, 0, 1]) ** int(ea) * Poly([c * c, 0, -1]) ** int(eb)
    P = _antiderivative(p * q * w)
    return (P.evaluate(c) - P.evaluate(1)) - (P.evaluate(-1) - P.evaluate(-c))


def scipy_u(p: Poly, q: Poly, params: ParamSet) -> float:
    """Oracle for singular weights: QUADPACK with algebraic endpoint weights."""
    c = float(params.c)
    ea, eb = (float(params.alpha) - 1) / 2, (float(params.beta) - 1) / 2
    pq = lambda x: float(p.evalf(x)) * float(q.evalf(x))
    right = integrate.quad(lambda x: (x + 1) * (c - x) * (x + 1) ** ea * (c + x) ** eb * pq(x),
                           1, c, weight="alg", wvar=(ea, eb), epsabs=1e-14, epsrel=1e-13)[0]
    left = integrate.quad(lambda x: -(x + 1) * (c - x) * (1 - x) ** ea * (c - x) ** eb * pq(x),
                          -c, -1, weight="alg", wvar=(eb, ea), epsabs=1e-14, epsrel=1e-13)[0]
    return right + left


def test_weight_examples():
    p = ParamSet(1, 1, 2)
    assert weight_eval(1.5, p) == pytest.approx(5 / 4, rel=1e-15)
    for x in np.linspace(-1.95, -1.05, 7):
        assert weight_eval(x, p) == pytest.approx(-(x + 1) * (2 - x))
        assert weight_eval(x, p) > 0
    p0 = ParamSet(0, 1, 2)
    assert weight_eval(1 + 1e-10, p0) > 1e4
    with pytest.raises(DomainError):
        weight_eval(0.0, p)
    with pytest.raises(DomainError):
        weight_eval(2.0, p)


@pytest.mark.parametrize("params", [ParamSet(0, 0, 2), ParamSet(F(1, 2), F(-1, 2), 3),
                                    ParamSet(F(-1, 2), 4, F(3, 2))])
def test_weight_nonnegative(params):
    c = float(params.c)
    for x in np.concatenate([np.linspace(1, c, 50)[1:-1], np.linspace(-c, -1, 50)[1:-1]]):
        assert weight_eval(x, params) >= 0


def test_total_mass_closed_form():
    assert total_mass(ParamSet(1, 1, 2)) == pytest.approx(3, rel=1e-13)
    assert exact_u(ONE, ONE, ParamSet(1, 1, 2)) == 3


@pytest.mark.parametrize("params", [ParamSet(1, 1, 2), ParamSet(3, 1, 2), ParamSet(1, 5, F(3, 2)),
                                    ParamSet(5, 3, 4)])
def test_gram_against_polynomial_weight(params):
    seq = q_seq(6, params)
    polys = list(seq.polys) + [Poly([F(1, 3), -2, 0, 1])]
    G = gram_matrix(polys, params)
    for i, p in enumerate(polys):
        for j, q in enumerate(polys):
            want = float(exact_u(p, q, params))
            scale = float(abs(exact_u(p, p, params) * exact_u(q, q, params))) ** 0.5
            assert abs(G[i, j] - want) <= 1e-12 * scale


@pytest.mark.parametrize("params", [ParamSet(0, 0, 2), ParamSet(F(1, 2), 0, 2), ParamSet(F(-1, 2), F(-1, 3), 3)])
def test_singular_weight_against_quadpack(params):
    p, q = Poly([F(1, 2), 1, 1]), Poly([-1, F(1, 3)])
    for a, b in [(ONE, ONE), (p, q), (p, p)]:
        assert functional_u(a, b, params) == pytest.approx(scipy_u(a, b, params), rel=1e-10, abs=1e-12)


def test_orthogonality_examples():
    params = ParamSet(1, 1, 2)
    s = q_seq(2, params)
    m = functional_u(ONE, ONE, params)
    assert abs(functional_u(s[1], s[0], params)) <= 1e-13 * m
    ratio = functional_u(s[1], s[1], params) / m
    assert ratio == pytest.approx(float(norm_h(1, params) / norm_h(0, params)), rel=1e-12)


@pytest.mark.parametrize("params", [ParamSet(0, 0, 2), ParamSet(F(1, 2), F(3, 2), 3)])
def test_symmetry_and_ratio_law(params):
    cfg = QuadConfig()
    s = q_seq(8, params)
    p, q = s[3] + s[1], s[4].scale(F(2, 3)) - s[0]
    assert abs(functional_u(p, q, params, cfg) - functional_u(q, p, params, cfg)) <= 1e-13
    for n in range(1, 9):
        r = functional_u(s[n], s[n], params, cfg) / functional_u(s[n - 1], s[n - 1], params, cfg)
        assert r == pytest.approx(float(recurrence_u(n, params)), rel=1e-11)


def test_doubling_levels_is_stable():
    params = ParamSet(0, F(1, 2), 2)
    polys = list(q_seq(6, params).polys)
    a = gram_matrix(polys, params, QuadConfig(max_levels=8))
    b = gram_matrix(polys, params, QuadConfig(max_levels=16))
    d = np.sqrt(np.outer(np.diag(a), np.diag(a)))
    assert np.all(np.abs(a - b) <= 1e-12 * d)


def test_domain_and_convergence_errors():
    with pytest.raises(QuadratureDomainError):
        functional_u(ONE, ONE, ParamSet(0, 0, F(1, 2)))
    with pytest.raises(QuadratureDomainError):
        functional_u(ONE, ONE, ParamSet(-1, 0, 2))
    with pytest.raises(QuadratureDomainError):
        gram_quadrature(2, ParamSet(0, 0, -2))
    with pytest.raises(NoConvergence):
        gram_matrix([ONE], ParamSet(F(-9, 10), 0, 2), QuadConfig(rel_tol=1e-15, abs_tol=1e-300, max_levels=1))


@pytest.mark.parametrize("ab", [(0, 0), (F(1, 2), 0), (0, F(1, 2)), (F(1, 2), F(1, 2))])
def test_gram_quadrature_standard(ab):
    r = gram_quadrature(8, ParamSet(ab[0], ab[1], 2), tol=1e-8)
    assert r.passed
    assert r.max_offdiag_rel <= 1e-8 and r.max_diag_rel_err <= 1e-8


def test_gram_quadrature_single_entry():
    r = gram_quadrature(0, ParamSet(1, 1, 2))
    assert r.entries.shape == (1, 1)
    assert r.entries[0, 0] == pytest.approx(3, rel=1e-13)


def test_gram_report_json_schema():
    r = gram_quadrature(2, ParamSet(0, 0, 2))
    d = r.to_dict()
    assert list(d) == ["nmax", "entries", "expected_diag", "max_offdiag_rel", "max_diag_rel_err", "pass"]
    assert all(isinstance(v, str) for row in d["entries"] for v in row)
    assert d["expected_diag"][0] == "1"
    assert r.to_json() == gram_quadrature(2, ParamSet(0, 0, 2)).to_json()
