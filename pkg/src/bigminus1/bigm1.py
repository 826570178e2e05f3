"""Monic big -1 Jacobi polynomials: recurrence coefficients, the two
construction routes (three-term recurrence and terminating 2F1 sums),
normalization constants and norms.

All quantities are exact Fractions.  Parameters are carried in a
:class:`ParamSet`; ``c`` must avoid +-1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DegenerateDenominator, DegenerateParams, LowerParameterDegenerate
from .ratpoly import EpsPoly, EpsRat, Poly, as_rational, pochhammer, pochhammer_eps, rational_str

__all__ = [
    "ParamSet",
    "Perturb",
    "QSeq",
    "recurrence_b",
    "recurrence_u",
    "recurrence_u_eps",
    "q_seq",
    "hyp2f1_poly",
    "hyp2f1_reg",
    "lemma1_check",
    "kappa",
    "kappa_monic",
    "hyper_bracket",
    "q_hyper",
    "norm_h",
    "norm_h_eps",
]

X = Poly.gen()


@dataclass(frozen=True)
class ParamSet:
    """The parameter triple (alpha, beta, c)."""

    alpha: Fraction
    beta: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "c"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.c in (1, -1):
            raise ValueError("c must differ from 1 and -1")

    @property
    def standard(self) -> bool:
        """alpha, beta > -1: the classical positive-definite range."""
        return self.alpha > -1 and self.beta > -1

    @property
    def quadrature_admissible(self) -> bool:
        """Real weight on [-c,-1] U [1,c] that is integrable at every endpoint."""
        return self.c > 1 and self.alpha > -1 and self.beta > -1

    def replace(self, **kw) -> "ParamSet":
        d = {"alpha": self.alpha, "beta": self.beta, "c": self.c}
        d.update(kw)
        return ParamSet(**d)

    def as_strings(self) -> dict:
        return {k: rational_str(getattr(self, k)) for k in ("alpha", "beta", "c")}

    def __str__(self):
        s = self.as_strings()
        return f"(alpha={s['alpha']}, beta={s['beta']}, c={s['c']})"


class Perturb(enum.Enum):
    ALPHA = "alpha"
    BETA = "beta"


def _div(num, den, n, what):
    if den == 0:
        raise DegenerateDenominator(n, what)
    return num / den


def recurrence_b(n: int, params: ParamSet) -> Fraction:
    a, b, c = params.alpha, params.beta, params.c
    s = a + b
    if n % 2 == 0:
        # the (c-1)n term is dropped at n=0, where it reads 0/(alpha+beta)
        t1 = _div((c - 1) * n, s + 2 * n, n, "alpha+beta+2n") if n else Fraction(0)
        t2 = _div((c + 1) * (b + n + 1), s + 2 * n + 2, n, "alpha+beta+2n+2")
        return -c + t1 + t2
    t1 = _div((c - 1) * (n + 1), s + 2 * n + 2, n, "alpha+beta+2n+2")
    t2 = _div((c + 1) * (b + n), s + 2 * n, n, "alpha+beta+2n")
    return c - t1 - t2


def recurrence_u(n: int, params: ParamSet) -> Fraction:
    if n == 0:
        return Fraction(0)
    a, b, c = params.alpha, params.beta, params.c
    d = (a + b + 2 * n) ** 2
    if n % 2 == 0:
        return _div((c - 1) ** 2 * n * (a + b + n), d, n, "alpha+beta+2n")
    return _div((c + 1) ** 2 * (a + n) * (b + n), d, n, "alpha+beta+2n")


def _slopes(perturb: Perturb | None) -> tuple[Fraction, Fraction]:
    if perturb is None:
        return Fraction(0), Fraction(0)
    return (Fraction(1), Fraction(0)) if perturb is Perturb.ALPHA else (Fraction(0), Fraction(1))


def _lin(a0, s) -> EpsPoly:
    return EpsPoly([a0, s])


def recurrence_u_eps(n: int, params: ParamSet, perturb: Perturb) -> EpsRat:
    """u_n with the chosen parameter shifted by eps."""
    if n == 0:
        return EpsRat(0)
    a, b, c = params.alpha, params.beta, params.c
    sa, sb = _slopes(perturb)
    d = _lin(a + b + 2 * n, sa + sb) ** 2
    if n % 2 == 0:
        num = _lin(a + b + n, sa + sb).scale((c - 1) ** 2 * n)
    else:
        num = (_lin(a + n, sa) * _lin(b + n, sb)).scale((c + 1) ** 2)
    return EpsRat(num, d)


@dataclass(frozen=True)
class QSeq:
    """Q_0..Q_nmax for one parameter set, with the coefficients used to build them.

    ``b[n]`` and ``u[n]`` are stored for ``n < nmax`` (the ones consumed by the
    recurrence).
    """

    params: ParamSet
    polys: tuple[Poly, ...]
    b: tuple[Fraction, ...]
    u: tuple[Fraction, ...]

    @property
    def nmax(self) -> int:
        return len(self.polys) - 1

    def __getitem__(self, n: int) -> Poly:
        return self.polys[n]

    def __len__(self):
        return len(self.polys)


@lru_cache(maxsize=512)
def q_seq(nmax: int, params: ParamSet) -> QSeq:
    """Build Q_0..Q_nmax from the three-term recurrence, Q_{-1}=0, Q_0=1."""
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    polys = [Poly([1])]
    prev = Poly()
    bs, us = [], []
    for n in range(nmax):
        bn = recurrence_b(n, params)
        un = recurrence_u(n, params)
        nxt = (X - bn) * polys[n] - prev.scale(un)
        bs.append(bn)
        us.append(un)
        prev = polys[n]
        polys.append(nxt)
    return QSeq(params, tuple(polys), tuple(bs), tuple(us))


def hyp2f1_poly(negdeg: int, a, low) -> Poly:
    """Terminating 2F1(-negdeg, a; low; z) as a polynomial in z."""
    a, low = as_rational(a), as_rational(low)
    coeffs = []
    term = Fraction(1)
    for k in range(negdeg + 1):
        coeffs.append(term)
        if k == negdeg:
            break
        if low + k == 0:
            raise LowerParameterDegenerate(
                f"lower parameter {low} gives (low)_{k + 1} = 0 before the series terminates")
        term = term * (-negdeg + k) * (a + k) / ((low + k) * (k + 1))
    return Poly(coeffs)


def hyp2f1_reg(n: int, N: int, a) -> Poly:
    """(-N+1)_{n+N} * 2F1(-n-N, a; -N+1; x), with the vanishing lower
    Pochhammer symbols cancelled term by term so N >= 1 is legal."""
    a = as_rational(a)
    m = n + N
    coeffs = []
    fact = 1
    for k in range(m + 1):
        if k:
            fact *= k
        coeffs.append(pochhammer(Fraction(-m), k) * pochhammer(a, k) / fact
                      * pochhammer(Fraction(-N + k + 1), m - k))
    return Poly(coeffs)


def lemma1_check(n: int, N: int, a) -> bool:
    """Does the regularized 2F1 split into a degree-N monomial times a
    2F1 with shifted parameters?"""
    a = as_rational(a)
    lhs = hyp2f1_reg(n, N, a)
    rhs = hyp2f1_reg(0, N, a) * hyp2f1_poly(n, a + N, N + 1) * pochhammer(Fraction(N + 1), n)
    return lhs == rhs


def kappa(n: int, params: ParamSet) -> Fraction:
    """Normalization constant in the closed form exactly as tabulated.

    Only the even branch makes the hypergeometric bracket monic; see
    :func:`kappa_monic` for the value that does so for every n.
    """
    a, b, c = params.alpha, params.beta, params.c
    if n % 2 == 0:
        k = n // 2
        num = (1 - c * c) ** k * pochhammer((a + 1) / 2, k)
        return _div(num, pochhammer((n + a + b + 2) / 2, k), n, "kappa denominator")
    k = (n - 1) // 2
    num = (c + 1) * (1 - c * c) ** k * pochhammer((a + 1) / 2, k)
    return _div(num, pochhammer((n + a + b + 1) / 2, k), n, "kappa denominator")


def hyper_bracket(n: int, params: ParamSet) -> Poly:
    """The 2F1 combination in braces, before multiplying by kappa_n."""
    a, b, c = params.alpha, params.beta, params.c
    z = Poly([1, 0, -1]).scale(1 / (1 - c * c))
    one_minus_x = Poly([1, -1])
    try:
        if n % 2 == 0:
            top = (n + a + b + 2) / 2
            out = hyp2f1_poly(n // 2, top, (a + 1) / 2).compose(z)
            if n:
                if a + 1 == 0:
                    raise DegenerateParams("alpha = -1 divides the second term")
                second = hyp2f1_poly(n // 2 - 1, top, (a + 3) / 2).compose(z)
                out = out + (one_minus_x * second).scale(Fraction(n) / ((c + 1) * (a + 1)))
            return out
        m = (n - 1) // 2
        if a + 1 == 0:
            raise DegenerateParams("alpha = -1 divides the second term")
        first = hyp2f1_poly(m, (n + a + b + 1) / 2, (a + 1) / 2).compose(z)
        second = hyp2f1_poly(m, (n + a + b + 3) / 2, (a + 3) / 2).compose(z)
        return first - (one_minus_x * second).scale((a + b + n + 1) / ((1 + c) * (a + 1)))
    except LowerParameterDegenerate as exc:
        raise DegenerateParams(str(exc)) from exc


def kappa_monic(n: int, params: ParamSet) -> Fraction:
    """The constant that actually makes the bracket monic."""
    br = hyper_bracket(n, params)
    if br.degree != n:
        raise DegenerateParams(f"bracket has degree {br.degree}, expected {n}")
    return 1 / br.leading


def q_hyper(n: int, params: ParamSet) -> Poly:
    """Q_n from the hypergeometric representation, rescaled to be monic."""
    br = hyper_bracket(n, params)
    if br.degree != n:
        raise DegenerateParams(f"bracket has degree {br.degree}, expected {n}")
    return br.monic()


# Norms.  Each Pochhammer factor is (base, eps-slope, length); the same table
# feeds the exact and the eps-perturbed evaluators.

def _norm_factors(n: int, params: ParamSet, perturb: Perturb | None):
    a, b, c = params.alpha, params.beta, params.c
    sa, sb = _slopes(perturb)
    half = Fraction(1, 2)
    if n % 2 == 0:
        k = n // 2
        pre = 2 * (c * c - 1) ** n * pochhammer(Fraction(1), k)
        num = [((a + 1) / 2, sa * half, k), ((b + 1) / 2, sb * half, k)]
        den = [((a + b) / 2 + 1, (sa + sb) * half, n), ((a + b + n) / 2 + 1, (sa + sb) * half, k)]
    else:
        k = (n + 1) // 2
        pre = 2 * (c - 1) ** (n - 1) * (c + 1) ** (n + 1) * pochhammer(Fraction(1), (n - 1) // 2)
        num = [((a + 1) / 2, sa * half, k), ((b + 1) / 2, sb * half, k)]
        den = [((a + b) / 2 + 1, (sa + sb) * half, n), ((a + b + n + 1) / 2, (sa + sb) * half, k)]
    return pre, num, den


def norm_h(n: int, params: ParamSet) -> Fraction:
    """Closed-form squared norm divided by the total mass <u, 1>.

    At n = 0 this is 2, not 1; only ratios are meaningful against quadrature.
    """
    pre, num, den = _norm_factors(n, params, None)
    top = pre
    for base, _, length in num:
        top *= pochhammer(base, length)
    bottom = Fraction(1)
    for base, _, length in den:
        bottom *= pochhammer(base, length)
    return _div(top, bottom, n, "norm denominator Pochhammer")


def norm_h_eps(n: int, params: ParamSet, perturb: Perturb) -> EpsRat:
    """:func:`norm_h` with alpha (or beta) replaced by alpha + eps."""
    pre, num, den = _norm_factors(n, params, perturb)
    top = EpsPoly([pre])
    for base, slope, length in num:
        top = top * pochhammer_eps(base, slope, length)
    bottom = EpsPoly([1])
    for base, slope, length in den:
        bottom = bottom * pochhammer_eps(base, slope, length)
    return EpsRat(top, bottom)
