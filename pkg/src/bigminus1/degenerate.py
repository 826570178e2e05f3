"""Non-standard parameters alpha = -2N-1 or beta = -2N-1.

At these parameters u_{2N+1} vanishes, Q_{2N+1} divides every later Q_n and
the sequence is orthogonal with respect to a Sobolev-type form

    <p, q> = E(p)^T A E(q) + lam * J(tau p, tau q)

where E collects derivative values at the roots of Q_{2N+1}, A is a symmetric
rational matrix, tau is the composite lowering map onto the "flipped" family
and J is the continuous functional at the flipped parameters.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .bigm1 import (ParamSet, Perturb, QSeq, norm_h, norm_h_eps, q_seq, recurrence_b,
                    recurrence_u, recurrence_u_eps)
from .errors import BasisIncomplete, QuadratureDomainError, SingularBasisMatrix, ZeroDenominator
from .quadrature import GramReport, QuadConfig, _summarize, gram_matrix
from .ratpoly import EpsRat, Poly, as_rational, eps_limit

__all__ = [
    "Kind",
    "DegenerateCase",
    "MomentForm",
    "detect_degenerate",
    "factor_base",
    "factor_check",
    "lemma2_check",
    "basis_expand",
    "tau_power",
    "moment_form",
    "lambda_N",
    "degenerate_norm",
    "remark2_ratio_check",
    "norm_recursion_eps_check",
    "bilinear_form",
    "discrete_part",
    "gram_degenerate",
]


class Kind(enum.Enum):
    ALPHA_ODD = "alpha"
    BETA_ODD = "beta"


@dataclass(frozen=True)
class DegenerateCase:
    """alpha = -2N-1 (ALPHA_ODD) or beta = -2N-1 (BETA_ODD).

    ``free`` is the other one of alpha, beta.
    """

    kind: Kind
    N: int
    free: Fraction
    c: Fraction

    def __post_init__(self):
        if self.N < 0:
            raise ValueError("N must be nonnegative")
        object.__setattr__(self, "free", as_rational(self.free))
        object.__setattr__(self, "c", as_rational(self.c))
        if self.c in (1, -1):
            raise ValueError("c must differ from 1 and -1")

    @property
    def params(self) -> ParamSet:
        odd = -2 * self.N - 1
        if self.kind is Kind.ALPHA_ODD:
            return ParamSet(odd, self.free, self.c)
        return ParamSet(self.free, odd, self.c)

    def flipped(self) -> ParamSet:
        odd = 2 * self.N + 1
        if self.kind is Kind.ALPHA_ODD:
            return ParamSet(odd, self.free, -self.c)
        return ParamSet(self.free, odd, -self.c)

    @property
    def perturb(self) -> Perturb:
        return Perturb.ALPHA if self.kind is Kind.ALPHA_ODD else Perturb.BETA

    @property
    def size(self) -> int:
        """2N+1: the degree of the common factor."""
        return 2 * self.N + 1

    def seq(self, nmax: int) -> QSeq:
        return q_seq(nmax, self.params)

    def flipped_seq(self, nmax: int) -> QSeq:
        return q_seq(nmax, self.flipped())

    def flipped_image(self, m: int) -> Poly:
        """Q_m(sigma x; flipped), with sigma = -1 for ALPHA_ODD."""
        q = self.flipped_seq(m)[m]
        return q.reflect() if self.kind is Kind.ALPHA_ODD else q


def detect_degenerate(params: ParamSet, nmax: int) -> list[int]:
    return [n for n in range(1, nmax + 1) if recurrence_u(n, params) == 0]


def factor_base(case: DegenerateCase) -> Poly:
    N = case.N
    if case.kind is Kind.ALPHA_ODD:
        return Poly([-1, 0, 1]) ** N * Poly([-1, 1])
    c = case.c
    return Poly([-c * c, 0, 1]) ** N * Poly([c, 1])


def factor_check(case: DegenerateCase, m: int) -> bool:
    """Q_{2N+1+m}(x) == (+-1)^m * factor_base * Q_m(sigma x; flipped)."""
    lhs = case.seq(case.size + m)[case.size + m]
    rhs = factor_base(case) * case.flipped_image(m)
    if case.kind is Kind.ALPHA_ODD and m % 2:
        rhs = -rhs
    return lhs == rhs


def lemma2_check(case: DegenerateCase, n: int) -> bool:
    """Shifted recurrence coefficients agree with those of the flipped family."""
    p, f = case.params, case.flipped()
    k = n + case.size
    sign = -1 if case.kind is Kind.ALPHA_ODD else 1
    return (recurrence_b(k, p) == sign * recurrence_b(n, f)
            and recurrence_u(k, p) == recurrence_u(n, f))


def basis_expand(p: Poly, basis: Sequence[Poly]) -> list[Fraction]:
    """Coordinates of ``p`` in a monic, degree-graded basis (top-down elimination)."""
    d = p.degree
    if len(basis) < d + 1:
        raise BasisIncomplete(f"need {d + 1} basis polynomials, got {len(basis)}")
    out = [Fraction(0)] * max(d + 1, 0)
    r = p
    for k in range(d, -1, -1):
        a = r[k]
        if a:
            out[k] = a
            r = r - basis[k].scale(a)
    return out


def tau_power(p: Poly, case: DegenerateCase) -> Poly:
    """The composite lowering map tau^{2N+1}.

    Sends Q_j(x; params) to 0 for j <= 2N and to Q_{j-2N-1}(sigma x; flipped)
    otherwise, extended linearly.
    """
    if p.degree < case.size:
        return Poly()
    coords = basis_expand(p, case.seq(p.degree).polys)
    out = Poly()
    for m, a in enumerate(coords[case.size:]):
        if a:
            out = out + case.flipped_image(m).scale(a)
    return out


# -- moment form -------------------------------------------------------

@dataclass(frozen=True)
class MomentForm:
    """Discrete part F^T A G of the bilinear form.

    ``points`` lists (location, max_order); E(p) stacks p^(k)(location) for
    k = 0..max_order, point by point.
    """

    points: tuple[tuple[Fraction, int], ...]
    A: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return sum(k + 1 for _, k in self.points)

    def evaluations(self, p: Poly) -> list[Fraction]:
        out = []
        for x0, kmax in self.points:
            d = p
            for _ in range(kmax + 1):
                out.append(d.evaluate(x0))
                d = d.derivative()
        return out

    def apply(self, p: Poly, q: Poly) -> Fraction:
        ep, eq = self.evaluations(p), self.evaluations(q)
        return sum((ep[i] * self.A[i][j] * eq[j]
                    for i in range(self.dim) for j in range(self.dim)), Fraction(0))

    def is_symmetric(self) -> bool:
        n = self.dim
        return all(self.A[i][j] == self.A[j][i] for i in range(n) for j in range(n))

    def is_diagonal(self) -> bool:
        n = self.dim
        return all(self.A[i][j] == 0 for i in range(n) for j in range(n) if i != j)

    def is_positive_definite(self) -> bool:
        """Sylvester's criterion, exactly."""
        return all(_det([row[:k] for row in self.A[:k]]) > 0 for k in range(1, self.dim + 1))


def _det(M) -> Fraction:
    M = [list(r) for r in M]
    n = len(M)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            det = -det
        det *= M[col][col]
        for r in range(col + 1, n):
            f = M[r][col] / M[col][col]
            if f:
                for k in range(col, n):
                    M[r][k] -= f * M[col][k]
    return det


def _inverse(M) -> list[list[Fraction]]:
    n = len(M)
    aug = [list(M[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise SingularBasisMatrix("evaluation matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def degenerate_norm(case: DegenerateCase, j: int) -> Fraction:
    """h_j at the literal degenerate parameters, for j <= 2N.

    Computed as an eps-limit because some Pochhammer factors are 0/0 there.
    """
    order, lead = eps_limit(norm_h_eps(j, case.params, case.perturb))
    if order != 0:
        raise ArithmeticError(f"h_{j} at {case.params} has eps-order {order}; expected a finite nonzero limit")
    return lead


@lru_cache(maxsize=128)
def moment_form(case: DegenerateCase) -> MomentForm:
    N, c = case.N, case.c
    if case.kind is Kind.ALPHA_ODD:
        pts = [(Fraction(1), N)] + ([(Fraction(-1), N - 1)] if N else [])
    else:
        pts = [(-c, N)] + ([(c, N - 1)] if N else [])
    shell = MomentForm(tuple(pts), ())
    seq = case.seq(2 * N)
    # V[:, j] = E(Q_j)
    cols = [shell.evaluations(seq[j]) for j in range(case.size)]
    n = case.size
    V = [[cols[j][i] for j in range(n)] for i in range(n)]
    Vinv = _inverse(V)
    h = [degenerate_norm(case, j) for j in range(n)]
    A = [[sum((Vinv[k][i] * h[k] * Vinv[k][j] for k in range(n)), Fraction(0))
          for j in range(n)] for i in range(n)]
    return MomentForm(tuple(pts), tuple(tuple(r) for r in A))


# -- eps-limits -----------------------------------------------------------

def lambda_N(case: DegenerateCase) -> tuple[int, Fraction]:
    """Order and leading eps-coefficient of h_{2N+1}(params + eps)/2.

    The literal value at eps = 0 is zero; the leading coefficient is the
    scale used for the continuous term.
    """
    return eps_limit(norm_h_eps(case.size, case.params, case.perturb) * Fraction(1, 2))


def remark2_ratio_check(case: DegenerateCase, j: int) -> bool:
    """(1/2) h_{2N+1} * h_{j-2N-1}(flipped) and h_j agree to leading eps order."""
    if j < case.size:
        raise ValueError(f"j must be at least {case.size}")
    lhs = (norm_h_eps(case.size, case.params, case.perturb) * Fraction(1, 2)
           * norm_h_eps(j - case.size, case.flipped(), case.perturb))
    rhs = norm_h_eps(j, case.params, case.perturb)
    return eps_limit(lhs) == eps_limit(rhs)


def norm_recursion_eps_check(params: ParamSet, perturb: Perturb, n: int) -> bool:
    """h_n = u_n h_{n-1} as an identity of eps-leading terms."""
    lhs = norm_h_eps(n, params, perturb)
    rhs = recurrence_u_eps(n, params, perturb) * norm_h_eps(n - 1, params, perturb)
    return eps_limit(lhs) == eps_limit(rhs)


# -- the bilinear form ----------------------------------------------------------

def _continuous_inputs(case: DegenerateCase, polys: Sequence[Poly]) -> list[Poly]:
    # <u_1, f> evaluates f at -x, undoing the reflection in tau for ALPHA_ODD
    taus = [tau_power(p, case) for p in polys]
    if case.kind is Kind.ALPHA_ODD:
        taus = [t.reflect() for t in taus]
    return taus


def _check_flipped(case: DegenerateCase) -> None:
    f = case.flipped()
    if not f.quadrature_admissible:
        raise QuadratureDomainError(
            f"flipped parameters {f} are not admissible for quadrature "
            "(need -c > 1 and the free parameter > -1)")


def discrete_part(p: Poly, q: Poly, case: DegenerateCase) -> Fraction:
    return moment_form(case).apply(p, q)


def _continuous_gram(case: DegenerateCase, polys: Sequence[Poly], quad: QuadConfig | None) -> np.ndarray:
    """J(tau p_i, tau p_j) = 2 <u, ...>_flipped / <u, 1>_flipped for all pairs."""
    ins = [Poly([1])] + _continuous_inputs(case, polys)
    G = gram_matrix(ins, case.flipped(), quad)
    return 2.0 * G[1:, 1:] / G[0, 0]


def bilinear_form(p: Poly, q: Poly, case: DegenerateCase, quad: QuadConfig | None = None) -> float:
    _check_flipped(case)
    disc = discrete_part(p, q, case)
    lam = lambda_N(case)[1]
    J = _continuous_gram(case, [p, q], quad)[0, 1]
    return float(disc) + float(lam) * float(J)


def gram_degenerate(case: DegenerateCase, nmax: int, quad: QuadConfig | None = None,
                    tol: float = 1e-8) -> GramReport:
    """Gram matrix of Q_0..Q_nmax under the degenerate bilinear form."""
    _check_flipped(case)
    seq = case.seq(nmax)
    n0 = case.size
    disc = [[discrete_part(seq[i], seq[j], case) for j in range(nmax + 1)] for i in range(nmax + 1)]
    lam = lambda_N(case)[1]
    G = np.array([[float(v) for v in row] for row in disc])
    if nmax >= n0:
        J = _continuous_gram(case, list(seq.polys), quad)
        G = G + float(lam) * J
    fseq = case.flipped_seq(max(nmax - n0, 0))
    expected = [degenerate_norm(case, j) if j < n0 else lam * norm_h(j - n0, fseq.params)
                for j in range(nmax + 1)]
    off, err, ok = _summarize(G, expected, tol)
    discrete_exact = all(disc[i][j] == (expected[i] if i == j and i < n0 else 0)
                         for i in range(nmax + 1) for j in range(nmax + 1))
    ok = ok and discrete_exact
    mf = moment_form(case)
    notes = {
        "discrete_block_exact": discrete_exact,
        "lambda": lam,
        "A_diagonal": mf.is_diagonal(),
        "A_positive_definite": mf.is_positive_definite(),
    }
    return GramReport(nmax, G, expected, off, err, tol, ok, diag_mode="absolute", notes=notes)
