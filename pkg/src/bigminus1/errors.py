"""Exception types raised across the package."""


class BigJacobiError(Exception):
    """Base class for every error raised by this package."""


class DegenerateDenominator(BigJacobiError, ZeroDivisionError):
    """A closed-form denominator vanishes at the requested index."""

    def __init__(self, n, what=""):
        self.n = n
        self.what = what
        msg = f"denominator vanishes at n={n}"
        if what:
            msg += f" ({what})"
        super().__init__(msg)


class LowerParameterDegenerate(BigJacobiError, ZeroDivisionError):
    """A terminating 2F1 has a vanishing lower Pochhammer symbol."""


class DegenerateParams(BigJacobiError, ValueError):
    """The hypergeometric route cannot be used at these parameters."""


class ZeroDenominator(BigJacobiError, ZeroDivisionError):
    """An epsilon-rational function has an identically zero denominator."""


class BasisIncomplete(BigJacobiError, ValueError):
    pass


class SingularBasisMatrix(BigJacobiError, ArithmeticError):
    pass


class DomainError(BigJacobiError, ValueError):
    """A point lies outside the open support of the weight."""


class QuadratureDomainError(BigJacobiError, ValueError):
    """Parameters for which the weight is not integrable (or not real)."""


class NoConvergence(BigJacobiError, RuntimeError):
    pass
