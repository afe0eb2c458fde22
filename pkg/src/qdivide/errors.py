"""Exception hierarchy shared by every qdivide module."""


class QDivideError(Exception):
    """Base class for all qdivide errors."""


class NotDivisible(QDivideError, ArithmeticError):
    """Polynomial long division left a nonzero remainder."""


class DivisionByZero(QDivideError, ZeroDivisionError):
    pass


class NegativeExponent(QDivideError, ValueError):
    """A cyclotomic exponent vector has a negative entry."""

    def __init__(self, indices):
        self.indices = tuple(indices)
        super().__init__(
            "negative cyclotomic exponents at d = "
            + ", ".join(str(d) for d in self.indices)
        )


class NotPolynomial(QDivideError, ArithmeticError):
    """A(b,a;n,m) is a rational function outside Z[q]."""

    def __init__(self, params, negative=()):
        self.params = params
        self.negative = dict(negative)
        detail = ", ".join(f"e_{d} = {e}" for d, e in sorted(self.negative.items()))
        super().__init__(f"{params} is not a polynomial ({detail})")


class NotReducible(QDivideError, ValueError):
    pass


class PreconditionViolated(QDivideError, ValueError):
    pass


class InvalidShift(QDivideError, ValueError):
    pass


class PrecisionGuard(QDivideError, OverflowError):
    pass


class HypothesisNotMet(QDivideError):
    """The premise of a conditional theorem fails, so the check is vacuous."""
