"""Multisection of binomial coefficients by n-th roots of unity.

With w = exp(2 pi i / n) and M < n,

    sum_{j >= 0} C(N + m n, M + j n) = (1/n) sum_{j=1}^{n} w^{-jM} (1 + w^j)^{N + m n}.

Every "root sum" in this module is the unscaled right-hand sum (no 1/n), so
``root_unity_sum_exact == n * gould_lhs``.  Divisibility verdicts come from
exact integers only; the floating evaluation is a consistency check.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import mpmath

from .afunc import AParams, is_integer_poly
from .errors import HypothesisNotMet, PrecisionGuard
from .integer_theorems import binomial

__all__ = [
    "NUMERIC_EXPONENT_LIMIT",
    "GouldInstance",
    "gould_lhs",
    "root_unity_sum_exact",
    "root_unity_sum_numeric",
    "root_unity_sum_rounded",
    "theorem9_hypothesis",
    "theorem9_check",
]

NUMERIC_EXPONENT_LIMIT = 200


@dataclass(frozen=True)
class GouldInstance:
    N: int
    M: int
    n: int
    m: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if min(self.N, self.M, self.m) < 0:
            raise ValueError("N, M, m must be nonnegative")
        if self.M >= self.n:
            raise ValueError(f"need M < n, got M={self.M}, n={self.n}")

    @property
    def top(self) -> int:
        """The upper binomial index N + m n."""
        return self.N + self.m * self.n


def gould_lhs(g: GouldInstance) -> int:
    top = g.top
    return sum(binomial(top, k) for k in range(g.M, top + 1, g.n))


def root_unity_sum_exact(g: GouldInstance) -> int:
    return g.n * gould_lhs(g)


def root_unity_sum_numeric(g: GouldInstance, dps: int | None = None):
    """Evaluate the unscaled root sum numerically.

    Returns a Python complex by default.  With ``dps`` the sum is evaluated
    by mpmath at that many decimal digits and an ``mpc`` is returned, which
    is precise enough to round to the exact integer.
    """
    top = g.top
    if top > NUMERIC_EXPONENT_LIMIT:
        raise PrecisionGuard(
            f"N + m n = {top} exceeds {NUMERIC_EXPONENT_LIMIT}; float evaluation unreliable"
        )
    if dps is not None:
        with mpmath.workdps(dps):
            acc = mpmath.mpc(0)
            for j in range(1, g.n + 1):
                w = mpmath.expjpi(mpmath.mpf(2 * j) / g.n)
                acc += w ** (-g.M) * (1 + w) ** top
            return +acc
    total = 0j
    for j in range(1, g.n + 1):
        w = cmath.exp(2j * math.pi * j / g.n)
        total += w ** (-g.M) * (1 + w) ** top
    return total


def root_unity_sum_rounded(g: GouldInstance, dps: int = 60) -> int:
    """The root sum evaluated at ``dps`` digits and rounded to an integer."""
    with mpmath.workdps(dps):
        return int(mpmath.nint(root_unity_sum_numeric(g, dps=dps).real))


def theorem9_hypothesis(g: GouldInstance) -> bool:
    """A(1,n;N,M) is a nonzero element of Z[q].

    M > N is excluded: there A is the zero function, and the n^2
    divisibility is false for many such instances.
    """
    return g.M <= g.N and is_integer_poly(AParams(1, g.n, g.N, g.M))


def theorem9_check(g: GouldInstance) -> bool:
    """n^2 divides the root sum, i.e. n divides ``gould_lhs``."""
    if not theorem9_hypothesis(g):
        raise HypothesisNotMet(f"A(1,{g.n};{g.N},{g.M}) is not a nonzero polynomial")
    return root_unity_sum_exact(g) % (g.n * g.n) == 0
