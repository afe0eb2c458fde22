"""The function A(b,a;n,m) = (1 - q^b)/(1 - q^a) * [n, m].

Polynomiality is decided from cyclotomic exponents (integer work linear in
max(n, a, b)); expansion to coefficients is only needed to read off values
or when b > a, where nonnegativity does not follow from integrality.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterable

from .cyclotomic import ExponentVector, exponent_vector
from .errors import InvalidShift, NotPolynomial, NotReducible, PreconditionViolated
from .qpoly import ZERO, QPoly, gaussian_binomial, one_minus_qk, poly_exact_div, poly_mul
from .reports import ScanReport

__all__ = [
    "AParams",
    "ReducedForm",
    "reduced_form",
    "is_zero_function",
    "certificate",
    "is_integer_poly",
    "expand",
    "is_nonneg_poly",
    "gcd_characterization",
    "andrews_predicate",
    "shift_equivalence_check",
    "unify_hypothesis",
    "unify_after_reduction",
    "guo_kratt_family_checks",
    "EQ4_FAMILIES",
    "EQ4_FAMILIES_CORRECTED",
    "eq4_instances",
]


@dataclass(frozen=True)
class AParams:
    b: int
    a: int
    n: int
    m: int

    def __post_init__(self):
        for name in ("b", "a", "n", "m"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"{name} must be an int")
            if v < 0:
                raise ValueError(f"{name} must be nonnegative, got {v}")
        if self.a < 1:
            raise ValueError("a must be positive")

    def __iter__(self):
        return iter((self.b, self.a, self.n, self.m))

    def __str__(self) -> str:
        return f"A({self.b},{self.a};{self.n},{self.m})"

    def shifted(self, k: int, l: int) -> AParams:
        return AParams(self.b, self.a, self.n + l * self.a, self.m + k * self.a)

    def to_json(self) -> dict:
        return {"b": self.b, "a": self.a, "n": self.n, "m": self.m}

    @classmethod
    def from_json(cls, obj) -> AParams:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(obj["b"]), int(obj["a"]), int(obj["n"]), int(obj["m"]))


def _params(p) -> AParams:
    return p if isinstance(p, AParams) else AParams(*p)


@dataclass(frozen=True)
class ReducedForm:
    """Representative A(b,a;s,r) with m = u*a + r and n = v*a + s."""

    params: AParams
    u: int
    v: int

    def to_json(self) -> dict:
        return {"params": self.params.to_json(), "u": self.u, "v": self.v}


def reduced_form(p) -> ReducedForm:
    p = _params(p)
    if p.n < p.a:
        raise NotReducible(f"{p}: n < a, no representative with a <= s < 2a")
    v = p.n // p.a - 1
    s = p.n - v * p.a
    u, r = divmod(p.m, p.a)
    return ReducedForm(AParams(p.b, p.a, s, r), u, v)


def is_zero_function(p) -> bool:
    """b = 0 kills the numerator and m > n kills the q-binomial."""
    p = _params(p)
    return p.b == 0 or p.m > p.n


def certificate(p) -> ExponentVector | None:
    """The exponent vector, or None when A is identically zero."""
    p = _params(p)
    if is_zero_function(p):
        return None
    return exponent_vector(p)


def is_integer_poly(p) -> bool:
    v = certificate(p)
    return v is None or v.is_nonneg()


def expand(p) -> QPoly:
    p = _params(p)
    if is_zero_function(p):
        return ZERO
    v = exponent_vector(p)
    if not v.is_nonneg():
        raise NotPolynomial(p, v.negative())
    num = poly_mul(one_minus_qk(p.b), gaussian_binomial(p.n, p.m))
    return poly_exact_div(num, one_minus_qk(p.a))


def is_nonneg_poly(p) -> bool:
    p = _params(p)
    if not is_integer_poly(p):
        return False
    if p.b <= p.a:
        # integrality already forces nonnegative coefficients here
        return True
    return expand(p).is_nonneg()


def gcd_characterization(p) -> bool:
    """Whether gcd(a, m) divides b; decides polynomiality when a | n."""
    p = _params(p)
    if p.n % p.a:
        raise PreconditionViolated(f"{p}: a does not divide n")
    if p.m > p.n:
        raise PreconditionViolated(f"{p}: m > n")
    return p.b % gcd(p.a, p.m) == 0


def andrews_predicate(n: int, m: int) -> bool:
    if n < 1 or not 0 <= m <= n:
        raise PreconditionViolated("need n >= 1 and 0 <= m <= n")
    return gcd(n, m) == 1


def shift_equivalence_check(p, shifts: Iterable[tuple[int, int]]) -> bool:
    """True iff polynomiality agrees between p and every p shifted by (k, l)."""
    p = _params(p)
    if p.m > p.n:
        raise PreconditionViolated(f"{p}: base tuple needs m <= n")
    family = []
    for k, l in shifts:
        mm, nn = p.m + k * p.a, p.n + l * p.a
        if not 0 <= mm <= nn:
            raise InvalidShift(f"shift (k={k}, l={l}) gives m={mm}, n={nn}")
        family.append(AParams(p.b, p.a, nn, mm))
    base = is_integer_poly(p)
    return all(is_integer_poly(s) == base for s in family)


def unify_hypothesis(a: int, r: int, m: int) -> bool:
    """gcd(a, m) = 1 and gcd(a, m - j) | a + r for j = 1..r.

    When it holds, A(1,a;a+r,m) has nonnegative integer coefficients.
    """
    if a < 1 or not 0 <= r < a:
        raise PreconditionViolated("need a >= 1 and 0 <= r < a")
    n = a + r
    if not r <= m <= n:
        raise PreconditionViolated(f"need {r} <= m <= {n}")
    if gcd(a, m) != 1:
        return False
    return all(n % gcd(a, m - j) == 0 for j in range(1, r + 1))


def unify_after_reduction(a: int, n: int, m: int) -> tuple[int, int] | None:
    """Try the unifying criterion on A(1,a;n,m) after reducing it.

    The function is first replaced by its reduced form A(1,a;a+r,m'), and
    both m' and its complement a+r-m' (the q-binomial is symmetric) are
    tried.  Returns the ``(r, m)`` pair the hypothesis holds for, or None.
    """
    if m > n:
        return None
    red = reduced_form(AParams(1, a, n, m)).params
    r = red.n - a
    for cand in (red.m, red.n - red.m):
        if r <= cand <= red.n and unify_hypothesis(a, r, cand):
            return r, cand
    return None


def guo_kratt_family_checks(
    limit: int, expand_coefficients: bool = False, which: Iterable[str] = ("eq2", "eq3")
) -> ScanReport:
    """Check A(gcd(a,b),a+b;a+b,a) for a, b <= limit and both
    A(gcd(k,n),n;2n,n-k) and A(k,n;2n,n-k) for k <= n <= limit.

    With ``expand_coefficients`` every function is also expanded and its
    coefficients inspected instead of relying on integrality alone.
    """
    if limit < 1:
        raise PreconditionViolated("limit must be >= 1")
    which = tuple(which)
    cases: list[tuple[str, AParams]] = []
    if "eq2" in which:
        for a in range(1, limit + 1):
            for b in range(1, limit + 1):
                cases.append(("eq2", AParams(gcd(a, b), a + b, a + b, a)))
    if "eq3" in which:
        for n in range(1, limit + 1):
            for k in range(1, n + 1):
                cases.append(("eq3-gcd", AParams(gcd(k, n), n, 2 * n, n - k)))
                cases.append(("eq3-k", AParams(k, n, 2 * n, n - k)))
    t0 = time.perf_counter()
    report = ScanReport("gk-" + "+".join(which), total_cases=len(cases))
    for tag, p in cases:
        if not is_nonneg_poly(p):
            report.failures.append((p.to_json(), f"{tag}: {p} not in N0[q]"))
        elif expand_coefficients and not expand(p).is_nonneg():
            report.failures.append((p.to_json(), f"{tag}: {p} has a negative coefficient"))
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return report.canonicalize()


Family = tuple[str, Callable[[int], AParams]]

EQ4_FAMILIES: tuple[Family, ...] = (
    ("A(1,6n-1;12n,3n)", lambda k: AParams(1, 6 * k - 1, 12 * k, 3 * k)),
    ("A(1,6n-1;12n,4n)", lambda k: AParams(1, 6 * k - 1, 12 * k, 4 * k)),
    ("A(1,30n-1;60n,6n)", lambda k: AParams(1, 30 * k - 1, 60 * k, 6 * k)),
    ("A(1,30n-1;120n,40n)", lambda k: AParams(1, 30 * k - 1, 120 * k, 40 * k)),
    ("A(1,30n-1;120n,45n)", lambda k: AParams(1, 30 * k - 1, 120 * k, 45 * k)),
    ("A(1,66n-1;3300n,88n)", lambda k: AParams(1, 66 * k - 1, 3300 * k, 88 * k)),
)

# As printed, the last family is not polynomial for n = 1, 2 (Phi_13, Phi_65
# and Phi_131 get exponent -1); 330n in place of 3300n holds for every n.
EQ4_FAMILIES_CORRECTED: tuple[Family, ...] = EQ4_FAMILIES[:5] + (
    ("A(1,66n-1;330n,88n)", lambda k: AParams(1, 66 * k - 1, 330 * k, 88 * k)),
)


def eq4_instances(n: int, corrected: bool = False) -> list[tuple[str, AParams]]:
    fams = EQ4_FAMILIES_CORRECTED if corrected else EQ4_FAMILIES
    return [(label, make(n)) for label, make in fams]
