"""Binomial coefficients and divisibility statements about them."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .errors import PreconditionViolated

__all__ = [
    "DivisibilityReport",
    "binomial",
    "sun_congruence",
    "binom_div_a",
    "binom_div_b",
]


def binomial(n: int, k: int) -> int:
    """C(n, k), taken as 0 whenever k < 0 or k > n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class DivisibilityReport:
    """Whether ``divisor`` divides the gcd of ``operands``.

    ``companions`` carries related checks computed alongside the main one.
    """

    divisor: int
    operands: tuple[int, ...]
    identity_tag: str
    gcd_value: int = field(init=False)
    holds: bool = field(init=False)
    companions: tuple["DivisibilityReport", ...] = ()

    def __post_init__(self):
        g = math.gcd(*self.operands)
        object.__setattr__(self, "gcd_value", g)
        object.__setattr__(self, "holds", g % self.divisor == 0)

    @property
    def quotient(self) -> tuple[int, int]:
        return divmod(self.gcd_value, self.divisor)

    def to_json(self) -> dict:
        out = {
            "identity_tag": self.identity_tag,
            "divisor": str(self.divisor),
            "operands": [str(x) for x in self.operands],
            "gcd_value": str(self.gcd_value),
            "holds": self.holds,
        }
        if self.companions:
            out["companions"] = [c.to_json() for c in self.companions]
        return out

    @classmethod
    def from_json(cls, obj) -> DivisibilityReport:
        if isinstance(obj, str):
            obj = json.loads(obj)
        rep = cls(
            int(obj["divisor"]),
            tuple(int(x) for x in obj["operands"]),
            obj["identity_tag"],
            companions=tuple(cls.from_json(c) for c in obj.get("companions", [])),
        )
        if str(rep.gcd_value) != obj["gcd_value"] or rep.holds != obj["holds"]:
            raise ValueError("serialized report is inconsistent with its operands")
        return rep


def _divisor(d: int) -> int:
    # |d| <= 1 divides everything; keep scans total instead of erroring
    return abs(d) or 1


def sun_congruence(a: int, b: int, n: int) -> DivisibilityReport:
    """C(an+bn, an) is divisible by (bn+1)/gcd(a, bn+1)."""
    if min(a, b, n) < 1:
        raise PreconditionViolated("a, b, n must be positive")
    modulus = b * n + 1
    return DivisibilityReport(
        modulus // math.gcd(a, modulus),
        (binomial(a * n + b * n, a * n),),
        f"sun(a={a},b={b},n={n})",
    )


def binom_div_a(a: int, n: int) -> DivisibilityReport:
    """(a-1)n+1 divides gcd(C((a-1)^2 n-1, (a-1)n), C(a(a-1)n, 2(a-1)n+1)).

    The companion report repeats the check with lower index (a-1)n-1 in the
    first binomial, as written in one step of the published argument.
    """
    if a < 3 or n < 0:
        raise PreconditionViolated("need a >= 3 and n >= 0")
    t = (a - 1) * n
    divisor = _divisor(t + 1)
    second = binomial(a * t, 2 * t + 1)
    variant = DivisibilityReport(
        divisor,
        (binomial((a - 1) * t - 1, t - 1), second),
        "thm8a-proof-variant",
    )
    return DivisibilityReport(
        divisor,
        (binomial((a - 1) * t - 1, t), second),
        "thm8a",
        companions=(variant,),
    )


def binom_div_b(a: int, n: int) -> DivisibilityReport:
    """(a-1)n-1 divides gcd(C((a-1)^2 n-1, (a-1)n-2), C(a(a-1)n-2, 2(a-1)n-3))."""
    if a < 3 or n < 0:
        raise PreconditionViolated("need a >= 3 and n >= 0")
    t = (a - 1) * n
    return DivisibilityReport(
        _divisor(t - 1),
        (binomial((a - 1) * t - 1, t - 2), binomial(a * t - 2, 2 * t - 3)),
        "thm8b",
    )
