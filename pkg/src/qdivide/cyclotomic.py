"""Cyclotomic polynomials and the cyclotomic exponent vector of A(b,a;n,m).

Using q^M - 1 = prod_{d | M} Phi_d(q), the rational function

    A(b,a;n,m) = (1 - q^b)/(1 - q^a) * [n, m]

factors as prod_{d >= 2} Phi_d(q)^{e_d} with

    e_d = [d | b] - [d | a] + floor(n/d) - floor(m/d) - floor((n-m)/d).

Since the Phi_d are irreducible, A lies in Z[q] exactly when every e_d >= 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping

from .errors import NegativeExponent, PreconditionViolated
from .qpoly import ONE, QPoly, poly_exact_div, poly_mul

__all__ = [
    "ExponentVector",
    "divisors",
    "cyclotomic_poly",
    "exponent_of",
    "exponent_vector",
    "reconstruct",
]


def divisors(M: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= M:
        if M % i == 0:
            small.append(i)
            if i * i != M:
                large.append(M // i)
        i += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> QPoly:
    """Phi_d, obtained by dividing q^d - 1 by Phi_e for every proper divisor e.

    The cache only ever stores fully built values, so concurrent readers are
    safe; at worst two threads compute the same entry.
    """
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    p = QPoly.monomial(d) - 1
    for e in divisors(d)[:-1]:
        p = poly_exact_div(p, cyclotomic_poly(e))
    return p


def _chi(d: int, x: int) -> int:
    return 1 if x % d == 0 else 0


def exponent_of(d: int, p) -> int:
    """Multiplicity of Phi_d in A(b,a;n,m); ``p`` unpacks as (b, a, n, m)."""
    b, a, n, m = p
    return _chi(d, b) - _chi(d, a) + n // d - m // d - (n - m) // d


@dataclass(frozen=True)
class ExponentVector:
    """Map d -> e_d for d in 2..range_max, zero entries elided."""

    range_max: int
    exponents: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(d): int(e) for d, e in self.exponents.items() if e}
        if any(d < 2 or d > self.range_max for d in clean):
            raise ValueError("exponent index outside 2..range_max")
        object.__setattr__(self, "exponents", dict(sorted(clean.items())))

    def __getitem__(self, d: int) -> int:
        return self.exponents.get(d, 0)

    def __iter__(self) -> Iterator[int]:
        return iter(self.exponents)

    def items(self):
        return self.exponents.items()

    def negative(self) -> dict[int, int]:
        return {d: e for d, e in self.exponents.items() if e < 0}

    def is_nonneg(self) -> bool:
        return all(e >= 0 for e in self.exponents.values())

    def __hash__(self) -> int:
        return hash((self.range_max, tuple(self.exponents.items())))

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        return " * ".join(
            f"Phi_{d}" if e == 1 else f"Phi_{d}^{e}" for d, e in self.exponents.items()
        )

    def to_json(self) -> dict:
        return {
            "range_max": self.range_max,
            "exponents": {str(d): e for d, e in self.exponents.items()},
        }

    @classmethod
    def from_json(cls, obj) -> ExponentVector:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(obj["range_max"]), {int(d): int(e) for d, e in obj["exponents"].items()})


def exponent_vector(p) -> ExponentVector:
    b, a, n, m = p
    if b < 1 or a < 1 or not 0 <= m <= n:
        raise PreconditionViolated(
            f"exponent vector needs b >= 1, a >= 1, 0 <= m <= n; got (b,a,n,m)={tuple(p)}"
        )
    top = max(n, a, b)
    # e_1 vanishes identically for b >= 1
    return ExponentVector(top, {d: exponent_of(d, p) for d in range(2, top + 1)})


def reconstruct(v: ExponentVector) -> QPoly:
    """Expand prod Phi_d^{e_d}; negative exponents raise NegativeExponent."""
    neg = v.negative()
    if neg:
        raise NegativeExponent(neg)
    acc = ONE
    for d, e in v.items():
        acc = poly_mul(acc, cyclotomic_poly(d) ** e)
    return acc
