"""Dense univariate polynomials in ``q`` over the integers.

A :class:`QPoly` stores its coefficients in ascending order of powers as a
tuple of Python ints, so there is no coefficient size cap.  Trailing zeros
are always stripped; the zero polynomial is the empty tuple and has degree
``-inf``.

>>> (QPoly([1, 1]) * QPoly([1, -1]))
QPoly('1 - q^2')
>>> gaussian_binomial(4, 2)
QPoly('1 + q + 2*q^2 + q^3 + q^4')
"""

from __future__ import annotations

import json
import math
from functools import lru_cache
from operator import index
from typing import Iterable, Sequence

from .errors import DivisionByZero, NotDivisible

NEG_INF = -math.inf

__all__ = [
    "NEG_INF",
    "QPoly",
    "ZERO",
    "ONE",
    "Q",
    "one_minus_qk",
    "poly_add",
    "poly_mul",
    "poly_exact_div",
    "q_pochhammer",
    "gaussian_binomial",
    "is_nonneg",
]


def _strip(c: list[int]) -> list[int]:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    del c[n:]
    return c


class QPoly:
    """Immutable polynomial with exact integer coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        self._c = tuple(_strip([index(c) for c in coeffs]))
        self._hash = None

    @classmethod
    def _raw(cls, c: list[int]) -> QPoly:
        # trusted constructor: c holds ints already
        p = cls.__new__(cls)
        p._c = tuple(_strip(c))
        p._hash = None
        return p

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> QPoly:
        return cls._raw([0] * k + [coeff])

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> float | int:
        return len(self._c) - 1 if self._c else NEG_INF

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self._c):
            return self._c[i]
        return 0

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == QPoly([other])._c
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._c)
        return self._hash

    def __neg__(self) -> QPoly:
        return QPoly._raw([-c for c in self._c])

    def __add__(self, other) -> QPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> QPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, -other)

    def __rsub__(self, other) -> QPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(other, -self)

    def __mul__(self, other) -> QPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> QPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __floordiv__(self, other) -> QPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_exact_div(self, other)

    def __call__(self, x):
        """Evaluate by Horner's rule."""
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def is_nonneg(self) -> bool:
        return all(c >= 0 for c in self._c)

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for i, c in enumerate(self._c):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "q" if i == 1 else f"q^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QPoly('{self}')"

    # serialization

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self._c]}

    @classmethod
    def from_json(cls, obj) -> QPoly:
        if isinstance(obj, str):
            obj = json.loads(obj)
        coeffs = [int(c) for c in obj["coeffs"]]
        if coeffs and coeffs[-1] == 0:
            raise ValueError("serialized polynomial has a trailing zero")
        return cls(coeffs)


def _coerce(x):
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly([x])
    return NotImplemented


ZERO = QPoly()
ONE = QPoly([1])
Q = QPoly([0, 1])


def one_minus_qk(k: int) -> QPoly:
    """The binomial 1 - q^k (zero when k = 0)."""
    if k == 0:
        return ZERO
    return QPoly._raw([1] + [0] * (k - 1) + [-1])


def poly_add(p: QPoly, r: QPoly) -> QPoly:
    a, b = p.coeffs, r.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    out[: len(b)] = [x + y for x, y in zip(a, b)]
    return QPoly._raw(out)


def _nonzero_count(c: Sequence[int]) -> int:
    return sum(1 for x in c if x)


def poly_mul(p: QPoly, r: QPoly) -> QPoly:
    """Schoolbook product, iterating over the sparser operand's terms."""
    a, b = p.coeffs, r.coeffs
    if not a or not b:
        return ZERO
    if _nonzero_count(b) > _nonzero_count(a):
        a, b = b, a
    la = len(a)
    out = [0] * (la + len(b) - 1)
    for i, c in enumerate(b):
        if not c:
            continue
        window = out[i : i + la]
        if c == 1:
            out[i : i + la] = [x + y for x, y in zip(window, a)]
        elif c == -1:
            out[i : i + la] = [x - y for x, y in zip(window, a)]
        else:
            out[i : i + la] = [x + c * y for x, y in zip(window, a)]
    return QPoly._raw(out)


def _binomial_unit_shape(c: tuple[int, ...]) -> tuple[int, int] | None:
    """Return (k, sign) when c is sign*(1 - q^k) with k >= 1."""
    if len(c) < 2 or c[0] not in (1, -1) or c[-1] != -c[0]:
        return None
    if any(c[1:-1]):
        return None
    return len(c) - 1, c[0]


def _div_one_minus_qk(c: Sequence[int], k: int) -> list[int]:
    # quotient s satisfies s_j = c_j + s_{j-k}; blocks of length k are independent
    s = list(c)
    L = len(s)
    for start in range(k, L, k):
        stop = min(start + k, L)
        s[start:stop] = [x + y for x, y in zip(s[start:stop], s[start - k : stop - k])]
    if any(s[max(L - k, 0) :]):
        raise NotDivisible(f"not divisible by 1 - q^{k}")
    return s[: max(L - k, 0)]


def poly_exact_div(num: QPoly, den: QPoly) -> QPoly:
    """Return ``s`` with ``num == den * s``.

    Raises :class:`DivisionByZero` for a zero divisor and
    :class:`NotDivisible` when the division leaves a remainder or needs
    non-integer quotient coefficients.
    """
    d = den.coeffs
    if not d:
        raise DivisionByZero("polynomial division by zero")
    n = num.coeffs
    if not n:
        return ZERO

    shape = _binomial_unit_shape(d)
    if shape is not None:
        k, sign = shape
        s = _div_one_minus_qk(n, k)
        if sign < 0:
            s = [-x for x in s]
        return QPoly._raw(s)

    dn = len(d) - 1
    lc = d[-1]
    terms = [(j, c) for j, c in enumerate(d[:-1]) if c]
    qlen = len(n) - dn
    if qlen <= 0:
        raise NotDivisible("divisor has larger degree than dividend")
    rem = list(n)
    quot = [0] * qlen
    for i in range(qlen - 1, -1, -1):
        c = rem[i + dn]
        if not c:
            continue
        qc, r = divmod(c, lc)
        if r:
            raise NotDivisible("quotient coefficient is not an integer")
        quot[i] = qc
        for j, dj in terms:
            rem[i + j] -= qc * dj
    if any(rem[:dn]):
        raise NotDivisible("nonzero remainder")
    return QPoly._raw(quot)


def q_pochhammer(k: int, n: int) -> QPoly:
    """(q^k; q)_n, the product of (1 - q^(k+i)) for i in 0..n-1."""
    if k < 0 or n < 0:
        raise ValueError("k and n must be nonnegative")
    if n == 0:
        return ONE
    if k == 0:
        return ZERO
    c = [1]
    for i in range(n):
        c = _mul_one_minus_qk(c, k + i)
    return QPoly._raw(c)


def _mul_one_minus_qk(c: list[int], k: int) -> list[int]:
    out = c + [0] * k
    out[k:] = [x - y for x, y in zip(out[k:], c)]
    return out


@lru_cache(maxsize=4096)
def gaussian_binomial(n: int, m: int) -> QPoly:
    """The q-binomial coefficient [n, m]; zero outside 0 <= m <= n.

    Built by alternately multiplying by 1 - q^(n-k+i) and dividing by
    1 - q^i, so every intermediate value is itself a q-binomial.
    """
    if n < 0 or m < 0 or m > n:
        return ZERO
    k = min(m, n - m)
    c = [1]
    for i in range(1, k + 1):
        c = _mul_one_minus_qk(c, n - k + i)
        c = _div_one_minus_qk(c, i)
    return QPoly._raw(c)


def is_nonneg(p: QPoly) -> bool:
    return p.is_nonneg()
