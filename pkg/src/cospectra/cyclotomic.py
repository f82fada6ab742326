"""Exact arithmetic in the cyclotomic integers Z[zeta_N].

An element is stored as an integer polynomial in ``x = zeta_N`` reduced modulo
the N-th cyclotomic polynomial, so two elements with the same conductor are equal
exactly when their coefficient tuples are equal. Elements with different
conductors are compared after lifting both into Z[zeta_lcm].
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import NonRationalValue

__all__ = [
    "CyclotomicInteger",
    "cyclotomic_polynomial",
    "cyclo_add",
    "cyclo_mul",
    "cyclo_neg",
    "cyclo_equals",
    "cyclo_as_integer",
    "reduction_matrix",
]


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _totient(n: int) -> int:
    result = n
    for p in _prime_factors(n):
        result -= result // p
    return result


def _moebius(n: int) -> int:
    k = 0
    for p in _prime_factors(n):
        if (n // p) % p == 0:
            return 0
        k += 1
    return -1 if k % 2 else 1


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Divide integer polynomials (ascending coefficients); ``den`` must be monic."""
    num = list(num)
    dd = len(den) - 1
    assert den[-1] == 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, b in enumerate(den):
                num[i - dd + j] -= c * b
    if any(num[:dd]):
        raise ArithmeticError("polynomial division is not exact")
    return quot


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in _divisors(n)[:-1]:
        poly = _poly_divexact(poly, list(_cyclotomic(d)))
    return tuple(poly)


def cyclotomic_polynomial(n: int) -> list[int]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first.

    >>> cyclotomic_polynomial(12)
    [1, 0, -1, 0, 1]
    """
    if n < 1:
        raise ValueError(f"cyclotomic polynomial needs n >= 1, got {n}")
    return list(_cyclotomic(n))


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[int, ...], ...]:
    # row e holds x^e mod Phi_n for 0 <= e < n
    phi = _cyclotomic(n)
    deg = len(phi) - 1
    row = [1] + [0] * (deg - 1)
    rows = []
    for _ in range(n):
        rows.append(tuple(row))
        top = row[-1]
        row = [0] + row[:-1]
        if top:
            for j in range(deg):
                row[j] -= top * phi[j]
    return tuple(rows)


def reduction_matrix(n: int) -> np.ndarray:
    """Integer matrix mapping exponent counts (length n) to canonical coefficients."""
    return np.array(_reduction_rows(n), dtype=np.int64).reshape(n, len(_cyclotomic(n)) - 1)


def _fold_and_reduce(poly, n: int) -> tuple[int, ...]:
    rows = _reduction_rows(n)
    deg = len(rows[0])
    folded = [0] * n
    for e, c in enumerate(poly):
        if c:
            folded[e % n] += c
    out = [0] * deg
    for e, c in enumerate(folded):
        if c:
            for j, r in enumerate(rows[e]):
                if r:
                    out[j] += c * r
    return tuple(out)


class CyclotomicInteger:
    """An element of Z[zeta_N] in canonical form.

    Construct from an arbitrary integer polynomial in zeta_N; the constructor
    reduces it. Instances are immutable.
    """

    __slots__ = ("_conductor", "_coeffs")

    def __init__(self, conductor: int, coeffs=()):
        if conductor < 1:
            raise ValueError(f"conductor must be positive, got {conductor}")
        object.__setattr__(self, "_conductor", int(conductor))
        object.__setattr__(self, "_coeffs", _fold_and_reduce([int(c) for c in coeffs], conductor))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicInteger is immutable")

    @classmethod
    def _raw(cls, conductor: int, coeffs: tuple[int, ...]) -> CyclotomicInteger:
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_conductor", conductor)
        object.__setattr__(obj, "_coeffs", coeffs)
        return obj

    @classmethod
    def from_int(cls, value: int, conductor: int = 1) -> CyclotomicInteger:
        return cls(conductor, [value])

    @classmethod
    def root_of_unity(cls, conductor: int, exponent: int = 1) -> CyclotomicInteger:
        """zeta_conductor ** exponent."""
        poly = [0] * conductor
        poly[exponent % conductor] = 1
        return cls(conductor, poly)

    @property
    def conductor(self) -> int:
        return self._conductor

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def lift(self, conductor: int) -> CyclotomicInteger:
        """Re-express in Z[zeta_conductor]; the current conductor must divide it."""
        if conductor == self._conductor:
            return self
        if conductor % self._conductor:
            raise ValueError(f"cannot lift conductor {self._conductor} to {conductor}")
        stretch = conductor // self._conductor
        poly = [0] * conductor
        for e, c in enumerate(self._coeffs):
            poly[e * stretch] += c
        return CyclotomicInteger(conductor, poly)

    def _common(self, other):
        if isinstance(other, int):
            other = CyclotomicInteger.from_int(other, self._conductor)
        elif not isinstance(other, CyclotomicInteger):
            return None, None
        if other._conductor == self._conductor:
            return self, other
        n = math.lcm(self._conductor, other._conductor)
        return self.lift(n), other.lift(n)

    def __add__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return CyclotomicInteger._raw(a._conductor, tuple(x + y for x, y in zip(a._coeffs, b._coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger._raw(self._conductor, tuple(-c for c in self._coeffs))

    def __sub__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        prod = [0] * (len(a._coeffs) + len(b._coeffs) - 1)
        for i, x in enumerate(a._coeffs):
            if x:
                for j, y in enumerate(b._coeffs):
                    prod[i + j] += x * y
        return CyclotomicInteger(a._conductor, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not integral in general")
        result = CyclotomicInteger.from_int(1, self._conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a._coeffs == b._coeffs

    def __hash__(self):
        # The normalised trace Tr(x)/phi(N) does not depend on the conductor
        # the element is written in, so equal values hash equally.
        n = self._conductor
        trace = Fraction(0)
        for e, c in enumerate(self._coeffs):
            if c:
                q = n // math.gcd(e, n)
                trace += Fraction(c * _moebius(q), _totient(q))
        return hash(trace)

    def is_rational(self) -> bool:
        return not any(self._coeffs[1:])

    def as_integer(self) -> int:
        if not self.is_rational():
            raise NonRationalValue(f"{self} is not a rational integer")
        return self._coeffs[0]

    def __int__(self):
        return self.as_integer()

    def __bool__(self):
        return any(self._coeffs)

    def __complex__(self):
        n = self._conductor
        return complex(sum(c * cmath.exp(2j * math.pi * e / n) for e, c in enumerate(self._coeffs)))

    def sort_key(self):
        """Rationals first by value, then irrationals by coefficient vector."""
        if self.is_rational():
            return (0, self._coeffs[0], ())
        return (1, 0, (self._conductor,) + self._coeffs)

    def to_json(self):
        if self.is_rational():
            return self._coeffs[0]
        return {"conductor": self._conductor, "coeffs": list(self._coeffs)}

    def __repr__(self):
        return f"CyclotomicInteger({self._conductor}, {list(self._coeffs)})"

    def __str__(self):
        if self.is_rational():
            return str(self._coeffs[0])
        z = f"z{self._conductor}"
        parts = []
        for e, c in enumerate(self._coeffs):
            if not c:
                continue
            mono = "" if e == 0 else (z if e == 1 else f"{z}^{e}")
            if not mono:
                term = str(abs(c))
            elif abs(c) == 1:
                term = mono
            else:
                term = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


def cyclo_add(x: CyclotomicInteger, y: CyclotomicInteger) -> CyclotomicInteger:
    return x + y


def cyclo_mul(x: CyclotomicInteger, y: CyclotomicInteger) -> CyclotomicInteger:
    return x * y


def cyclo_neg(x: CyclotomicInteger) -> CyclotomicInteger:
    return -x


def cyclo_equals(x: CyclotomicInteger, y: CyclotomicInteger) -> bool:
    return x == y


def cyclo_as_integer(x: CyclotomicInteger) -> int:
    return x.as_integer()
