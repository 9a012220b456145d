"""Exact reciprocal weights for rational exponents.

A value is a finite sum of rational multiples of canonical radicals
prod p**r_p over primes p with 0 < r_p < 1. Distinct canonical radicals are
linearly independent over the rationals, so two sums are equal exactly when
their coefficient maps agree.
"""
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from sympy import factorint

Radical = tuple[tuple[int, Fraction], ...]

ONE: Radical = ()


@lru_cache(maxsize=4096)
def prime_exponents(m: int) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((int(p), int(e)) for p, e in factorint(m).items()))


def _power(p: int, k: int) -> Fraction:
    return Fraction(p ** k) if k >= 0 else Fraction(1, p ** -k)


def _multiply_radicals(x: Radical, y: Radical) -> tuple[Fraction, Radical]:
    combined: dict[int, Fraction] = dict(x)
    for p, r in y:
        combined[p] = combined.get(p, Fraction(0)) + r
    scale = Fraction(1)
    reduced = []
    for p in sorted(combined):
        r = combined[p]
        whole = math.floor(r)
        if whole:
            scale *= _power(p, whole)
            r -= whole
        if r:
            reduced.append((p, r))
    return scale, tuple(reduced)


class RadicalSum:
    __slots__ = ("terms",)

    def __init__(self, terms: dict[Radical, Fraction] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def rational(cls, value) -> "RadicalSum":
        return cls({ONE: Fraction(value)})

    @staticmethod
    def lift(value) -> "RadicalSum":
        if isinstance(value, RadicalSum):
            return value
        if isinstance(value, (int, Fraction)):
            return RadicalSum.rational(value)
        raise TypeError(f"cannot combine RadicalSum with {type(value).__name__}")

    def __add__(self, other):
        try:
            other = RadicalSum.lift(other)
        except TypeError:
            return NotImplemented
        merged = dict(self.terms)
        for k, v in other.terms.items():
            merged[k] = merged.get(k, Fraction(0)) + v
        return RadicalSum(merged)

    __radd__ = __add__

    def __neg__(self):
        return RadicalSum({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        try:
            return self + -RadicalSum.lift(other)
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        try:
            other = RadicalSum.lift(other)
        except TypeError:
            return NotImplemented
        product: dict[Radical, Fraction] = {}
        for kx, vx in self.terms.items():
            for ky, vy in other.terms.items():
                scale, key = _multiply_radicals(kx, ky)
                product[key] = product.get(key, Fraction(0)) + vx * vy * scale
        return RadicalSum(product)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = RadicalSum.lift(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        simple = self.simplify()
        if not isinstance(simple, RadicalSum):
            return hash(simple)
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_rational(self) -> bool:
        return all(k == ONE for k in self.terms)

    def simplify(self) -> "RadicalSum | Fraction":
        """Collapse to a Fraction when no radical remains."""
        return self.terms.get(ONE, Fraction(0)) if self.is_rational() else self

    def __float__(self) -> float:
        total = 0.0
        for key, coeff in self.terms.items():
            radical = 1.0
            for p, r in key:
                radical *= p ** float(r)
            total += float(coeff) * radical
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, coeff in sorted(self.terms.items()):
            radical = "*".join(f"{p}^({r})" for p, r in key)
            parts.append(f"{coeff}*{radical}" if radical else str(coeff))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"RadicalSum({self})"

    @classmethod
    def sum(cls, values: Iterable) -> "RadicalSum":
        total = cls()
        for value in values:
            total = total + value
        return total


def exact_reciprocal(factors: Iterable[tuple[int, Fraction]]) -> Fraction | RadicalSum:
    """1 / prod m**e for positive integers m and rational exponents e."""
    exponents: dict[int, Fraction] = {}
    for m, e in factors:
        if m == 1:
            continue
        for p, k in prime_exponents(m):
            exponents[p] = exponents.get(p, Fraction(0)) + e * k
    coefficient = Fraction(1)
    radical = []
    for p in sorted(exponents):
        x = -exponents[p]
        whole = math.floor(x)
        coefficient *= _power(p, whole)
        if x - whole:
            radical.append((p, x - whole))
    if not radical:
        return coefficient
    return RadicalSum({tuple(radical): coefficient})
