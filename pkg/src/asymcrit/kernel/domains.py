"""Coefficient domains: the rationals and word-sized prime fields.

Rational coefficients are stored as ``int`` whenever they are integral and as
:class:`fractions.Fraction` otherwise, so the common integer case stays on the
fast path.  Prime-field elements are plain ints in ``[0, p)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Number = Union[int, Fraction]


class RationalField:
    """The field of rational numbers."""

    name = "QQ"
    modulus = 0
    zero = 0
    one = 1

    def convert(self, x) -> Number:
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            return int(x.numerator) if x.denominator == 1 else x
        if isinstance(x, str):
            return self.convert(Fraction(x))
        raise TypeError(f"cannot convert {x!r} to a rational")

    def reduce(self, c: Number) -> Number:
        if type(c) is Fraction and c.denominator == 1:
            return c.numerator
        return c

    def inv(self, c: Number) -> Number:
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.reduce(Fraction(1) / c)

    def div(self, a: Number, b: Number) -> Number:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return self.reduce(Fraction(a) / b)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The prime field GF(p).  Primality is the caller's contract."""

    def __init__(self, modulus: int):
        if modulus < 2:
            raise ValueError("modulus must be a prime >= 2")
        self.modulus = modulus
        self.name = f"GF({modulus})"
        self.zero = 0
        self.one = 1

    def convert(self, x) -> int:
        p = self.modulus
        if isinstance(x, int):
            return x % p
        if isinstance(x, Fraction):
            den = x.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {p}")
            return x.numerator * pow(den, -1, p) % p
        if isinstance(x, str):
            return self.convert(Fraction(x))
        raise TypeError(f"cannot convert {x!r} to GF({p})")

    def reduce(self, c: int) -> int:
        return c % self.modulus

    def inv(self, c: int) -> int:
        if c % self.modulus == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(c, -1, self.modulus)

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.modulus

    def symmetric(self, c: int) -> int:
        """Representative of ``c`` in ``(-p/2, p/2]``."""
        c %= self.modulus
        return c - self.modulus if c > self.modulus // 2 else c

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("GF", self.modulus))

    def __repr__(self):
        return self.name


QQ = RationalField()

Domain = Union[RationalField, PrimeField]


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_descending(start: int = 2147483647):
    """Yield primes below or equal to ``start`` in decreasing order."""
    n = start
    while n >= 2:
        if is_probable_prime(n):
            yield n
        n -= 1
