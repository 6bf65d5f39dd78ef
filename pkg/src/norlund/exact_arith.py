"""Exact scalars and the small combinatorial primitives used everywhere else.

Scalars are :class:`fractions.Fraction`; it already keeps values reduced with a
positive denominator and prints as ``p/q`` (or ``p`` when ``q == 1``).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

Rational = Fraction

__all__ = [
    "Rational",
    "as_rational",
    "factorial",
    "binomial",
    "falling_factorial",
    "rising_factorial",
    "format_rational",
    "parse_rational",
]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: they would smuggle binary rounding into exact code.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


@lru_cache(maxsize=None)
def _factorial_int(n: int) -> int:
    return math.factorial(n)


def factorial(n: int) -> Fraction:
    if n < 0:
        raise ValueError("factorial of a negative index")
    return Fraction(_factorial_int(n))


def binomial(n: int, k: int) -> Fraction:
    """C(n, k) for natural n, k, with C(n, k) = 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial indices must be natural numbers")
    return Fraction(math.comb(n, k))


def falling_factorial(x, n: int) -> Fraction:
    """x (x - 1) ... (x - n + 1); the empty product 1 when n == 0."""
    if n < 0:
        raise ValueError("falling factorial length must be natural")
    x = as_rational(x)
    out = Fraction(1)
    for k in range(n):
        out *= x - k
    return out


def rising_factorial(x, n: int) -> Fraction:
    if n < 0:
        raise ValueError("rising factorial length must be natural")
    x = as_rational(x)
    out = Fraction(1)
    for k in range(n):
        out *= x + k
    return out


def format_rational(value: Fraction) -> str:
    return str(as_rational(value))


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimal and exponent forms are refused."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(p, q)
