"""Finite Stirling-number sums for higher-order Bernoulli and Euler polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .combinatorics import StirlingTable
from .exact_arith import as_rational, binomial, factorial, falling_factorial

__all__ = [
    "Polynomial",
    "inner_sum_A",
    "inner_sum_C",
    "bernoulli_poly_closed",
    "bernoulli_number_closed",
    "bernoulli_number_qi",
    "euler_poly_closed",
    "euler_number_closed",
]


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial in x; coeffs[d] multiplies x^d, trailing zeros stripped."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = [as_rational(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable) -> "Polynomial":
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mono = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}" + (f"*{mono}" if mono else "")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def inner_sum_A(k: int, a, table: StirlingTable) -> Fraction:
    """sum_{i<=k} <a>_i k!/(k+i)! sum_{j<=i} (-1)^{i-j} C(k+i, i-j) S(k+j, j).

    With a = -alpha this is the x^{n-k} weight of B_n^(alpha)(x); with
    a = +alpha it is the k-th derivative at 0 of ((e^t-1)/t)^alpha.
    """
    table.require(2 * k)
    a = as_rational(a)
    total = Fraction(0)
    ff = Fraction(1)
    for i in range(k + 1):
        if i:
            ff *= a - (i - 1)
        if ff == 0:
            # <a>_i stays zero for all larger i
            break
        inner = Fraction(0)
        for j in range(i + 1):
            term = binomial(k + i, i - j) * table(k + j, j)
            inner += -term if (i - j) % 2 else term
        total += ff * factorial(k) / factorial(k + i) * inner
    return total


def inner_sum_C(k: int, a, table: StirlingTable) -> Fraction:
    """sum_{i<=k} <a>_i S(k, i) / 2^i."""
    table.require(k)
    a = as_rational(a)
    total = Fraction(0)
    for i in range(k + 1):
        total += falling_factorial(a, i) * table(k, i) / 2**i
    return total


def bernoulli_poly_closed(n: int, alpha, table: StirlingTable) -> Polynomial:
    """B_n^(alpha)(x) with x^{n-k} weighted by C(n, k) inner_sum_A(k, -alpha)."""
    table.require(2 * n)
    a = -as_rational(alpha)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = binomial(n, k) * inner_sum_A(k, a, table)
    return Polynomial(tuple(coeffs))


def bernoulli_number_closed(n: int, alpha, table: StirlingTable) -> Fraction:
    return inner_sum_A(n, -as_rational(alpha), table)


def bernoulli_number_qi(n: int, table: StirlingTable) -> Fraction:
    """Classical B_n = sum_j (-1)^j C(n+1, j+1) / C(n+j, j) S(n+j, j)."""
    table.require(2 * n)
    total = Fraction(0)
    for j in range(n + 1):
        term = binomial(n + 1, j + 1) / binomial(n + j, j) * table(n + j, j)
        total += -term if j % 2 else term
    return total


def euler_poly_closed(n: int, alpha, table: StirlingTable) -> Polynomial:
    table.require(n)
    a = -as_rational(alpha)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = binomial(n, k) * inner_sum_C(k, a, table)
    return Polynomial(tuple(coeffs))


def euler_number_closed(n: int, alpha, table: StirlingTable) -> Fraction:
    """sum_k C(n,k) sum_i <-alpha>_i S(k,i) 2^{k-i}, i.e. 2^n E_n^(alpha)(1/2)."""
    table.require(n)
    a = -as_rational(alpha)
    total = Fraction(0)
    for k in range(n + 1):
        inner = Fraction(0)
        for i in range(k + 1):
            inner += falling_factorial(a, i) * table(k, i) * 2 ** (k - i)
        total += binomial(n, k) * inner
    return total
