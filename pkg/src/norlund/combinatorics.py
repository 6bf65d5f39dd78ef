"""Stirling numbers of the second kind and partial Bell polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exact_arith import as_rational, binomial, factorial

__all__ = [
    "StirlingTable",
    "stirling2",
    "bell_partial",
    "bell_partial_enum",
    "bell_harmonic",
    "partitions_into",
]


@lru_cache(maxsize=None)
def _stirling_rows(max_n: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1,)]
    for n in range(1, max_n + 1):
        prev = rows[-1]
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            left = prev[k - 1]
            up = prev[k] if k < n else 0
            row[k] = k * up + left
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class StirlingTable:
    """Triangle S(n, k) for 0 <= k <= n <= max_n, built once and never grown."""

    max_n: int
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, max_n: int) -> "StirlingTable":
        if max_n < 0:
            raise ValueError("max_n must be natural")
        return cls(max_n, _stirling_rows(max_n))

    def __call__(self, n: int, k: int) -> Fraction:
        if n > self.max_n:
            raise ValueError(f"S({n},{k}) is outside a table built to max_n={self.max_n}")
        if k > n:
            return Fraction(0)
        return Fraction(self.rows[n][k])

    def require(self, needed: int) -> None:
        if needed > self.max_n:
            raise ValueError(
                f"Stirling table too small: need max_n >= {needed}, have {self.max_n}"
            )


def stirling2(n: int, k: int) -> Fraction:
    if n < 0 or k < 0:
        raise ValueError("Stirling indices must be natural numbers")
    if k > n:
        return Fraction(0)
    return Fraction(_stirling_rows(n)[n][k])


def _check_args(n: int, k: int, xs: Sequence) -> list[Fraction]:
    if n < 0 or k < 0:
        raise ValueError("Bell indices must be natural numbers")
    needed = n - k + 1 if 1 <= k <= n else 0
    if len(xs) < needed:
        raise ValueError(f"B_{{{n},{k}}} needs {needed} arguments, got {len(xs)}")
    return [as_rational(x) for x in xs[:needed]]


def bell_partial(n: int, k: int, xs: Sequence) -> Fraction:
    """B_{n,k}(x_1, ..., x_{n-k+1}) via the first-part recurrence.

    B_{m,j} = sum_{i=1}^{m-j+1} C(m-1, i-1) x_i B_{m-i,j-1}, filled bottom-up.
    """
    x = _check_args(n, k, xs)
    if k > n:
        return Fraction(0)
    if k == 0:
        return Fraction(1 if n == 0 else 0)
    # table[j][m] = B_{m,j}; only m - j <= n - k is ever needed
    span = n - k
    prev = [Fraction(1)] + [Fraction(0)] * span  # j = 0: B_{m,0}, m = 0..span
    for j in range(1, k + 1):
        cur = []
        for m in range(j, j + span + 1):
            acc = Fraction(0)
            for i in range(1, m - j + 2):
                # B_{m-i, j-1} sits at offset (m-i) - (j-1) of prev
                acc += binomial(m - 1, i - 1) * x[i - 1] * prev[m - i - j + 1]
            cur.append(acc)
        prev = cur
    return prev[span]


def partitions_into(n: int, k: int, largest: int | None = None):
    """Yield integer partitions of n into exactly k parts, non-increasing."""
    if largest is None:
        largest = n
    if k == 0:
        if n == 0:
            yield ()
        return
    # the largest part p must leave room for k - 1 parts of size >= 1
    for p in range(min(largest, n - k + 1), 0, -1):
        if p * k < n:
            break
        for rest in partitions_into(n - p, k - 1, p):
            yield (p,) + rest


def bell_partial_enum(n: int, k: int, xs: Sequence) -> Fraction:
    """B_{n,k} straight from its defining multi-index sum.

    Runs over every (l_1, ..., l_n) with sum(i l_i) = n and sum(l_i) = k,
    adding n! / prod(l_i!) * prod((x_i / i!)^{l_i}).
    """
    x = _check_args(n, k, xs)
    if k > n:
        return Fraction(0)
    total = Fraction(0)
    n_fact = factorial(n)
    for parts in partitions_into(n, k):
        mult: dict[int, int] = {}
        for p in parts:
            mult[p] = mult.get(p, 0) + 1
        term = n_fact
        for i, l in mult.items():
            term *= (x[i - 1] / factorial(i)) ** l / factorial(l)
        total += term
    return total


def bell_harmonic(n: int, k: int) -> Fraction:
    """B_{n,k}(1/2, 1/3, ..., 1/(n-k+2)) through the Stirling-number closed form."""
    if not 1 <= k <= n:
        raise ValueError(f"need n >= k >= 1, got n={n}, k={k}")
    total = Fraction(0)
    for i in range(k + 1):
        sign = -1 if (k - i) % 2 else 1
        total += sign * binomial(n + k, k - i) * stirling2(n + i, i)
    return factorial(n) / factorial(n + k) * total
