"""Truncated formal power series over the rationals.

Used as the generating-function route: B_n^(a)(x) and E_n^(a)(x) are read off
as n! times the t^n coefficient of the defining products.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .exact_arith import as_rational, factorial

__all__ = [
    "TruncatedSeries",
    "series_mul",
    "series_inv",
    "series_log",
    "series_exp",
    "series_pow",
    "series_compose",
    "exp_series",
    "bernoulli_gf",
    "euler_gf",
    "oracle_bernoulli",
    "oracle_euler",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """coeffs[k] is the coefficient of t^k; exactly ``order`` terms are kept."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(as_rational(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, order: int) -> "TruncatedSeries":
        cs = list(coeffs)[:order]
        cs += [0] * (order - len(cs))
        return cls(tuple(cs))

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([c], order)

    @classmethod
    def from_egf(cls, values: Iterable, order: int) -> "TruncatedSeries":
        """Series sum values[k] t^k / k!."""
        return cls.from_coeffs(
            (as_rational(v) / factorial(k) for k, v in zip(range(order), values)), order
        )

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def egf_coeff(self, n: int) -> Fraction:
        """n! [t^n]."""
        return factorial(n) * self.coeffs[n]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _same_order(self, other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _same_order(self, other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "TruncatedSeries":
        c = as_rational(c)
        return TruncatedSeries(tuple(c * a for a in self.coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def derivative(self) -> "TruncatedSeries":
        """Formal derivative, padded with a zero to keep the order."""
        d = [k * self.coeffs[k] for k in range(1, self.order)]
        return TruncatedSeries.from_coeffs(d, self.order)


def _same_order(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise ValueError(f"series order mismatch: {a.order} vs {b.order}")


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _same_order(a, b)
    N = a.order
    out = [Fraction(0)] * N
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j in range(N - i):
            out[i + j] += ai * b.coeffs[j]
    return TruncatedSeries(tuple(out))


def series_inv(a: TruncatedSeries) -> TruncatedSeries:
    if a.order == 0:
        return a
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ZeroDivisionError("series with zero constant term has no inverse")
    out = [1 / a0]
    for n in range(1, a.order):
        acc = sum((a.coeffs[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
        out.append(-acc / a0)
    return TruncatedSeries(tuple(out))


def series_log(a: TruncatedSeries) -> TruncatedSeries:
    """log(a) for a(0) = 1, via n L_n = n a_n - sum_{k=1}^{n-1} k L_k a_{n-k}."""
    if a.order and a.coeffs[0] != 1:
        raise ValueError("series_log needs constant term 1")
    c = a.coeffs
    out = [Fraction(0)] * a.order
    for n in range(1, a.order):
        acc = n * c[n]
        for k in range(1, n):
            acc -= k * out[k] * c[n - k]
        out[n] = acc / n
    return TruncatedSeries(tuple(out))


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """exp(a) for a(0) = 0, via n E_n = sum_{k=1}^n k a_k E_{n-k}."""
    if a.order and a.coeffs[0] != 0:
        raise ValueError("series_exp needs constant term 0")
    c = a.coeffs
    out = [Fraction(0)] * a.order
    if a.order:
        out[0] = Fraction(1)
    for n in range(1, a.order):
        acc = Fraction(0)
        for k in range(1, n + 1):
            acc += k * c[k] * out[n - k]
        out[n] = acc / n
    return TruncatedSeries(tuple(out))


def series_pow(a: TruncatedSeries, r) -> TruncatedSeries:
    """a**r = exp(r log a) for a(0) = 1 and any rational r."""
    if a.order and a.coeffs[0] != 1:
        raise ValueError("series_pow needs constant term 1")
    return series_exp(series_log(a).scale(as_rational(r)))


def series_compose(f: TruncatedSeries, h: TruncatedSeries) -> TruncatedSeries:
    """f(h(t)) truncated, by Horner's rule in h; needs h(0) = 0."""
    _same_order(f, h)
    if h.order and h.coeffs[0] != 0:
        raise ValueError("inner series of a composition needs constant term 0")
    N = f.order
    out = TruncatedSeries.constant(0, N)
    for k in range(N - 1, -1, -1):
        out = series_mul(out, h) + TruncatedSeries.constant(f.coeffs[k], N)
    return out


def exp_series(x, order: int) -> TruncatedSeries:
    """e^{x t}."""
    x = as_rational(x)
    return TruncatedSeries.from_egf((x**k for k in range(order)), order)


@lru_cache(maxsize=256)
def bernoulli_gf(alpha: Fraction, order: int) -> TruncatedSeries:
    """(t / (e^t - 1))^alpha.

    Built as the -alpha power of (e^t - 1)/t = sum t^k/(k+1)!, so the
    removable singularity at t = 0 never appears.
    """
    base = TruncatedSeries.from_coeffs((1 / factorial(k + 1) for k in range(order)), order)
    return series_pow(base, -as_rational(alpha))


@lru_cache(maxsize=256)
def euler_gf(alpha: Fraction, order: int) -> TruncatedSeries:
    """(2 / (e^t + 1))^alpha, as the -alpha power of (e^t + 1)/2."""
    base = TruncatedSeries.from_coeffs(
        [Fraction(1)] + [1 / (2 * factorial(k)) for k in range(1, order)], order
    )
    return series_pow(base, -as_rational(alpha))


def _extract(gf: TruncatedSeries, n: int, x) -> Fraction:
    return series_mul(gf, exp_series(x, gf.order)).egf_coeff(n)


def _check_order(n: int, order: int | None) -> int:
    if n < 0:
        raise ValueError("degree must be natural")
    if order is None:
        return n + 2
    if order <= n:
        raise ValueError(f"truncation order {order} too small for degree {n}")
    return order


def oracle_bernoulli(n: int, alpha, x, order: int | None = None) -> Fraction:
    """B_n^(alpha)(x) as n! [t^n] (t/(e^t-1))^alpha e^{xt}."""
    order = _check_order(n, order)
    return _extract(bernoulli_gf(as_rational(alpha), order), n, x)


def oracle_euler(n: int, alpha, x, order: int | None = None) -> Fraction:
    """E_n^(alpha)(x) as n! [t^n] (2/(e^t+1))^alpha e^{xt}."""
    order = _check_order(n, order)
    return _extract(euler_gf(as_rational(alpha), order), n, x)
