"""Exact determinants and the Hessenberg-determinant route for B_n^(a)(x), E_n^(a)(x)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .closed_forms import inner_sum_A, inner_sum_C
from .combinatorics import StirlingTable
from .exact_arith import as_rational, binomial

__all__ = [
    "SqMatrix",
    "JetPair",
    "det_exact",
    "det_gauss",
    "det_minor_oracle",
    "quotient_matrix",
    "quotient_derivative",
    "gamma_seq",
    "beta_seq",
    "bernoulli_via_det",
    "euler_via_det",
]

MINOR_ORACLE_MAX_DIM = 9


@dataclass(frozen=True)
class SqMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(as_rational(v) for v in row) for row in self.entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix is not square")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "SqMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]


@dataclass(frozen=True)
class JetPair:
    """Derivative values (f(0), f'(0), f''(0), ...) of a numerator p and denominator q."""

    p_derivs: tuple[Fraction, ...]
    q_derivs: tuple[Fraction, ...]

    def __post_init__(self):
        p = tuple(as_rational(v) for v in self.p_derivs)
        q = tuple(as_rational(v) for v in self.q_derivs)
        if len(p) != len(q) or not p:
            raise ValueError("jets must be non-empty and of equal length")
        if q[0] == 0:
            raise ZeroDivisionError("denominator jet has q(0) = 0")
        object.__setattr__(self, "p_derivs", p)
        object.__setattr__(self, "q_derivs", q)

    def __len__(self) -> int:
        return len(self.p_derivs)


def det_exact(m: SqMatrix) -> Fraction:
    """Bareiss elimination on the denominator-cleared matrix.

    Each row is scaled by the lcm of its denominators, so the elimination runs
    on Python ints; the product of those scales is divided back out at the end.
    """
    n = m.dim
    if n == 0:
        return Fraction(1)
    scale = 1
    a: list[list[int]] = []
    for row in m.entries:
        lcm = math.lcm(*(v.denominator for v in row))
        scale *= lcm
        a.append([v.numerator * (lcm // v.denominator) for v in row])

    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * a[k][j]) // prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1], scale)


def det_gauss(m: SqMatrix) -> Fraction:
    """Plain rational Gaussian elimination with a nonzero-pivot search."""
    n = m.dim
    a = [list(row) for row in m.entries]
    det = Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return det


def _minor_expand(rows: list[tuple[Fraction, ...]], cols: tuple[int, ...]) -> Fraction:
    if len(cols) == 1:
        return rows[0][cols[0]]
    top, rest = rows[0], rows[1:]
    total = Fraction(0)
    for pos, c in enumerate(cols):
        if top[c] == 0:
            continue
        sub = _minor_expand(rest, cols[:pos] + cols[pos + 1:])
        total += -top[c] * sub if pos % 2 else top[c] * sub
    return total


def det_minor_oracle(m: SqMatrix) -> Fraction:
    """Cofactor expansion along the first row; only for small matrices."""
    if m.dim > MINOR_ORACLE_MAX_DIM:
        raise ValueError(f"cofactor oracle limited to dim <= {MINOR_ORACLE_MAX_DIM}")
    if m.dim == 0:
        return Fraction(1)
    return _minor_expand(list(m.entries), tuple(range(m.dim)))


def quotient_matrix(first_col: Sequence[Fraction], q: Sequence[Fraction]) -> SqMatrix:
    """The (k+1)x(k+1) lower-Hessenberg matrix with column 0 = first_col.

    Entry (i, j) for j >= 1 is C(i, j-1) q[i-j+1] when i >= j-1, else 0.
    """
    k1 = len(first_col)
    rows = []
    for i in range(k1):
        row = [first_col[i]]
        for j in range(1, k1):
            row.append(binomial(i, j - 1) * q[i - j + 1] if i >= j - 1 else Fraction(0))
        rows.append(row)
    return SqMatrix.from_rows(rows)


def quotient_derivative(jets: JetPair, k: int) -> Fraction:
    """k-th derivative of p/q at the jet point: (-1)^k det W / q(0)^{k+1}."""
    if len(jets) < k + 1:
        raise ValueError(f"jets of length {len(jets)} cannot give derivative {k}")
    w = quotient_matrix(jets.p_derivs[: k + 1], jets.q_derivs)
    q0 = jets.q_derivs[0]
    return (-1) ** k * det_exact(w) / q0 ** (k + 1)


def gamma_seq(n_max: int, alpha, table: StirlingTable) -> list[Fraction]:
    """gamma_n = n-th derivative at 0 of ((e^t - 1)/t)^alpha, n = 0..n_max."""
    table.require(2 * n_max)
    alpha = as_rational(alpha)
    return [inner_sum_A(n, alpha, table) for n in range(n_max + 1)]


def beta_seq(n_max: int, alpha, table: StirlingTable) -> list[Fraction]:
    """beta_n = n-th derivative at 0 of ((e^t + 1)/2)^alpha, n = 0..n_max."""
    table.require(n_max)
    alpha = as_rational(alpha)
    return [inner_sum_C(n, alpha, table) for n in range(n_max + 1)]


def _via_det(n: int, x, seq: Sequence[Fraction]) -> Fraction:
    if n == 0:
        return Fraction(1)
    if len(seq) < n + 1:
        raise ValueError(f"need {n + 1} sequence terms, got {len(seq)}")
    x = as_rational(x)
    powers = [x**i for i in range(n + 1)]
    w = quotient_matrix(powers, seq)
    # seq[0] is 1 for every alpha, so no q(0)^{n+1} division is needed
    return (-1) ** n * det_exact(w) / seq[0] ** (n + 1)


def bernoulli_via_det(
    n: int, alpha, x, table: StirlingTable, gammas: Sequence[Fraction] | None = None
) -> Fraction:
    """B_n^(alpha)(x) as (-1)^n times the Hessenberg determinant in gamma_0..gamma_n.

    ``gammas`` lets a caller reuse (or deliberately perturb) a precomputed sequence.
    """
    table.require(2 * n)
    if gammas is None:
        gammas = gamma_seq(n, alpha, table)
    return _via_det(n, x, gammas)


def euler_via_det(
    n: int, alpha, x, table: StirlingTable, betas: Sequence[Fraction] | None = None
) -> Fraction:
    table.require(n)
    if betas is None:
        betas = beta_seq(n, alpha, table)
    return _via_det(n, x, betas)
