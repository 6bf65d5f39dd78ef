"""Exact higher-order Bernoulli and Euler polynomials.

Three independent routes compute B_n^(a)(x) and E_n^(a)(x) over the rationals:
finite Stirling-number sums, Hessenberg determinants, and coefficient
extraction from the generating functions. They are expected to agree exactly.
"""

from .closed_forms import (
    Polynomial,
    bernoulli_number_closed,
    bernoulli_number_qi,
    bernoulli_poly_closed,
    euler_number_closed,
    euler_poly_closed,
    inner_sum_A,
    inner_sum_C,
)
from .combinatorics import (
    StirlingTable,
    bell_harmonic,
    bell_partial,
    bell_partial_enum,
    stirling2,
)
from .determinant import (
    JetPair,
    SqMatrix,
    bernoulli_via_det,
    beta_seq,
    det_exact,
    det_minor_oracle,
    euler_via_det,
    gamma_seq,
    quotient_derivative,
)
from .exact_arith import (
    Rational,
    binomial,
    factorial,
    falling_factorial,
    format_rational,
    parse_rational,
)
from .series import (
    TruncatedSeries,
    oracle_bernoulli,
    oracle_euler,
    series_compose,
    series_exp,
    series_inv,
    series_log,
    series_mul,
    series_pow,
)

__version__ = "0.1.0"
