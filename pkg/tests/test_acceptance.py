"""Exit criteria for the package; every comparison is exact rational equality.

Run ``pytest tests/test_acceptance.py -v`` and read the "acceptance criteria"
section of the terminal summary for one PASS/FAIL line per criterion.
"""

import contextlib
import json
import random
import time
from fractions import Fraction
from math import factorial

import pytest

from norlund.cli import main, render_rows
from norlund.closed_forms import (
    bernoulli_number_closed,
    bernoulli_number_qi,
    bernoulli_poly_closed,
    euler_number_closed,
    euler_poly_closed,
)
from norlund.combinatorics import StirlingTable, bell_harmonic, bell_partial, bell_partial_enum, stirling2
from norlund.determinant import (
    JetPair,
    bernoulli_via_det,
    beta_seq,
    euler_via_det,
    gamma_seq,
    quotient_derivative,
)
from norlund.exact_arith import parse_rational
from norlund.series import (
    TruncatedSeries,
    oracle_bernoulli,
    oracle_euler,
    series_compose,
    series_inv,
    series_mul,
    series_pow,
)
from oracles import classical_bernoulli, classical_bernoulli_poly, classical_euler_poly_coeffs

ALPHAS = [Fraction(-2), Fraction(-1, 2), Fraction(1), Fraction(2), Fraction(3), Fraction(7, 3)]
XS = [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-3, 4)]
N_GRID = 16


@pytest.fixture(scope="module")
def table():
    return StirlingTable.build(2 * 25)


@pytest.fixture
def criterion(request):
    lines = request.config._criteria_lines

    @contextlib.contextmanager
    def record(label):
        try:
            yield
        except BaseException:
            lines.append(f"FAIL  {label}")
            raise
        lines.append(f"PASS  {label}")

    return record


def rand_q(rng, nonzero=False):
    while True:
        v = Fraction(rng.randint(-12, 12), rng.randint(1, 12))
        if v or not nonzero:
            return v


def test_c1_three_route_agreement(table, criterion):
    with criterion("C1 three-route agreement, n<=16 x 6 alphas x 4 points, < 60 s"):
        start = time.perf_counter()
        for alpha in ALPHAS:
            for n in range(N_GRID + 1):
                pb = bernoulli_poly_closed(n, alpha, table)
                pe = euler_poly_closed(n, alpha, table)
                for x in XS:
                    assert pb(x) == bernoulli_via_det(n, alpha, x, table) == oracle_bernoulli(n, alpha, x), (n, alpha, x)
                    assert pe(x) == euler_via_det(n, alpha, x, table) == oracle_euler(n, alpha, x), (n, alpha, x)
        assert time.perf_counter() - start < 60


def test_c2_classical_reductions(table, criterion):
    with criterion("C2 classical reductions at alpha=1 (n<=20) and named values"):
        for n in range(21):
            pb = bernoulli_poly_closed(n, 1, table)
            pe = euler_poly_closed(n, 1, table)
            for x in XS:
                assert pb(x) == oracle_bernoulli(n, 1, x) == classical_bernoulli_poly(n, x)
                assert pe(x) == oracle_euler(n, 1, x)
            assert list(pe.coeffs) == classical_euler_poly_coeffs(n)
        bs = classical_bernoulli(3)
        assert [bernoulli_number_closed(n, 1, table) for n in (1, 2, 3)] == bs[1:] == [Fraction(-1, 2), Fraction(1, 6), 0]
        euler_numbers = [2**n * oracle_euler(n, 1, Fraction(1, 2)) for n in (1, 2)]
        assert [euler_number_closed(n, 1, table) for n in (1, 2)] == euler_numbers == [0, -1]


def test_c3_closed_number_equals_qi_chapman(table, criterion):
    with criterion("C3 closed Bernoulli numbers equal the Qi-Chapman sum, n<=25"):
        for n in range(26):
            assert bernoulli_number_closed(n, 1, table) == bernoulli_number_qi(n, table), n


def test_c4_bell_identities(criterion):
    with criterion("C4 Bell suite: ones->Stirling, homogeneity, harmonic, recurrence=enum"):
        for n in range(15):
            for k in range(n + 1):
                assert bell_partial(n, k, [1] * (n + 1)) == stirling2(n, k)
        rng = random.Random(2024)
        for _ in range(100):
            n = rng.randint(0, 10)
            k = rng.randint(0, n)
            a, b = rand_q(rng), rand_q(rng)
            xs = [rand_q(rng) for _ in range(n + 1)]
            scaled = [a * b ** (i + 1) * x for i, x in enumerate(xs)]
            assert bell_partial(n, k, scaled) == a**k * b**n * bell_partial(n, k, xs)
        for n in range(1, 13):
            for k in range(1, n + 1):
                xs = [Fraction(1, i) for i in range(2, n - k + 3)]
                assert bell_harmonic(n, k) == bell_partial_enum(n, k, xs)
        for _ in range(100):
            n = rng.randint(0, 10)
            k = rng.randint(0, n)
            xs = [rand_q(rng) for _ in range(n + 1)]
            assert bell_partial(n, k, xs) == bell_partial_enum(n, k, xs)


def test_c5_quotient_derivative_determinant(criterion):
    with criterion("C5 quotient-derivative determinant equals series division, 500 jets, k<=8"):
        rng = random.Random(5)
        for _ in range(500):
            k = rng.randint(0, 8)
            p = [rand_q(rng) for _ in range(k + 1)]
            q = [rand_q(rng, nonzero=True)] + [rand_q(rng) for _ in range(k)]
            ps, qs = TruncatedSeries.from_egf(p, k + 1), TruncatedSeries.from_egf(q, k + 1)
            assert quotient_derivative(JetPair(tuple(p), tuple(q)), k) == series_mul(ps, series_inv(qs)).egf_coeff(k)


def test_c6_faa_di_bruno(criterion):
    with criterion("C6 Faa di Bruno coefficient identity, 100 jet pairs, n<=8"):
        rng = random.Random(6)
        order = 9
        for _ in range(100):
            fd = [rand_q(rng) for _ in range(order)]
            hd = [Fraction(0)] + [rand_q(rng) for _ in range(order - 1)]
            comp = series_compose(TruncatedSeries.from_egf(fd, order), TruncatedSeries.from_egf(hd, order))
            for n in range(order):
                rhs = sum((fd[k] * bell_partial_enum(n, k, hd[1:]) for k in range(n + 1)), Fraction(0))
                assert comp.egf_coeff(n) == rhs


def test_c7_structural_invariants(table, criterion):
    with criterion("C7 monic degree-n outputs, gamma_0=beta_0=1, gamma/beta vs series to n=16"):
        order = N_GRID + 1
        qb = TruncatedSeries.from_coeffs([Fraction(1, factorial(k + 1)) for k in range(order)], order)
        qe = TruncatedSeries.from_egf([1] + [Fraction(1, 2)] * (order - 1), order)
        for alpha in ALPHAS:
            for n in range(N_GRID + 1):
                for poly in (bernoulli_poly_closed(n, alpha, table), euler_poly_closed(n, alpha, table)):
                    assert poly.degree == n and poly.leading == 1
            gs, bs = gamma_seq(N_GRID, alpha, table), beta_seq(N_GRID, alpha, table)
            assert gs[0] == bs[0] == 1
            gser, bser = series_pow(qb, alpha), series_pow(qe, alpha)
            assert gs == [gser.egf_coeff(n) for n in range(order)]
            assert bs == [bser.egf_coeff(n) for n in range(order)]


def test_c8_cli_conformance(capsys, criterion):
    with criterion("C8 CLI: verify --max-n 10 exits 0, JSON round-trips, table matches series column"):
        assert main(["verify", "--max-n", "10"]) == 0
        capsys.readouterr()

        for argv in (
            ["eval", "--family", "bernoulli", "--n", "9", "--alpha", "7/3", "--x", "-3/4", "--method", "all"],
            ["eval", "--family", "euler", "--n", "6", "--alpha", "-1/2"],
        ):
            assert main(argv) == 0
            doc = json.loads(capsys.readouterr().out)
            n, alpha = doc["n"], parse_rational(doc["alpha"])
            if doc["x"] is None:
                coeffs = [parse_rational(c) for c in doc["value"]]
                assert coeffs == list(euler_poly_closed(n, alpha, StirlingTable.build(n)).coeffs)
            else:
                x = parse_rational(doc["x"])
                assert doc["agreement"] is True
                assert parse_rational(doc["value"]) == oracle_bernoulli(n, alpha, x)
                assert {parse_rational(v) for v in doc["per_method"].values()} == {oracle_bernoulli(n, alpha, x)}

        for fmt in ("csv", "plain", "latex", "json"):
            assert main(["table", "--family", "bernoulli", "--nmax", "10", "--alpha", "1", "--format", fmt]) == 0
            out = capsys.readouterr().out
            header = {"family": "bernoulli", "alpha": "1"}
            expected = render_rows([(n, oracle_bernoulli(n, 1, 0)) for n in range(11)], fmt, header)
            assert out == expected + "\n"
