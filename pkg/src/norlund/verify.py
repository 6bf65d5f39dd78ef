"""Cross-verification harness behind ``norlund verify``.

Every check is exact rational equality. Each property takes the degree bound
and a seeded ``random.Random`` and returns ``(ok, detail)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .closed_forms import (
    Polynomial,
    bernoulli_number_closed,
    bernoulli_number_qi,
    bernoulli_poly_closed,
    euler_number_closed,
    euler_poly_closed,
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
    quotient_matrix,
)
from .exact_arith import binomial, factorial
from .series import (
    TruncatedSeries,
    oracle_bernoulli,
    oracle_euler,
    series_compose,
    series_inv,
    series_mul,
    series_pow,
)

ALPHAS = (Fraction(-2), Fraction(-1, 2), Fraction(1), Fraction(2), Fraction(3), Fraction(7, 3))
XS = (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-3, 4))

Check = Callable[["Context"], "tuple[bool, str]"]


@dataclass
class Context:
    max_n: int
    rng: random.Random
    table: StirlingTable
    corrupt_gamma1: bool = False
    samples: int = 20


@dataclass
class Outcome:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    outcomes: list[Outcome] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(o.ok for o in self.outcomes)

    def failed(self) -> list[str]:
        return [o.name for o in self.outcomes if not o.ok]

    def lines(self) -> list[str]:
        out = []
        for o in self.outcomes:
            tag = "PASS" if o.ok else "FAIL"
            out.append(f"{tag}  {o.name}" + (f"  ({o.detail})" if o.detail else ""))
        n_ok = sum(o.ok for o in self.outcomes)
        out.append(f"{n_ok}/{len(self.outcomes)} properties passed")
        return out


def random_rational(rng: random.Random, span: int = 9, nonzero: bool = False) -> Fraction:
    while True:
        v = Fraction(rng.randint(-span, span), rng.randint(1, span))
        if v or not nonzero:
            return v


def classical_bernoulli(n_max: int) -> list[Fraction]:
    """B_0..B_n from sum_{k<=n} C(n+1, k) B_k = 0."""
    out: list[Fraction] = []
    for n in range(n_max + 1):
        if n == 0:
            out.append(Fraction(1))
            continue
        acc = sum((binomial(n + 1, k) * out[k] for k in range(n)), Fraction(0))
        out.append(-acc / (n + 1))
    return out


# -- properties ---------------------------------------------------------------


def route_equivalence_bernoulli(ctx: Context) -> tuple[bool, str]:
    checked = 0
    for alpha in ALPHAS:
        for n in range(ctx.max_n + 1):
            poly = bernoulli_poly_closed(n, alpha, ctx.table)
            gammas = gamma_seq(n, alpha, ctx.table)
            if ctx.corrupt_gamma1 and n >= 1:
                gammas[1] += 1
            for x in XS:
                a = poly(x)
                b = bernoulli_via_det(n, alpha, x, ctx.table, gammas=gammas)
                c = oracle_bernoulli(n, alpha, x)
                if not a == b == c:
                    return False, f"n={n} alpha={alpha} x={x}: {a}, {b}, {c}"
                checked += 1
    return True, f"{checked} points"


def route_equivalence_euler(ctx: Context) -> tuple[bool, str]:
    checked = 0
    for alpha in ALPHAS:
        for n in range(ctx.max_n + 1):
            poly = euler_poly_closed(n, alpha, ctx.table)
            betas = beta_seq(n, alpha, ctx.table)
            for x in XS:
                a = poly(x)
                b = euler_via_det(n, alpha, x, ctx.table, betas=betas)
                c = oracle_euler(n, alpha, x)
                if not a == b == c:
                    return False, f"n={n} alpha={alpha} x={x}: {a}, {b}, {c}"
                checked += 1
    return True, f"{checked} points"


def monic_degree(ctx: Context) -> tuple[bool, str]:
    for alpha in ALPHAS:
        for n in range(ctx.max_n + 1):
            for poly in (bernoulli_poly_closed(n, alpha, ctx.table), euler_poly_closed(n, alpha, ctx.table)):
                if poly.degree != n or poly.leading != 1:
                    return False, f"n={n} alpha={alpha}: {poly}"
    return True, ""


def classical_bernoulli_reduction(ctx: Context) -> tuple[bool, str]:
    bs = classical_bernoulli(ctx.max_n)
    for n in range(ctx.max_n + 1):
        poly = bernoulli_poly_closed(n, 1, ctx.table)
        expected = Polynomial(tuple(binomial(n, d) * bs[n - d] for d in range(n + 1)))
        if poly != expected:
            return False, f"B_{n}(x) = {poly}"
        if bernoulli_number_closed(n, 1, ctx.table) != bs[n]:
            return False, f"B_{n}"
    return True, ""


def classical_euler_reduction(ctx: Context) -> tuple[bool, str]:
    # E_n(x) + E_n(x + 1) = 2 x^n pins the classical polynomials down uniquely
    for n in range(ctx.max_n + 1):
        poly = euler_poly_closed(n, 1, ctx.table)
        for x in XS:
            if poly(x) + poly(x + 1) != 2 * x**n:
                return False, f"n={n} x={x}"
    return True, ""


def qi_chapman_agreement(ctx: Context) -> tuple[bool, str]:
    for n in range(ctx.max_n + 1):
        if bernoulli_number_closed(n, 1, ctx.table) != bernoulli_number_qi(n, ctx.table):
            return False, f"n={n}"
    return True, ""


def euler_number_identification(ctx: Context) -> tuple[bool, str]:
    for alpha in ALPHAS:
        for n in range(ctx.max_n + 1):
            lhs = euler_number_closed(n, alpha, ctx.table)
            rhs = 2**n * euler_poly_closed(n, alpha, ctx.table)(Fraction(1, 2))
            if lhs != rhs:
                return False, f"n={n} alpha={alpha}"
    return True, ""


def bell_ones_is_stirling(ctx: Context) -> tuple[bool, str]:
    for n in range(ctx.max_n + 1):
        for k in range(n + 1):
            if bell_partial(n, k, [1] * (n + 1)) != stirling2(n, k):
                return False, f"n={n} k={k}"
    return True, ""


def bell_homogeneity(ctx: Context) -> tuple[bool, str]:
    rng = ctx.rng
    for _ in range(ctx.samples):
        n = rng.randint(0, ctx.max_n)
        k = rng.randint(0, n)
        a, b = random_rational(rng), random_rational(rng)
        xs = [random_rational(rng) for _ in range(n + 1)]
        scaled = [a * b ** (i + 1) * x for i, x in enumerate(xs)]
        if bell_partial(n, k, scaled) != a**k * b**n * bell_partial(n, k, xs):
            return False, f"n={n} k={k} a={a} b={b}"
    return True, f"{ctx.samples} samples"


def bell_harmonic_identity(ctx: Context) -> tuple[bool, str]:
    for n in range(1, ctx.max_n + 1):
        for k in range(1, n + 1):
            xs = [Fraction(1, i + 1) for i in range(1, n - k + 2)]
            if bell_harmonic(n, k) != bell_partial_enum(n, k, xs):
                return False, f"n={n} k={k}"
    return True, ""


def bell_recurrence_vs_enumeration(ctx: Context) -> tuple[bool, str]:
    rng = ctx.rng
    for _ in range(ctx.samples):
        n = rng.randint(0, ctx.max_n)
        k = rng.randint(0, n)
        xs = [random_rational(rng) for _ in range(n + 1)]
        if bell_partial(n, k, xs) != bell_partial_enum(n, k, xs):
            return False, f"n={n} k={k}"
    return True, f"{ctx.samples} samples"


def stirling_egf(ctx: Context) -> tuple[bool, str]:
    order = ctx.max_n + 1
    e_minus_1 = TruncatedSeries.from_egf([0] + [1] * (order - 1), order)
    power = TruncatedSeries.constant(1, order)
    for k in range(min(ctx.max_n, 8) + 1):
        for n in range(order):
            if power.egf_coeff(n) / factorial(k) != stirling2(n, k):
                return False, f"n={n} k={k}"
        power = series_mul(power, e_minus_1)
    return True, ""


def faa_di_bruno(ctx: Context) -> tuple[bool, str]:
    rng = ctx.rng
    order = ctx.max_n + 1
    for _ in range(ctx.samples):
        fd = [random_rational(rng) for _ in range(order)]
        hd = [Fraction(0)] + [random_rational(rng) for _ in range(order - 1)]
        comp = series_compose(TruncatedSeries.from_egf(fd, order), TruncatedSeries.from_egf(hd, order))
        for n in range(order):
            rhs = sum((fd[k] * bell_partial_enum(n, k, hd[1:]) for k in range(n + 1)), Fraction(0))
            if comp.egf_coeff(n) != rhs:
                return False, f"n={n}"
    return True, f"{ctx.samples} jet pairs"


def quotient_derivative_soundness(ctx: Context) -> tuple[bool, str]:
    rng = ctx.rng
    for _ in range(ctx.samples):
        k = rng.randint(0, ctx.max_n)
        p = [random_rational(rng) for _ in range(k + 1)]
        q = [random_rational(rng, nonzero=True)] + [random_rational(rng) for _ in range(k)]
        via_det = quotient_derivative(JetPair(tuple(p), tuple(q)), k)
        ps, qs = TruncatedSeries.from_egf(p, k + 1), TruncatedSeries.from_egf(q, k + 1)
        if via_det != series_mul(ps, series_inv(qs)).egf_coeff(k):
            return False, f"k={k}"
    return True, f"{ctx.samples} jets"


def gamma_beta_vs_series(ctx: Context) -> tuple[bool, str]:
    order = ctx.max_n + 1
    q_bern = TruncatedSeries.from_coeffs((1 / factorial(k + 1) for k in range(order)), order)
    q_euler = TruncatedSeries.from_egf([1] + [Fraction(1, 2)] * (order - 1), order)
    for alpha in ALPHAS:
        gs = gamma_seq(ctx.max_n, alpha, ctx.table)
        bs = beta_seq(ctx.max_n, alpha, ctx.table)
        gser = series_pow(q_bern, alpha)
        bser = series_pow(q_euler, alpha)
        for n in range(order):
            if gs[n] != gser.egf_coeff(n) or bs[n] != bser.egf_coeff(n):
                return False, f"n={n} alpha={alpha}"
        if gs[0] != 1 or bs[0] != 1:
            return False, "gamma_0 or beta_0 != 1"
    return True, ""


def addition_theorem(ctx: Context) -> tuple[bool, str]:
    rng = ctx.rng
    for _ in range(max(1, ctx.samples // 4)):
        a, b = rng.choice(ALPHAS), rng.choice(ALPHAS)
        x, y = random_rational(rng), random_rational(rng)
        for n in range(ctx.max_n + 1):
            lhs = oracle_bernoulli(n, a + b, x + y)
            rhs = sum(
                (binomial(n, k) * oracle_bernoulli(k, a, x) * oracle_bernoulli(n - k, b, y) for k in range(n + 1)),
                Fraction(0),
            )
            if lhs != rhs:
                return False, f"n={n} alpha={a} beta={b}"
    return True, ""


def determinant_oracle(ctx: Context) -> tuple[bool, str]:
    limit = min(ctx.max_n, 6)
    for alpha in ALPHAS:
        gs = gamma_seq(limit, alpha, ctx.table)
        for n in range(limit + 1):
            m = quotient_matrix([Fraction(-3, 4) ** i for i in range(n + 1)], gs)
            if det_exact(m) != det_minor_oracle(m):
                return False, f"n={n} alpha={alpha}"
    rng = ctx.rng
    for _ in range(ctx.samples):
        d = rng.randint(1, min(max(ctx.max_n, 1), 6))
        m = SqMatrix.from_rows([[random_rational(rng) for _ in range(d)] for _ in range(d)])
        if det_exact(m) != det_minor_oracle(m):
            return False, f"random dim {d}"
    return True, ""


PROPERTIES: dict[str, Check] = {
    "route_equivalence_bernoulli": route_equivalence_bernoulli,
    "route_equivalence_euler": route_equivalence_euler,
    "monic_degree": monic_degree,
    "classical_bernoulli_reduction": classical_bernoulli_reduction,
    "classical_euler_reduction": classical_euler_reduction,
    "qi_chapman_agreement": qi_chapman_agreement,
    "euler_number_identification": euler_number_identification,
    "bell_ones_is_stirling": bell_ones_is_stirling,
    "bell_homogeneity": bell_homogeneity,
    "bell_harmonic_identity": bell_harmonic_identity,
    "bell_recurrence_vs_enumeration": bell_recurrence_vs_enumeration,
    "stirling_egf": stirling_egf,
    "faa_di_bruno": faa_di_bruno,
    "quotient_derivative_soundness": quotient_derivative_soundness,
    "gamma_beta_vs_series": gamma_beta_vs_series,
    "addition_theorem": addition_theorem,
    "determinant_oracle": determinant_oracle,
}


def run_verification(max_n: int = 10, seed: int = 0, corrupt_gamma1: bool = False) -> Report:
    if max_n < 0:
        raise ValueError("max_n must be natural")
    table = StirlingTable.build(2 * max_n + 2)
    report = Report()
    for name, check in PROPERTIES.items():
        # a fresh stream per property keeps results independent of ordering
        ctx = Context(max_n, random.Random(f"{seed}:{name}"), table, corrupt_gamma1)
        try:
            ok, detail = check(ctx)
        except Exception as exc:  # a crash is a failed property, not a harness abort
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        report.outcomes.append(Outcome(name, ok, detail))
    return report
