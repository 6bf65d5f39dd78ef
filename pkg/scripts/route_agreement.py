"""Time the three routes over a grid of (n, alpha, x) and report any disagreement.

    python scripts/route_agreement.py --nmax 24 --alphas=-2,-1/2,1,2,3,7/3
"""

import argparse
import time

from norlund.closed_forms import bernoulli_poly_closed, euler_poly_closed
from norlund.combinatorics import StirlingTable
from norlund.determinant import bernoulli_via_det, euler_via_det
from norlund.exact_arith import parse_rational
from norlund.series import oracle_bernoulli, oracle_euler


def rational_list(text):
    return [parse_rational(v) for v in text.split(",")]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=16)
    # comma lists; pass negatives as --alphas=-2,... so argparse keeps them
    ap.add_argument("--alphas", type=rational_list, default="-2,-1/2,1,2,3,7/3")
    ap.add_argument("--xs", type=rational_list, default="0,1,1/2,-3/4")
    args = ap.parse_args()
    alphas, xs = args.alphas, args.xs
    table = StirlingTable.build(2 * args.nmax)

    timings = {"closed": 0.0, "det": 0.0, "series": 0.0}
    mismatches = 0
    for family in ("bernoulli", "euler"):
        poly_fn = bernoulli_poly_closed if family == "bernoulli" else euler_poly_closed
        det_fn = bernoulli_via_det if family == "bernoulli" else euler_via_det
        series_fn = oracle_bernoulli if family == "bernoulli" else oracle_euler
        for alpha in alphas:
            for n in range(args.nmax + 1):
                t0 = time.perf_counter()
                poly = poly_fn(n, alpha, table)
                closed = [poly(x) for x in xs]
                t1 = time.perf_counter()
                det = [det_fn(n, alpha, x, table) for x in xs]
                t2 = time.perf_counter()
                ser = [series_fn(n, alpha, x) for x in xs]
                t3 = time.perf_counter()
                timings["closed"] += t1 - t0
                timings["det"] += t2 - t1
                timings["series"] += t3 - t2
                for x, a, b, c in zip(xs, closed, det, ser):
                    if not a == b == c:
                        mismatches += 1
                        print(f"MISMATCH {family} n={n} alpha={alpha} x={x}: {a} {b} {c}")

    points = 2 * len(alphas) * (args.nmax + 1) * len(xs)
    print(f"{points} points, {mismatches} mismatches")
    for route, secs in timings.items():
        print(f"{route:>7}: {secs:8.3f} s")


if __name__ == "__main__":
    main()
