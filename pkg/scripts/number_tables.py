"""Write LaTeX/CSV tables of higher-order Bernoulli and Euler numbers for several orders.

    python scripts/number_tables.py --nmax 12 --alphas 1 2 1/2 --out tables/
"""

import argparse
from pathlib import Path

from norlund.cli import latex_rational
from norlund.closed_forms import bernoulli_number_closed, euler_number_closed
from norlund.combinatorics import StirlingTable
from norlund.exact_arith import format_rational, parse_rational


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=12)
    ap.add_argument("--alphas", nargs="+", default=["1", "2", "3", "1/2"])
    ap.add_argument("--out", type=Path, default=Path("tables"))
    args = ap.parse_args()

    alphas = [parse_rational(a) for a in args.alphas]
    table = StirlingTable.build(2 * args.nmax)
    args.out.mkdir(parents=True, exist_ok=True)

    for family, fn in (("bernoulli", bernoulli_number_closed), ("euler", euler_number_closed)):
        grid = [[fn(n, a, table) for a in alphas] for n in range(args.nmax + 1)]
        head = ["n"] + [f"alpha={format_rational(a)}" for a in alphas]
        csv_lines = [",".join(head)]
        tex_lines = []
        for n, row in enumerate(grid):
            csv_lines.append(",".join([str(n)] + [format_rational(v) for v in row]))
            tex_lines.append(" & ".join([str(n)] + [latex_rational(v) for v in row]) + r" \\")
        (args.out / f"{family}.csv").write_text("\n".join(csv_lines) + "\n")
        (args.out / f"{family}.tex").write_text("\n".join(tex_lines) + "\n")
        print(f"wrote {family}.csv and {family}.tex ({len(grid)} rows x {len(alphas)} orders)")


if __name__ == "__main__":
    main()
