"""Independent reference computations used only by the tests.

None of these touch the library's arithmetic paths: they work from set
partitions, Pascal's rule and textbook recurrences.
"""

from fractions import Fraction

from math import prod


def pascal(n, k):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[k] if k <= n else 0


def set_partitions(elements):
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def stirling_by_counting(n, k):
    return sum(1 for p in set_partitions(list(range(n))) if len(p) == k)


def bell_by_set_partitions(n, k, xs):
    """B_{n,k}: every partition of {1..n} into k blocks contributes prod x_{|block|}."""
    return sum(
        (prod((Fraction(xs[len(b) - 1]) for b in p), start=Fraction(1))
         for p in set_partitions(list(range(n))) if len(p) == k),
        Fraction(0),
    )


def classical_bernoulli(n_max):
    """B_0..B_n from sum_{k<=n} C(n+1, k) B_k = 0 (B_1 = -1/2)."""
    bs = [Fraction(1)]
    for n in range(1, n_max + 1):
        bs.append(-sum(pascal(n + 1, k) * bs[k] for k in range(n)) / (n + 1))
    return bs


def classical_bernoulli_poly(n, x):
    bs = classical_bernoulli(n)
    return sum((pascal(n, k) * bs[k] * Fraction(x) ** (n - k) for k in range(n + 1)), Fraction(0))


def classical_euler_poly_coeffs(n):
    """E_n(x) from E_n(x) + E_n(x+1) = 2 x^n, solved degree by degree.

    Writing E_n(x) = x^n + sum_{j<n} c_j x^j, the identity is triangular in c_j.
    """
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    for d in range(n - 1, -1, -1):
        # coefficient of x^d in E(x) + E(x+1) must vanish for d < n
        rhs = sum(c[j] * pascal(j, d) for j in range(d + 1, n + 1))
        c[d] = -rhs / 2
    return c


def bernoulli_convolution(n, m, x=Fraction(0)):
    """B_n^(m)(x) for integer m >= 1 as the m-fold binomial convolution of B_k."""
    bs = classical_bernoulli(n)
    seq = [pascal(k, 0) * Fraction(x) ** k for k in range(n + 1)]  # e^{xt} coefficients * k!
    for _ in range(m):
        seq = [sum(pascal(j, k) * seq[k] * bs[j - k] for k in range(j + 1)) for j in range(n + 1)]
    return seq[n]


def det_leibniz(rows):
    """Determinant by the permutation sum; fine for dim <= 6."""
    from itertools import permutations

    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = prod((Fraction(rows[i][perm[i]]) for i in range(n)), start=Fraction(1))
        total += -term if inv % 2 else term
    return total


def quotient_derivative_by_leibniz(p, q, k):
    """k-th derivative of p/q at 0 from p = q r differentiated by Leibniz' rule."""
    r = []
    for m in range(k + 1):
        acc = Fraction(p[m]) - sum(pascal(m, j) * q[m - j] * r[j] for j in range(m))
        r.append(acc / q[0])
    return r[k]


