"""Hilbert series of integrable highest-weight modules over affine sl2
in the principal gradation, plus the partition counters and the
high-precision asymptotic ratio check that back the growth results.

All series arithmetic is exact over the integers; floating point is
confined to asymptotic_ratio.
"""

from fractions import Fraction

import mpmath


class PowerSeries:
    """Truncated power series with exact coefficients c0..cN."""

    __slots__ = ("coeffs", "N")

    def __init__(self, coeffs, N=None):
        coeffs = list(coeffs)
        if N is None:
            N = len(coeffs) - 1
        if len(coeffs) < N + 1:
            coeffs += [0] * (N + 1 - len(coeffs))
        self.coeffs = coeffs[: N + 1]
        self.N = N

    @classmethod
    def one(cls, N):
        return cls([1], N)

    def __eq__(self, other):
        return self.N == other.N and self.coeffs == other.coeffs

    def __getitem__(self, i):
        return self.coeffs[i]

    def __mul__(self, other):
        N = min(self.N, other.N)
        out = [0] * (N + 1)
        for i, a in enumerate(self.coeffs[: N + 1]):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[: N + 1 - i]):
                if b:
                    out[i + j] += a * b
        return PowerSeries(out, N)

    def dominates(self, other):
        """Coefficientwise >= up to the shorter truncation."""
        N = min(self.N, other.N)
        return all(a >= b for a, b in
                   zip(self.coeffs[: N + 1], other.coeffs[: N + 1]))

    def __repr__(self):
        return "PowerSeries(%r)" % (self.coeffs,)


def geometric_factor(j, power, N):
    """(1 - s^j)^(-power) truncated at N; power may be negative."""
    out = PowerSeries.one(N)
    if power >= 0:
        # 1/(1-s^j) repeated: cumulative sums with stride j
        for _ in range(power):
            c = out.coeffs
            for i in range(j, N + 1):
                c[i] += c[i - j]
    else:
        for _ in range(-power):
            c = out.coeffs
            for i in range(N, j - 1, -1):
                c[i] -= c[i - j]
    return out


def euler_product(exponent_multiplicity, N):
    """Expansion of the product over j of (1 - s^j)^(-b_j), truncated
    at N; b_j may be negative."""
    out = PowerSeries.one(N)
    c = out.coeffs
    for j, b in sorted(exponent_multiplicity.items()):
        if j < 1:
            raise ValueError("factor exponents must be >= 1")
        if j > N or not b:
            continue
        for _ in range(max(b, 0)):
            for i in range(j, N + 1):
                c[i] += c[i - j]
        for _ in range(max(-b, 0)):
            for i in range(N, j - 1, -1):
                c[i] -= c[i - j]
    return out


def hilb_integrable(k1, k2, N):
    """Principal-gradation Hilbert series of the integrable module with
    highest-weight labels (k1, k2) over affine sl2.

    For k1 == k2 == k the series is exact (flag True).  For k1 != k2
    only a coefficientwise lower bound, partitions into odd parts, is
    returned (flag False): the exact series involves an extra geometric
    product over an undetermined index set."""
    if k1 < 0 or k2 < 0:
        raise ValueError("weight labels must be nonnegative")
    if k1 == 0 and k2 == 0:
        raise ValueError("the (0, 0) module is trivial")
    if k1 != k2:
        b = {j: 1 for j in range(1, N + 1, 2)}
        return euler_product(b, N), False
    k = k1
    b = {}
    for j in range(1, N + 1):
        if k % 2 == 0:
            if j % (k + 1) == 0:
                continue
            b[j] = 2 if j % 2 == 1 else 1
        else:
            if j % (2 * (k + 1)) == 0:
                continue
            if j % (k + 1) == 0:
                b[j] = -1
            elif j % 2 == 1:
                b[j] = 2
            else:
                b[j] = 1
    return euler_product(b, N), True


def count_partitions(n, parts="all"):
    """Partitions of n with parts restricted by `parts`: "odd",
    "distinct", "all", or ("mod", m, rho) for parts congruent to rho
    mod m."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if parts == "odd":
        allowed = range(1, n + 1, 2)
    elif parts in ("all", "distinct"):
        allowed = range(1, n + 1)
    elif isinstance(parts, tuple) and parts[0] == "mod":
        _, m, rho = parts
        allowed = [p for p in range(1, n + 1) if p % m == rho % m]
    else:
        raise ValueError("unknown parts predicate: %r" % (parts,))
    dp = [1] + [0] * n
    if parts == "distinct":
        for p in allowed:
            for i in range(n, p - 1, -1):
                dp[i] += dp[i - p]
    else:
        for p in allowed:
            for i in range(p, n + 1):
                dp[i] += dp[i - p]
    return dp[n]


def asymptotic_ratio(n, dps=50):
    """Ratio of the odd-part partition count at n to its leading
    asymptotic exp(pi*lam/sqrt(3)) / (4*3^(1/4)*lam^(3/2)) with
    lam = sqrt(n - 1/24); the ratio tends to 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    exact = count_partitions(n, "odd")
    with mpmath.workdps(dps):
        lam = mpmath.sqrt(mpmath.mpf(n) - mpmath.mpf(1) / 24)
        formula = mpmath.e ** (mpmath.pi * lam / mpmath.sqrt(3)) / (
            4 * mpmath.power(3, mpmath.mpf(1) / 4) * lam ** mpmath.mpf(1.5))
        return float(mpmath.mpf(exact) / formula)


def superpoly_witness(series, degrees):
    """For each degree c report the first index n with c_n > n^c, or None
    when the truncation is too short to exhibit one."""
    report = {}
    for c in degrees:
        found = None
        for n in range(1, series.N + 1):
            if series[n] > n ** c:
                found = n
                break
        report[c] = found
    return report


def odd_case_bound_factorization(k, N):
    """For odd k, the two sides of the factorized lower bound: the exact
    Hilbert series, and the product of (1+s^((k+1)(2j+1)/2)) over
    1/(1-s^((k+1)j+1)).  The first dominates the second, which dominates
    plain partitions into parts congruent to 1 mod k+1."""
    if k % 2 != 1:
        raise ValueError("k must be odd")
    exact, flag = hilb_integrable(k, k, N)
    assert flag
    mid = PowerSeries.one(N)
    j = 0
    while (k + 1) * j + 1 <= N:
        mid = mid * geometric_factor((k + 1) * j + 1, 1, N)
        half = (k + 1) * (2 * j + 1) // 2
        if half <= N:
            mid = mid * PowerSeries([1] + [0] * (half - 1) + [1], N)
        j += 1
    low = euler_product(
        {(k + 1) * j + 1: 1 for j in range(0, N // (k + 1) + 1)}, N)
    return exact, mid, low
