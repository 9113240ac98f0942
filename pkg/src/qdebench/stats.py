"""Two-sample Mann-Whitney U test with the normal approximation.

The chain implemented here: fractional ranks over the pooled sample, the
two U statistics, the ties-corrected null standard deviation, a
continuity-corrected Z, the two-tailed p-value, and two effect sizes
(standardized |Z|/sqrt(n1+n2) and common-language U1/(n1*n2)).  An exact
small-sample null distribution by full enumeration is included as an
oracle for the approximation.

All functions are pure; U1 counts group-1 wins (pairs where the group-1
value exceeds the group-2 value, ties counting one half).
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass

# 95% two-sided acceptance region for Z under the null.
ACCEPTANCE_REGION = (-1.96, 1.96)

# Enumeration cap: C(n1+n2, n1) stays small while n1*n2 <= 30.
EXACT_ENUMERATION_LIMIT = 30


class DegenerateDataError(ValueError):
    """All pooled observations are identical; the U statistic has zero spread."""


@dataclass(frozen=True)
class UTestResult:
    n1: int
    n2: int
    U1: float
    U2: float
    mu: float
    sigma: float
    Z: float
    p_two_tailed: float
    r_effect: float
    cl_effect: float


def average_ranks(values) -> list[float]:
    """Fractional ranks 1..n by ascending value; tied groups share the mean rank."""
    values = list(values)
    if not values:
        raise ValueError("cannot rank an empty sequence")
    if not all(math.isfinite(v) for v in values):
        raise ValueError("cannot rank non-finite values")
    order = sorted(range(len(values)), key=values.__getitem__)
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        # positions i..j (0-based) hold ranks i+1..j+1; ties share the mean
        mean_rank = (i + j + 2) / 2.0
        for pos in range(i, j + 1):
            ranks[order[pos]] = mean_rank
        i = j + 1
    return ranks


def mann_whitney_u(group1, group2) -> tuple[float, float]:
    """U statistics from pooled fractional ranks; U1 + U2 = n1 * n2."""
    group1, group2 = list(group1), list(group2)
    n1, n2 = len(group1), len(group2)
    if n1 == 0 or n2 == 0:
        raise ValueError("both groups must be non-empty")
    ranks = average_ranks(group1 + group2)
    r1 = sum(ranks[:n1])
    u1 = r1 - n1 * (n1 + 1) / 2.0
    return u1, n1 * n2 - u1


def tie_group_sizes(values) -> list[int]:
    """Sizes of groups of equal values in the pooled sample (singletons included)."""
    return sorted(Counter(values).values(), reverse=True)


def ties_corrected_sigma(n1: int, n2: int, tie_sizes) -> float:
    """Null standard deviation of U with the tie correction.

    sigma = sqrt( n1*n2/12 * ( (n+1) - sum_t (t^3 - t) / (n*(n-1)) ) )
    summed over tied groups of size t; groups of size 1 contribute nothing.
    """
    n = n1 + n2
    if n < 2:
        raise ValueError(f"pooled size must be >= 2, got {n}")
    tie_term = sum(t ** 3 - t for t in tie_sizes) / (n * (n - 1))
    return math.sqrt(n1 * n2 / 12.0 * ((n + 1) - tie_term))


def z_with_continuity(U: float, mu: float, sigma: float) -> float:
    """Standardized U with the 0.5 continuity correction toward the mean."""
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    if U < mu:
        return (U - mu + 0.5) / sigma
    if U > mu:
        return (U - mu - 0.5) / sigma
    return 0.0


def normal_cdf(z: float) -> float:
    """Standard normal CDF via the error function: Phi(z) = (1 + erf(z/sqrt(2)))/2.

    math.erf is correctly rounded to double precision, far inside the
    1e-7 absolute accuracy needed here.
    """
    if not math.isfinite(z):
        raise ValueError(f"z must be finite, got {z}")
    return 0.5 * (1.0 + math.erf(z / math.sqrt(2.0)))


def two_tailed_p(Z: float) -> float:
    """2 * Phi(-|Z|), capped at 1."""
    if not math.isfinite(Z):
        raise ValueError(f"Z must be finite, got {Z}")
    return min(1.0, 2.0 * normal_cdf(-abs(Z)))


def effect_sizes(Z: float, U1: float, n1: int, n2: int) -> tuple[float, float]:
    """(standardized, common-language): |Z|/sqrt(n1+n2) and U1/(n1*n2)."""
    if n1 < 1 or n2 < 1:
        raise ValueError("group sizes must be >= 1")
    return abs(Z) / math.sqrt(n1 + n2), U1 / (n1 * n2)


def exact_u_distribution(n1: int, n2: int) -> dict[int, float]:
    """Exact null distribution of U1 (no ties) by enumerating rank assignments.

    Every choice of n1 rank positions out of n1+n2 is equally likely under
    the null; the result maps each achievable U1 to its probability.
    """
    if n1 < 1 or n2 < 1:
        raise ValueError("group sizes must be >= 1")
    if n1 * n2 > EXACT_ENUMERATION_LIMIT:
        raise ValueError(f"n1*n2 = {n1 * n2} exceeds the enumeration "
                         f"limit {EXACT_ENUMERATION_LIMIT}")
    counts: Counter[int] = Counter()
    offset = n1 * (n1 + 1) // 2
    for positions in itertools.combinations(range(1, n1 + n2 + 1), n1):
        counts[sum(positions) - offset] += 1
    total = math.comb(n1 + n2, n1)
    return {u: c / total for u, c in sorted(counts.items())}


def run_utest(group1, group2) -> UTestResult:
    """Full test: ranks -> U -> ties-corrected normal approximation -> effects.

    The reported Z carries the sign of U1 - mu.  Raises
    DegenerateDataError when every pooled value is identical.
    """
    group1, group2 = [float(v) for v in group1], [float(v) for v in group2]
    n1, n2 = len(group1), len(group2)
    if n1 < 2 or n2 < 2:
        raise ValueError("both groups must have at least 2 values")
    u1, u2 = mann_whitney_u(group1, group2)
    mu = n1 * n2 / 2.0
    sigma = ties_corrected_sigma(n1, n2, tie_group_sizes(group1 + group2))
    if sigma == 0.0:
        raise DegenerateDataError(
            "all values in both groups are identical; U has zero variance")
    z = z_with_continuity(u1, mu, sigma)
    p = two_tailed_p(z)
    r, cl = effect_sizes(z, u1, n1, n2)
    return UTestResult(n1=n1, n2=n2, U1=u1, U2=u2, mu=mu, sigma=sigma,
                       Z=z, p_two_tailed=p, r_effect=r, cl_effect=cl)
