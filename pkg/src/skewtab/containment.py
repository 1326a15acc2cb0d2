"""Counts N(n; alpha) of n-cell SYT containing a fixed tableau of shape alpha.

Three independent routes are implemented and cross-checked:

* ``N_direct``    -- the definition: sum f^(lam/alpha) over all lam of n cells,
* ``N_expansion`` -- a finite linear combination of shifted involution
  numbers, sum_j e_j(alpha) t_{n-j}, with character coefficients,
* ``N_binomial``  -- a binomial convolution of involution numbers against
  skew counts inside alpha.

``CLOSED_FORMS`` freezes the classical closed forms for every shape with at
most 5 cells; they serve as golden values for the expansion route.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .characters import character, syt_count
from .exact import IntegralityError, as_integer
from .partitions import (
    Partition,
    SkewShape,
    centralizer_order,
    contains,
    partitions_no_small_parts,
    partitions_of,
    square_cycle_type,
)
from .sequences import a_poly, b_stable, involutions, q_coeff
from .skew_count import skew_syt_det, sum_skew_over_inner

METHODS = ("direct", "expansion", "binomial")


@dataclass(frozen=True)
class ContainmentResult:
    n: int
    alpha: Partition
    value: int
    method: str


# den, {shift j: numerator of e_j * den}; value = sum_j num * t_{n-j} / den.
CLOSED_FORMS: dict[Partition, tuple[int, dict[int, int]]] = {
    (1,): (1, {0: 1}),
    (2,): (2, {0: 1}),
    (1, 1): (2, {0: 1}),
    (3,): (6, {0: 1, 3: 2}),
    (1, 1, 1): (6, {0: 1, 3: 2}),
    (2, 1): (3, {0: 1, 3: -1}),
    (4,): (24, {0: 1, 3: 8, 4: 6}),
    (1, 1, 1, 1): (24, {0: 1, 3: 8, 4: 6}),
    (3, 1): (8, {0: 1, 4: -2}),
    (2, 1, 1): (8, {0: 1, 4: -2}),
    (2, 2): (12, {0: 1, 3: -4, 4: 6}),
    (5,): (120, {0: 1, 3: 20, 4: 30, 5: 24}),
    (1, 1, 1, 1, 1): (120, {0: 1, 3: 20, 4: 30, 5: 24}),
    (4, 1): (30, {0: 1, 3: 5, 5: -6}),
    (2, 1, 1, 1): (30, {0: 1, 3: 5, 5: -6}),
    (3, 2): (24, {0: 1, 3: -4, 4: 6}),
    (2, 2, 1): (24, {0: 1, 3: -4, 4: 6}),
    (3, 1, 1): (20, {0: 1, 4: -10, 5: 4}),
}


@lru_cache(maxsize=None)
def t_shift_coeff(j: int, alpha: Partition) -> Fraction:
    """Coefficient e_j(alpha) of t_{n-j} in the expansion of N(n; alpha).

    e_j = 1/(k-j)! * sum over mu of weight j with all parts >= 3 of
    chi^alpha(square_cycle_type(mu), 1^(k-j)) / z_mu.  In particular e_0 is
    f^alpha / k! and e_1 = e_2 = 0 (no partitions avoid parts 1, 2).
    """
    k = sum(alpha)
    if not 0 <= j <= k:
        raise ValueError("j must lie between 0 and |alpha|")
    total = Fraction(0)
    for mu in partitions_no_small_parts(j):
        cls = tuple(sorted(square_cycle_type(mu) + (1,) * (k - j), reverse=True))
        total += Fraction(character(alpha, cls), centralizer_order(mu))
    return total / factorial(k - j)


def N_direct(n: int, alpha: Partition) -> int:
    """N(n; alpha) from the definition: sum of f^(lam/alpha) over lam of n cells."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    width = alpha[0] if alpha else 0
    total = 0
    for lam in partitions_of(n):
        if lam and lam[0] < width:
            break  # reverse-lex: every later lam has a smaller first part
        if len(lam) < len(alpha) or not contains(lam, alpha):
            continue
        total += skew_syt_det(SkewShape(lam, alpha))
    return total


def N_expansion(n: int, alpha: Partition) -> int:
    """N(n; alpha) as sum_j e_j(alpha) t_{n-j}; zero for n < |alpha|."""
    k = sum(alpha)
    if n < k:
        return 0
    total = Fraction(0)
    for j in range(k + 1):
        coeff = t_shift_coeff(j, alpha)
        if coeff:
            total += coeff * involutions(n - j)
    value = as_integer(total, f"N({n}; {alpha}) expansion")
    if value < 0:
        raise IntegralityError(f"N({n}; {alpha}) expansion is negative")
    return value


def N_binomial(n_plus_k: int, alpha: Partition) -> int:
    """N(n+k; alpha) = sum_j C(n,j) (sum over mu of f^(alpha/mu)) t_{n-j}."""
    k = sum(alpha)
    if n_plus_k < k:
        return 0
    n = n_plus_k - k
    return sum(
        comb(n, j) * sum_skew_over_inner(alpha, k - j) * involutions(n - j)
        for j in range(k + 1)
    )


def N_closed_form(n: int, alpha: Partition) -> int:
    """Golden closed form for |alpha| <= 5; zero for n < |alpha|."""
    if alpha not in CLOSED_FORMS:
        raise ValueError(f"no closed form on record for {alpha}")
    if n < sum(alpha):
        return 0
    den, numerators = CLOSED_FORMS[alpha]
    total = Fraction(
        sum(num * involutions(n - shift) for shift, num in numerators.items()), den
    )
    return as_integer(total, f"closed form for N({n}; {alpha})")


def containment_probability(n: int, alpha: Partition) -> Fraction:
    """Probability that a uniform n-cell SYT contains a fixed tableau of shape alpha."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Fraction(N_expansion(n, alpha), involutions(n))


def N_row(n_plus_k: int, k: int) -> int:
    """Single-row count N(n+k; k), evaluated by both stated forms.

    The binomial form sum_j C(n,j) t_{n-j} and the q-weighted form
    sum_j q_j/(k-j)! t_{n+k-j} must agree exactly; a mismatch means a bug.
    """
    if not 0 <= k <= n_plus_k:
        raise ValueError("need n_plus_k >= k >= 0")
    n = n_plus_k - k
    binomial_form = sum(comb(n, j) * involutions(n - j) for j in range(k + 1))
    q_form = sum(
        (q_coeff(j) / factorial(k - j)) * involutions(n_plus_k - j)
        for j in range(k + 1)
    )
    if q_form != binomial_form:
        raise IntegralityError(
            f"single-row forms disagree at N({n_plus_k}; {k}): "
            f"{binomial_form} vs {q_form}"
        )
    return binomial_form


def generating_poly_check(n: int, max_k: int) -> bool:
    """True iff sum_k N(n+k; k) x**k matches a_poly(n) / (1 - x) up to max_k."""
    if n < 0 or max_k < n:
        raise ValueError("need max_k >= n >= 0")
    coeffs = a_poly(n)
    partial_sums = []
    running = 0
    for c in coeffs:
        running += c
        partial_sums.append(running)
    return all(
        N_row(n + k, k) == partial_sums[min(k, n)] for k in range(max_k + 1)
    )


def stability_check(k: int) -> bool:
    """True iff N(n+k; k) has stabilized to b_n for every n <= k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return all(N_row(n + k, k) == b_stable(n) for n in range(k + 1))


def count_containing(n: int, alpha: Partition, method: str = "expansion") -> ContainmentResult:
    """Dispatch to one of the counting routes; see METHODS."""
    if method == "direct":
        value = N_direct(n, alpha)
    elif method == "expansion":
        value = N_expansion(n, alpha)
    elif method == "binomial":
        value = N_binomial(n, alpha)
    elif method == "closed-form":
        value = N_closed_form(n, alpha)
    else:
        raise ValueError(f"unknown method {method!r}")
    return ContainmentResult(n=n, alpha=tuple(alpha), value=value, method=method)
