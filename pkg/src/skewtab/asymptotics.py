"""Asymptotic formulas evaluated against the exact machinery.

Estimates live in floating point (log-domain where magnitudes explode);
every comparison against exact data happens on the rational side.  The
TVK/super-Schur layer is exact rational arithmetic throughout: the limiting
ratio f^(lam/alpha) / f^lam under row/column frequencies (a; b) is the
super-Schur value s_alpha(a / -b), computed from its power-sum expansion
sum over nu of chi^alpha(nu)/z_nu * prod_j (p_{nu_j}(a) + (-1)^(nu_j - 1)
p_{nu_j}(b)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .characters import character, syt_count, transposition_character
from .exact import fraction_det
from .partitions import (
    Partition,
    centralizer_order,
    conjugate,
    partitions_of,
    square_cycle_type,
)
from .sequences import involutions

_LOG_FLOAT_MAX = 709.0  # beyond this math.exp overflows a double


@dataclass(frozen=True)
class LimitSpec:
    """Row/column frequency data (a; b) for a growing partition sequence.

    Frequencies are exact rationals, weakly decreasing and nonnegative, with
    total mass at most 1 (exactly 1 for the TVK estimator).  ``biane_c``
    optionally carries the character-growth constants (C_2, C_3, ...) of a
    rescaled limit shape; they are caller-supplied inputs, with C_2 = 1.
    """

    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...] = ()
    biane_c: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(Fraction(x) for x in self.a))
        object.__setattr__(self, "b", tuple(Fraction(x) for x in self.b))
        for seq in (self.a, self.b):
            if any(x < 0 for x in seq):
                raise ValueError("frequencies must be nonnegative")
            if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
                raise ValueError("frequencies must be weakly decreasing")
        if self.frequency_sum() > 1:
            raise ValueError("total frequency mass exceeds 1")
        if self.biane_c is not None and self.biane_c[0] != 1:
            raise ValueError("the first growth constant C_2 must equal 1")

    def frequency_sum(self) -> Fraction:
        return sum(self.a, Fraction(0)) + sum(self.b, Fraction(0))


def mw_log_involutions_estimate(n: int, order: int = 2) -> float:
    """Natural log of the involution-number estimate with ``order`` corrections.

    Leading term (1/sqrt 2) n^(n/2) exp(-n/2 + sqrt n - 1/4); corrections
    1 + 7/(24 sqrt n) - 119/(1152 n).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if order not in (0, 1, 2):
        raise ValueError("order must be 0, 1 or 2")
    root = math.sqrt(n)
    log_lead = -0.5 * math.log(2) + 0.5 * n * math.log(n) - 0.5 * n + root - 0.25
    corr = 1.0
    if order >= 1:
        corr += 7 / (24 * root)
    if order >= 2:
        corr -= 119 / (1152 * n)
    return log_lead + math.log(corr)


def mw_involutions_estimate(n: int, order: int = 2) -> float:
    """Involution-number estimate; inf when the value exceeds float range."""
    log_value = mw_log_involutions_estimate(n, order)
    return math.inf if log_value > _LOG_FLOAT_MAX else math.exp(log_value)


def mw_log_shifted_estimate(n: int, j: int) -> float:
    """Natural log of the t_{n-j} estimate written in terms of n.

    (1/sqrt 2) n^((n-j)/2) exp(-n/2 + sqrt n - 1/4) times
    1 + (7/24 - j/2)/sqrt n - (119/1152 + 7j/48 - 3j**2/8)/n; at j = 0 this
    is exactly the order-2 estimate for t_n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= j <= n:
        raise ValueError("need 0 <= j <= n")
    root = math.sqrt(n)
    log_lead = -0.5 * math.log(2) + 0.5 * (n - j) * math.log(n) - 0.5 * n + root - 0.25
    corr = 1 + (7 / 24 - j / 2) / root - (119 / 1152 + 7 * j / 48 - 3 * j * j / 8) / n
    if corr <= 0:
        raise ValueError("correction factor is not positive; j is too large for n")
    return log_lead + math.log(corr)


def mw_shifted_estimate(n: int, j: int) -> float:
    log_value = mw_log_shifted_estimate(n, j)
    return math.inf if log_value > _LOG_FLOAT_MAX else math.exp(log_value)


def relative_error(log_estimate: float, exact: int) -> float:
    """estimate/exact - 1, computed in log space so huge exacts are safe."""
    if exact <= 0:
        raise ValueError("exact value must be positive")
    return math.expm1(log_estimate - _log_int(exact))


def _log_int(value: int) -> float:
    return math.log(value)


def containment_probability_estimate(n: int, alpha: Partition) -> float:
    """Three-term truncation of the containment probability P(n; alpha).

    f^alpha/k! + e_3/n^(3/2) - (3 e_3 - 2 e_4)/n**2, with the exact expansion
    coefficients converted to floats.  Shapes with fewer than 3 (resp. 4)
    cells have no e_3 (resp. e_4) term.
    """
    from .containment import t_shift_coeff

    if n < 1:
        raise ValueError("n must be positive")
    k = sum(alpha)
    e0 = Fraction(syt_count(alpha), factorial(k))
    e3 = t_shift_coeff(3, alpha) if k >= 3 else Fraction(0)
    e4 = t_shift_coeff(4, alpha) if k >= 4 else Fraction(0)
    return float(e0) + float(e3) / n**1.5 - float(3 * e3 - 2 * e4) / n**2


def biane_estimate(f_lambda: int, n: int, alpha: Partition, c3: float) -> float:
    """Two-term estimate of f^(lam/alpha) for lam near a rescaled limit shape.

    f_lambda * (f^alpha/k! + C_3 chi^alpha(transposition)/(2 (k-2)! sqrt n)).
    For shapes with fewer than 2 cells the transposition class does not
    exist and the leading term is returned.
    """
    if n < 1:
        raise ValueError("n must be positive")
    k = sum(alpha)
    lead = float(f_lambda) * syt_count(alpha) / factorial(k)
    if k < 2:
        return lead
    chi = float(transposition_character(alpha))
    return lead + float(f_lambda) * c3 * chi / (2 * factorial(k - 2) * math.sqrt(n))


@lru_cache(maxsize=None)
def _partition_list(n: int) -> tuple[Partition, ...]:
    return tuple(partitions_of(n))


def _in_window(x: int, n: int, eps: Fraction) -> bool:
    # strict bounds (2 - eps) sqrt(n) < x < (2 + eps) sqrt(n), compared
    # exactly by squaring (x is a positive integer)
    hi = 2 + eps
    if x * x >= hi * hi * n:
        return False
    lo = 2 - eps
    return lo <= 0 or lo * lo * n < x * x


def bulk_members(n: int, eps) -> list[Partition]:
    """Partitions of n whose first part and length both lie in the bulk window."""
    if n < 1:
        raise ValueError("n must be positive")
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    return [
        lam
        for lam in _partition_list(n)
        if _in_window(lam[0], n, eps) and _in_window(len(lam), n, eps)
    ]


def bulk_mass(n: int, eps) -> Fraction:
    """Exact fraction of all n-cell SYT whose shape lies in the bulk window."""
    total = sum(syt_count(lam) for lam in bulk_members(n, eps))
    return Fraction(total, involutions(n))


def power_sum(r: int, values) -> Fraction:
    """Power sum p_r evaluated at a rational vector."""
    if r < 1:
        raise ValueError("r must be positive")
    return sum((Fraction(v) ** r for v in values), Fraction(0))


def schur_value(mu: Partition, values) -> Fraction:
    """Schur polynomial s_mu evaluated at a rational vector.

    Uses the determinant of complete homogeneous sums h_{mu_i - i + j},
    which is robust for repeated variable values (the bialternant is not).
    """
    values = tuple(Fraction(v) for v in values)
    if not mu:
        return Fraction(1)
    if len(mu) > len(values):
        return Fraction(0)
    ell = len(mu)
    max_degree = mu[0] + ell
    h = [Fraction(1)] + [Fraction(0)] * max_degree
    for v in values:
        for r in range(1, max_degree + 1):
            h[r] += v * h[r - 1]
    matrix = []
    for i in range(ell):
        row = []
        for j in range(ell):
            d = mu[i] - i + j
            row.append(h[d] if 0 <= d <= max_degree else Fraction(0))
        matrix.append(row)
    return fraction_det(matrix)


def super_schur_value(alpha: Partition, a, b) -> Fraction:
    """Super-Schur value s_alpha(a / -b) from its power-sum expansion."""
    a = tuple(Fraction(v) for v in a)
    b = tuple(Fraction(v) for v in b)
    k = sum(alpha)
    total = Fraction(0)
    for nu in partitions_of(k):
        chi = character(alpha, nu)
        if chi == 0:
            continue
        product = Fraction(1)
        for part in nu:
            term = power_sum(part, a) if a else Fraction(0)
            if b:
                sign = 1 if part % 2 else -1
                term += sign * power_sum(part, b)
            product *= term
            if product == 0:
                break
        total += Fraction(chi, centralizer_order(nu)) * product
    return total


def rectangle_factorization(
    i: int, j: int, mu: Partition, nu: Partition, a, b
) -> tuple[Partition, Fraction]:
    """Build alpha = (i x j rectangle) + mu on the right + nu' below, and
    evaluate s_alpha(a / -b) as s_mu(a) s_nu(b) prod (a_r + b_s).

    Returns (alpha, value) so callers can cross-check against
    ``super_schur_value(alpha, a, b)``.
    """
    a = tuple(Fraction(v) for v in a)
    b = tuple(Fraction(v) for v in b)
    if len(a) != i or len(b) != j:
        raise ValueError("need exactly i values in a and j values in b")
    if len(mu) > i or len(nu) > j:
        raise ValueError("mu must fit in i rows and nu in j rows")
    padded_mu = mu + (0,) * (i - len(mu))
    rows = [padded_mu[r] + j for r in range(i)]
    alpha = tuple(p for p in rows + list(conjugate(nu)) if p > 0)
    value = schur_value(mu, a) * schur_value(nu, b)
    for ar in a:
        for bs in b:
            value *= ar + bs
    return alpha, value


def tvk_skew_estimate(f_lambda: int, alpha: Partition, spec: LimitSpec) -> float:
    """f^(lam/alpha) estimate f_lambda * s_alpha(a / -b) under TVK frequencies."""
    if spec.frequency_sum() != 1:
        raise ValueError("TVK frequencies must sum to exactly 1")
    return float(f_lambda * super_schur_value(alpha, spec.a, spec.b))


def schur_sum_identity_check(n: int, values) -> bool:
    """Check sum over lam of s_lam = sum over lam of p_(square type)/z_lam.

    Both sides are restricted to partitions of n and evaluated exactly at the
    given rational vector.  Desk-scale guard: n <= 8 and at most 4 values.
    """
    if n > 8 or len(tuple(values)) > 4:
        raise ValueError("identity check is desk-scale only (n <= 8, <= 4 values)")
    values = tuple(Fraction(v) for v in values)
    schur_side = sum((schur_value(lam, values) for lam in partitions_of(n)), Fraction(0))
    power_side = Fraction(0)
    for lam in partitions_of(n):
        product = Fraction(1)
        for part in square_cycle_type(lam):
            product *= power_sum(part, values)
            if product == 0:
                break
        power_side += Fraction(1, centralizer_order(lam)) * product
    return schur_side == power_side
