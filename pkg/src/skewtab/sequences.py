"""Scalar sequences consumed by the counting formulas.

Four memoized families live here:

* ``involutions(n)`` -- t_n, the involution numbers (total SYT with n cells),
* ``q_coeff(j)``     -- coefficients of exp(-x - x**2/2) / (1 - x); j! * q_j
  counts degree-j permutations with every cycle of length >= 3,
* ``b_stable(n)``    -- coefficients of the EGF exp(u**2/2 + 2u); the stable
  value of the single-row containment count once the row is long enough,
* ``a_poly(n)``      -- integer polynomials with A_0 = 1 and
  A_{n+1} = A_n' + (x+1) A_n, the numerators of the single-row generating
  functions sum_k N(n+k; k) x**k = A_n(x) / (1-x).

Memo tables are module-level lists that only ever grow; appends are
GIL-serialized, so concurrent readers are safe in CPython.
"""

from __future__ import annotations

from fractions import Fraction

_t: list[int] = [1, 1]
_exp_terms: list[Fraction] = [Fraction(1)]  # series for exp(-x - x**2/2)
_q: list[Fraction] = [Fraction(1)]
_b: list[int] = [1, 2]
_a: list[tuple[int, ...]] = [(1,)]


def involutions(n: int) -> int:
    """Number of involutions t_n in the degree-n symmetric group.

    Negative indices return 0, which makes shifted sums t_{n-j} total.
    """
    if n < 0:
        return 0
    while len(_t) <= n:
        m = len(_t)
        _t.append(_t[m - 1] + (m - 1) * _t[m - 2])
    return _t[n]


def q_coeff(j: int) -> Fraction:
    """Coefficient of x**j in exp(-x - x**2/2) / (1 - x), exact.

    The factor 1/(1-x) turns the exponential's coefficients into partial
    sums; j! * q_j is a nonnegative integer (a permutation count).
    """
    if j < 0:
        raise ValueError("j must be nonnegative")
    while len(_q) <= j:
        m = len(_exp_terms)
        # E'(x) = (-1 - x) E(x)  =>  m E_m = -E_{m-1} - E_{m-2}
        prev2 = _exp_terms[m - 2] if m >= 2 else Fraction(0)
        _exp_terms.append((-_exp_terms[m - 1] - prev2) / m)
        _q.append(_q[-1] + _exp_terms[-1])
    return _q[j]


def b_stable(n: int) -> int:
    """Coefficient b_n of u**n/n! in exp(u**2/2 + 2u).

    Satisfies b_{n+1} = 2 b_n + n b_{n-1}; equals the count of (n+k)-cell
    SYT containing a fixed single-row k-cell tableau whenever n <= k.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_b) <= n:
        m = len(_b)
        _b.append(2 * _b[m - 1] + (m - 1) * _b[m - 2])
    return _b[n]


def a_poly(n: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the n-th generating polynomial.

    A_0 = 1 and A_{n+1} = A_n' + (x+1) A_n, so A_n is monic of degree n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_a) <= n:
        prev = _a[-1]
        deriv = tuple((i + 1) * c for i, c in enumerate(prev[1:]))
        shifted = (0,) + prev  # x * A
        out = []
        for i in range(len(prev) + 1):
            c = shifted[i]
            if i < len(prev):
                c += prev[i]
            if i < len(deriv):
                c += deriv[i]
            out.append(c)
        _a.append(tuple(out))
    return _a[n]
