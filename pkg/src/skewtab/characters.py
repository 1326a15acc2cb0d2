"""Irreducible symmetric-group characters and straight-shape SYT counts.

``character`` runs the border-strip (Murnaghan-Nakayama) recursion on
first-column hook lengths: removing a strip of size r from the beta set
{lam_i + ell - i} means moving one beta value down by r into a free slot,
with sign (-1)**(number of occupied slots jumped over).

``character_oracle`` recomputes small values by a completely different
route - coefficient extraction from the alternant times a power sum - and
exists only to cross-check the recursion at desk scale.

Cache contract: one process-wide dict keyed by (shape, class).  Lookups and
inserts are plain dict operations, GIL-serialized in CPython, so concurrent
readers are safe; at worst two threads compute the same (deterministic)
value.  Eviction is all-or-nothing: ``clear_character_cache()`` empties the
table, and an optional entry cap (``set_character_cache_limit``) triggers
the same clear-all when an insert would exceed it.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial, prod

from .partitions import Partition, conjugate

_cache: dict[tuple[Partition, Partition], int] = {}
_cache_limit: int | None = None

ORACLE_WEIGHT_CAP = 8


@lru_cache(maxsize=None)
def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux of straight shape lam (hook lengths)."""
    n = sum(lam)
    if n == 0:
        return 1
    cols = conjugate(lam)
    hooks = prod(
        lam[i] - j + cols[j] - i - 1
        for i in range(len(lam))
        for j in range(lam[i])
    )
    count, rem = divmod(factorial(n), hooks)
    assert rem == 0, "hook product must divide n!"
    return count


def _from_beta(beta: list[int]) -> Partition:
    m = len(beta)
    return tuple(p for i, b in enumerate(beta) if (p := b - (m - 1 - i)) > 0)


def _character(lam: Partition, mu: Partition) -> int:
    key = (lam, mu)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    if not mu:
        value = 1
    else:
        r, rest = mu[0], mu[1:]
        ell = len(lam)
        beta = [lam[i] + ell - 1 - i for i in range(ell)]
        occupied = set(beta)
        value = 0
        for b in beta:
            nb = b - r
            if nb < 0 or nb in occupied:
                continue
            height = sum(1 for x in beta if nb < x < b)
            new_beta = sorted((x for x in beta if x != b), reverse=True)
            new_beta.append(nb)
            new_beta.sort(reverse=True)
            sub = _character(_from_beta(new_beta), rest)
            value += -sub if height % 2 else sub
    if _cache_limit is not None and len(_cache) >= _cache_limit:
        _cache.clear()
    _cache[key] = value
    return value


def character(lam: Partition, mu: Partition) -> int:
    """Character of the irreducible indexed by lam on the class of type mu."""
    if sum(lam) != sum(mu):
        raise ValueError(f"invalid character key: |{lam}| != |{mu}|")
    return _character(tuple(lam), tuple(mu))


def clear_character_cache() -> None:
    _cache.clear()


def set_character_cache_limit(limit: int | None) -> None:
    """Cap the memo table at ``limit`` entries (clear-all on overflow)."""
    global _cache_limit
    _cache_limit = limit


def _perm_sign(perm: tuple[int, ...]) -> int:
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def character_oracle(lam: Partition, mu: Partition) -> int:
    """Desk-scale recomputation of character(lam, mu) by alternant extraction.

    Expands the power sum p_mu in len(lam) variables as a monomial dict, then
    reads off the coefficient of x**(lam + delta) in the product with the
    Vandermonde alternant.  Independent of the border-strip recursion.
    """
    if sum(lam) != sum(mu):
        raise ValueError(f"invalid character key: |{lam}| != |{mu}|")
    n = sum(lam)
    if n > ORACLE_WEIGHT_CAP:
        raise ValueError(f"oracle is desk-scale only (weight <= {ORACLE_WEIGHT_CAP})")
    if n == 0:
        return 1
    nvars = len(lam)
    delta = tuple(range(nvars - 1, -1, -1))
    target = tuple(lam[i] + delta[i] for i in range(nvars))
    poly: dict[tuple[int, ...], int] = {(0,) * nvars: 1}
    for part in mu:
        grown: dict[tuple[int, ...], int] = {}
        for exps, coeff in poly.items():
            for i in range(nvars):
                bumped = exps[:i] + (exps[i] + part,) + exps[i + 1 :]
                grown[bumped] = grown.get(bumped, 0) + coeff
        poly = grown
    total = 0
    for perm in permutations(range(nvars)):
        needed = tuple(target[i] - delta[perm[i]] for i in range(nvars))
        if min(needed) < 0:
            continue
        total += _perm_sign(perm) * poly.get(needed, 0)
    return total


def transposition_character(alpha: Partition) -> Fraction:
    """Character of shape alpha on a transposition class, via cell contents.

    Equals f^alpha * (sum C(alpha_i, 2) - sum C(alpha'_i, 2)) / C(k, 2); the
    rational always reduces to the integer character value.
    """
    k = sum(alpha)
    if k < 2:
        raise ValueError("transposition class needs weight >= 2")
    rows = sum(comb(p, 2) for p in alpha)
    cols = sum(comb(p, 2) for p in conjugate(alpha))
    return Fraction(syt_count(alpha) * (rows - cols), comb(k, 2))
