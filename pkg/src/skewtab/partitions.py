"""Integer partitions, their basic combinatorial maps, and skew shapes.

A partition is a plain tuple of weakly decreasing positive integers; the
empty tuple is the unique partition of 0.  Tuples are hashable, so
partitions can key memo tables directly, and all operations here are pure,
which makes them safe to share across threads.

Text syntax (used by the CLI and test fixtures): comma-separated parts,
e.g. ``"6,6,5,4,2,1"``; the empty string denotes the empty partition.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Iterator

Partition = tuple[int, ...]


class InvalidSkewShapeError(ValueError):
    """Raised when an inner shape does not fit inside an outer shape."""


def validate_partition(parts) -> Partition:
    """Return ``parts`` as a Partition tuple, or raise ValueError."""
    lam = tuple(parts)
    for i, p in enumerate(lam):
        if not isinstance(p, int) or p < 1:
            raise ValueError(f"partition parts must be positive integers, got {lam}")
        if i and lam[i - 1] < p:
            raise ValueError(f"partition parts must be weakly decreasing, got {lam}")
    return lam


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text syntax; '' is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(item.strip()) for item in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse partition from {text!r}") from None
    return validate_partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def conjugate(lam: Partition) -> Partition:
    """Transpose the diagram: part i of the result counts parts of lam >= i."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def square_cycle_type(mu: Partition) -> Partition:
    """Cycle type of w**2 for w of cycle type mu.

    Every even part 2i splits into two parts i, i; odd parts survive.  The
    result is always the cycle type of an even permutation.
    """
    parts: list[int] = []
    for p in mu:
        if p % 2 == 0:
            parts.extend((p // 2, p // 2))
        else:
            parts.append(p)
    return tuple(sorted(parts, reverse=True))


def centralizer_order(mu: Partition) -> int:
    """Order z_mu of the centralizer of a permutation of cycle type mu.

    z_mu = prod_i i**m_i * m_i! where m_i is the multiplicity of i in mu;
    the class of mu in the symmetric group has size |mu|! / z_mu.
    """
    z = 1
    for part, mult in Counter(mu).items():
        z *= part**mult * factorial(mult)
    return z


def _descending_parts(n: int, max_part: int, min_part: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), min_part - 1, -1):
        rest = n - first
        if rest and rest < min_part:
            continue
        for tail in _descending_parts(rest, first, min_part):
            yield (first,) + tail


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield every partition of n exactly once, in reverse-lexicographic order.

    The order is stable and documented: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
    ``max_part`` restricts the largest part (useful for pruned sums).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    yield from _descending_parts(n, n if max_part is None else max_part, 1)


def partitions_no_small_parts(j: int) -> Iterator[Partition]:
    """Partitions of j whose every part is at least 3 (reverse-lex order)."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    yield from _descending_parts(j, j, 3)


def contains(lam: Partition, alpha: Partition) -> bool:
    """True iff alpha fits inside lam componentwise (alpha padded with zeros)."""
    if len(alpha) > len(lam):
        return False
    return all(a <= l for a, l in zip(alpha, lam))


def skew_cells(lam: Partition, alpha: Partition) -> list[tuple[int, int]]:
    """Row-major list of (row, column) cells of lam/alpha, 1-indexed."""
    if not contains(lam, alpha):
        raise InvalidSkewShapeError(f"{alpha} is not contained in {lam}")
    padded = alpha + (0,) * (len(lam) - len(alpha))
    return [
        (i + 1, j + 1)
        for i, (outer, inner) in enumerate(zip(lam, padded))
        for j in range(inner, outer)
    ]


@dataclass(frozen=True)
class SkewShape:
    """An outer/inner partition pair with the inner contained in the outer."""

    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", validate_partition(self.outer))
        object.__setattr__(self, "inner", validate_partition(self.inner))
        if not contains(self.outer, self.inner):
            raise InvalidSkewShapeError(
                f"{self.inner} is not contained in {self.outer}"
            )

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def cells(self) -> list[tuple[int, int]]:
        return skew_cells(self.outer, self.inner)

    def conjugate(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer), conjugate(self.inner))
