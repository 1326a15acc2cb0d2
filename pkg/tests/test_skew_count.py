from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest

from skewtab.characters import syt_count
from skewtab.exact import IntegralityError
from skewtab.partitions import SkewShape, contains, partitions_of, skew_cells
from skewtab.skew_count import (
    BRUTE_FORCE_CELL_CAP,
    skew_syt_brute,
    skew_syt_char,
    skew_syt_det,
    sum_skew_over_inner,
)


# ---------------------------------------------------------------- oracles

def filtered_permutation_count(shape):
    """Count skew SYT by filtering raw assignments; independent of everything."""
    cells = shape.cells()
    n = len(cells)
    gridset = set(cells)
    count = 0
    for values in permutations(range(1, n + 1)):
        grid = dict(zip(cells, values))
        ok = all(
            grid[(i, j)] < grid[(i, j + 1)]
            for (i, j) in cells
            if (i, j + 1) in gridset
        ) and all(
            grid[(i, j)] < grid[(i + 1, j)]
            for (i, j) in cells
            if (i + 1, j) in gridset
        )
        count += ok
    return count


def row_strip_closed_form(m):
    """f for the two-row shape (m, m) minus a two-cell strip, m >= 2."""
    value, rem = divmod(3 * factorial(2 * m - 2), factorial(m - 2) * factorial(m) * (m + 1))
    assert rem == 0
    return value


def small_skew_pairs(max_outer, max_inner):
    for n in range(max_outer + 1):
        for lam in partitions_of(n):
            for k in range(min(n, max_inner) + 1):
                for alpha in partitions_of(k):
                    if contains(lam, alpha):
                        yield SkewShape(lam, alpha)


# ------------------------------------------------------------------ tests

def test_brute_examples():
    assert skew_syt_brute(SkewShape((3,), (3,))) == 1
    assert skew_syt_brute(SkewShape((2, 1), (1,))) == 2
    assert skew_syt_brute(SkewShape((2, 2, 1), (1,))) == 5


def test_brute_against_permutation_filter():
    for shape in small_skew_pairs(7, 4):
        assert skew_syt_brute(shape) == filtered_permutation_count(shape)


def test_brute_cap():
    with pytest.raises(ValueError):
        skew_syt_brute(SkewShape((26,), ()))
    assert skew_syt_brute(SkewShape((25,), ())) == 1


def test_det_examples():
    assert skew_syt_det(SkewShape((2, 2, 1), (1,))) == 5
    for k in range(6):
        shape = SkewShape((k,) if k else (), (k,) if k else ())
        assert skew_syt_det(shape) == 1


def test_det_row_strip_closed_form():
    for m in range(2, 13):
        shape = SkewShape((m, m), (2,))
        closed = row_strip_closed_form(m)
        assert skew_syt_det(shape) == closed
        assert skew_syt_brute(shape) == closed


def test_char_examples():
    assert skew_syt_char(SkewShape((2, 1), (1,))) == 2
    assert skew_syt_char(SkewShape((2, 2, 1), (1,))) == 5


def test_char_with_empty_inner_is_straight_count():
    for n in range(9):
        for lam in partitions_of(n):
            assert skew_syt_char(SkewShape(lam, ())) == syt_count(lam)


def test_triple_agreement_small():
    for shape in small_skew_pairs(8, 4):
        brute = skew_syt_brute(shape)
        assert brute == skew_syt_det(shape)
        assert brute == skew_syt_char(shape)


def test_conjugation_symmetry():
    # all inner shapes, not just small ones
    for shape in small_skew_pairs(9, 9):
        assert skew_syt_det(shape) == skew_syt_det(shape.conjugate())


def test_positivity():
    for shape in small_skew_pairs(8, 4):
        assert skew_syt_det(shape) >= 1


def test_row_strip_ratio_identity():
    for m in range(2, 51):
        ratio = Fraction(
            skew_syt_det(SkewShape((m, m), (2,))), syt_count((m, m))
        )
        assert ratio == Fraction(3 * (m - 1), 2 * (2 * m - 1))


def test_sum_skew_over_inner():
    assert sum_skew_over_inner((2, 1), 3) == 1
    assert sum_skew_over_inner((2, 1), 0) == 2
    assert sum_skew_over_inner((2, 1), 1) == 2
    assert sum_skew_over_inner((2, 1), 2) == 2
    with pytest.raises(ValueError):
        sum_skew_over_inner((2, 1), 4)
