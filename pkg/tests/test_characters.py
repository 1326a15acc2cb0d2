from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest

from skewtab import characters
from skewtab.characters import (
    character,
    character_oracle,
    clear_character_cache,
    set_character_cache_limit,
    syt_count,
    transposition_character,
)
from skewtab.partitions import (
    centralizer_order,
    conjugate,
    partitions_no_small_parts,
    partitions_of,
    square_cycle_type,
)


# ---------------------------------------------------------------- oracles

def brute_syt_count(lam):
    """Count SYT by testing every assignment of 1..n to the cell list."""
    cells = [(i, j) for i, part in enumerate(lam) for j in range(part)]
    n = len(cells)
    count = 0
    for values in permutations(range(1, n + 1)):
        grid = {cell: v for cell, v in zip(cells, values)}
        ok = all(
            grid[(i, j)] < grid[(i, j + 1)]
            for (i, j) in cells
            if (i, j + 1) in grid
        ) and all(
            grid[(i, j)] < grid[(i + 1, j)]
            for (i, j) in cells
            if (i + 1, j) in grid
        )
        count += ok
    return count


# ------------------------------------------------------------------ tests

def test_syt_count_examples():
    assert syt_count(()) == 1
    assert syt_count((2, 1)) == 2
    assert syt_count((3, 2)) == 5


def test_syt_count_brute_force_small():
    for n in range(7):
        for lam in partitions_of(n):
            assert syt_count(lam) == brute_syt_count(lam)


def test_syt_count_conjugation_invariance():
    for n in range(11):
        for lam in partitions_of(n):
            assert syt_count(lam) == syt_count(conjugate(lam))


def test_syt_count_squares_sum_to_group_order():
    for n in range(9):
        assert sum(syt_count(lam) ** 2 for lam in partitions_of(n)) == factorial(n)


def test_character_trivial_shape():
    for n in range(1, 7):
        for mu in partitions_of(n):
            assert character((n,), mu) == 1


def test_character_examples():
    assert character((2, 1), (3,)) == -1
    assert character((2, 1), (1, 1, 1)) == 2
    assert character((2, 1), (2, 1)) == 0


def test_character_weight_mismatch():
    with pytest.raises(ValueError):
        character((2, 1), (2,))


def test_character_on_identity_class_is_dimension():
    for n in range(10):
        identity = (1,) * n
        for lam in partitions_of(n):
            assert character(lam, identity) == syt_count(lam)


def test_character_sign_shape():
    # single-column shape carries the sign character
    for n in range(1, 8):
        for mu in partitions_of(n):
            expected = 1 if (n - len(mu)) % 2 == 0 else -1
            assert character((1,) * n, mu) == expected


def test_character_matches_oracle_small():
    for n in range(6):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert character(lam, mu) == character_oracle(lam, mu)


def test_character_oracle_examples():
    assert character_oracle((1, 1), (2,)) == -1
    assert character_oracle((2, 1), (2, 1)) == 0
    for k in range(1, 7):
        for mu in partitions_of(k):
            assert character_oracle((k,), mu) == 1


def test_character_oracle_weight_cap():
    with pytest.raises(ValueError):
        character_oracle((9,), (9,))
    with pytest.raises(ValueError):
        character_oracle((2, 1), (2,))


def test_orthogonality_of_rows():
    for n in range(7):
        shapes = list(partitions_of(n))
        for lam in shapes:
            for rho in shapes:
                total = sum(
                    Fraction(character(lam, mu) * character(rho, mu), centralizer_order(mu))
                    for mu in partitions_of(n)
                )
                assert total == (1 if lam == rho else 0)


def test_conjugate_shape_agrees_on_doubled_classes():
    # classes (square type, 1...) are even, so conjugating the shape is free
    for k in range(1, 7):
        for alpha in partitions_of(k):
            for j in range(k + 1):
                for mu in partitions_no_small_parts(j):
                    cls = tuple(
                        sorted(square_cycle_type(mu) + (1,) * (k - j), reverse=True)
                    )
                    assert character(alpha, cls) == character(conjugate(alpha), cls)


def test_transposition_character_examples():
    assert transposition_character((2,)) == 1
    assert transposition_character((1, 1)) == -1
    assert transposition_character((2, 1)) == 0
    with pytest.raises(ValueError):
        transposition_character((1,))


def test_transposition_character_matches_recursion():
    for k in range(2, 9):
        for alpha in partitions_of(k):
            value = transposition_character(alpha)
            assert value.denominator == 1
            assert value == character(alpha, (2,) + (1,) * (k - 2))


def test_character_cache_clear_and_limit():
    clear_character_cache()
    character((3, 1), (2, 1, 1))
    assert len(characters._cache) > 0
    clear_character_cache()
    assert len(characters._cache) == 0
    set_character_cache_limit(4)
    try:
        character((4, 2), (3, 2, 1))
        assert len(characters._cache) <= 4
    finally:
        set_character_cache_limit(None)
        clear_character_cache()


def test_character_concurrent_readers_consistent():
    clear_character_cache()
    work = [
        (lam, mu)
        for lam in partitions_of(8)
        for mu in [(3, 3, 1, 1), (2, 2, 2, 2), (8,), (1,) * 8]
    ]
    serial = {key: character(*key) for key in work}
    clear_character_cache()
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda key: character(*key), work * 4))
    assert results == [serial[key] for key in work * 4]
