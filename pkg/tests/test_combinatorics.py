from itertools import product
from math import factorial

import pytest

from pdepoly.combinatorics import (
    count,
    cumulative_count,
    factorial as mfactorial,
    graded_set,
    level_set,
    multi_binomial,
    position_of,
)
from pdepoly.errors import NotInSet


def brute_graded(d, L):
    """Independent enumeration: every exponent tuple, sorted by degree then last-coordinate-first."""
    pts = [a for a in product(range(L + 1), repeat=d) if sum(a) <= L]
    return sorted(pts, key=lambda a: (sum(a), tuple(reversed(a))))


@pytest.mark.parametrize("d, K, expected", [(2, 3, 4), (1, 7, 1), (3, 3, 10)])
def test_count(d, K, expected):
    assert count(d, K) == expected


@pytest.mark.parametrize("d, L, expected", [(2, 3, 10), (2, 2, 6), (2, 0, 1)])
def test_cumulative_count(d, L, expected):
    assert cumulative_count(d, L) == expected


def test_level_and_graded_examples():
    assert level_set(2, 1).indices == ((1, 0), (0, 1))
    assert level_set(2, 3).indices == ((3, 0), (2, 1), (1, 2), (0, 3))
    assert graded_set(1, 2).indices == ((0,), (1,), (2,))


def test_three_dimensional_cubic_order():
    # column order of the printed 6x10 system matrix
    assert level_set(3, 3).indices == (
        (3, 0, 0), (2, 1, 0), (1, 2, 0), (0, 3, 0), (2, 0, 1),
        (1, 1, 1), (0, 2, 1), (1, 0, 2), (0, 1, 2), (0, 0, 3),
    )


def test_position_of():
    g = graded_set(2, 3)
    assert position_of((1, 1), g) == 5
    assert position_of((0, 0), g) == 1
    expected = brute_graded(2, 3).index((0, 3)) + 1
    assert expected == 10
    assert position_of((0, 3), g) == expected
    with pytest.raises(NotInSet):
        position_of((4, 0), g)
    with pytest.raises(NotInSet):
        position_of((1, 1, 1), g)


@pytest.mark.parametrize("d", range(1, 5))
@pytest.mark.parametrize("L", range(0, 9))
def test_sizes_and_order(d, L):
    g = graded_set(d, L)
    assert len(g) == cumulative_count(d, L) == sum(count(d, k) for k in range(L + 1))
    assert len(set(g)) == len(g)
    assert list(g) == brute_graded(d, L)
    for K in range(L + 1):
        lev = level_set(d, K)
        assert len(lev) == count(d, K)
        assert lev[0] == (K,) + (0,) * (d - 1)
        assert lev[-1] == (0,) * (d - 1) + (K,)
        assert tuple(a for a in g if sum(a) == K) == lev.indices
    degrees = [sum(a) for a in g]
    assert degrees == sorted(degrees)


@pytest.mark.parametrize(
    "alpha, beta, expected", [((2, 1), (1, 1), 2), ((1, 2), (2, 0), 0), ((3, 0, 1), (3, 0, 1), 1)]
)
def test_multi_binomial(alpha, beta, expected):
    assert multi_binomial(alpha, beta) == expected


@pytest.mark.parametrize("d", [1, 2, 3])
def test_multi_binomial_matches_factorials(d):
    for alpha in graded_set(d, 4):
        for beta in graded_set(d, 4):
            got = multi_binomial(alpha, beta)
            if all(b <= a for a, b in zip(alpha, beta)):
                diff = tuple(a - b for a, b in zip(alpha, beta))
                assert got == mfactorial(alpha) // (mfactorial(beta) * mfactorial(diff))
                assert got * mfactorial(beta) * mfactorial(diff) == mfactorial(alpha)
            else:
                assert got == 0


def test_multi_factorial():
    assert mfactorial((3, 0, 2)) == factorial(3) * factorial(2)
