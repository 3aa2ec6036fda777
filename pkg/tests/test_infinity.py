import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrangeo.arrangement import Arrangement, Hyperplane
from arrangeo.arriso import betweenness_table
from arrangeo.errors import GeneralPositionError
from arrangeo.infinity import (
    add_at_infinity, brute_force_infinity_orders, build_by_infinity, chart, induced_arrangement,
    is_at_infinity, is_build_order, is_infinity_arrangement,
)
from arrangeo.sampling import random_arrangement, random_vector

from strategies import arrangements

TRIANGLE = Arrangement.from_rows([(1, 0), (0, 1), (1, 1)], [0, 0, 1])


def _add(rng, arr):
    while True:
        try:
            return add_at_infinity(arr, random_vector(rng, arr.m))
        except GeneralPositionError:
            continue


def test_add_example():
    h = add_at_infinity(TRIANGLE, (2, 1))
    assert h.b == 3 and is_at_infinity(TRIANGLE, h)


def test_parallel_direction_rejected():
    with pytest.raises(GeneralPositionError):
        add_at_infinity(TRIANGLE, (1, 0))


@settings(max_examples=30)
@given(arrangements(), st.integers(0, 2**32 - 1))
def test_added_is_at_infinity(arr, seed):
    h = _add(random.Random(seed), arr)
    assert is_at_infinity(arr, h)
    assert arr.appended(h).without(arr.n + 1) == arr


def test_separating_hyperplane_not_at_infinity():
    assert not is_at_infinity(TRIANGLE, Hyperplane((2, 1), F(3, 2)))


def test_single_vertex():
    arr = Arrangement.from_rows([(1, 0), (0, 1)], [3, 4])
    assert is_at_infinity(arr, Hyperplane((1, 1), 7))
    assert is_at_infinity(arr, Hyperplane((1, -1), 0))


def test_planar_induced_is_points():
    h = add_at_infinity(TRIANGLE, (2, 1))
    induced = induced_arrangement(TRIANGLE, h)
    assert induced.m == 1 and induced.n == 3


def test_chart_example():
    arr = Arrangement.from_rows([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], [0, 0, 0, 1])
    h = add_at_infinity(arr, (1, 2, 4))
    assert h.b == 5
    base, dirs = chart(h)
    assert base == (5, 0, 0)
    assert dirs == ((2, -1, 0), (4, 0, -1))
    induced = induced_arrangement(arr, h)
    assert [(g.a, g.b) for g in induced.hyperplanes] == [
        ((2, 4), -5), ((-1, 0), 0), ((0, -1), 0), ((1, 3), -4),
    ]


def test_chart_choice_keeps_betweenness():
    arr = Arrangement.from_rows([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, -2, 3)], [0, 0, 0, 1, 2])
    h = _add(random.Random(2), arr)
    a = induced_arrangement(arr, h)
    base, dirs = chart(h)
    other_dirs = (tuple(x + y for x, y in zip(dirs[0], dirs[1])), tuple(-x for x in dirs[1]))
    other_base = tuple(b + d for b, d in zip(base, dirs[0]))
    b = induced_arrangement(arr, h, other_base, other_dirs)
    assert betweenness_table(a) == betweenness_table(b)


def test_not_a_chart():
    h = add_at_infinity(TRIANGLE, (2, 1))
    with pytest.raises(ValueError):
        induced_arrangement(TRIANGLE, h, (0, 0), ((1, -2),))


@settings(max_examples=20)
@given(st.integers(2, 3), st.integers(0, 4), st.integers(0, 2**32 - 1))
def test_built_arrangements_found(m, extra, seed):
    rng = random.Random(seed)
    arr = random_arrangement(rng, m, m)
    for _ in range(extra):
        arr = arr.appended(_add(rng, arr))
    order = is_infinity_arrangement(arr)
    assert order is not None and is_build_order(arr, order)


@settings(max_examples=20)
@given(arrangements(n_max=4))
def test_small_always_infinity(arr):
    if arr.n <= arr.m + 1:
        assert is_infinity_arrangement(arr) is not None


@settings(max_examples=30)
@given(arrangements(m=2, n_min=4, n_max=5))
def test_search_matches_bruteforce(arr):
    orders = brute_force_infinity_orders(arr)
    found = is_infinity_arrangement(arr)
    assert (found is None) == (not orders)
    if found is not None:
        assert found in orders


def test_triangle_with_cutting_line():
    arr = Arrangement.from_rows([(1, 0), (0, 1), (1, 1), (1, -1)], [0, 0, 4, 1])
    found = is_infinity_arrangement(arr)
    orders = brute_force_infinity_orders(arr)
    assert (found is None) == (not orders)


def test_build_by_infinity():
    arr = build_by_infinity(TRIANGLE, [(2, 1), (1, -3)])
    assert arr.n == 5
    assert is_build_order(arr, (1, 2, 3, 4, 5))
