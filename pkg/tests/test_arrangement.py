from fractions import Fraction as F
from math import comb

import pytest
from hypothesis import given

from arrangeo.arrangement import (
    Arrangement, central_of_three, order_on_line, skeleton, validate_general_position, vertex_point, vertices,
)
from arrangeo.errors import GeneralPositionError, GeometryError

from strategies import arrangements

TRIANGLE = Arrangement.from_rows([(1, 0), (0, 1), (1, 1)], [0, 0, 1])


class TestValidation:
    def test_triangle_valid(self):
        assert validate_general_position(TRIANGLE)

    def test_parallel_lines(self):
        v = validate_general_position(Arrangement.from_rows([(1, 0), (1, 0)], [0, 1]))
        assert not v and v.witness == (1, 2)

    def test_concurrent_planes(self):
        arr = Arrangement.from_rows([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], [0, 0, 0, 0])
        v = validate_general_position(arr)
        assert not v and v.witness == (1, 2, 3, 4)

    @given(arrangements())
    def test_rescaling_invariant(self, arr):
        scaled = Arrangement(arr.m, tuple(h.scaled(F(-3, 2) if i % 2 else 5) for i, h in enumerate(arr.hyperplanes)))
        assert bool(validate_general_position(scaled)) == bool(validate_general_position(arr))


class TestSkeleton:
    def test_counts(self):
        assert len(skeleton(TRIANGLE, 2)) == 3
        arr = Arrangement.from_rows([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], [0, 0, 0, 1])
        flats = skeleton(arr, 1)
        assert len(flats) == 4 and all(f.dim == 2 for f in flats)

    @given(arrangements())
    def test_binomial(self, arr):
        for k in range(1, arr.m + 1):
            flats = skeleton(arr, k)
            assert len(flats) == comb(arr.n, k)
            for f in flats:
                assert f.dim == arr.m - k
                for i in f.subscripts:
                    assert arr[i].value(f.point) == 0
                    assert all(sum(a * d for a, d in zip(arr[i].a, dv)) == 0 for dv in f.directions)

    def test_bad_k(self):
        with pytest.raises(ValueError):
            skeleton(TRIANGLE, 3)


class TestVertices:
    def test_examples(self):
        assert vertex_point(TRIANGLE, (1, 2)) == (0, 0)
        assert vertex_point(TRIANGLE, (1, 3)) == (0, 1)
        assert vertex_point(TRIANGLE, (2, 3)) == (1, 0)
        assert len(vertices(TRIANGLE)) == 3

    def test_wrong_size(self):
        with pytest.raises(ValueError):
            vertex_point(TRIANGLE, (1,))

    def test_parallel(self):
        arr = Arrangement.from_rows([(1, 0), (2, 0)], [0, 1])
        with pytest.raises(GeneralPositionError):
            vertex_point(arr, (1, 2))


class TestCentral:
    def test_examples(self):
        assert central_of_three((0, 0), (1, 1), (2, 2)) == 1
        assert central_of_three((0, 1), (0, 5), (0, 2)) == 2

    def test_not_collinear(self):
        with pytest.raises(GeometryError):
            central_of_three((0, 0), (0, 1), (1, 0))

    def test_coincident(self):
        with pytest.raises(GeometryError):
            central_of_three((0, 0), (0, 0), (1, 0))

    @given(arrangements(m=2, n_min=4))
    def test_permutation_and_affine_invariance(self, arr):
        pts = [vertex_point(arr, (1, j)) for j in (2, 3, 4)]
        mid = pts[central_of_three(*pts)]
        assert pts[::-1][central_of_three(*pts[::-1])] == mid
        moved = [(3 * x - y + 1, x + 2 * y - 7) for x, y in pts]
        assert central_of_three(*moved) == central_of_three(*pts)


class TestOrderOnLine:
    def test_example(self):
        arr = Arrangement.from_rows([(1, 0), (0, 1), (0, 1), (1, 1)], [0, 0, 1, 3])
        assert order_on_line(arr, (1,)) == [(1, 2), (1, 3), (1, 4)]

    def test_single_vertex(self):
        arr = Arrangement.from_rows([(1, 0), (0, 1)], [0, 0])
        assert order_on_line(arr, (1,)) == [(1, 2)]

    def test_wrong_size(self):
        with pytest.raises(ValueError):
            order_on_line(TRIANGLE, (1, 2))

    @given(arrangements())
    def test_vertices_lie_on_line_in_order(self, arr):
        from itertools import combinations
        from arrangeo.arrangement import line_direction

        for S in combinations(range(1, arr.n + 1), arr.m - 1):
            order = order_on_line(arr, S)
            assert len(order) == arr.n - arr.m + 1
            d = line_direction(arr, S)
            params = [sum(x * y for x, y in zip(vertex_point(arr, V), d)) for V in order]
            assert params == sorted(params)
            assert all(set(S) <= set(V) for V in order)


def test_arrangement_helpers():
    assert TRIANGLE.n == 3 and TRIANGLE[3].b == 1
    assert TRIANGLE.without(3).n == 2
    assert TRIANGLE.permuted((3, 1, 2))[3] == TRIANGLE[1]
    assert TRIANGLE.with_offsets((1, 2, 3)).offsets == (1, 2, 3)
