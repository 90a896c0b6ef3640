"""Torsor validation, descent to the surface, and count agreement."""

import io
from math import gcd

import numpy as np
import pytest

from dp4jigsaw import surface as S
from dp4jigsaw import torsor as T
from dp4jigsaw.errors import (EquationViolated, NonpositiveBound,
                              NonUnitMiddle)

mk = S.ProjectivePoint.make


class TestValidate:
    def test_accepts_examples(self):
        T.validate((1, 1, 1, 1, 1, 1, 1, 0, -1))
        T.validate((1, 1, 1, 1, 1, 1, 1, -2, 1))

    def test_equation_violated(self):
        with pytest.raises(EquationViolated):
            T.validate((1, 1, 1, 1, 1, 1, 1, 1, 1))

    def test_non_unit_middle(self):
        with pytest.raises(NonUnitMiddle):
            T.validate((1, 1, 2, 1, 1, 1, 1, 0, -1))

    def test_exhaustive_small_box_coprimality(self):
        """The equation forces the pairwise conditions; validate never trips."""
        pts = T.enumerate_valid(8)
        assert pts  # plenty of solutions in the box
        for pt in pts:
            a = pt.a
            assert gcd(a[0] * a[8], a[1] * a[7]) == 1
            assert gcd(a[0], a[1]) == 1
            assert gcd(a[0], a[7]) == 1
            assert gcd(a[1], a[8]) == 1


class TestDescent:
    def test_map_example_1(self):
        pt = T.map_to_surface(T.validate((1, 1, 1, 1, 1, 1, 1, 0, -1)))
        assert pt == mk((0, 1, 1, -1, 0))

    def test_map_example_2(self):
        pt = T.map_to_surface(T.validate((1, 1, 1, 1, 1, 1, 1, -2, 1)))
        assert pt == mk((-2, 1, 1, 1, -2))
        assert S.is_integral(pt) and S.height(pt) == 2

    def test_map_example_3(self):
        # substitution gives x1 = a1^2 a2^2 a3^2 a4 a6^3 = 4 here
        t = T.validate((1, 2, 1, 1, 1, 1, 1, -1, 1))
        pt = T.map_to_surface(t)
        assert pt == mk((-2, 4, 2, 1, -1))
        assert S.on_surface(pt)
        assert T.lifted_height(t) == S.height(pt) == 2

    def test_lifted_heights(self):
        assert T.lifted_height(T.validate((1, 1, 1, 1, 1, 1, 1, 0, -1))) == 1
        assert T.lifted_height(T.validate((1, 1, 1, 1, 1, 1, 1, -2, 1))) == 2
        assert T.lifted_height(T.validate((1, 1, 1, 1, 1, -1, 1, 0, -1))) == 1

    def test_exhaustive_small_box_descent(self):
        for pt in T.enumerate_valid(8):
            a = pt.a
            image = T.map_to_surface(pt)
            assert S.on_surface(image)
            assert T.lifted_height(pt) == S.height(image)
            if a[0] != 0 and a[1] != 0:
                assert S.on_lines(image) == set()
                assert S.is_integral(image)


class TestCounts:
    def test_count_at_one(self):
        assert T.torsor_count(1).count == 4

    def test_nonpositive(self):
        with pytest.raises(NonpositiveBound):
            T.torsor_count(0)

    def test_fast_equals_naive_to_300(self):
        for b in (1, 2, 3, 7, 20, 55, 137, 300):
            assert T.torsor_count(b, "fast").count == T.torsor_count(b, "naive").count

    def test_fast_equals_direct_to_300(self):
        lifted = T.torsor_height_counts(300)
        direct = S.direct_height_counts(300)
        assert (lifted == direct).all()

    def test_histogram_matches_pointwise_counts(self):
        hist = T.torsor_height_counts(50)
        for b in (1, 10, 37, 50):
            assert hist[b] == T.torsor_count(b, "fast").count

    def test_histogram_naive_matches_fast(self):
        assert (T.torsor_height_counts(120, "naive")
                == T.torsor_height_counts(120, "fast")).all()

    def test_naive_equals_fast_for_all_b_to_1e4(self):
        assert (T.torsor_height_counts(10 ** 4, "naive")
                == T.torsor_height_counts(10 ** 4, "fast")).all()


class TestNormalizedPoints:
    def test_enumeration_matches_counts(self):
        pts = T.enumerate_normalized(40)
        assert len(pts) == 2 * T.torsor_count(40).count

    def test_normalized_form(self):
        for norm in T.enumerate_normalized(15):
            a = norm.point.a
            assert a[0] >= 1 and a[1] >= 1
            assert a[2] == a[3] == a[4] == 1
            assert a[5] in (1, -1) and a[6] in (1, -1)

    def test_fiber_sizes_are_exactly_two(self):
        fibers = T.fibers_over_points(30)
        assert len(fibers) == S.direct_count(30).count
        assert {len(v) for v in fibers.values()} == {2}

    def test_fibers_cover_direct_points(self):
        fibers = T.fibers_over_points(25)
        assert set(fibers) == set(S.direct_points(25))

    def test_tuple_stream(self):
        buf = io.StringIO()
        T.write_tuple_stream(T.enumerate_normalized(2), buf)
        lines = buf.getvalue().strip().splitlines()
        assert lines and all(len(line.split(",")) == 9 for line in lines)
        for line in lines:
            T.validate(tuple(int(x) for x in line.split(",")))
