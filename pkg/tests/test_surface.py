"""Surface membership, heights, direct counts, and mod-p densities."""

import io
import random
from fractions import Fraction as F

import pytest

from dp4jigsaw import surface as S
from dp4jigsaw.errors import (DegenerateCoordinates, NonpositiveBound,
                              NotOnSurface, NotPrime, OnBoundary)
from dp4jigsaw.gaussian import GaussInt

mk = S.ProjectivePoint.make


class TestOnSurface:
    def test_singular_point_q1(self):
        assert S.on_surface(mk((0, 1, 0, 0, 0)))

    def test_integral_point(self):
        assert S.on_surface(mk((0, -1, 1, 1, 0)))

    def test_off_surface(self):
        assert not S.on_surface(mk((1, 1, 1, 1, 1)))


class TestOnLines:
    def test_q2_lies_on_all_three_lines(self):
        # Q2 = (0:0:0:0:1) has x0 = x1 = x2 = x3 = 0, so every line
        # condition holds; both extra lines pass through Q2.
        assert S.on_lines(mk((0, 0, 0, 0, 1))) == {S.LINE_L, S.LINE_LP, S.LINE_LPP}

    def test_point_off_lines(self):
        assert S.on_lines(mk((0, -1, 1, 1, 0))) == set()

    def test_point_on_lprime(self):
        assert S.on_lines(mk((1, 0, 0, 0, 0))) == {S.LINE_LP}

    def test_not_on_surface_raises(self):
        with pytest.raises(NotOnSurface):
            S.on_lines(mk((1, 1, 1, 1, 1)))


class TestIntegrality:
    def test_integral(self):
        assert S.is_integral(mk((0, -1, 1, 1, 0)))

    def test_not_integral(self):
        assert not S.is_integral(mk((2, -2, 4, 6, 3)))

    def test_integral_negative_coords(self):
        assert S.is_integral(mk((-2, 1, 1, 1, -2)))

    def test_boundary_raises(self):
        with pytest.raises(OnBoundary):
            S.is_integral(mk((0, 1, 0, 0, 0)))


class TestHeight:
    def test_examples(self):
        assert S.height(mk((0, -1, 1, 1, 0))) == 1
        assert S.height(mk((2, -2, 4, 6, 3))) == 3
        assert S.height(mk((0, -2, 2, 2, 0))) == 1

    def test_scaling_invariance(self):
        rng = random.Random(77)
        base = (2, -2, 4, 6, 3)
        h = S.height(mk(base))
        for _ in range(20):
            k = rng.choice([x for x in range(-7, 8) if x])
            assert S.height(mk(tuple(k * c for c in base))) == h

    def test_degenerate(self):
        with pytest.raises(DegenerateCoordinates):
            S.height(mk((0, 1, 0, 0, 0)))


class TestDirectCounts:
    def test_count_at_one(self):
        assert S.direct_count(1).count == 4

    def test_count_below_one(self):
        assert S.direct_count(F(1, 2)).count == 0

    def test_monotone(self):
        counts = S.direct_height_counts(60)
        assert all(counts[i] <= counts[i + 1] for i in range(60))

    def test_methods_agree_to_60(self):
        hist_t = S.direct_height_counts(60, method="triple")
        hist_d = S.direct_height_counts(60, method="divisor")
        assert (hist_t == hist_d).all()

    def test_nonpositive_bound(self):
        with pytest.raises(NonpositiveBound):
            S.direct_count(0)
        with pytest.raises(NonpositiveBound):
            S.direct_count(-3)

    def test_enumerated_points_valid(self):
        # more than 10^4 points at this bound
        pts = S.direct_points(200)
        assert len(pts) == S.direct_count(200).count > 10 ** 4
        assert len(set(pts)) == len(pts)
        for pt in pts:
            assert S.on_surface(pt)
            assert S.on_lines(pt) == set()
            assert S.is_integral(pt)
            assert S.height(pt) <= 200

    def test_point_stream_format(self):
        buf = io.StringIO()
        S.write_point_stream(S.direct_points(1), buf)
        lines = buf.getvalue().strip().splitlines()
        assert len(lines) == 4
        for line in lines:
            coords, h = line.rsplit(",", 1)
            assert len(coords.split(":")) == 5
            assert F(h) >= 1


class TestGaussianCounts:
    def test_count_at_one(self):
        # the four rational points times extra unit images
        assert S.direct_count(1, ring=S.GAUSSIAN).count == 8

    def test_monotone_and_contains_rational_points(self):
        counts = S.direct_height_counts(10, ring=S.GAUSSIAN)
        rational = S.direct_height_counts(10)
        assert all(counts[i] <= counts[i + 1] for i in range(10))
        assert (counts >= rational).all()

    def test_points_valid(self):
        pts = S.direct_points(5, ring=S.GAUSSIAN)
        assert len(pts) == S.direct_count(5, ring=S.GAUSSIAN).count
        for pt in pts:
            assert S.on_surface(pt)
            assert S.on_lines(pt) == set()
            assert S.is_integral(pt)
            assert S.height(pt) <= 5

    def test_unit_scaling_gives_same_point(self):
        a = mk((GaussInt(0, 1), GaussInt(1, 1), GaussInt(2, 0),
                GaussInt(0, 0), GaussInt(1, 0)), ring=S.GAUSSIAN)
        b = mk((GaussInt(-1, 0), GaussInt(-1, 1), GaussInt(0, 2),
                GaussInt(0, 0), GaussInt(0, 1)), ring=S.GAUSSIAN)
        assert a == b


class TestModP:
    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_counts(self, p):
        assert S.count_mod_p(p) == p * p + p
        assert S.line_count_mod_p(p) == p + 1

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
    def test_x2_zero_cuts_out_the_lines(self, p):
        assert S.surface_x2_zero_is_lines(p)

    def test_not_prime(self):
        with pytest.raises(NotPrime):
            S.count_mod_p(6)
        with pytest.raises(NotPrime):
            S.prime_field(1)
