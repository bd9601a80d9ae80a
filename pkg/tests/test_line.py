from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from arrowspace import (
    Arrow,
    DegenerateArrow,
    DegenerateBetween,
    DegenerateLine,
    DimensionMismatch,
    Line,
    NotCollinear,
    NotOnLine,
    between,
    contains,
    line_eq,
    line_through,
    parallel_on_line,
    point_at,
    related,
    scalar_mul,
)

from conftest import A, P, rationals, same_dim


def x_axis():
    return line_through(P(0, 0), P(2, 0))


class TestConstruction:
    def test_coincident(self):
        with pytest.raises(DegenerateLine):
            line_through(P(1, 1), P(1, 1))

    def test_generator_must_start_at_base(self):
        with pytest.raises(DegenerateLine):
            Line(P(0, 0), A((1, 0), (2, 0)))

    def test_immutable(self):
        with pytest.raises(AttributeError):
            x_axis().base = P(0, 0)

    def test_point_at(self):
        assert point_at(x_axis(), Fraction(3, 2)) == P(3, 0)


class TestContains:
    def test_on_line(self):
        assert contains(x_axis(), P(5, 0)) == Fraction(5, 2)

    def test_off_line(self):
        assert contains(x_axis(), P(1, 1)) is None

    def test_dimension(self):
        with pytest.raises(DimensionMismatch):
            contains(x_axis(), P(1))

    def test_worked_example(self):
        # A=(1,2), B=(4,-1): M at parameter 7/3, L at -2
        l = line_through(P(1, 2), P(4, -1))
        assert point_at(l, Fraction(7, 3)) == P(8, -5)
        assert point_at(l, -2) == P(-5, 8)
        assert contains(l, P(8, -5)) == Fraction(7, 3)

    @given(same_dim("nd_arrow"), rationals)
    def test_parameter_round_trip(self, a, t):
        (a,) = a
        l = Line(a.tail, a)
        assert contains(l, point_at(l, t)) == t


class TestLineEq:
    @given(same_dim("nd_arrow"), rationals, rationals)
    def test_any_two_points_define_it(self, a, s, t):
        (a,) = a
        assume(s != t)
        l = Line(a.tail, a)
        assert line_eq(l, line_through(point_at(l, s), point_at(l, t)))

    def test_different_lines(self):
        assert not line_eq(x_axis(), line_through(P(0, 1), P(1, 1)))

    def test_structural_vs_set_equality(self):
        other = line_through(P(7, 0), P(-1, 0))
        assert line_eq(x_axis(), other) and x_axis() != other


class TestBetween:
    def test_middle(self):
        assert between(P(0, 0), P(1, 0), P(2, 0))

    def test_outside(self):
        assert not between(P(0, 0), P(2, 0), P(1, 0))

    def test_not_collinear(self):
        with pytest.raises(NotCollinear):
            between(P(0, 0), P(1, 1), P(2, 0))

    def test_not_distinct(self):
        with pytest.raises(DegenerateBetween):
            between(P(0, 0), P(0, 0), P(2, 0))

    @given(same_dim("nd_arrow"), st.lists(rationals, min_size=3, max_size=3, unique=True))
    def test_exactly_one_between(self, a, ts):
        (a,) = a
        l = Line(a.tail, a)
        x, y, z = (point_at(l, t) for t in ts)
        flags = [between(y, x, z), between(x, y, z), between(x, z, y)]
        assert flags.count(True) == 1
        middle = sorted(ts)[1]
        assert flags[ts.index(middle)]


class TestParallelOnLine:
    def test_example(self):
        k, kp = parallel_on_line(x_axis(), A((0, 0), (1, 0)), P(3, 0))
        assert (k, kp) == (P(4, 0), P(2, 0))

    def test_degenerate(self):
        with pytest.raises(DegenerateArrow):
            parallel_on_line(x_axis(), A((1, 0), (1, 0)), P(3, 0))

    def test_off_line(self):
        with pytest.raises(NotOnLine):
            parallel_on_line(x_axis(), A((0, 0), (1, 0)), P(3, 1))

    @given(same_dim("nd_arrow"), rationals, rationals, rationals)
    def test_related(self, a, s, t, u):
        (a,) = a
        l = Line(a.tail, a)
        assume(s != t)
        ab = Arrow(point_at(l, s), point_at(l, t))
        p = point_at(l, u)
        k, kp = parallel_on_line(l, ab, p)
        assert related(Arrow(p, k), ab) and related(Arrow(kp, p), ab)
        assert contains(l, k) is not None and contains(l, kp) is not None

    @given(same_dim("nd_arrow"), rationals)
    def test_scalar_heads_stay_on_line(self, a, t):
        (a,) = a
        assert contains(Line(a.tail, a), scalar_mul(t, a).head) == t
