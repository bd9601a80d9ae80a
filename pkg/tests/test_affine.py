from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from arrowspace import (
    Arrow,
    BarycenterSpec,
    DegenerateLine,
    DimensionMismatch,
    DuplicatePoints,
    Point,
    WeightSumNotOne,
    barycenter,
    barycenter_direct,
    cauchy_schwarz,
    displacements_parallel,
    measure_sq,
    pre_inner,
    project_point,
    scalar_mul,
)

from conftest import A, P, dims, rationals, same_dim


class TestProjection:
    def test_example(self):
        res = project_point(P(0, 0), P(2, 0), P(1, 3))
        assert res == (P(1, 0), Fraction(1, 2), 9)

    def test_brute_force_minimum(self):
        # grid search over the line agrees with the closed form
        o, g, p = P(0, 0), P(2, 0), P(1, 3)
        best = min(
            (measure_sq(Arrow(scalar_mul(Fraction(k, 8), Arrow(o, g)).head, p)), Fraction(k, 8))
            for k in range(-40, 41)
        )
        assert best == (9, Fraction(1, 2))

    def test_on_line_is_own_foot(self):
        res = project_point(P(0, 0), P(2, 2), P(5, 5))
        assert res.foot == P(5, 5) and res.residual_sq == 0

    def test_degenerate(self):
        with pytest.raises(DegenerateLine):
            project_point(P(1, 1), P(1, 1), P(0, 0))

    def test_dimension(self):
        with pytest.raises(DimensionMismatch):
            project_point(P(0), P(1), P(0, 0))

    @given(same_dim("nd_arrow", "point"), rationals)
    def test_orthogonal_and_optimal(self, objs, t):
        og, p = objs
        o, g = og.tail, og.head
        res = project_point(o, g, p)
        assert pre_inner(Arrow(res.foot, p), og) == 0
        x = scalar_mul(t, og).head
        assume(x != res.foot)
        assert measure_sq(Arrow(x, p)) > res.residual_sq


class TestCauchySchwarz:
    def test_tight(self):
        assert cauchy_schwarz(A((0, 0), (1, 2)), A((3, 3), (1, -1))).tight

    def test_loose(self):
        cs = cauchy_schwarz(A((0, 0), (1, 2)), A((0, 0), (3, 1)))
        assert cs == (25, 50, False)

    @given(same_dim("arrow", "arrow"))
    def test_inequality(self, ab):
        a, b = ab
        cs = cauchy_schwarz(a, b)
        assert cs.lhs <= cs.rhs
        assert cs.tight == displacements_parallel(a, b)


@st.composite
def barycenter_specs(draw):
    dim = draw(dims)
    n = draw(st.integers(min_value=1, max_value=5))
    coords = st.tuples(*[rationals] * dim).map(Point)
    pts = draw(st.lists(coords, min_size=n, max_size=n, unique=True))
    ws = draw(st.lists(rationals, min_size=n - 1, max_size=n - 1))
    ws.append(1 - sum(ws, Fraction(0)))
    origin = draw(coords)
    return BarycenterSpec(pts, ws), origin


class TestBarycenter:
    def test_example(self):
        spec = BarycenterSpec([P(0, 0), P(2, 0), P(1, 3)], [Fraction(1, 3)] * 3)
        assert barycenter(spec, P(0, 0)) == P(1, 1)

    def test_two_points(self):
        spec = BarycenterSpec([P(0, 0), P(2, 4)], [Fraction(1, 2), Fraction(1, 2)])
        assert barycenter(spec, P(9, -9)) == P(1, 2)

    def test_affine_weights(self):
        spec = BarycenterSpec([P(0), P(1)], [-1, 2])
        assert not spec.is_convex()
        assert barycenter(spec, P(0)) == P(2)

    @pytest.mark.parametrize("points,weights,exc", [
        ([P(0), P(0)], ["1/2", "1/2"], DuplicatePoints),
        ([P(0), P(1)], ["1/2", "1/3"], WeightSumNotOne),
        ([P(0), P(1, 1)], ["1/2", "1/2"], DimensionMismatch),
        ([P(0), P(1)], ["1"], DimensionMismatch),
    ])
    def test_invalid(self, points, weights, exc):
        with pytest.raises(exc):
            BarycenterSpec(points, weights)

    @given(barycenter_specs(), st.tuples(*[rationals] * 4))
    def test_origin_independent(self, so, other):
        spec, origin = so
        second = Point(other[:spec.dim])
        assert barycenter(spec, origin) == barycenter(spec, second)
        assert barycenter(spec, origin) == barycenter_direct(spec, second)
