from fractions import Fraction

import pytest
from hypothesis import given

from arrowspace import (
    Arrow,
    DiagonalWeighted,
    DimensionMismatch,
    Point,
    SignFlipped,
    add_arrows,
    as_rational,
    format_rational,
    measure_sq,
    negate,
    parse_rational,
    point_eq,
    pre_inner,
)
from arrowspace.errors import ArrowSpaceError

from conftest import A, P, same_dim


class TestRational:
    def test_canonical_form(self):
        q = as_rational("2/4")
        assert (q.numerator, q.denominator) == (1, 2)

    def test_negative_denominator_normalized(self):
        q = as_rational(Fraction(3, -6))
        assert (q.numerator, q.denominator) == (-1, 2)

    def test_float_rejected(self):
        with pytest.raises(TypeError):
            as_rational(0.5)

    @pytest.mark.parametrize("text,expected", [
        ("0", Fraction(0)), ("-3", Fraction(-3)), ("1/2", Fraction(1, 2)),
        ("-6/4", Fraction(-3, 2)), ("10/5", Fraction(2)),
    ])
    def test_parse(self, text, expected):
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("text", ["", "1.5", "1/0", "+1", "1/-2", "a", "1 /2", "--1"])
    def test_parse_rejects(self, text):
        with pytest.raises(ArrowSpaceError):
            parse_rational(text)

    @pytest.mark.parametrize("q,text", [
        (Fraction(3), "3"), (Fraction(-1, 2), "-1/2"), (Fraction(0), "0"), (Fraction(10, 4), "5/2"),
    ])
    def test_format(self, q, text):
        assert format_rational(q) == text


class TestPointEq:
    def test_identity(self):
        assert point_eq(P(0, 0), P(0, 0))

    def test_last_coordinate_differs(self):
        assert not point_eq(P(0, 0), P(0, 1))

    def test_canonical_form_equality(self):
        assert point_eq(Point([Fraction(1, 2), "2/4"]), Point(["1/2", Fraction(1, 2)]))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            point_eq(P(0), P(0, 0))

    def test_immutable(self):
        p = P(1, 2)
        with pytest.raises(AttributeError):
            p.coords = ()

    def test_arrow_needs_one_space(self):
        with pytest.raises(DimensionMismatch):
            Arrow(P(0), P(0, 0))


class TestPreInner:
    def test_degenerate_is_zero(self):
        assert pre_inner(A((3, -1), (3, -1)), A((1, 2), (7, 5))) == 0

    def test_dot_product_example(self):
        assert pre_inner(A((0, 0), (1, 2)), A((0, 0), (3, 1))) == 5

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            pre_inner(A((0,), (1,)), A((0, 0), (1, 1)))

    @given(same_dim("arrow", "arrow"))
    def test_symmetry(self, ab):
        a, b = ab
        assert pre_inner(a, b) == pre_inner(b, a)

    @given(same_dim("arrow", "arrow"))
    def test_matches_oracle(self, ab):
        a, b = ab
        d = [h - t for t, h in zip(a.tail, a.head)]
        e = [h - t for t, h in zip(b.tail, b.head)]
        assert pre_inner(a, b) == sum(x * y for x, y in zip(d, e))

    @given(same_dim("point", "point", "point", "arrow"))
    def test_addition_linearity(self, pts):
        a, b, c, m = pts
        ac = add_arrows(Arrow(a, b), Arrow(b, c))
        assert pre_inner(ac, m) == pre_inner(Arrow(a, b), m) + pre_inner(Arrow(b, c), m)

    @given(same_dim("point", "point", "point", "point", "point", "point"))
    def test_bilinear_composite(self, pts):
        a, b, c, l, m, r = pts
        ab, bc, lm, mr = Arrow(a, b), Arrow(b, c), Arrow(l, m), Arrow(m, r)
        lhs = pre_inner(Arrow(a, c), Arrow(l, r))
        assert lhs == (pre_inner(ab, lm) + pre_inner(ab, mr)
                       + pre_inner(bc, lm) + pre_inner(bc, mr))


class TestMeasure:
    def test_degenerate(self):
        assert measure_sq(A((4, 4), (4, 4))) == 0

    def test_three_four_five(self):
        assert measure_sq(A((0, 0), (3, 4))) == 25

    @given(same_dim("arrow"))
    def test_positive_definite(self, a):
        (a,) = a
        m = measure_sq(a)
        assert m >= 0
        assert (m == 0) == (a.tail == a.head)

    @given(same_dim("arrow"))
    def test_negation_invariant(self, a):
        (a,) = a
        assert measure_sq(negate(a)) == measure_sq(a)


class TestNegate:
    def test_swaps(self):
        assert negate(A((0, 0), (1, 0))) == A((1, 0), (0, 0))

    @given(same_dim("arrow"))
    def test_involution(self, a):
        (a,) = a
        assert negate(negate(a)) == a

    @given(same_dim("arrow", "arrow"))
    def test_negation_rule(self, ab):
        a, b = ab
        assert pre_inner(negate(a), b) == -pre_inner(a, b) == pre_inner(a, negate(b))


class TestModels:
    def test_weighted(self):
        model = DiagonalWeighted([2, Fraction(1, 3)])
        assert model.pre_inner(A((0, 0), (1, 3)), A((0, 0), (2, 3))) == 2 * 2 + 3

    def test_weighted_rejects_nonpositive(self):
        with pytest.raises(ArrowSpaceError):
            DiagonalWeighted([1, 0])

    def test_sign_flipped_breaks_positivity(self):
        assert measure_sq(A((0, 0), (1, 0)), SignFlipped()) == -1
