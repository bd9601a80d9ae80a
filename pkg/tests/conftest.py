import sys
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from arrowspace import Arrow, Point

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)
nonzero_rationals = rationals.filter(lambda q: q != 0)
dims = st.integers(min_value=1, max_value=4)


def points(dim):
    return st.tuples(*[rationals] * dim).map(Point)


def arrows(dim):
    return st.builds(Arrow, points(dim), points(dim))


def nondegenerate_arrows(dim):
    return arrows(dim).filter(lambda a: a.tail != a.head)


@st.composite
def same_dim(draw, *kinds):
    """Draw several objects of one random dimension.

    ``kinds`` is a sequence of 'point', 'arrow', 'nd_arrow'.
    """
    dim = draw(dims)
    makers = {"point": points, "arrow": arrows, "nd_arrow": nondegenerate_arrows}
    return tuple(draw(makers[k](dim)) for k in kinds)


def P(*coords):
    return Point([Fraction(c) for c in coords])


def A(tail, head):
    return Arrow(P(*tail), P(*head))


@pytest.fixture
def dot():
    """Independent dot product on plain coordinate tuples."""
    def _dot(u, v):
        return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))
    return _dot


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
