"""Lines as loci of scalar multiples, membership and betweenness."""

from .arrow_ops import scalar_mul
from .core import EUCLIDEAN, Arrow, displacement, is_degenerate
from .errors import (
    DegenerateArrow,
    DegenerateBetween,
    DegenerateLine,
    DimensionMismatch,
    NotCollinear,
    NotOnLine,
)

__all__ = [
    "Line",
    "between",
    "contains",
    "line_eq",
    "line_through",
    "parallel_on_line",
    "point_at",
]


class Line:
    """The set of heads of ``(t) gen`` for rational ``t``.

    ``gen`` must start at ``base`` and must not be degenerate.
    """

    __slots__ = ("base", "gen")

    def __init__(self, base, gen):
        if gen.tail != base:
            raise DegenerateLine("generator must start at the base point")
        if is_degenerate(gen):
            raise DegenerateLine("generator arrow is degenerate")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "gen", gen)

    def __setattr__(self, name, value):
        raise AttributeError("Line is immutable")

    @property
    def dim(self):
        return self.base.dim

    def __eq__(self, other):
        # structural equality; use line_eq for equality of point sets
        if not isinstance(other, Line):
            return NotImplemented
        return self.gen == other.gen

    def __hash__(self):
        return hash(self.gen)

    def __repr__(self):
        return "Line(%r, %r)" % (self.base, self.gen)


def line_through(a, b):
    if a == b:
        raise DegenerateLine("coincident points %s and %s" % (a, b))
    return Line(a, Arrow(a, b))


def point_at(l, t):
    """Head of ``(t) gen``."""
    return scalar_mul(t, l.gen).head


def contains(l, d):
    """Return the parameter ``t`` with ``base->d == (t) gen``, or None.

    Solved coordinate by coordinate from one nonzero generator component and
    cross-checked on all others.
    """
    if d.dim != l.dim:
        raise DimensionMismatch("dimension %d != %d" % (l.dim, d.dim))
    g = displacement(l.gen)
    e = tuple(x - y for x, y in zip(d.coords, l.base.coords))
    i = next(k for k, gk in enumerate(g) if gk != 0)
    t = e[i] / g[i]
    if all(ek == t * gk for ek, gk in zip(e, g)):
        return t
    return None


def line_eq(l1, l2):
    """True iff the two lines have the same point set."""
    if l1.dim != l2.dim:
        raise DimensionMismatch("dimension %d != %d" % (l1.dim, l2.dim))
    return contains(l2, l1.base) is not None and contains(l2, l1.gen.head) is not None


def between(a, b, c, model=EUCLIDEAN):
    """Whether ``b`` lies strictly between ``a`` and ``c``.

    The three points must be distinct and collinear. The test is
    ``<BA, BC> < 0`` and ``<BA, BC>**2 == |BA|**2 |BC|**2``.
    """
    if a == b or b == c or a == c:
        raise DegenerateBetween("betweenness needs three distinct points")
    if contains(line_through(a, c), b) is None:
        raise NotCollinear("%s, %s and %s are not on one line" % (a, b, c))
    ba, bc = Arrow(b, a), Arrow(b, c)
    ip = model.pre_inner(ba, bc)
    return ip < 0 and ip * ip == model.measure_sq(ba) * model.measure_sq(bc)


def parallel_on_line(l, ab, p):
    """Points ``K`` and ``K'`` on ``l`` with ``PK`` and ``K'P`` related to ``ab``.

    With ``AP = (t) AB``, ``AK = (t + 1) AB`` and ``AK' = (t - 1) AB``.
    """
    if is_degenerate(ab):
        raise DegenerateArrow("arrow %s is degenerate" % ab)
    for q in (ab.tail, ab.head, p):
        if contains(l, q) is None:
            raise NotOnLine("%s is not on the line" % (q,))
    t = contains(line_through(ab.tail, ab.head), p)
    k = scalar_mul(t + 1, ab).head
    k_prime = scalar_mul(t - 1, ab).head
    return k, k_prime

