"""Exact scalars, points, arrows and the pre-inner-product models.

Scalars are ``fractions.Fraction`` throughout; floats are refused on input so
that every predicate in the package stays decidable.
"""

import re
from abc import ABC, abstractmethod
from fractions import Fraction
from numbers import Rational

from .errors import ArrowSpaceError, DimensionMismatch

__all__ = [
    "Arrow",
    "DiagonalWeighted",
    "EUCLIDEAN",
    "EuclideanRational",
    "MetricModel",
    "Point",
    "SignFlipped",
    "as_rational",
    "displacement",
    "format_rational",
    "is_degenerate",
    "measure_sq",
    "negate",
    "parse_rational",
    "point_eq",
    "pre_inner",
    "translate",
    "zero_point",
]

_RATIONAL_RE = re.compile(r"-?[0-9]+(?:/[0-9]+)?")


def as_rational(value):
    """Coerce ``value`` to a Fraction.

    Accepts ints, Fractions (or any ``numbers.Rational``) and strings that
    ``Fraction`` understands. Floats are rejected: a float that looks like
    ``0.1`` is not the rational 1/10.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass an int, Fraction or 'p/q' string")
    if isinstance(value, (Rational, str)):
        return Fraction(value)
    raise TypeError("cannot interpret %r as a rational" % (value,))


def parse_rational(text):
    """Parse the strict literal form ``-?digits(/digits)?``."""
    if not _RATIONAL_RE.fullmatch(text):
        raise ArrowSpaceError("malformed rational literal %r" % text)
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ArrowSpaceError("zero denominator in %r" % text)
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q):
    """Canonical ``p/q`` text, integers without ``/1``."""
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


class Point:
    """A point of Q^n. Equality is coordinate-wise."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(as_rational(c) for c in coords)
        if not coords:
            raise ArrowSpaceError("a point needs at least one coordinate")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def _from_fractions(cls, coords):
        # trusted constructor for internal arithmetic; skips coercion
        self = object.__new__(cls)
        object.__setattr__(self, "coords", coords)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Point is immutable")

    @property
    def dim(self):
        return len(self.coords)

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return len(self.coords)

    def __repr__(self):
        return "Point((%s))" % ", ".join(format_rational(c) for c in self.coords)

    def __str__(self):
        return "(%s)" % ", ".join(format_rational(c) for c in self.coords)


def zero_point(dim):
    return Point._from_fractions((Fraction(0),) * dim)


def _check_dims(*items):
    dim = items[0].dim
    for item in items[1:]:
        if item.dim != dim:
            raise DimensionMismatch("dimension %d != %d" % (dim, item.dim))
    return dim


def point_eq(a, b):
    """Point equality; raises DimensionMismatch for points of different spaces."""
    _check_dims(a, b)
    return a.coords == b.coords


class Arrow:
    """An ordered pair (tail, head) of points of one space."""

    __slots__ = ("tail", "head")

    def __init__(self, tail, head):
        if not isinstance(tail, Point):
            tail = Point(tail)
        if not isinstance(head, Point):
            head = Point(head)
        _check_dims(tail, head)
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "head", head)

    def __setattr__(self, name, value):
        raise AttributeError("Arrow is immutable")

    @property
    def dim(self):
        return self.tail.dim

    def __eq__(self, other):
        if not isinstance(other, Arrow):
            return NotImplemented
        return self.tail == other.tail and self.head == other.head

    def __hash__(self):
        return hash((self.tail, self.head))

    def __repr__(self):
        return "Arrow(%r, %r)" % (self.tail, self.head)

    def __str__(self):
        return "%s -> %s" % (self.tail, self.head)


def displacement(a):
    """Coordinates of head minus tail."""
    return tuple(h - t for t, h in zip(a.tail.coords, a.head.coords))


def translate(p, disp, scale=1):
    """The point ``p + scale * disp``."""
    if len(disp) != p.dim:
        raise DimensionMismatch("dimension %d != %d" % (p.dim, len(disp)))
    if scale == 1:
        return Point._from_fractions(tuple(c + d for c, d in zip(p.coords, disp)))
    return Point._from_fractions(tuple(c + scale * d for c, d in zip(p.coords, disp)))


def is_degenerate(a):
    return a.tail.coords == a.head.coords


def negate(a):
    """``-AB = BA``: swap tail and head."""
    return Arrow(a.head, a.tail)


class MetricModel(ABC):
    """A pre-inner product on arrows.

    Implementations must be symmetric, positive definite and bilinear over
    head-to-tail decompositions, and compatible with scalar multiplication.
    The harness module checks all of this for a given instance; a model that
    has not passed ``run_axiom_suite`` should not be trusted by the rest of
    the package.
    """

    @abstractmethod
    def pre_inner(self, a, b):
        """Return the pre-inner product of arrows ``a`` and ``b``."""

    def measure_sq(self, a):
        return self.pre_inner(a, a)


class EuclideanRational(MetricModel):
    """Dot product of displacements on Q^n."""

    def pre_inner(self, a, b):
        _check_dims(a, b)
        at, ah = a.tail.coords, a.head.coords
        bt, bh = b.tail.coords, b.head.coords
        return sum(
            ((ah[i] - at[i]) * (bh[i] - bt[i]) for i in range(len(at))), Fraction(0)
        )

    def __repr__(self):
        return "EuclideanRational()"


class DiagonalWeighted(MetricModel):
    """Weighted dot product ``sum w_i d_i e_i``; weights must be positive."""

    def __init__(self, weights):
        self.weights = tuple(as_rational(w) for w in weights)
        if any(w <= 0 for w in self.weights):
            raise ArrowSpaceError("weights must be strictly positive")

    def pre_inner(self, a, b):
        _check_dims(a, b)
        if a.dim != len(self.weights):
            raise DimensionMismatch(
                "model has %d weights, arrows have dimension %d"
                % (len(self.weights), a.dim)
            )
        return sum(
            (w * d * e for w, d, e in zip(self.weights, displacement(a), displacement(b))),
            Fraction(0),
        )

    def __repr__(self):
        return "DiagonalWeighted(%s)" % ", ".join(format_rational(w) for w in self.weights)


class SignFlipped(MetricModel):
    """Negated Euclidean product. Deliberately invalid; used for mutation tests."""

    def pre_inner(self, a, b):
        return -EUCLIDEAN.pre_inner(a, b)

    def __repr__(self):
        return "SignFlipped()"


EUCLIDEAN = EuclideanRational()


def pre_inner(a, b, model=EUCLIDEAN):
    return model.pre_inner(a, b)


def measure_sq(a, model=EUCLIDEAN):
    """Squared measure (length) of an arrow.

    The measure itself needs a square root and is never required by an exact
    predicate, so only its square is exposed.
    """
    return model.measure_sq(a)
