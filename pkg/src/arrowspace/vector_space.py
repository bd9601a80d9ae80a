"""Vectors as equivalence classes of arrows.

A vector is stored as the displacement of its class representative based at
the origin. Each operation also exists in its construction form: transport
representatives to a common point, then add the arrows head to tail. The
test suite checks that the two forms agree.
"""

from fractions import Fraction

from .arrow_ops import add_arrows, scalar_mul
from .core import (
    EUCLIDEAN,
    Arrow,
    as_rational,
    format_rational,
    translate,
    zero_point,
)
from .equivalence import canonical_rep, parallel_transport
from .errors import DimensionMismatch

__all__ = [
    "Vector",
    "representative",
    "to_vector",
    "vec_add",
    "vec_add_at",
    "vec_inner",
    "vec_neg",
    "vec_scalar_mul",
    "vec_scalar_mul_at",
    "zero_vector",
]


class Vector:
    __slots__ = ("displacement",)

    def __init__(self, displacement):
        disp = tuple(as_rational(c) for c in displacement)
        if not disp:
            raise ValueError("a vector needs at least one component")
        object.__setattr__(self, "displacement", disp)

    @classmethod
    def _from(cls, disp):
        # trusted constructor; disp is already a tuple of Fractions
        self = object.__new__(cls)
        object.__setattr__(self, "displacement", disp)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    @property
    def dim(self):
        return len(self.displacement)

    def is_zero(self):
        return not any(self.displacement)

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.displacement == other.displacement

    def __hash__(self):
        return hash(self.displacement)

    def __add__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return vec_add(self, other)

    def __neg__(self):
        return vec_neg(self)

    def __sub__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return vec_add(self, vec_neg(other))

    def __rmul__(self, t):
        return vec_scalar_mul(t, self)

    def __repr__(self):
        return "Vector((%s))" % ", ".join(format_rational(c) for c in self.displacement)

    def __str__(self):
        return "[%s]" % ", ".join(format_rational(c) for c in self.displacement)


def _check(u, v):
    if u.dim != v.dim:
        raise DimensionMismatch("dimension %d != %d" % (u.dim, v.dim))


def zero_vector(dim):
    return Vector((Fraction(0),) * dim)


def to_vector(a):
    """The class of arrow ``a``."""
    return Vector(canonical_rep(a).head.coords)


def representative(u, at=None):
    """The arrow of class ``u`` with tail ``at`` (the origin by default)."""
    tail = zero_point(u.dim) if at is None else at
    if tail.dim != u.dim:
        raise DimensionMismatch("dimension %d != %d" % (u.dim, tail.dim))
    return Arrow(tail, translate(tail, u.displacement))


def vec_add_at(u, v, p):
    """Add by transporting ``u`` to end at ``p`` and ``v`` to start at ``p``.

    ``[AB] + [CD] = [KP + PL] = [KL]``.
    """
    _check(u, v)
    kp = parallel_transport(representative(u), p).head_anchored
    pl = parallel_transport(representative(v), p).tail_anchored
    return to_vector(add_arrows(kp, pl))


def vec_add(u, v):
    _check(u, v)
    return Vector._from(tuple(x + y for x, y in zip(u.displacement, v.displacement)))


def vec_scalar_mul_at(t, u, p):
    """``t [AB] = [(t) AB]`` computed from the representative based at ``p``."""
    return to_vector(scalar_mul(t, representative(u, p)))


def vec_scalar_mul(t, u):
    t = as_rational(t)
    return Vector._from(tuple(t * x for x in u.displacement))


def vec_neg(u):
    return Vector._from(tuple(-x for x in u.displacement))


def vec_inner(u, v, model=EUCLIDEAN):
    """Pre-inner product of the origin-based representatives."""
    _check(u, v)
    return model.pre_inner(representative(u), representative(v))

