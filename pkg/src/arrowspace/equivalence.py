"""The relation "same length and same direction" on arrows.

Two arrows are related when both are degenerate, or when they have equal
squared measure and their pre-inner product equals that squared measure.
This is the exact form of "normalized product is 1" once the square roots
are cleared.
"""

from typing import NamedTuple

from .core import EUCLIDEAN, Arrow, displacement, is_degenerate, translate, zero_point
from .errors import DimensionMismatch, PreconditionViolated

__all__ = [
    "TransportResult",
    "canonical_rep",
    "check_axiom4",
    "parallel_transport",
    "related",
]


class TransportResult(NamedTuple):
    tail_anchored: Arrow  # PK
    head_anchored: Arrow  # K'P


def related(a, b, model=EUCLIDEAN):
    if a.dim != b.dim:
        raise DimensionMismatch("dimension %d != %d" % (a.dim, b.dim))
    if is_degenerate(a) and is_degenerate(b):
        return True
    ma = model.measure_sq(a)
    return ma == model.measure_sq(b) and model.pre_inner(a, b) == ma


def parallel_transport(a, p):
    """Copies of ``a`` starting at ``p`` and ending at ``p``.

    Uses ``K = P + (head - tail)`` and ``K' = P - (head - tail)``. This is
    valid for every model that depends only on displacements. A degenerate
    ``a`` gives ``(PP, PP)``.
    """
    if a.dim != p.dim:
        raise DimensionMismatch("dimension %d != %d" % (a.dim, p.dim))
    d = displacement(a)
    return TransportResult(
        Arrow(p, translate(p, d)),
        Arrow(translate(p, d, -1), p),
    )


def check_axiom4(a, b, c, d, model=EUCLIDEAN):
    """Given ``a ~ b`` and ``c ~ d``, report whether ``<a,c> == <b,d>``."""
    if not related(a, b, model):
        raise PreconditionViolated("first pair is not related")
    if not related(c, d, model):
        raise PreconditionViolated("second pair is not related")
    return model.pre_inner(a, c) == model.pre_inner(b, d)


def canonical_rep(a):
    """The arrow related to ``a`` whose tail is the origin."""
    origin = zero_point(a.dim)
    return Arrow(origin, translate(origin, displacement(a)))
