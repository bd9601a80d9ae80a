"""Partial arrow addition, arrow scalar multiplication and direction tests.

Arrow addition is only defined head-to-tail, and it is not commutative.
Several identities that hold for vectors fail for arrows. Those failures are
part of the contract here: the operations raise UndefinedAddition instead of
quietly falling back to vector arithmetic.
"""

import enum

from .core import (
    EUCLIDEAN,
    Arrow,
    as_rational,
    displacement,
    is_degenerate,
    translate,
)
from .errors import UndefinedAddition

__all__ = [
    "DirectionClass",
    "add_arrows",
    "checked_mixed_sum",
    "direction_relation",
    "distributed_sum",
    "scalar_mul",
    "split_scalar_sum",
]


class DirectionClass(enum.Enum):
    SAME = "same"
    OPPOSITE = "opposite"
    PERPENDICULAR = "perpendicular"
    OBLIQUE = "oblique"
    DEGENERATE = "degenerate"


def add_arrows(a, b):
    """``AB + BC = AC``. Raises UndefinedAddition unless ``a.head == b.tail``."""
    if a.head != b.tail:
        raise UndefinedAddition(a, b)
    return Arrow(a.tail, b.head)


def scalar_mul(t, a):
    """The arrow ``(t)AB``.

    Keeps the tail ``A`` and returns the head ``D = A + t (B - A)``. When
    ``t == 0`` or ``A == B`` the result is ``AA``. The squared measure of
    ``AD`` is ``t**2`` times that of ``AB``, and ``<AB, AD>`` has the sign
    of ``t``.
    """
    t = as_rational(t)
    if t == 0 or is_degenerate(a):
        return Arrow(a.tail, a.tail)
    return Arrow(a.tail, translate(a.tail, displacement(a), t))


def direction_relation(a, b, model=EUCLIDEAN):
    """Classify the pair as same/opposite/perpendicular/oblique/degenerate.

    Uses squared measures: same direction means ``<a,b> > 0`` and
    ``<a,b>**2 == |a|**2 |b|**2``. A zero product is PERPENDICULAR even if an
    arrow is degenerate. DEGENERATE covers a degenerate arrow whose product
    is nonzero, which a valid model never produces.
    """
    ip = model.pre_inner(a, b)
    if ip == 0:
        return DirectionClass.PERPENDICULAR
    if is_degenerate(a) or is_degenerate(b):
        return DirectionClass.DEGENERATE
    if ip * ip == model.measure_sq(a) * model.measure_sq(b):
        return DirectionClass.SAME if ip > 0 else DirectionClass.OPPOSITE
    return DirectionClass.OBLIQUE


def checked_mixed_sum(s, a, b, distribute=False):
    """``(s)(a + b)``, or ``(s)a + (s)b`` with ``distribute=True``.

    The first form exists whenever ``a + b`` does. The distributed form is
    undefined for distinct points and ``s != 1``, and in that case this
    raises UndefinedAddition.
    """
    if distribute:
        return distributed_sum(s, a, b)
    return scalar_mul(s, add_arrows(a, b))


def distributed_sum(s, a, b):
    return add_arrows(scalar_mul(s, a), scalar_mul(s, b))


def split_scalar_sum(s, t, a):
    """``(s)a + (t)a``. Defined only if ``(s)a`` ends where ``(t)a`` starts."""
    return add_arrows(scalar_mul(s, a), scalar_mul(t, a))
