"""Projection onto a line, Cauchy-Schwarz, and barycenters."""

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .arrow_ops import scalar_mul
from .core import EUCLIDEAN, Arrow, Point, as_rational, displacement, translate
from .errors import (
    DegenerateLine,
    DimensionMismatch,
    DuplicatePoints,
    WeightSumNotOne,
)
from .vector_space import to_vector, vec_add_at

__all__ = [
    "BarycenterSpec",
    "CauchySchwarz",
    "ProjectionResult",
    "barycenter",
    "barycenter_direct",
    "cauchy_schwarz",
    "displacements_parallel",
    "project_point",
]


class ProjectionResult(NamedTuple):
    foot: Point
    parameter: Fraction
    residual_sq: Fraction


class CauchySchwarz(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    tight: bool


def project_point(o, g, p, model=EUCLIDEAN):
    """Foot ``W`` of the perpendicular from ``p`` to the line through ``o`` and ``g``.

    ``OW = (t) OG`` with ``t = <OG, OP> / <OG, OG>``. A point already on the
    line is its own foot.
    """
    if o.dim != g.dim or o.dim != p.dim:
        raise DimensionMismatch("points of different dimensions")
    if o == g:
        raise DegenerateLine("O and G coincide at %s" % (o,))
    og = Arrow(o, g)
    t = model.pre_inner(og, Arrow(o, p)) / model.measure_sq(og)
    w = scalar_mul(t, og).head
    return ProjectionResult(w, t, model.measure_sq(Arrow(w, p)))


def displacements_parallel(a, b):
    """True iff one displacement is a rational multiple of the other.

    Checks that every 2x2 minor vanishes. This is independent of any inner
    product.
    """
    if a.dim != b.dim:
        raise DimensionMismatch("dimension %d != %d" % (a.dim, b.dim))
    d, e = displacement(a), displacement(b)
    n = len(d)
    return all(d[i] * e[j] == d[j] * e[i] for i in range(n) for j in range(i + 1, n))


def cauchy_schwarz(a, b, model=EUCLIDEAN):
    ip = model.pre_inner(a, b)
    lhs = ip * ip
    rhs = model.measure_sq(a) * model.measure_sq(b)
    return CauchySchwarz(lhs, rhs, lhs == rhs)


@dataclass(frozen=True)
class BarycenterSpec:
    """Distinct points with rational weights summing to one.

    Negative weights are accepted, which gives an affine rather than a convex
    combination; see ``is_convex``.
    """

    points: Sequence[Point]
    weights: Sequence[Fraction]

    def __post_init__(self):
        points = tuple(self.points)
        weights = tuple(as_rational(w) for w in self.weights)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "weights", weights)
        if not points:
            raise ValueError("at least one point is required")
        if len(points) != len(weights):
            raise DimensionMismatch(
                "%d points but %d weights" % (len(points), len(weights))
            )
        dim = points[0].dim
        if any(p.dim != dim for p in points):
            raise DimensionMismatch("points of different dimensions")
        if len(set(points)) != len(points):
            raise DuplicatePoints("barycenter points must be pairwise distinct")
        total = sum(weights, Fraction(0))
        if total != 1:
            raise WeightSumNotOne("weights sum to %s, not 1" % total)

    @property
    def dim(self):
        return self.points[0].dim

    def is_convex(self):
        return all(w >= 0 for w in self.weights)


def barycenter_direct(spec, origin):
    """``M = O + sum(w_i (P_i - O))``, straight from coordinates."""
    disp = [Fraction(0)] * spec.dim
    for p, w in zip(spec.points, spec.weights):
        for k, (pc, oc) in enumerate(zip(p.coords, origin.coords)):
            disp[k] += w * (pc - oc)
    return translate(origin, tuple(disp))


def barycenter(spec, origin):
    """The point ``M`` with ``[OM] = sum([(w_i) OP_i])``.

    Scales each ``OP_i`` to ``OQ_i``. Then it accumulates
    ``[OR_k] + [OQ_{k+1}]`` by transporting at ``R_k``, so each step appends
    the arrow ``R_k R_{k+1}`` to ``OR_k``. The answer is also checked against
    the coordinate formula.
    """
    if origin.dim != spec.dim:
        raise DimensionMismatch("origin has dimension %d, points %d" % (origin.dim, spec.dim))
    qs = [to_vector(scalar_mul(w, Arrow(origin, p))) for p, w in zip(spec.points, spec.weights)]
    acc = qs[0]
    r = translate(origin, acc.displacement)
    for q in qs[1:]:
        acc = vec_add_at(acc, q, r)
        r = translate(origin, acc.displacement)
    assert r == barycenter_direct(spec, origin), "construction and formula disagree"
    return r

