"""Exact arrow-space geometry over the rationals.

Arrows are ordered pairs of points. Adding them is partial and not
commutative. Vectors are equivalence classes of arrows, and they form an
honest vector space. All arithmetic uses ``fractions.Fraction``, so every
equality and sign test is exact.
"""

from .affine import (
    BarycenterSpec,
    barycenter,
    barycenter_direct,
    cauchy_schwarz,
    displacements_parallel,
    project_point,
)
from .arrow_ops import (
    DirectionClass,
    add_arrows,
    checked_mixed_sum,
    direction_relation,
    distributed_sum,
    scalar_mul,
    split_scalar_sum,
)
from .core import (
    EUCLIDEAN,
    Arrow,
    DiagonalWeighted,
    EuclideanRational,
    MetricModel,
    Point,
    SignFlipped,
    as_rational,
    displacement,
    format_rational,
    is_degenerate,
    measure_sq,
    negate,
    parse_rational,
    point_eq,
    pre_inner,
)
from .equivalence import canonical_rep, check_axiom4, parallel_transport, related
from .errors import (
    ArrowSpaceError,
    DegenerateArrow,
    DegenerateBetween,
    DegenerateLine,
    DimensionMismatch,
    DuplicateName,
    DuplicatePoints,
    NotCollinear,
    NotOnLine,
    ParseError,
    PreconditionViolated,
    UndefinedAddition,
    WeightSumNotOne,
)
from .line import Line, between, contains, line_eq, line_through, parallel_on_line, point_at
from .vector_space import (
    Vector,
    representative,
    to_vector,
    vec_add,
    vec_add_at,
    vec_inner,
    vec_neg,
    vec_scalar_mul,
    vec_scalar_mul_at,
    zero_vector,
)

__version__ = "0.1.0"
