"""
Barycenters
===========

For weights that sum to one, the barycenter is the point M with
``[OM] = sum(w_i [OP_i])``. The construction starts from an origin O, but
the point you end up with is the same for every O.
"""

from fractions import Fraction

from arrowspace import BarycenterSpec, Point, WeightSumNotOne, barycenter

triangle = [Point([0, 0]), Point([2, 0]), Point([1, 3])]
centroid = BarycenterSpec(triangle, [Fraction(1, 3)] * 3)
for origin in ([0, 0], [5, -7], ["1/2", "9/4"]):
    print("origin %-12s -> M = %s" % (Point(origin), barycenter(centroid, Point(origin))))

# Negative weights give an affine combination outside the triangle
outside = BarycenterSpec(triangle, [Fraction(-1), Fraction(1), Fraction(1)])
print("affine point:", barycenter(outside, Point([0, 0])), " convex:", outside.is_convex())

try:
    BarycenterSpec(triangle, [Fraction(1, 2)] * 3)
except WeightSumNotOne as exc:
    print("rejected:", exc)
