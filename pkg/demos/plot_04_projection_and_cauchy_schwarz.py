"""
Projection and Cauchy-Schwarz
=============================

The foot of the perpendicular from a point to a line has a closed form. We
check it against a brute-force search along the line and then look at when
Cauchy-Schwarz holds with equality.
"""

from fractions import Fraction

from arrowspace import Arrow, Point, cauchy_schwarz, measure_sq, pre_inner, project_point, scalar_mul

O, G, P = Point([0, 0]), Point([2, 0]), Point([1, 3])
res = project_point(O, G, P)
print("t =", res.parameter, " W =", res.foot, " residual_sq =", res.residual_sq)
print("<WP, OG> =", pre_inner(Arrow(res.foot, P), Arrow(O, G)))

# brute force over a grid of parameters
grid = [Fraction(k, 8) for k in range(-24, 25)]
best = min(grid, key=lambda t: measure_sq(Arrow(scalar_mul(t, Arrow(O, G)).head, P)))
print("best grid parameter:", best)

# Equality needs parallel displacements; otherwise the inequality is strict
pairs = [
    (Arrow(Point([0, 0]), Point([1, 2])), Arrow(Point([3, 3]), Point([1, -1]))),
    (Arrow(Point([0, 0]), Point([1, 2])), Arrow(Point([0, 0]), Point([3, 1]))),
]
for a, b in pairs:
    cs = cauchy_schwarz(a, b)
    print("<a,b>^2 = %s, |a|^2 |b|^2 = %s, tight = %s" % (cs.lhs, cs.rhs, cs.tight))
