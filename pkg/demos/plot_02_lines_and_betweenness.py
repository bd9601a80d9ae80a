"""
Lines and betweenness
=====================

A line is the set of heads of every multiple of one nondegenerate arrow.
Membership comes down to solving for that multiple exactly. Betweenness only
needs the sign of a product.
"""

from fractions import Fraction

from arrowspace import Arrow, Point, between, contains, line_eq, line_through, point_at
from arrowspace import parallel_on_line

A = Point([1, 2])
B = Point([4, -1])
l = line_through(A, B)

for t in (Fraction(7, 3), Fraction(-2), Fraction(1, 2)):
    print("t = %-5s -> %s" % (t, point_at(l, t)))

# contains() returns the parameter, or None when the point is off the line
print("parameter of (8, -5):", contains(l, Point([8, -5])))
print("parameter of (0, 0): ", contains(l, Point([0, 0])))

# Any two distinct points on l define the same line
M, L = point_at(l, Fraction(7, 3)), point_at(l, -2)
print("line through M and L equals l:", line_eq(l, line_through(M, L)))

# Of three points on a line, exactly one sits between the other two
X, Y, Z = point_at(l, 0), point_at(l, 5), point_at(l, -1)
print("X between Z and Y:", between(Z, X, Y))
print("Y between X and Z:", between(X, Y, Z))
print("Z between X and Y:", between(X, Z, Y))

# Copy AB onto l so that it starts (K) or ends (K') at a point P of the line
P = point_at(l, 3)
K, K_prime = parallel_on_line(l, Arrow(A, B), P)
print("P =", P, " K =", K, " K' =", K_prime)
