"""
Arrows are not vectors
======================

An arrow is an ordered pair of points. You can add two arrows only when the
first one ends where the second begins, and the order matters. This script
walks through what goes wrong if you treat arrows like vectors.
"""

from fractions import Fraction

from arrowspace import Arrow, Point, UndefinedAddition, add_arrows, negate, scalar_mul

A = Point([0, 0])
B = Point([3, 1])
C = Point([4, 4])

# Head-to-tail addition works and gives the arrow from A to C.
print("AB + BC =", add_arrows(Arrow(A, B), Arrow(B, C)))

# Swapping the order is not allowed: BC ends at C, and AB starts at A.
try:
    add_arrows(Arrow(B, C), Arrow(A, B))
except UndefinedAddition as exc:
    print("BC + AB:", exc)

# Even when both orders exist, the results differ.
ab, ba = Arrow(A, B), Arrow(B, A)
print("AB + BA =", add_arrows(ab, ba))
print("BA + AB =", add_arrows(ba, ab))

# Scaling keeps the tail, so (-1)AB points backwards from A.
# It is a different arrow from -AB = BA.
print("(-1)AB =", scalar_mul(-1, ab))
print("   -AB =", negate(ab))

# Distributing a scalar over a sum breaks down: (2)AB ends at 2B - A,
# which is not where (2)BC starts.
try:
    add_arrows(scalar_mul(2, ab), scalar_mul(2, Arrow(B, C)))
except UndefinedAddition as exc:
    print("(2)AB + (2)BC:", exc)

print("(2)(AB + BC) =", scalar_mul(2, add_arrows(ab, Arrow(B, C))))
print("(1/2)AC =", scalar_mul(Fraction(1, 2), Arrow(A, C)))
