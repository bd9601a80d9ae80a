"""
Vectors from arrows
===================

Two arrows are related when they have the same length and point the same
way. Their classes are vectors. Vector addition moves both arrows so that
they meet at a common point, and the answer doesn't depend on which point
you pick.
"""

from arrowspace import (
    Arrow,
    Point,
    canonical_rep,
    parallel_transport,
    related,
    to_vector,
    vec_add,
    vec_add_at,
    vec_inner,
)

ab = Arrow(Point([0, 0]), Point([1, 2]))
moved = parallel_transport(ab, Point([10, 10]))
print("copy starting at P:", moved.tail_anchored)
print("copy ending at P:  ", moved.head_anchored)
print("related:", related(ab, moved.tail_anchored), related(ab, moved.head_anchored))
print("canonical representative of (5,5)->(6,7):", canonical_rep(Arrow(Point([5, 5]), Point([6, 7]))))

u = to_vector(ab)
v = to_vector(Arrow(Point([2, 2]), Point([5, 6])))

# Add by transport at a few different points
for p in ([0, 0], [7, -1], ["1/3", "5/2"]):
    print("u + v computed at %-12s = %s" % (Point(p), vec_add_at(u, v, Point(p))))
print("displacement shortcut     =", vec_add(u, v))

print("<u, v> =", vec_inner(u, v))
print("3u - v =", 3 * u - v)
