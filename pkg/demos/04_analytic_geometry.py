"""Lines, planes, and triangles without coordinates.

Projections and rejections split a vector relative to a direction; the
triangle laws (cosines, sines) fall out of the product algebra.
"""

from gacalc import (
    G3,
    Line,
    Plane,
    Triangle,
    basis_vectors,
    closest_point_on_line,
    cosine_law_residual,
    distance_to_line,
    line_contains,
    plane_contains,
    plane_normal,
    project,
    reject,
    sine_law_residual,
    triangle_area,
)

e1, e2, e3 = basis_vectors(G3)

# split a vector into components parallel and perpendicular to a direction
x = 1 * e1 + 2 * e2 + 3 * e3
print("x            =", x)
print("proj on e1   =", project(x, e1))
print("rej  off e1  =", reject(x, e1))
print("sum          =", project(x, e1) + reject(x, e1))
print()

# a line through a point: membership, foot of perpendicular, distance
line = Line(point=3 * e3, direction=e1 + e2)
p = 4 * e1 + 1 * e2 + 3 * e3
print("p on line?      ", line_contains(line, p))
print("closest point   ", closest_point_on_line(line, p))
print("distance        ", distance_to_line(line, p))
print()

# a plane is a point plus a unit bivector; its normal is the dual
plane = Plane(point=0 * e1, bivector=e1 ^ e2)
print("e3 in plane?    ", plane_contains(plane, 5 * e3))
print("e1+e2 in plane? ", plane_contains(plane, e1 + e2))
print("plane normal    ", plane_normal(plane))
print()

# the 3-4-5 right triangle: sides a, b, and c = a + b
tri = Triangle.from_sides(3 * e1, 4 * e2)
print("sides           ", tri.a, "|", tri.b, "|", tri.c)
print("area            ", triangle_area(tri))
print("cosine residual ", cosine_law_residual(tri))
print("sine residual   ", sine_law_residual(tri))
print()

# a generic triangle still satisfies both laws to machine precision
tri = Triangle.from_sides(0.3 * e1 - 1.2 * e2 + 0.7 * e3, 1.1 * e1 + 0.4 * e2)
print("generic cosine residual:", cosine_law_residual(tri))
print("generic sine residual  :", sine_law_residual(tri))
