"""Rotations as rotor sandwiches, and their relation to reflections.

A rotor R rotates a vector x through the sandwich R x R~.  The rotor
between two unit vectors rotates along their common arc; two consecutive
reflections produce the same rotation through twice the angle between
the mirrors.
"""

import math

from gacalc import (
    G3,
    basis_vectors,
    compose_rotors,
    dot,
    reflect_normal,
    rotate,
    rotor_between,
    rotor_from_reflections,
)

e1, e2, e3 = basis_vectors(G3)

# the rotor carrying e1 onto the diagonal (e1+e2)/sqrt(2)
u = (e1 + e2) / (e1 + e2).norm()
r = rotor_between(e1, u)
print("rotor e1 -> u :", r)
print("rot(e1)       =", rotate(e1, r))
print("target u      =", u)
print()

# a rotor is the exponential of half the rotation bivector: a quarter
# turn of the e12 plane needs exp(-pi/4 e12)
quarter = (-math.pi / 4 * (e1 ^ e2)).exp()
print("exp(-pi/4 e12):", quarter)
print("rot(e1)       =", rotate(e1, quarter))
print()

# rotations preserve lengths and angles
x = 0.3 * e1 - 1.2 * e2 + 0.7 * e3
y = 1.1 * e1 + 0.4 * e2 - 0.5 * e3
print("|x| before/after :", x.norm(), rotate(x, r).norm())
print("x.y before/after :", dot(x, y), dot(rotate(x, r), rotate(y, r)))
print()

# two reflections compose into a rotation: mirror along e1, then along
# the diagonal u, is a quarter turn in the e12 plane
double_reflection = reflect_normal(reflect_normal(e2, e1), u)
two_mirror_rotor = rotor_from_reflections(e1, u)
print("reflect twice :", double_reflection)
print("rotor sandwich:", rotate(e2, two_mirror_rotor))
print()

# arcs compose: the rotor along a->b chained with b->c carries a to c
a, b, c = e1, u, e3
r_ab = rotor_between(a, b)
r_bc = rotor_between(b, c)
chained = compose_rotors(r_ab, r_bc)
print("chained rotor :", chained)
print("rot(a)        =", rotate(a, chained))
print("target c      =", c)
print()

# the full-angle products chain without any half-angle bookkeeping
print("(ab)(bc)      =", (a * b) * (b * c))
print("ac            =", a * c)
