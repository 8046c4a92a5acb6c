"""Stereographic projection of the unit sphere, and spin probabilities.

Projection maps a sphere point (minus the south pole) to the equatorial
plane through the north pole e3.  The transition probabilities between
two spin directions can be written either with the dot product or with
squared distances between the projected plane points; both agree.
"""

import math

from gacalc import (
    G3,
    Multivector,
    antipodal_m,
    basis_vectors,
    prob_minus,
    prob_minus_m,
    prob_plus,
    rotation_form,
    rotate,
    stereo_project,
    stereo_unproject,
    to_m,
)

e1, e2, e3 = basis_vectors(G3)

# project a few sphere points; the north pole goes to the origin
for a in (e3, e1, (e1 + e3) / (e1 + e3).norm()):
    x = stereo_project(a)
    print(f"project {str(a):32} -> {x}")
print()

# unprojection inverts it
x = 0.2 * e1 + 0.3 * e2
a = stereo_unproject(x)
print("unproject x  =", a)
print("back again   =", stereo_project(a))
print()

# the lifted plane point m = x + e3 always has unit e3 component,
# and its rotation form carries the pole onto the unprojected point
m = to_m(a)
print("m            =", m)
print("rotor from m =", rotation_form(x))
print("pole rotated =", rotate(e3, rotation_form(x)))
print()

# the antipode of the unprojection comes from inversion in the plane
print("antipodal m  =", antipodal_m(x))
print("-unproject(x)=", -stereo_unproject(x))
print("unproj(-1/x) =", stereo_unproject(antipodal_m(x) - e3))
print()

# probabilities: 1/2 (1 +- a.b), also expressible through plane distances
up = e3
for name, b in [("up", e3), ("down", -e3), ("side", e1)]:
    print(f"prob(+|{name:4}) = {prob_plus(up, b):.6f}   "
          f"prob(-|{name:4}) = {prob_minus(up, b):.6f}")
print()

# sample table: angle from e3 in the e1 e3 plane vs both probability forms
print("theta,prob_plus,prob_minus,prob_minus_m_form")
for k in range(0, 13):
    theta = k * math.pi / 12
    b = math.sin(theta) * e1 + math.cos(theta) * e3
    b = b / b.norm()
    row = [prob_plus(e3, b), prob_minus(e3, b)]
    # the m-distance form needs both points away from the south pole
    row.append(prob_minus_m(e3, b) if 1.0 + b.coeff(0b100) > 1e-9 else float("nan"))
    print(f"{theta:.6f}," + ",".join(f"{v:.12f}" for v in row))
