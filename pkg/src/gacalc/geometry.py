"""Analytic geometry on top of the algebra kernel: lines and planes in
point-direction form, point containment and distance, and triangle
identities (Law of Cosines, Law of Sines, wedge area).

Containment tests use a relative tolerance scaled by the input
magnitudes with an absolute floor, so they behave sensibly for both
tiny and large configurations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from gacalc.algebra import (
    DEFAULT_TOL,
    G3,
    GradeError,
    Multivector,
    NonBladeError,
    SignatureMismatch,
    SingularError,
    _require_vector,
    dot,
    dual,
)

__all__ = [
    "Line",
    "Plane",
    "Triangle",
    "line_contains",
    "closest_point_on_line",
    "distance_to_line",
    "plane_contains",
    "plane_normal",
    "cosine_law_residual",
    "sine_law_residual",
    "triangle_area",
]

# |sin| of the angle between two unit sides below this counts as collinear
_DEGENERATE_SINE = 1e-10


def _check_same_sig(a: Multivector, b: Multivector, what: str) -> None:
    if a.sig != b.sig:
        raise SignatureMismatch(f"{what} mixes algebras: {a.sig} vs {b.sig}")


@dataclass(frozen=True)
class Line:
    """Line through ``point`` with direction ``direction`` (nonzero,
    positive square): x(t) = point + t * direction."""

    point: Multivector
    direction: Multivector

    def __post_init__(self) -> None:
        _require_vector("Line.point", self.point)
        _require_vector("Line.direction", self.direction)
        _check_same_sig(self.point, self.direction, "Line")
        if dot(self.direction, self.direction) <= 0.0:
            raise SingularError("Line.direction must have positive square")


@dataclass(frozen=True)
class Plane:
    """Plane through ``point`` spanned by the 2-blade ``bivector``:
    points x with (x - point) ^ bivector = 0."""

    point: Multivector
    bivector: Multivector

    def __post_init__(self) -> None:
        _require_vector("Plane.point", self.point)
        _check_same_sig(self.point, self.bivector, "Plane")
        if self.bivector.grades() != (2,):
            raise GradeError(
                f"Plane.bivector must be grade 2, got grades {self.bivector.grades()}"
            )
        square = self.bivector * self.bivector
        s = square.scalar_part()
        if (square - s).norm() > DEFAULT_TOL * max(1.0, abs(s)) or s >= 0.0:
            raise NonBladeError("Plane.bivector must be a blade with negative square")


def _unit(a: Multivector) -> Multivector:
    return a / a.norm()


def line_contains(line: Line, x: Multivector, tol: float = DEFAULT_TOL) -> bool:
    """Whether x lies on the line: the offset from the anchor has no
    component wedging with the direction, up to a scaled tolerance."""
    _require_vector("line_contains", x)
    offset = x - line.point
    gap = ((offset ^ line.direction)).norm()
    scale = line.direction.norm() * max(1.0, offset.norm())
    return gap <= tol * scale


def closest_point_on_line(line: Line, p: Multivector) -> Multivector:
    """Foot of the perpendicular from p: anchor plus the projection of
    the offset onto the unit direction."""
    _require_vector("closest_point_on_line", p)
    a_hat = _unit(line.direction)
    return line.point + a_hat * dot(p - line.point, a_hat)


def distance_to_line(line: Line, p: Multivector) -> float:
    """Perpendicular distance from p to the line, via the Pythagorean
    split of the offset into along-line and across-line parts."""
    _require_vector("distance_to_line", p)
    offset = line.point - p
    a_hat = _unit(line.direction)
    along = dot(offset, a_hat)
    # rounding can push the radicand a hair below zero at distance ~0
    return math.sqrt(max(dot(offset, offset) - along * along, 0.0))


def plane_contains(plane: Plane, x: Multivector, tol: float = DEFAULT_TOL) -> bool:
    """Whether x lies in the plane: the offset wedges to nothing with
    the spanning bivector, up to a scaled tolerance."""
    _require_vector("plane_contains", x)
    offset = x - plane.point
    gap = (offset ^ plane.bivector).norm()
    scale = plane.bivector.norm() * max(1.0, offset.norm())
    return gap <= tol * scale


def plane_normal(plane: Plane) -> Multivector:
    """Normal vector of a G(3,0) plane: the negated dual -e123 B, which
    matches the cross product of any spanning pair."""
    if plane.bivector.sig != G3:
        raise SignatureMismatch(f"plane_normal is defined in G(3,0), got {plane.bivector.sig}")
    return -dual(plane.bivector)


@dataclass(frozen=True)
class Triangle:
    """Triangle described by side vectors satisfying a + b = c exactly.

    Walking along a and then b covers the same displacement as c, so c
    is opposite the angle between a and b. Use from_sides or
    from_vertices, which construct c as the exact float sum a + b.
    """

    a: Multivector
    b: Multivector
    c: Multivector

    def __post_init__(self) -> None:
        for name, side in (("a", self.a), ("b", self.b), ("c", self.c)):
            _require_vector(f"Triangle.{name}", side)
        _check_same_sig(self.a, self.b, "Triangle")
        _check_same_sig(self.a, self.c, "Triangle")
        if self.a + self.b != self.c:
            raise GradeError("Triangle sides must satisfy a + b = c exactly")

    @classmethod
    def from_sides(cls, a: Multivector, b: Multivector) -> "Triangle":
        return cls(a, b, a + b)

    @classmethod
    def from_vertices(cls, p: Multivector, q: Multivector, r: Multivector) -> "Triangle":
        a = q - p
        b = r - q
        return cls(a, b, a + b)


def cosine_law_residual(tri: Triangle) -> float:
    """|a|^2 + 2 a.b + |b|^2 - |c|^2, which the Law of Cosines says is
    zero (the dot term carries -2|a||b|cos of the exterior angle)."""
    return abs(
        dot(tri.a, tri.a) + 2.0 * dot(tri.a, tri.b) + dot(tri.b, tri.b)
        - dot(tri.c, tri.c)
    )


def _unit_sides(tri: Triangle) -> tuple[Multivector, Multivector, Multivector]:
    for side in (tri.a, tri.b, tri.c):
        if side.norm() == 0.0:
            raise SingularError("degenerate triangle: zero-length side")
    return _unit(tri.a), _unit(tri.b), _unit(tri.c)


def sine_law_residual(tri: Triangle) -> float:
    """Largest pairwise gap between sin(angle)/opposite-side ratios,
    with each sine taken as the wedge norm of the unit sides meeting at
    the angle. Collinear (degenerate) triangles are rejected."""
    a_hat, b_hat, c_hat = _unit_sides(tri)
    sin_c = (a_hat ^ b_hat).norm()
    if sin_c <= _DEGENERATE_SINE:
        raise SingularError("degenerate triangle: sides are collinear")
    ratios = [
        (c_hat ^ b_hat).norm() / tri.a.norm(),
        (a_hat ^ c_hat).norm() / tri.b.norm(),
        sin_c / tri.c.norm(),
    ]
    return max(ratios) - min(ratios)


def triangle_area(tri: Triangle) -> float:
    """Half the wedge norm of two sides: the parallelogram area halved."""
    return 0.5 * (tri.a ^ tri.b).norm()
