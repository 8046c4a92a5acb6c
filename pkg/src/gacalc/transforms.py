"""Projections, reflections, and rotor rotations.

A rotor is represented as a plain Multivector satisfying the rotor
contract: only grades {0, 2}, and R * ~R = 1 within tolerance. Every
operation that consumes a rotor validates that contract, so any unit
even multivector works, whether built here, from a bivector
exponential, or as a product of unit vectors. A rotor and its negation
act identically in the two-sided sandwich (double cover).
"""

from __future__ import annotations

from gacalc.algebra import (
    DEFAULT_TOL,
    GradeError,
    Multivector,
    NonBladeError,
    SingularError,
    _NULL_EPS,
    _require_vector,
    dot,
)

__all__ = [
    "project",
    "reject",
    "reflect_in_plane",
    "reflect_normal",
    "rotor_between",
    "rotate",
    "rotor_from_reflections",
    "compose_rotors",
]


def _direction_square(name: str, a: Multivector) -> float:
    _require_vector(name, a)
    s = dot(a, a)
    if abs(s) <= _NULL_EPS:
        raise SingularError(f"{name} requires a direction with nonzero square")
    return s


def _require_unit_vector(name: str, a: Multivector, tol: float) -> None:
    _require_vector(name, a)
    if abs(dot(a, a) - 1.0) > tol:
        raise GradeError(f"{name} expects a unit vector, got squared length {dot(a, a)!r}")


def project(x: Multivector, a: Multivector) -> Multivector:
    """Component of x along the direction a: (x.a^)a^ for unit a^,
    computed as (x.a) a / (a.a) so any nonzero scale of a works."""
    _require_vector("project", x)
    return a * (dot(x, a) / _direction_square("project", a))


def reject(x: Multivector, a: Multivector) -> Multivector:
    """Component of x orthogonal to a: (x^a^)a^, the wedge route, so
    that project + reject recovering x is a real check rather than a
    bookkeeping identity."""
    _require_vector("reject", x)
    s = _direction_square("reject", a)
    return (((x ^ a) * a) / s).grade(1)


def _check_unit_plane(name: str, B: Multivector, tol: float) -> None:
    if B.grades() != (2,):
        raise GradeError(f"{name} expects a bivector, got grades {B.grades()}")
    square = B * B
    s = square.scalar_part()
    if (square - s).norm() > tol * max(1.0, abs(s)):
        raise NonBladeError(f"{name} expects a 2-blade (square must be scalar)")
    if abs(s + 1.0) > tol:
        raise NonBladeError(f"{name} expects a unit plane: B*B = -1, got {s!r}")


def reflect_in_plane(x: Multivector, B: Multivector, tol: float = DEFAULT_TOL) -> Multivector:
    """Mirror x in the plane of the unit 2-blade B: the sandwich B x B
    keeps the in-plane part and flips the orthogonal part. Works in any
    dimension."""
    _require_vector("reflect_in_plane", x)
    _check_unit_plane("reflect_in_plane", B, tol)
    return (B * x * B).grade(1)


def reflect_normal(x: Multivector, n: Multivector, tol: float = DEFAULT_TOL) -> Multivector:
    """Mirror x through the hyperplane orthogonal to the unit vector n:
    -n x n. In G(3,0) this equals reflect_in_plane(x, dual(n))."""
    _require_vector("reflect_normal", x)
    _require_unit_vector("reflect_normal", n, tol)
    return -(n * x * n).grade(1)


def _check_rotor(name: str, R: Multivector, tol: float) -> None:
    if any(g not in (0, 2) for g in R.grades()):
        raise GradeError(f"{name} expects a rotor (grades 0 and 2), got grades {R.grades()}")
    m = R * R.reverse()
    if abs(m.scalar_part() - 1.0) > tol or (m - m.scalar_part()).norm() > tol:
        raise NonBladeError(f"{name} expects a unit rotor: R * ~R must be 1")


def rotor_between(a: Multivector, b: Multivector, tol: float = DEFAULT_TOL) -> Multivector:
    """Rotor turning unit vector a into unit vector b through their
    common plane: (1 + b a) normalized. Antipodal inputs leave the
    rotation plane undefined and are rejected."""
    _require_unit_vector("rotor_between", a, tol)
    _require_unit_vector("rotor_between", b, tol)
    if 1.0 + dot(a, b) <= tol:
        raise SingularError("rotor_between is undefined for antipodal vectors")
    r = 1 + b * a
    return r / r.norm()


def rotate(x: Multivector, R: Multivector, tol: float = DEFAULT_TOL) -> Multivector:
    """Apply the rotor R to the vector x by the two-sided sandwich
    R x ~R. R and -R rotate identically."""
    _require_vector("rotate", x)
    _check_rotor("rotate", R, tol)
    return (R * x * R.reverse()).grade(1)


def rotor_from_reflections(
    n1: Multivector, n2: Multivector, tol: float = DEFAULT_TOL
) -> Multivector:
    """Rotor equivalent to reflecting in the n1 hyperplane and then the
    n2 hyperplane: the product n2 n1. The rotation angle is twice the
    angle between the two unit normals."""
    _require_unit_vector("rotor_from_reflections", n1, tol)
    _require_unit_vector("rotor_from_reflections", n2, tol)
    return n2 * n1


def compose_rotors(R1: Multivector, R2: Multivector, tol: float = DEFAULT_TOL) -> Multivector:
    """Rotor applying R1 first and then R2: the product R2 R1,
    renormalized to keep long chains on the unit sphere of rotors."""
    _check_rotor("compose_rotors", R1, tol)
    _check_rotor("compose_rotors", R2, tol)
    r = R2 * R1
    return r / r.norm()
