"""Core Clifford algebra kernel: metric signatures, basis blades, and
sparse multivectors with the geometric, outer, and inner products.

Basis blades are encoded as integer bitmasks: bit i (counting from 0)
set means basis vector e_(i+1) is a factor, so e13 is 0b101 and the
scalar blade is 0. Products of basis blades reorder factors into the
ascending canonical order by counting transpositions, so every basis
coefficient stays an exact +1 or -1 and shared factors contract through
the metric. Multivectors are immutable sparse maps from blade bitmask
to float; coefficients that become exactly zero are dropped, which
keeps the stored form canonical.

All operations are pure functions of immutable values, so instances can
be shared freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

__all__ = [
    "AlgebraError",
    "SignatureMismatch",
    "GradeError",
    "SingularError",
    "NonBladeError",
    "Signature",
    "G1",
    "G2",
    "G3",
    "MAX_DIM",
    "DEFAULT_TOL",
    "Multivector",
    "blade_product",
    "blade_grade",
    "blade_indices",
    "blade_bits",
    "blade_name",
    "canonical_blades",
    "basis_vectors",
    "dot",
    "dot_bivector",
    "cross",
    "dual",
    "vector_inverse",
    "cayley_table",
]

DEFAULT_TOL = 1e-12
MAX_DIM = 12

# |a.a| at or below this counts as a null vector when inverting
_NULL_EPS = 1e-300


class AlgebraError(ValueError):
    """Base class for domain errors raised by the kernel."""


class SignatureMismatch(AlgebraError):
    """Operands live in different algebras."""


class GradeError(AlgebraError):
    """An operand has the wrong grade for the operation."""


class SingularError(AlgebraError):
    """The input sits on a genuine singularity (null vector, antipode, pole)."""


class NonBladeError(AlgebraError):
    """A bivector is not a blade (or not unit) where one is required."""


@dataclass(frozen=True)
class Signature:
    """Metric signature (p, q): basis vectors 1..p square to +1, the
    remaining q square to -1. Degenerate directions are not supported."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise AlgebraError(f"signature counts must be nonnegative, got ({self.p},{self.q})")
        if not 1 <= self.p + self.q <= MAX_DIM:
            raise AlgebraError(
                f"dimension {self.p + self.q} outside the supported range 1..{MAX_DIM}"
            )

    @property
    def dim(self) -> int:
        return self.p + self.q

    def vector_square(self, index: int) -> int:
        """Square (+1 or -1) of basis vector e_(index+1), index 0-based."""
        if not 0 <= index < self.dim:
            raise AlgebraError(f"basis index {index + 1} outside {self}")
        return 1 if index < self.p else -1

    def __str__(self) -> str:
        return f"G({self.p},{self.q})"


G1 = Signature(1, 0)
G2 = Signature(2, 0)
G3 = Signature(3, 0)


def blade_grade(bits: int) -> int:
    """Grade of a basis blade: the number of vector factors."""
    return bits.bit_count()


def blade_indices(bits: int) -> tuple[int, ...]:
    """1-based basis indices of a blade bitmask, ascending."""
    out = []
    i = 1
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return tuple(out)


def blade_bits(indices: Iterable[int]) -> int:
    """Bitmask for a set of distinct 1-based basis indices."""
    bits = 0
    for i in indices:
        if i < 1:
            raise AlgebraError(f"basis indices are 1-based, got {i}")
        mask = 1 << (i - 1)
        if bits & mask:
            raise AlgebraError(f"repeated basis index {i} in blade")
        bits |= mask
    return bits


def blade_name(bits: int) -> str:
    """Canonical blade name: "1" for the scalar, else e-prefixed indices."""
    if bits == 0:
        return "1"
    idx = blade_indices(bits)
    if idx[-1] <= 9:
        return "e" + "".join(str(i) for i in idx)
    # indices past 9 would be ambiguous as a digit string
    return "e[" + ",".join(str(i) for i in idx) + "]"


def _check_bits(sig: Signature, bits: int) -> None:
    if not 0 <= bits < (1 << sig.dim):
        raise AlgebraError(f"blade {bin(bits)} does not fit in {sig}")


def blade_product(sig: Signature, a: int, b: int) -> tuple[int, int]:
    """Geometric product of two basis blades as (sign, result bitmask).

    The sign counts the transpositions needed to merge the two ascending
    factor lists, times the metric square of every index the blades
    share (shared factors annihilate pairwise).
    """
    _check_bits(sig, a)
    _check_bits(sig, b)
    swaps = 0
    rest = a >> 1
    while rest:
        swaps += (rest & b).bit_count()
        rest >>= 1
    sign = -1 if swaps & 1 else 1
    # shared indices at position >= p square to -1
    if ((a & b) >> sig.p).bit_count() & 1:
        sign = -sign
    return sign, a ^ b


def _sort_key(bits: int) -> tuple[int, int]:
    return (bits.bit_count(), bits)


def canonical_blades(sig: Signature) -> list[int]:
    """All blade bitmasks of the algebra, sorted by grade then index."""
    return sorted(range(1 << sig.dim), key=_sort_key)


def _reverse_sign(grade: int) -> int:
    # reversing k factors costs k(k-1)/2 transpositions
    return -1 if grade % 4 in (2, 3) else 1


def _fmt_coeff(value: float) -> str:
    # 17 significant digits always round-trip an IEEE double
    return format(value, ".17g")


class Multivector:
    """Immutable sparse multivector over a fixed signature.

    Operators follow the usual geometric algebra conventions: ``*`` is
    the geometric product, ``^`` the outer (wedge) product, ``|`` the
    grade-lowering inner product, ``~`` the reverse. ``^`` and ``|``
    bind loosely in Python, so parenthesize: ``(a ^ b) | c``. Numbers
    coerce to scalar multivectors in all arithmetic.
    """

    __slots__ = ("sig", "_terms")

    def __init__(self, sig: Signature, terms: Mapping[int, float] | None = None):
        if not isinstance(sig, Signature):
            raise TypeError("sig must be a Signature")
        cleaned: dict[int, float] = {}
        for bits, coeff in (terms or {}).items():
            _check_bits(sig, bits)
            value = float(coeff)
            if value != 0.0:
                cleaned[bits] = value
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "_terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, sig: Signature) -> "Multivector":
        return cls(sig)

    @classmethod
    def scalar(cls, sig: Signature, value: float) -> "Multivector":
        return cls(sig, {0: value})

    @classmethod
    def blade(cls, sig: Signature, bits: int, coeff: float = 1.0) -> "Multivector":
        return cls(sig, {bits: coeff})

    @classmethod
    def vector(cls, sig: Signature, components: Iterable[float]) -> "Multivector":
        comps = list(components)
        if len(comps) != sig.dim:
            raise AlgebraError(
                f"expected {sig.dim} components for a {sig} vector, got {len(comps)}"
            )
        return cls(sig, {1 << i: c for i, c in enumerate(comps)})

    # -- accessors ------------------------------------------------------

    @property
    def terms(self) -> Mapping[int, float]:
        """Read-only view of the sparse blade-to-coefficient map."""
        return MappingProxyType(self._terms)

    def coeff(self, bits: int) -> float:
        _check_bits(self.sig, bits)
        return self._terms.get(bits, 0.0)

    def scalar_part(self) -> float:
        return self._terms.get(0, 0.0)

    def grades(self) -> tuple[int, ...]:
        return tuple(sorted({bits.bit_count() for bits in self._terms}))

    def grade(self, k: int) -> "Multivector":
        """Grade-k part; grades absent from the value give zero."""
        if k < 0:
            raise GradeError(f"grade must be nonnegative, got {k}")
        return Multivector(
            self.sig, {b: c for b, c in self._terms.items() if b.bit_count() == k}
        )

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring structure -------------------------------------------------

    def _lift(self, other) -> "Multivector | None":
        if isinstance(other, Multivector):
            if other.sig != self.sig:
                raise SignatureMismatch(
                    f"operands live in different algebras: {self.sig} vs {other.sig}"
                )
            return other
        if isinstance(other, (int, float)):
            return Multivector.scalar(self.sig, other)
        return None

    def __add__(self, other):
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for bits, c in rhs._terms.items():
            out[bits] = out.get(bits, 0.0) + c
        return Multivector(self.sig, out)

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for bits, c in rhs._terms.items():
            out[bits] = out.get(bits, 0.0) - c
        return Multivector(self.sig, out)

    def __rsub__(self, other):
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return rhs - self

    def __neg__(self):
        return Multivector(self.sig, {b: -c for b, c in self._terms.items()})

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Multivector(self.sig, {b: c * other for b, c in self._terms.items()})
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        out: dict[int, float] = {}
        for a, ca in self._terms.items():
            for b, cb in rhs._terms.items():
                sign, bits = blade_product(self.sig, a, b)
                out[bits] = out.get(bits, 0.0) + sign * ca * cb
        return Multivector(self.sig, out)

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self * other
        return NotImplemented

    def __xor__(self, other):
        """Outer (wedge) product: the grade-(r+s) parts of the product."""
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        out: dict[int, float] = {}
        for a, ca in self._terms.items():
            for b, cb in rhs._terms.items():
                if a & b:
                    continue  # a shared factor drops the grade below r+s
                sign, bits = blade_product(self.sig, a, b)
                out[bits] = out.get(bits, 0.0) + sign * ca * cb
        return Multivector(self.sig, out)

    def __rxor__(self, other):
        if isinstance(other, (int, float)):
            return Multivector.scalar(self.sig, other) ^ self
        return NotImplemented

    def __or__(self, other):
        """Grade-lowering inner product: sums <A_r B_s>_(|r-s|).

        Mixed products with a scalar factor are zero by convention;
        scalar with scalar multiplies. On vectors this is the metric dot
        product, and on a vector with a bivector it is the antisymmetric
        part (aB - Ba)/2.
        """
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        out: dict[int, float] = {}
        for a, ca in self._terms.items():
            ga = a.bit_count()
            for b, cb in rhs._terms.items():
                gb = b.bit_count()
                if ga == 0 or gb == 0:
                    if ga == 0 and gb == 0:
                        out[0] = out.get(0, 0.0) + ca * cb
                    continue
                # the blade product has grade |ga-gb| only when one
                # blade contains the other
                if (a ^ b).bit_count() != abs(ga - gb):
                    continue
                sign, bits = blade_product(self.sig, a, b)
                out[bits] = out.get(bits, 0.0) + sign * ca * cb
        return Multivector(self.sig, out)

    def __ror__(self, other):
        if isinstance(other, (int, float)):
            return Multivector.scalar(self.sig, other) | self
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            if other == 0:
                raise SingularError("division by zero")
            return Multivector(self.sig, {b: c / other for b, c in self._terms.items()})
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, float)):
            return self.inverse() * other
        return NotImplemented

    # -- involutions and norms -------------------------------------------

    def reverse(self) -> "Multivector":
        """Reverse the factor order of every blade: grade k picks up
        the sign (-1)^(k(k-1)/2)."""
        return Multivector(
            self.sig,
            {b: c * _reverse_sign(b.bit_count()) for b, c in self._terms.items()},
        )

    def __invert__(self):
        return self.reverse()

    def norm_squared(self) -> float:
        """Scalar part of A * reverse(A). Blade products are scalar only
        for equal blades, so this is a term-diagonal sum; it can be
        negative in mixed signatures."""
        total = 0.0
        for bits, c in self._terms.items():
            sign, _ = blade_product(self.sig, bits, bits)
            total += sign * _reverse_sign(bits.bit_count()) * c * c
        return total

    def norm(self) -> float:
        return math.sqrt(abs(self.norm_squared()))

    def inverse(self, tol: float = DEFAULT_TOL) -> "Multivector":
        """Inverse through reversal, defined when A * ~A is a nonzero
        scalar (vectors, blades, rotors). Zero divisors are rejected."""
        rev = self.reverse()
        m = self * rev
        s = m.scalar_part()
        if abs(s) <= _NULL_EPS:
            raise SingularError("multivector has no inverse: A * ~A vanishes")
        if (m - s).norm() > tol * max(1.0, abs(s)):
            raise SingularError("multivector is not invertible by reversal")
        return rev / s

    def exp(self, tol: float = DEFAULT_TOL) -> "Multivector":
        """Exponential of a bivector blade, in closed form.

        A square B*B = -theta^2 gives cos(theta) + B sin(theta)/theta
        (a rotation generator); B*B = +phi^2 gives cosh(phi) +
        B sinh(phi)/phi; B = 0 gives 1. A bivector whose square is not
        scalar (a non-blade, possible from dimension 4 up) is rejected.
        """
        if self.is_zero():
            return Multivector.scalar(self.sig, 1.0)
        if self.grades() != (2,):
            raise GradeError(f"exp expects a bivector, got grades {self.grades()}")
        square = self * self
        s = square.scalar_part()
        if (square - s).norm() > tol * max(1.0, abs(s)):
            raise NonBladeError("bivector square is not scalar: not a blade")
        if s <= 0.0:
            theta = math.sqrt(-s)
            scale = math.sin(theta) / theta if theta > 0.0 else 1.0
            return self * scale + math.cos(theta)
        phi = math.sqrt(s)
        return self * (math.sinh(phi) / phi) + math.cosh(phi)

    # -- comparison and display -------------------------------------------

    def is_close(
        self,
        other,
        abs_tol: float = DEFAULT_TOL,
        rel_tol: float = DEFAULT_TOL,
    ) -> bool:
        """Whether the difference norm is within abs_tol plus rel_tol
        scaled by the larger operand norm."""
        rhs = self._lift(other)
        if rhs is None:
            raise TypeError(f"cannot compare Multivector with {type(other).__name__}")
        gap = (self - rhs).norm()
        return gap <= abs_tol + rel_tol * max(self.norm(), rhs.norm())

    def __eq__(self, other):
        if isinstance(other, (int, float)):
            other = Multivector.scalar(self.sig, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and self._terms == other._terms

    __hash__ = None

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for bits in sorted(self._terms, key=_sort_key):
            c = self._terms[bits]
            body = _fmt_coeff(abs(c))
            if bits:
                body = f"{body}*{blade_name(bits)}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Multivector({self.sig}: {self})"


def basis_vectors(sig: Signature) -> list[Multivector]:
    """The grade-1 basis blades e1..e_dim, in order."""
    return [Multivector.blade(sig, 1 << i) for i in range(sig.dim)]


def _require_vector(name: str, a: Multivector) -> None:
    if any(bits.bit_count() != 1 for bits in a.terms):
        raise GradeError(f"{name} expects a vector (grade 1), got grades {a.grades()}")


def _components(a: Multivector) -> list[float]:
    return [a.coeff(1 << i) for i in range(a.sig.dim)]


def dot(a: Multivector, b: Multivector) -> float:
    """Inner product of two vectors as a plain float: the symmetric part
    (ab + ba)/2, which reduces to the metric-weighted component sum."""
    _require_vector("dot", a)
    _require_vector("dot", b)
    if a.sig != b.sig:
        raise SignatureMismatch(f"operands live in different algebras: {a.sig} vs {b.sig}")
    total = 0.0
    for bits, ca in a.terms.items():
        cb = b.coeff(bits)
        if cb != 0.0:
            total += ca * cb * a.sig.vector_square(bits.bit_length() - 1)
    return total


def dot_bivector(a: Multivector, B: Multivector) -> Multivector:
    """Inner product of a vector with a bivector: the grade-1 value
    (aB - Ba)/2, the in-plane part of a rotated a quarter turn."""
    _require_vector("dot_bivector", a)
    if B.grades() not in ((), (2,)):
        raise GradeError(f"dot_bivector expects a bivector, got grades {B.grades()}")
    return a | B


def cross(a: Multivector, b: Multivector) -> Multivector:
    """Classical cross product in G(3,0), by determinant expansion."""
    for v in (a, b):
        if v.sig != G3:
            raise SignatureMismatch(f"cross product lives in G(3,0), got {v.sig}")
        _require_vector("cross", v)
    a1, a2, a3 = _components(a)
    b1, b2, b3 = _components(b)
    return Multivector.vector(
        G3,
        [a2 * b3 - a3 * b2, -(a1 * b3 - a3 * b1), a1 * b2 - a2 * b1],
    )


def dual(A: Multivector) -> Multivector:
    """Multiply by the G(3,0) pseudoscalar e123 on the left, exchanging
    each blade with its orthogonal complement (vectors with bivectors)."""
    if A.sig != G3:
        raise SignatureMismatch(f"dual is defined in G(3,0), got {A.sig}")
    return Multivector.blade(G3, 0b111) * A


def vector_inverse(a: Multivector) -> Multivector:
    """Inverse of a nonzero vector: a / (a.a)."""
    _require_vector("vector_inverse", a)
    s = dot(a, a)
    if abs(s) <= _NULL_EPS:
        raise SingularError("vector inverse requires a nonzero, non-null vector")
    return a / s


def cayley_table(sig: Signature) -> list[list[tuple[int, int]]]:
    """Full multiplication table of basis blades as (sign, bits) pairs,
    rows and columns in canonical grade-then-index order. Limited to
    dimension 6 (a 64 x 64 table) to keep emission sane."""
    if sig.dim > 6:
        raise AlgebraError(f"cayley table limited to dimension 6, got {sig.dim}")
    order = canonical_blades(sig)
    return [[blade_product(sig, a, b) for b in order] for a in order]
