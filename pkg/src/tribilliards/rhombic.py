"""Exact geometry in rhombic (oblique 60-degree) coordinates.

The plane carries a skewed coordinate system adapted to the unit triangular
grid: the x-axis is horizontal, the y-axis is inclined 60 degrees, and one
unit along either axis spans one triangle side.  Points and vectors hold
exact rationals, so reflection and intersection arithmetic never rounds;
floats are rejected at construction.

Grid lines come in three families, named by how they look in Cartesian space:

* ``HORIZONTAL``  y = c        (inclination 0)
* ``RIGHT``       x = c        (inclination 60 degrees)
* ``LEFT``        x + y = c    (inclination 120 degrees)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Union

Rational = Union[Fraction, int, str]

# Cartesian basis: e_x = (1, 0), e_y = (1/2, sqrt(3)/2).  The Gram matrix of
# that basis is [[1, 1/2], [1/2, 1]], which is where the mixed term in the
# squared norm and in dot() comes from.
_SQRT3_OVER_2 = math.sqrt(3.0) / 2.0


def _frac(value: Rational) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass Fraction, int, or 'p/q' string")
    return Fraction(value)


class LineFamily(Enum):
    HORIZONTAL = 0
    RIGHT = 1
    LEFT = 2


class CartesianPoint(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True, slots=True)
class RhombicVector:
    dx: Fraction
    dy: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "dx", _frac(self.dx))
        object.__setattr__(self, "dy", _frac(self.dy))

    def __add__(self, other: "RhombicVector") -> "RhombicVector":
        return RhombicVector(self.dx + other.dx, self.dy + other.dy)

    def __sub__(self, other: "RhombicVector") -> "RhombicVector":
        return RhombicVector(self.dx - other.dx, self.dy - other.dy)

    def __neg__(self) -> "RhombicVector":
        return RhombicVector(-self.dx, -self.dy)

    def __mul__(self, scalar: Rational) -> "RhombicVector":
        s = _frac(scalar)
        return RhombicVector(self.dx * s, self.dy * s)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.dx == 0 and self.dy == 0

    def reduced(self) -> "RhombicVector":
        """Scale to the shortest integer vector with the same orientation."""
        if self.is_zero():
            raise ValueError("zero vector has no direction")
        scale = math.lcm(self.dx.denominator, self.dy.denominator)
        a = int(self.dx * scale)
        b = int(self.dy * scale)
        g = math.gcd(a, b)
        return RhombicVector(Fraction(a // g), Fraction(b // g))

    def cross(self, other: "RhombicVector") -> Fraction:
        """Coordinate cross product; zero exactly when the vectors are parallel."""
        return self.dx * other.dy - self.dy * other.dx


@dataclass(frozen=True, slots=True)
class RhombicPoint:
    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", _frac(self.x))
        object.__setattr__(self, "y", _frac(self.y))

    def __add__(self, vec: RhombicVector) -> "RhombicPoint":
        return RhombicPoint(self.x + vec.dx, self.y + vec.dy)

    def __sub__(self, other: "RhombicPoint") -> RhombicVector:
        return RhombicVector(self.x - other.x, self.y - other.y)


@dataclass(frozen=True, slots=True)
class GridLine:
    """A full line of the triangular grid: the ``family`` coordinate equals ``offset``."""

    family: LineFamily
    offset: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "offset", _frac(self.offset))

    def contains(self, p: RhombicPoint) -> bool:
        return family_coordinate(self.family, p) == self.offset


def family_coordinate(family: LineFamily, p: RhombicPoint) -> Fraction:
    """The coordinate that is constant along lines of ``family``."""
    if family is LineFamily.HORIZONTAL:
        return p.y
    if family is LineFamily.RIGHT:
        return p.x
    return p.x + p.y


def family_direction(family: LineFamily) -> RhombicVector:
    """A direction vector spanning lines of ``family``."""
    if family is LineFamily.HORIZONTAL:
        return RhombicVector(1, 0)
    if family is LineFamily.RIGHT:
        return RhombicVector(0, 1)
    return RhombicVector(1, -1)


def to_cartesian(p: RhombicPoint) -> CartesianPoint:
    """Map rhombic coordinates to ordinary Cartesian coordinates (floats)."""
    return CartesianPoint(float(p.x + p.y / 2), float(p.y) * _SQRT3_OVER_2)


def norm_squared(v: RhombicVector) -> Fraction:
    """Squared Euclidean length; the mixed term reflects the 60-degree basis."""
    return v.dx * v.dx + v.dx * v.dy + v.dy * v.dy


def dot(u: RhombicVector, v: RhombicVector) -> Fraction:
    """Euclidean inner product expressed in rhombic coordinates."""
    return u.dx * v.dx + (u.dx * v.dy + u.dy * v.dx) / 2 + u.dy * v.dy


def reflect(line: GridLine, p: RhombicPoint) -> RhombicPoint:
    """Mirror image of ``p`` across a grid line (exact)."""
    c = line.offset
    if line.family is LineFamily.HORIZONTAL:
        return RhombicPoint(p.x + p.y - c, 2 * c - p.y)
    if line.family is LineFamily.RIGHT:
        return RhombicPoint(2 * c - p.x, p.x + p.y - c)
    return RhombicPoint(c - p.y, c - p.x)


def reflect_direction(family: LineFamily, v: RhombicVector) -> RhombicVector:
    """Linear part of :func:`reflect`; mirrors a direction across the family."""
    if family is LineFamily.HORIZONTAL:
        return RhombicVector(v.dx + v.dy, -v.dy)
    if family is LineFamily.RIGHT:
        return RhombicVector(-v.dx, v.dx + v.dy)
    return RhombicVector(-v.dy, -v.dx)


@dataclass(frozen=True, slots=True)
class ExactAngle:
    """An angle in (0, 90] degrees carried as an exact tan^2 value.

    ``tan_sq is None`` flags the perpendicular case (90 degrees), where tan
    is undefined.  ``tan_sq == 0`` means the direction is parallel to the
    line, i.e. no incidence at all.  Equal angles compare equal exactly.
    """

    tan_sq: Fraction | None

    def __post_init__(self) -> None:
        if self.tan_sq is not None:
            object.__setattr__(self, "tan_sq", _frac(self.tan_sq))

    @property
    def degrees(self) -> float:
        if self.tan_sq is None:
            return 90.0
        return math.degrees(math.atan(math.sqrt(self.tan_sq)))

    def within(self, lo_tan_sq: Fraction, hi_tan_sq: Fraction) -> bool:
        """Exact test that the angle lies in the closed range given by tan^2 bounds."""
        if self.tan_sq is None:
            return False
        return lo_tan_sq <= self.tan_sq <= hi_tan_sq


def incidence_angle(direction: RhombicVector, family: LineFamily) -> ExactAngle:
    """Angle in (0, 90] between a trajectory direction and a line family.

    tan^2 = (|u|^2 |v|^2 - (u.v)^2) / (u.v)^2 for u spanning the family; the
    sign of u cancels, so the result is a property of the undirected line.
    """
    u = family_direction(family)
    d = dot(u, direction)
    if d == 0:
        return ExactAngle(None)
    return ExactAngle((norm_squared(u) * norm_squared(direction) - d * d) / (d * d))
