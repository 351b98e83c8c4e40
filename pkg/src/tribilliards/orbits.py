"""Classification of periodic billiard orbits on the equilateral triangle.

Every periodic orbit launched from the base point corresponds to a lattice
point (x, y) in rhombic coordinates with 0 <= x <= y, x = y (mod 3) and
x + y >= 2; the orbit bounces 2(x + y) times per period and its unfolded
period vector is exactly (x, y).  This module owns that correspondence:
validity, period, length, incidence-angle profile, primitivity, iterate
decomposition, and enumeration by period.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from .rhombic import ExactAngle, LineFamily, RhombicVector, incidence_angle

# Exact tan^2 bounds of the closed band [30, 60] degrees.
TAN_SQ_30 = Fraction(1, 3)
TAN_SQ_60 = Fraction(3)


class OrbitClass(NamedTuple):
    """A periodic orbit class, identified by its unfolded period vector."""

    x: int
    y: int

    def validate(self) -> "OrbitClass":
        if not (isinstance(self.x, int) and isinstance(self.y, int)):
            raise ValueError(f"orbit class needs integer coordinates, got {self!r}")
        if not (0 <= self.x <= self.y):
            raise ValueError(f"orbit class needs 0 <= x <= y, got {self!r}")
        if self.x % 3 != self.y % 3:
            raise ValueError(f"orbit class needs x = y (mod 3), got {self!r}")
        if self.x + self.y < 2:
            raise ValueError(f"orbit class needs x + y >= 2, got {self!r}")
        return self

    def direction(self) -> RhombicVector:
        """Launch direction: the period vector reduced to lowest integer terms."""
        return RhombicVector(self.x, self.y).reduced()


class Decomposition(NamedTuple):
    """An orbit class as ``repeats`` traversals of a primitive ``base`` class."""

    repeats: int
    base: OrbitClass


class OddOrbit(NamedTuple):
    """The k-th odd-period orbit: the (2k-1)-fold retracing of the period-3 orbit."""

    k: int

    @property
    def period(self) -> int:
        return 6 * self.k - 3


class AngleKind(Enum):
    ALL_SIXTY = "all-sixty"          # x == 0: every bounce at 60 degrees
    THIRTY_NINETY = "thirty-ninety"  # x == y: bounces at 30 and 90 degrees
    THREE_DISTINCT = "three-distinct"


@dataclass(frozen=True)
class AngleProfile:
    """The incidence angles an orbit class realizes.

    ``theta`` is the representation angle (the unique profile angle in the
    closed band [30, 60] degrees), carried exactly; ``angles`` is the exact
    set of distinct angles the orbit strikes sides with.  The degree values
    are display-only floats with phi = 60 - theta, psi = 120 - theta.
    """

    kind: AngleKind
    theta: ExactAngle
    angles: frozenset[ExactAngle]
    theta_deg: float
    phi_deg: float
    psi_deg: float


def realized_angles(c: OrbitClass) -> frozenset[ExactAngle]:
    """Exact set of incidence angles the orbit of ``c`` strikes sides with.

    Computed per grid family from the period vector; a family the direction
    is parallel to (tan^2 = 0) is never crossed, so its tag is dropped.
    """
    v = RhombicVector(c.x, c.y)
    tags = (incidence_angle(v, family) for family in LineFamily)
    return frozenset(t for t in tags if t.tan_sq != 0)


def angle_profile(c: OrbitClass) -> AngleProfile:
    """Exact incidence-angle profile of a class from its period vector."""
    c.validate()
    v = RhombicVector(c.x, c.y)
    horizontal = incidence_angle(v, LineFamily.HORIZONTAL)
    theta_deg = horizontal.degrees
    if c.x == 0:
        kind = AngleKind.ALL_SIXTY
    elif c.x == c.y:
        kind = AngleKind.THIRTY_NINETY
    else:
        kind = AngleKind.THREE_DISTINCT
    return AngleProfile(
        kind=kind,
        theta=horizontal,
        angles=realized_angles(c),
        theta_deg=theta_deg,
        phi_deg=60.0 - theta_deg,
        psi_deg=120.0 - theta_deg,
    )


def period(c: OrbitClass) -> int:
    """Bounces per period: one per grid-line crossing of the period vector."""
    c.validate()
    return 2 * (c.x + c.y)


def length_squared(c: OrbitClass) -> int:
    """Squared orbit length per period (exact integer)."""
    c.validate()
    return c.x * c.x + c.x * c.y + c.y * c.y


def length(c: OrbitClass) -> float:
    return math.sqrt(length_squared(c))


def is_primitive(c: OrbitClass) -> bool:
    """True when the orbit is not a retracing of a shorter orbit.

    Exactly the classes with gcd(x, y) = 1, plus those of the form (3a, 3b)
    with gcd(a, b) = 1 and a != b (mod 3).
    """
    c.validate()
    g = math.gcd(c.x, c.y)
    if g == 1:
        return True
    if g % 3 == 0:
        a, b = c.x // 3, c.y // 3
        return math.gcd(a, b) == 1 and a % 3 != b % 3
    return False


def iterate_decomposition(c: OrbitClass) -> Decomposition:
    """Write ``c`` as the largest possible repeat count of a valid base class.

    The base must itself satisfy the mod-3 lattice condition, so the repeat
    count is the largest divisor d of gcd(x, y) with x/d = y/d (mod 3).
    """
    c.validate()
    g = math.gcd(c.x, c.y)
    for d in range(g, 0, -1):
        if g % d == 0 and (c.x // d) % 3 == (c.y // d) % 3:
            return Decomposition(d, OrbitClass(c.x // d, c.y // d))
    raise AssertionError(f"no decomposition for {c!r}")  # d=1 always qualifies


def enumerate_classes(n: int) -> list[OrbitClass]:
    """All orbit classes with x + y = n (period 2n), ascending in x.

    x + y = n and x = y (mod 3) force x = 2n (mod 3), so the classes are an
    arithmetic progression of step 3 in x.
    """
    if n < 1:
        raise ValueError(f"period index must be >= 1, got {n}")
    first = (2 * n) % 3
    return [OrbitClass(x, n - x) for x in range(first, n // 2 + 1, 3)]


def classify_odd_period(p: int) -> OddOrbit | None:
    """The odd-period orbit of period ``p``, or None if no orbit has that period.

    Odd periods are exactly 6k - 3; an even input is a contract violation.
    """
    if p % 2 == 0:
        raise ValueError(f"classify_odd_period needs an odd period, got {p}")
    if p < 3 or p % 6 != 3:
        return None
    return OddOrbit((p + 3) // 6)


def sample_orbit(n: int) -> OrbitClass:
    """A canonical class of period 2n, for every n >= 2."""
    if n < 2:
        raise ValueError(f"no orbit classes exist for n = {n}")
    if n % 2 == 0:
        return OrbitClass(n // 2, n // 2).validate()
    half = (n - 1) // 2
    return OrbitClass(half - 1, half + 2).validate()


def example_primitive(n: int) -> OrbitClass | None:
    """A canonical primitive class of period 2n, or None when none exists.

    Only n = 1, 4, 6, 10 lack primitive classes.  The families returned:
    odd n = 2k+1 -> (k-1, k+2); n = 2 -> (1, 1); n = 4k+4 -> (2k-1, 2k+5);
    n = 4k+10 -> (2k-1, 2k+11), each valid and primitive for all k >= 1.
    """
    if n < 1:
        raise ValueError(f"period index must be >= 1, got {n}")
    if n in (1, 4, 6, 10):
        return None
    if n == 2:
        return OrbitClass(1, 1)
    if n % 2 == 1:
        k = (n - 1) // 2
        return OrbitClass(k - 1, k + 2).validate()
    if n % 4 == 0:
        k = (n - 4) // 4
        return OrbitClass(2 * k - 1, 2 * k + 5).validate()
    k = (n - 10) // 4
    return OrbitClass(2 * k - 1, 2 * k + 11).validate()
