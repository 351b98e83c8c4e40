"""Exact billiard simulation inside an equilateral triangle.

The triangle sits in rhombic coordinates with its bottom side on y = 0 and
the launch point O at the origin: vertices B = (-b, 0), C = (1-b, 0),
A = (-b, 1), where the offset b in (0, 1) places O along BC.  The three
sides then lie on one grid line each (side 0 horizontal, side 1 on x = -b,
side 2 on x + y = 1 - b), so a bounce is a reflection across a grid-line
family and the whole simulation stays in exact rational arithmetic.

Straightening a trajectory by reflecting the triangle instead of the ball
("unfolding") turns the orbit of class (x, y) into the straight segment
from O to (x, y); :func:`fold_segment` builds the bounce path from that
segment and :func:`unfold` inverts a simulated path back to it.  The two
routes are independent and must agree bounce for bounce.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .orbits import (
    OrbitClass,
    angle_profile,
    iterate_decomposition,
    period,
    realized_angles,
)
from .rhombic import (
    ExactAngle,
    GridLine,
    LineFamily,
    Rational,
    RhombicPoint,
    RhombicVector,
    _frac,
    family_coordinate,
    incidence_angle,
    reflect_direction,
)

HARD_BOUNCE_CAP = 10**6

_SIDE_FAMILY = (LineFamily.HORIZONTAL, LineFamily.RIGHT, LineFamily.LEFT)

ORIGIN = RhombicPoint(0, 0)


class VertexHit(Exception):
    """The trajectory ran into a triangle corner, where reflection is undefined."""

    def __init__(self, point: RhombicPoint, after_bounces: int):
        self.point = point
        self.after_bounces = after_bounces
        super().__init__(
            f"trajectory hits a vertex at ({point.x}, {point.y}) "
            f"after {after_bounces} bounces"
        )


class NotOnBoundary(ValueError):
    """A ball state violated its contract: off the boundary, on a vertex,
    or aimed out of the triangle."""


class CollinearityViolation(Exception):
    """Unfolded bounce points failed to line up; indicates a simulator bug."""


@dataclass(frozen=True, slots=True)
class TriangleConfig:
    """Unit equilateral triangle with the launch point O = (0, 0) on its bottom side.

    ``offset`` is the distance from vertex B to O; it must avoid 0, 1 (the
    corners) and 1/2 (the midpoint, which collides with the odd-period
    orbit family) unless ``allow_midpoint`` is set.
    """

    offset: Fraction
    allow_midpoint: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "offset", _frac(self.offset))
        if not 0 < self.offset < 1:
            raise ValueError(f"offset must lie strictly between 0 and 1, got {self.offset}")
        if self.offset == Fraction(1, 2) and not self.allow_midpoint:
            raise ValueError("offset 1/2 puts the launch point on the midpoint of the side")

    @property
    def vertices(self) -> tuple[RhombicPoint, RhombicPoint, RhombicPoint]:
        b = self.offset
        return (RhombicPoint(-b, 0), RhombicPoint(1 - b, 0), RhombicPoint(-b, 1))

    def side_line(self, side: int) -> GridLine:
        b = self.offset
        if side == 0:
            return GridLine(LineFamily.HORIZONTAL, Fraction(0))
        if side == 1:
            return GridLine(LineFamily.RIGHT, -b)
        if side == 2:
            return GridLine(LineFamily.LEFT, 1 - b)
        raise ValueError(f"side must be 0, 1 or 2, got {side}")

    def sides_containing(self, p: RhombicPoint) -> list[int]:
        return [side for side in (0, 1, 2) if self.side_line(side).contains(p)]

    def contains(self, p: RhombicPoint) -> bool:
        b = self.offset
        return p.y >= 0 and p.x >= -b and p.x + p.y <= 1 - b


@dataclass(frozen=True, slots=True)
class BallState:
    """Position on the boundary plus outgoing direction, direction normalized."""

    pos: RhombicPoint
    direction: RhombicVector

    def __post_init__(self) -> None:
        object.__setattr__(self, "direction", self.direction.reduced())


class Bounce(NamedTuple):
    point: RhombicPoint
    side: int
    angle: ExactAngle


@dataclass
class BouncePath:
    """A simulated (or folded) trajectory: bounce events plus post-bounce states.

    ``closed`` means the state after the final bounce equals ``start`` exactly.
    """

    start: BallState
    bounces: list[Bounce]
    states: list[BallState] = field(repr=False)
    closed: bool = False

    @property
    def bounce_count(self) -> int:
        return len(self.bounces)


def bounce_labels(path: BouncePath) -> list[int]:
    """Side labels (0 bottom, 1 right-family side, 2 left-family side) in bounce order."""
    return [bounce.side for bounce in path.bounces]


def fundamental_period(path: BouncePath) -> int:
    """Bounce count of the first return to the start state."""
    for k, state in enumerate(path.states, 1):
        if state == path.start:
            return k
    raise ValueError("path never returns to its start state")


def _validate_start(config: TriangleConfig, state: BallState) -> None:
    p, d = state.pos, state.direction
    sides = config.sides_containing(p)
    if not config.contains(p) or len(sides) != 1:
        raise NotOnBoundary(
            f"start position ({p.x}, {p.y}) must lie on exactly one side, off the corners"
        )
    inward = {
        0: d.dy > 0,
        1: d.dx > 0,
        2: d.dx + d.dy < 0,
    }[sides[0]]
    if not inward:
        raise NotOnBoundary(f"direction ({d.dx}, {d.dy}) does not point into the triangle")


def _first_exit(config: TriangleConfig, state: BallState, step: int) -> tuple[Fraction, int]:
    """Ray parameter and side of the next boundary hit; a tie means a corner."""
    p, d = state.pos, state.direction
    b = config.offset
    hits: list[tuple[Fraction, int]] = []
    if d.dy != 0:
        t = -p.y / d.dy
        if t > 0:
            hits.append((t, 0))
    if d.dx != 0:
        t = (-b - p.x) / d.dx
        if t > 0:
            hits.append((t, 1))
    spread = d.dx + d.dy
    if spread != 0:
        t = (1 - b - p.x - p.y) / spread
        if t > 0:
            hits.append((t, 2))
    t_min, side = min(hits)
    if sum(1 for t, _ in hits if t == t_min) > 1:
        raise VertexHit(p + t_min * d, step)
    return t_min, side


def simulate(
    config: TriangleConfig,
    start: BallState,
    max_bounces: int,
    stop_at_closure: bool = True,
) -> BouncePath:
    """Trace the ball until it returns to its start state or runs out of bounces.

    With ``stop_at_closure`` the path ends at the first exact recurrence of
    the full state; without it, exactly ``max_bounces`` bounces are traced
    and ``closed`` reports whether the final state equals the start.
    Raises :class:`VertexHit` if the ball meets a corner.
    """
    if not 1 <= max_bounces <= HARD_BOUNCE_CAP:
        raise ValueError(f"max_bounces must be in 1..{HARD_BOUNCE_CAP}, got {max_bounces}")
    _validate_start(config, start)
    state = start
    bounces: list[Bounce] = []
    states: list[BallState] = []
    for step in range(max_bounces):
        t, side = _first_exit(config, state, step)
        hit = state.pos + t * state.direction
        family = _SIDE_FAMILY[side]
        bounces.append(Bounce(hit, side, incidence_angle(state.direction, family)))
        # The reflection matrices are unimodular, so a reduced integer
        # direction stays reduced; BallState re-normalizes anyway.
        state = BallState(hit, reflect_direction(family, state.direction))
        states.append(state)
        if stop_at_closure and state == start:
            break
    return BouncePath(start, bounces, states, closed=states[-1] == start)


def default_offset(c: OrbitClass) -> Fraction:
    """A guaranteed-nonsingular offset for class ``c``.

    1/(2y+1) reduces with denominator 2y+1 > y, while every singular offset
    has denominator dividing y, so they can never coincide.
    """
    c.validate()
    return Fraction(1, 2 * c.y + 1)


def second_offset(c: OrbitClass) -> Fraction:
    """A second nonsingular offset, distinct from :func:`default_offset`."""
    c.validate()
    return Fraction(1, 2 * c.y + 3)


def singular_offsets(c: OrbitClass) -> frozenset[Fraction]:
    """Offsets b for which the orbit of ``c`` would run into a corner.

    The unfolded segment (0,0)->(x,y) meets a grid vertex (m-b, j) exactly
    when b = -jx/y (mod 1) for some j in 1..y-1, so the singular set is
    finite and empty for x = 0 (no interior horizontal-line vertex can be
    reached) and for y = 1.
    """
    c.validate()
    found = set()
    for j in range(1, c.y):
        b = Fraction((-j * c.x) % c.y, c.y)
        if b != 0:
            found.add(b)
    return frozenset(found)


def trace_class(c: OrbitClass, offset: Fraction | None = None) -> BouncePath:
    """The full one-period bounce path of class ``c``: exactly 2(x+y) bounces.

    An iterate class retraces its primitive base, so closure is checked at
    the full period rather than at the first state recurrence.
    """
    c.validate()
    b = default_offset(c) if offset is None else _frac(offset)
    config = TriangleConfig(b)
    start = BallState(ORIGIN, RhombicVector(c.x, c.y))
    return simulate(config, start, max_bounces=period(c), stop_at_closure=False)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one class's predicted behavior against simulation."""

    orbit: OrbitClass
    offset: Fraction
    path: BouncePath
    repeats: int
    expected_period: int
    expected_fundamental: int
    first_closure: int | None
    checks: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)


def verify_class(c: OrbitClass, offset: Fraction | None = None) -> VerificationReport:
    """Simulate class ``c`` and check period, closure, recurrence and angles.

    Runs one full period (2(x+y) bounces) plus a closure-seeking pass with
    headroom of twice the period, so a failure to close surfaces as a
    failed check instead of an endless loop.
    """
    c.validate()
    b = default_offset(c) if offset is None else _frac(offset)
    expected = period(c)
    repeats = iterate_decomposition(c).repeats
    expected_fundamental = expected // repeats

    path = trace_class(c, b)
    seeker = simulate(
        TriangleConfig(b),
        BallState(ORIGIN, RhombicVector(c.x, c.y)),
        max_bounces=2 * expected + 8,
        stop_at_closure=True,
    )
    first_closure = seeker.bounce_count if seeker.closed else None

    observed_angles = frozenset(bounce.angle for bounce in path.bounces)
    profile = angle_profile(c)
    in_band = [a for a in observed_angles if a.within(Fraction(1, 3), Fraction(3))]

    checks = (
        ("closes after exactly one period", path.closed and path.bounce_count == expected),
        ("first recurrence at period/repeats", first_closure == expected_fundamental),
        ("recurrence scan agrees", _scan_fundamental(path) == expected_fundamental),
        ("realized angles match profile", observed_angles == profile.angles == realized_angles(c)),
        ("exactly one angle in [30, 60] degrees", len(in_band) == 1),
    )
    return VerificationReport(
        orbit=c,
        offset=b,
        path=path,
        repeats=repeats,
        expected_period=expected,
        expected_fundamental=expected_fundamental,
        first_closure=first_closure,
        checks=checks,
    )


def _scan_fundamental(path: BouncePath) -> int | None:
    try:
        return fundamental_period(path)
    except ValueError:
        return None


# ---------------------------------------------------------------------------
# Unfolding machinery: affine maps with exact rational entries.


@dataclass(frozen=True, slots=True)
class AffineMap:
    """(x, y) -> (a x + b y + e, c x + d y + f), all entries exact."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    f: Fraction

    @staticmethod
    def identity() -> "AffineMap":
        one, zero = Fraction(1), Fraction(0)
        return AffineMap(one, zero, zero, one, zero, zero)

    def apply(self, p: RhombicPoint) -> RhombicPoint:
        return RhombicPoint(
            self.a * p.x + self.b * p.y + self.e,
            self.c * p.x + self.d * p.y + self.f,
        )

    def apply_vector(self, v: RhombicVector) -> RhombicVector:
        return RhombicVector(self.a * v.dx + self.b * v.dy, self.c * v.dx + self.d * v.dy)

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self after other: (self . other)(p) = self(other(p))."""
        return AffineMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            self.a * other.e + self.b * other.f + self.e,
            self.c * other.e + self.d * other.f + self.f,
        )


def reflection_map(line: GridLine) -> AffineMap:
    """The grid-line reflection as an affine map (same formulas as rhombic.reflect)."""
    c = line.offset
    zero, one = Fraction(0), Fraction(1)
    if line.family is LineFamily.HORIZONTAL:
        return AffineMap(one, one, zero, -one, -c, 2 * c)
    if line.family is LineFamily.RIGHT:
        return AffineMap(-one, zero, one, one, 2 * c, -c)
    return AffineMap(zero, -one, -one, zero, c, c)


def _point_on(line: GridLine, t: Rational) -> RhombicPoint:
    t = _frac(t)
    if line.family is LineFamily.HORIZONTAL:
        return RhombicPoint(t, line.offset)
    if line.family is LineFamily.RIGHT:
        return RhombicPoint(line.offset, t)
    return RhombicPoint(t, line.offset - t)


def transform_line(m: AffineMap, line: GridLine) -> GridLine:
    """Image of a grid line under a grid-preserving affine map."""
    q1 = m.apply(_point_on(line, 0))
    q2 = m.apply(_point_on(line, 1))
    if q1.y == q2.y:
        return GridLine(LineFamily.HORIZONTAL, q1.y)
    if q1.x == q2.x:
        return GridLine(LineFamily.RIGHT, q1.x)
    if q1.x + q1.y == q2.x + q2.y:
        return GridLine(LineFamily.LEFT, q1.x + q1.y)
    raise AssertionError(f"map does not preserve the grid: {m!r}")


class Crossing(NamedTuple):
    """One grid-line crossing of the unfolded segment, at ray parameter ``s``."""

    s: Fraction
    line: GridLine
    point: RhombicPoint


def segment_crossings(c: OrbitClass, offset: Fraction | None = None) -> list[Crossing]:
    """All grid-line crossings of the segment (0,0)->(x,y), ordered by parameter.

    The grid is offset by b: lines y = j, x = m - b, x + y = m - b.  The
    segment crosses y horizontal lines, x right-family lines and x + y
    left-family lines, 2(x+y) in total (the endpoint counts, the start does
    not).  Two crossings sharing a parameter meet at a grid vertex: VertexHit.
    """
    c.validate()
    b = default_offset(c) if offset is None else _frac(offset)
    if not 0 < b < 1:
        raise ValueError(f"offset must lie strictly between 0 and 1, got {b}")
    total = c.x + c.y
    crossings: list[Crossing] = []

    def at(s: Fraction, family: LineFamily, line_offset: Fraction) -> Crossing:
        return Crossing(s, GridLine(family, line_offset), RhombicPoint(s * c.x, s * c.y))

    for j in range(1, c.y + 1):
        crossings.append(at(Fraction(j, c.y), LineFamily.HORIZONTAL, Fraction(j)))
    for m in range(1, c.x + 1):
        crossings.append(at((m - b) / c.x, LineFamily.RIGHT, m - b))
    for m in range(1, total + 1):
        crossings.append(at((m - b) / total, LineFamily.LEFT, m - b))

    crossings.sort(key=lambda cr: cr.s)
    for prev, nxt in zip(crossings, crossings[1:]):
        if prev.s == nxt.s:
            raise VertexHit(prev.point, 0)
    return crossings


def fold_segment(c: OrbitClass, offset: Fraction | None = None) -> BouncePath:
    """Build the bounce path of class ``c`` by folding its unfolded segment.

    Walks the crossings in order, mapping each back into the base triangle
    through the accumulated composition of crossed-line reflections.  This
    never runs the simulator, yet must reproduce its path bounce for bounce.
    """
    c.validate()
    b = default_offset(c) if offset is None else _frac(offset)
    config = TriangleConfig(b)
    direction = RhombicVector(c.x, c.y)
    start = BallState(ORIGIN, direction)

    acc = AffineMap.identity()
    bounces: list[Bounce] = []
    states: list[BallState] = []
    for crossing in segment_crossings(c, b):
        folded = acc.apply(crossing.point)
        sides = config.sides_containing(folded)
        if len(sides) != 1 or not config.contains(folded):
            raise AssertionError(f"folded bounce point off the boundary: {folded!r}")
        # Angles are preserved by the folding isometries, so the crossing
        # angle in the unfolded picture is the incidence angle at the side.
        angle = incidence_angle(direction, crossing.line.family)
        bounces.append(Bounce(folded, sides[0], angle))
        acc = acc.compose(reflection_map(crossing.line))
        states.append(BallState(folded, acc.apply_vector(direction)))
    return BouncePath(start, bounces, states, closed=states[-1] == start)


def unfold(path: BouncePath, config: TriangleConfig) -> RhombicVector:
    """Straighten a simulated path; returns the terminal point relative to start.

    Reflects each successive piece back out into the plane and checks that
    every unfolded bounce point lies on the launch ray, in increasing order.
    Any deviation raises :class:`CollinearityViolation` (a simulator bug if
    the path came from :func:`simulate`).  For a one-period path of class
    (x, y) launched at O the result is exactly the vector (x, y).
    """
    p0, d0 = path.start.pos, path.start.direction
    acc = AffineMap.identity()
    last_s = Fraction(0)
    terminal = p0
    for bounce in path.bounces:
        q = acc.apply(bounce.point)
        off = q - p0
        if off.cross(d0) != 0:
            raise CollinearityViolation(f"unfolded bounce {q!r} is off the launch ray")
        s = off.dx / d0.dx if d0.dx != 0 else off.dy / d0.dy
        if s <= last_s:
            raise CollinearityViolation(f"unfolded bounce {q!r} does not advance along the ray")
        last_s = s
        mirror = transform_line(acc, config.side_line(bounce.side))
        if not mirror.contains(q):
            raise CollinearityViolation(f"unfolded bounce {q!r} misses its mirror line")
        acc = reflection_map(mirror).compose(acc)
        terminal = q
    return terminal - p0


def simulate_fagnano(k: int) -> BouncePath:
    """The k-th odd-period orbit: period 3 path retraced 2k-1 times.

    Start at the midpoint of the bottom side aimed 60 degrees up; with
    offset 1/3 the launch point O stays clear of the midpoint.  The result
    closes after 3(2k-1) bounces with fundamental period 3.
    """
    if k < 1:
        raise ValueError(f"odd-orbit index must be >= 1, got {k}")
    config = TriangleConfig(Fraction(1, 3))
    start = BallState(RhombicPoint(Fraction(1, 6), 0), RhombicVector(0, 1))
    path = simulate(config, start, max_bounces=3 * (2 * k - 1), stop_at_closure=False)
    if not path.closed or fundamental_period(path) != 3:
        raise AssertionError("odd-period construction failed to close with period 3")
    return path
