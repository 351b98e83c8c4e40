"""SVG rendering of bounce paths (folded) and unfolded grid segments.

Output is plain SVG 1.1 built by string assembly: every figure is a handful
of lines, polylines, polygons and circles.  Rhombic coordinates are mapped
to Cartesian floats only here, at the drawing boundary; the y axis is
flipped so figures appear with the triangle's apex pointing up.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .billiard import BouncePath, TriangleConfig, default_offset, segment_crossings
from .orbits import OrbitClass
from .rhombic import LineFamily, RhombicPoint, _frac, to_cartesian


@dataclass(frozen=True)
class RenderOptions:
    """Cosmetic knobs; defaults give a readable figure about 160 px per unit."""

    scale: float = 160.0
    margin: float = 0.05  # border as a fraction of content extent
    stroke_width: float = 1.6
    grid_width: float = 0.7
    triangle_color: str = "#1a1a1a"
    orbit_color: str = "#c0392b"
    grid_color: str = "#9aa0a6"
    segment_color: str = "#1a5fb4"
    shade_color: str = "#f4d35e"
    shade_opacity: float = 0.55
    dot_radius: float = 3.0


def _fmt(value: float) -> str:
    return f"{value:.6f}"


class SvgDocument:
    """A minimal SVG 1.1 builder with content-bounds tracking."""

    def __init__(self, margin: float = 0.05):
        self._margin = margin
        self._elements: list[str] = []
        self._min_x = self._min_y = float("inf")
        self._max_x = self._max_y = float("-inf")

    def _track(self, x: float, y: float) -> None:
        self._min_x = min(self._min_x, x)
        self._max_x = max(self._max_x, x)
        self._min_y = min(self._min_y, y)
        self._max_y = max(self._max_y, y)

    def _points_attr(self, points: list[tuple[float, float]]) -> str:
        for x, y in points:
            self._track(x, y)
        return " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)

    def add_line(
        self, x1: float, y1: float, x2: float, y2: float,
        color: str, width: float, css_class: str = "",
    ) -> None:
        self._track(x1, y1)
        self._track(x2, y2)
        cls = f' class="{css_class}"' if css_class else ""
        self._elements.append(
            f'<line{cls} x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"'
            f' stroke="{color}" stroke-width="{_fmt(width)}"/>'
        )

    def add_polyline(
        self, points: list[tuple[float, float]], color: str, width: float,
        css_class: str = "",
    ) -> None:
        cls = f' class="{css_class}"' if css_class else ""
        self._elements.append(
            f'<polyline{cls} points="{self._points_attr(points)}" fill="none"'
            f' stroke="{color}" stroke-width="{_fmt(width)}"'
            f' stroke-linejoin="round" stroke-linecap="round"/>'
        )

    def add_polygon(
        self, points: list[tuple[float, float]], fill: str,
        opacity: float | None = None, stroke: str | None = None,
        width: float | None = None, css_class: str = "",
    ) -> None:
        cls = f' class="{css_class}"' if css_class else ""
        attrs = [f'points="{self._points_attr(points)}"', f'fill="{fill}"']
        if opacity is not None:
            attrs.append(f'fill-opacity="{_fmt(opacity)}"')
        if stroke is not None:
            attrs.append(f'stroke="{stroke}" stroke-width="{_fmt(width or 1.0)}"')
        self._elements.append(f"<polygon{cls} " + " ".join(attrs) + "/>")

    def add_circle(
        self, cx: float, cy: float, r: float, fill: str, css_class: str = "",
    ) -> None:
        self._track(cx - r, cy - r)
        self._track(cx + r, cy + r)
        cls = f' class="{css_class}"' if css_class else ""
        self._elements.append(
            f'<circle{cls} cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" fill="{fill}"/>'
        )

    @property
    def width(self) -> float:
        span = self._max_x - self._min_x
        return span * (1 + 2 * self._margin)

    @property
    def height(self) -> float:
        span = self._max_y - self._min_y
        return span * (1 + 2 * self._margin)

    def to_xml(self) -> str:
        if not self._elements:
            raise ValueError("empty document")
        pad_x = (self._max_x - self._min_x) * self._margin
        pad_y = (self._max_y - self._min_y) * self._margin
        view = (
            f"{_fmt(self._min_x - pad_x)} {_fmt(self._min_y - pad_y)} "
            f"{_fmt(self.width)} {_fmt(self.height)}"
        )
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_fmt(self.width)}" height="{_fmt(self.height)}" viewBox="{view}">'
        )
        return head + "\n" + "\n".join(self._elements) + "\n</svg>\n"


def _project(p: RhombicPoint, scale: float) -> tuple[float, float]:
    cart = to_cartesian(p)
    return (cart.x * scale, -cart.y * scale)  # SVG y grows downward


def render_folded(
    path: BouncePath, config: TriangleConfig, options: RenderOptions | None = None,
) -> SvgDocument:
    """Triangle outline plus the closed bounce polyline of a simulated path.

    The polyline runs start, bounce 1, ..., bounce n; for a closed path the
    final bounce coincides with the start, so first and last coordinates
    match and the polyline has one corner per bounce.
    """
    opt = options or RenderOptions()
    doc = SvgDocument(margin=opt.margin)
    triangle = [_project(v, opt.scale) for v in config.vertices]
    doc.add_polygon(
        triangle, fill="none", stroke=opt.triangle_color,
        width=opt.stroke_width, css_class="triangle",
    )
    orbit = [_project(path.start.pos, opt.scale)]
    orbit.extend(_project(bounce.point, opt.scale) for bounce in path.bounces)
    doc.add_polyline(orbit, opt.orbit_color, opt.stroke_width, css_class="orbit")
    doc.add_circle(*orbit[0], opt.dot_radius, opt.orbit_color, css_class="launch")
    return doc


def render_unfolded(
    c: OrbitClass, offset: Fraction | None = None,
    options: RenderOptions | None = None,
) -> SvgDocument:
    """The unfolded picture of a class: grid patch, segment, crossed tiles.

    Shades the x + y rhombic tiles (grid cells) the segment passes through,
    draws the triangular grid over the patch they span, then the segment
    from the origin to (x, y) with its endpoints dotted.
    """
    opt = options or RenderOptions()
    c.validate()
    b = default_offset(c) if offset is None else _frac(offset)
    crossings = segment_crossings(c, b)

    # Cell walk: a right-family crossing steps one cell east, an interior
    # horizontal crossing one cell north; left-family crossings stay inside
    # a cell (they are the tile diagonals).
    cells = [(0, 0)]
    m = j = 0
    for crossing in crossings:
        if crossing.line.family is LineFamily.RIGHT:
            m += 1
            cells.append((m, j))
        elif crossing.line.family is LineFamily.HORIZONTAL and crossing.s < 1:
            j += 1
            cells.append((m, j))

    doc = SvgDocument(margin=opt.margin)
    for cm, cj in cells:
        corners = [
            RhombicPoint(cm - b, cj),
            RhombicPoint(cm + 1 - b, cj),
            RhombicPoint(cm + 1 - b, cj + 1),
            RhombicPoint(cm - b, cj + 1),
        ]
        doc.add_polygon(
            [_project(p, opt.scale) for p in corners],
            fill=opt.shade_color, opacity=opt.shade_opacity, css_class="tile",
        )

    x_lo, x_hi = -b, Fraction(c.x + 1) - b
    y_lo, y_hi = Fraction(0), Fraction(c.y)
    for jj in range(0, c.y + 1):
        p1, p2 = RhombicPoint(x_lo, jj), RhombicPoint(x_hi, jj)
        doc.add_line(*_project(p1, opt.scale), *_project(p2, opt.scale),
                     opt.grid_color, opt.grid_width, css_class="grid")
    for mm in range(0, c.x + 2):
        p1, p2 = RhombicPoint(mm - b, y_lo), RhombicPoint(mm - b, y_hi)
        doc.add_line(*_project(p1, opt.scale), *_project(p2, opt.scale),
                     opt.grid_color, opt.grid_width, css_class="grid")
    for mm in range(0, c.x + c.y + 2):
        const = mm - b
        seg_lo = max(y_lo, const - x_hi)
        seg_hi = min(y_hi, const - x_lo)
        if seg_lo > seg_hi:
            continue
        p1 = RhombicPoint(const - seg_lo, seg_lo)
        p2 = RhombicPoint(const - seg_hi, seg_hi)
        doc.add_line(*_project(p1, opt.scale), *_project(p2, opt.scale),
                     opt.grid_color, opt.grid_width, css_class="grid")

    origin = _project(RhombicPoint(0, 0), opt.scale)
    target = _project(RhombicPoint(c.x, c.y), opt.scale)
    doc.add_line(*origin, *target, opt.segment_color, opt.stroke_width,
                 css_class="segment")
    doc.add_circle(*origin, opt.dot_radius, opt.segment_color, css_class="endpoint")
    doc.add_circle(*target, opt.dot_radius, opt.segment_color, css_class="endpoint")
    return doc
