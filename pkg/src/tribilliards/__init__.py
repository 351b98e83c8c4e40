"""Periodic billiard orbits on an equilateral triangle.

Exact-arithmetic tools to classify, enumerate, count, simulate and render
the periodic trajectories of a billiard ball bouncing inside an equilateral
triangle.  Orbit classes are lattice points (x, y) with 0 <= x <= y,
x = y (mod 3) and x + y >= 2; counting formulas and an exact simulator
cross-validate each other throughout.
"""

from .billiard import (
    AffineMap,
    BallState,
    Bounce,
    BouncePath,
    CollinearityViolation,
    Crossing,
    NotOnBoundary,
    TriangleConfig,
    VerificationReport,
    VertexHit,
    bounce_labels,
    default_offset,
    fold_segment,
    fundamental_period,
    second_offset,
    segment_crossings,
    simulate,
    simulate_fagnano,
    singular_offsets,
    trace_class,
    transform_line,
    unfold,
    verify_class,
)
from .counting import (
    CountRow,
    PartitionPair,
    class_to_partition,
    count_classes,
    count_classes_mod6,
    count_partitions,
    count_primitive,
    count_primitive_oracle,
    divisors,
    gf_coefficients,
    mobius,
    partition_to_class,
    table,
)
from .orbits import (
    AngleKind,
    AngleProfile,
    Decomposition,
    OddOrbit,
    OrbitClass,
    angle_profile,
    classify_odd_period,
    enumerate_classes,
    example_primitive,
    is_primitive,
    iterate_decomposition,
    length,
    length_squared,
    period,
    realized_angles,
    sample_orbit,
)
from .render import RenderOptions, SvgDocument, render_folded, render_unfolded
from .rhombic import (
    CartesianPoint,
    ExactAngle,
    GridLine,
    LineFamily,
    RhombicPoint,
    RhombicVector,
    dot,
    family_coordinate,
    family_direction,
    incidence_angle,
    norm_squared,
    reflect,
    reflect_direction,
    to_cartesian,
)

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "AngleKind",
    "AngleProfile",
    "BallState",
    "Bounce",
    "BouncePath",
    "CartesianPoint",
    "CollinearityViolation",
    "CountRow",
    "Crossing",
    "Decomposition",
    "ExactAngle",
    "GridLine",
    "LineFamily",
    "NotOnBoundary",
    "OddOrbit",
    "OrbitClass",
    "PartitionPair",
    "RenderOptions",
    "RhombicPoint",
    "RhombicVector",
    "SvgDocument",
    "TriangleConfig",
    "VerificationReport",
    "VertexHit",
    "angle_profile",
    "bounce_labels",
    "class_to_partition",
    "classify_odd_period",
    "count_classes",
    "count_classes_mod6",
    "count_partitions",
    "count_primitive",
    "count_primitive_oracle",
    "default_offset",
    "divisors",
    "dot",
    "enumerate_classes",
    "example_primitive",
    "family_coordinate",
    "family_direction",
    "fold_segment",
    "fundamental_period",
    "gf_coefficients",
    "incidence_angle",
    "is_primitive",
    "iterate_decomposition",
    "length",
    "length_squared",
    "mobius",
    "norm_squared",
    "partition_to_class",
    "period",
    "realized_angles",
    "reflect",
    "reflect_direction",
    "render_folded",
    "render_unfolded",
    "sample_orbit",
    "second_offset",
    "segment_crossings",
    "simulate",
    "simulate_fagnano",
    "singular_offsets",
    "table",
    "to_cartesian",
    "trace_class",
    "transform_line",
    "unfold",
    "verify_class",
]
