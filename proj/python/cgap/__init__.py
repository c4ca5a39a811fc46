"""Centroid gap of planar convex polygons.

The boundary centroid and the area centroid of a convex body differ, in any
direction, by at most one sixth of the width in that direction. This package
computes both centroids exactly for polygons and checks that bound together
with the inequalities behind it.
"""

from ._core import (
    CheckReport,
    ConvexPolygon,
    DegenerateInput,
    DomainError,
    InputError,
    InternalInvariantViolation,
    OutOfRange,
    SkippedDegenerate,
    area,
    area_centroid,
    boundary_centroid,
    chord_length,
    closed_form_gap,
    closed_form_ratio,
    convergence_table,
    diameter,
    gap_projection,
    gap_ratio,
    lemma_suite,
    maximize_ratio,
    normalize,
    perimeter,
    polygon_to_csv,
    polygon_to_json,
    profile,
    quintic_check,
    quintic_coefficients,
    random_convex_polygon,
    read_polygon_file,
    region_inequalities_check,
    sweep_csv,
    tan_inequality_check,
    triangle,
    width,
)

__version__ = "0.1.0"
