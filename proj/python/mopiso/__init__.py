"""Isolating sets, domination, and guard placement on maximal outerplanar graphs."""

from ._mopiso import (
    BoundedSolution,
    ExactResult,
    GuardCertificate,
    Mop,
    MopError,
    SimplePolygon,
    closed_neighborhood,
    degree2_vertices,
    dominate_half_minus,
    dominate_third,
    exact_domination_number,
    exact_isolation_number,
    family_A,
    family_H,
    family_M,
    family_R,
    family_S,
    family_T,
    fan,
    is_dominating,
    is_isolating,
    isolate_best,
    isolate_order,
    isolate_order_minus_n2,
    isolate_order_plus_n2,
    isolate_small,
    mop_from_json,
    mop_to_json,
    place_guards,
    random_mop,
    reflex_chain_count,
    render_polygon_svg,
    render_svg,
    spiral_gallery,
    triangulate,
    verify_window_coverage,
)

__all__ = [
    "BoundedSolution",
    "ExactResult",
    "GuardCertificate",
    "Mop",
    "MopError",
    "SimplePolygon",
    "closed_neighborhood",
    "degree2_vertices",
    "dominate_half_minus",
    "dominate_third",
    "exact_domination_number",
    "exact_isolation_number",
    "family_A",
    "family_H",
    "family_M",
    "family_R",
    "family_S",
    "family_T",
    "fan",
    "is_dominating",
    "is_isolating",
    "isolate_best",
    "isolate_order",
    "isolate_order_minus_n2",
    "isolate_order_plus_n2",
    "isolate_small",
    "mop_from_json",
    "mop_to_json",
    "place_guards",
    "random_mop",
    "reflex_chain_count",
    "render_polygon_svg",
    "render_svg",
    "spiral_gallery",
    "triangulate",
    "verify_window_coverage",
]
