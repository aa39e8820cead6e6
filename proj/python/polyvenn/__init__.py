"""Venn diagrams whose curves are polyomino perimeters.

Thin wrapper around the C++ extension module; see the package README for the
file format and CLI counterparts.
"""

from polyvenn._core import (  # noqa: F401
    GridDiagram,
    SearchResult,
    ValidationCheck,
    ValidationReport,
    aigner_scd,
    approximation_ratio,
    bounding_box,
    canonical_free_form,
    central_binomial_bound_holds,
    christmas_tree_scd,
    convexity_class,
    count_column_convex,
    count_column_convex_bruteforce,
    count_fixed_polyominoes,
    count_free_polyominoes,
    curve_cells,
    curves_congruent,
    diagram_area,
    format_report,
    is_edge_connected,
    is_hole_free,
    is_minimum_area,
    is_minimum_bbox,
    layout_naive,
    layout_scd,
    layout_scd_chains,
    lex_compare,
    mask_letters,
    minimum_area,
    parse_pvn,
    region_cells,
    render_ascii,
    render_svg,
    search_fill_box,
    search_min_area,
    serialize_pvn,
    trace_perimeter,
    validate_scd,
    validate_venn,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
