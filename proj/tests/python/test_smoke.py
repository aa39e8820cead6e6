"""Smoke tests for the polyvenn extension module."""

from fractions import Fraction

import pytest

import polyvenn as pv


def test_layouts_and_areas():
    assert pv.layout_naive(5).area() == 44
    d = pv.layout_scd(5)
    assert d.area() == 34
    assert pv.bounding_box(pv.layout_scd(3)) == (3, 5)
    assert pv.minimum_area(7) == 127


def test_validation():
    report = pv.validate_venn(pv.layout_scd(4))
    assert report.overall
    assert [c.name for c in report.checks] == [
        "curve_count_positive",
        "all_masks_present",
        "masks_unique_regions",
        "empty_region_connected",
        "curves_connected",
        "curves_hole_free",
        "curve_perimeters_simple",
    ]
    assert pv.is_minimum_area(pv.layout_scd(3))
    assert not pv.is_minimum_area(pv.layout_scd(5))


def test_grid_diagram_round_trip():
    row = pv.GridDiagram(2, [((0, 0), 1), ((1, 0), 3), ((2, 0), 2)])
    assert row.area() == 3
    assert row.mask_at((1, 0)) == 3
    assert row.mask_at((9, 9)) is None
    assert pv.parse_pvn(pv.serialize_pvn(row)) == row
    assert pv.curves_congruent(row)
    assert pv.is_minimum_bbox(row)


def test_renderers():
    d = pv.layout_scd(2)
    assert pv.render_ascii(d) == "1\n3\n2\n"
    svg = pv.render_svg(d)
    assert svg.count("<path ") == 2
    assert pv.render_svg(d) == svg


def test_scd():
    chains = pv.aigner_scd(6)
    assert len(chains) == 20
    assert pv.validate_scd(6, chains)["ok"]
    assert pv.christmas_tree_scd(3) == [[1, 5], [2, 3], [0, 4, 6, 7]]
    assert pv.lex_compare(0b001, 0b011) == -1


def test_counts():
    assert pv.count_fixed_polyominoes(4) == 19
    assert pv.count_free_polyominoes(4) == 5
    assert pv.count_column_convex(5) == 61
    assert pv.count_column_convex_bruteforce(6) == 196
    with pytest.raises(Exception):
        pv.count_fixed_polyominoes(9)


def test_polyomino_predicates():
    tromino = [(0, 0), (1, 0), (1, 1)]
    assert pv.is_edge_connected(tromino)
    assert pv.is_hole_free(tromino)
    assert len(pv.trace_perimeter(tromino)) == 8
    assert pv.convexity_class(tromino)["convex"]
    assert pv.canonical_free_form([(5, 7)]) == [(0, 0)]


def test_approximation_ratio():
    assert pv.approximation_ratio("scd", 10) == Fraction(1147, 1023)
    assert pv.approximation_ratio("naive", 5) == Fraction(44, 31)


def test_bound():
    assert all(pv.central_binomial_bound_holds(m) for m in range(1, 31))


def test_search():
    result = pv.search_min_area(2)
    assert result.status == "found"
    assert result.diagram.area() == 3
    assert pv.validate_venn(result.diagram).overall

    capped = pv.search_min_area(2, max_nodes=1)
    assert capped.status == "budget_hit"

    box = pv.search_fill_box(2, 3, 1)
    assert box.status == "found"
    assert pv.bounding_box(box.diagram) == (3, 1)
