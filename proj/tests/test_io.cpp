#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include "polyvenn/io.hpp"
#include "polyvenn/layout.hpp"
#include "polyvenn/polyomino.hpp"

using namespace polyvenn;

TEST_CASE("serialize_pvn golden output") {
    CHECK(serialize_pvn(layout_scd(aigner_scd(2))) ==
          "pvn 1\n"
          "n 2\n"
          "rows 3\n"
          "cols 1\n"
          "origin 0 -1\n"
          "1\n"
          "3\n"
          "2\n");
    CHECK(serialize_pvn(GridDiagram(1)) ==
          "pvn 1\n"
          "n 1\n"
          "rows 0\n"
          "cols 0\n"
          "origin 0 0\n");
}

TEST_CASE("parse_pvn inverts serialize_pvn") {
    GridDiagram d2 = layout_scd(aigner_scd(2));
    CHECK(parse_pvn(serialize_pvn(d2)) == d2);
    CHECK(parse_pvn(serialize_pvn(GridDiagram(1))) == GridDiagram(1));

    for (int n = 3; n <= 8; ++n) {
        GridDiagram d = layout_naive(n);
        CHECK(parse_pvn(serialize_pvn(d)) == d);
    }
    for (int n = 2; n <= 8; ++n) {
        for (ScdMethod method : {ScdMethod::aigner, ScdMethod::christmas_tree}) {
            GridDiagram d = layout_scd(make_scd(n, method));
            CHECK(parse_pvn(serialize_pvn(d)) == d);
        }
    }
}

TEST_CASE("parse_pvn reports errors with line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_pvn(text);
        } catch (const PvnParseError& e) {
            return e.line;
        }
        return -1;
    };

    CHECK(line_of("pvn 2\nn 1\nrows 0\ncols 0\norigin 0 0\n") == 1);
    CHECK(line_of("pvn 1\nn 0\nrows 0\ncols 0\norigin 0 0\n") == 2);
    CHECK(line_of("pvn 1\nn 2\nrows 1\ncols 1\norigin 0 0\nG\n") == 6);
    CHECK(line_of("pvn 1\nn 2\nrows 1\ncols 1\norigin 0 0\n1F\n") == 6);
    // Mask bit 2 needs n >= 3.
    CHECK(line_of("pvn 1\nn 2\nrows 1\ncols 1\norigin 0 0\n4\n") == 6);
    CHECK(line_of("pvn 1\nn 2\nrows 1\ncols 1\norigin 0 0\n0\n") == 6);
    // Ragged row.
    CHECK(line_of("pvn 1\nn 2\nrows 2\ncols 2\norigin 0 0\n1 2\n3\n") == 7);
    CHECK(line_of("pvn 1\nn 1\nrows 0\ncols 0\norigin 0 0\nstray\n") == 6);
    CHECK(line_of("pvn 1\nn 2\nrows 1\ncols 1\norigin x 0\n1\n") == 5);

    // A well-formed hand-written file parses.
    GridDiagram d = parse_pvn("pvn 1\nn 2\nrows 1\ncols 3\norigin 0 0\n1 3 2\n");
    CHECK(d.area() == 3);
    CHECK(d.mask_at({1, 0}) == SubsetMask{3});
}

TEST_CASE("render_ascii") {
    CHECK(render_ascii(layout_scd(aigner_scd(2))) == "1\n3\n2\n");
    CHECK(render_ascii(GridDiagram(5, {{{3, 3}, SubsetMask{0b11111}}})) == "1f\n");
    CHECK(render_ascii(GridDiagram(1)).empty());
}

TEST_CASE("ascii grid dimensions equal the bounding box") {
    for (int n = 2; n <= 6; ++n) {
        GridDiagram d = layout_scd(aigner_scd(n));
        Box box = bounding_box(d);
        std::string text = render_ascii(d);
        int lines = 0;
        std::size_t pos = 0;
        while ((pos = text.find('\n', pos)) != std::string::npos) {
            ++lines;
            ++pos;
        }
        CHECK(lines == box.height());
        // Token count of the first line.
        std::istringstream first(text.substr(0, text.find('\n')));
        int tokens = 0;
        std::string token;
        while (first >> token) ++tokens;
        CHECK(tokens == box.width());
    }
}

TEST_CASE("render_svg emits one path per curve") {
    GridDiagram row(2, {{{0, 0}, SubsetMask{0b01}},
                        {{1, 0}, SubsetMask{0b11}},
                        {{2, 0}, SubsetMask{0b10}}});
    std::string svg = render_svg(row);
    std::size_t paths = 0, pos = 0;
    while ((pos = svg.find("<path ", pos)) != std::string::npos) {
        ++paths;
        ++pos;
    }
    CHECK(paths == 2);
    // Curve A is a domino: 6 unit segments before the inset.
    CHECK(trace_perimeter(curve_cells(row, 0)).edge_count() == 6);

    std::string svg3 = render_svg(layout_scd(aigner_scd(3)));
    paths = 0;
    pos = 0;
    while ((pos = svg3.find("<path ", pos)) != std::string::npos) {
        ++paths;
        ++pos;
    }
    CHECK(paths == 3);
    // 3 x 5 cells at 32 units plus a 16-unit margin each side.
    CHECK(svg3.find("width=\"128\" height=\"192\"") != std::string::npos);
}

TEST_CASE("render_svg rejects invalid diagrams by first failed check") {
    GridDiagram invalid(2, {{{0, 0}, SubsetMask{1}}});
    CHECK_THROWS_WITH_AS(render_svg(invalid), doctest::Contains("all_masks_present"),
                         std::invalid_argument);
}

TEST_CASE("renderers are byte-deterministic") {
    GridDiagram d = layout_scd(christmas_tree_scd(4));
    CHECK(render_svg(d) == render_svg(d));
    CHECK(render_ascii(d) == render_ascii(d));
    CHECK(serialize_pvn(d) == serialize_pvn(d));
}
