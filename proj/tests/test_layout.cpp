#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "polyvenn/layout.hpp"
#include "polyvenn/polyomino.hpp"
#include "polyvenn/validation.hpp"

using namespace polyvenn;
using boost::multiprecision::cpp_rational;

TEST_CASE("naive layout areas") {
    GridDiagram d5 = layout_naive(5);
    CHECK(d5.area() == 44);
    CHECK(d5.area() - region_cells(d5, full_mask(5)).size() == 30);  // perimeter cells
    CHECK(region_cells(d5, full_mask(5)).size() == 14);              // 1 x 14 rectangle

    CHECK(layout_naive(3).area() == 8);
    CHECK(layout_naive(4).area() == 20);
    CHECK_THROWS_AS(layout_naive(2), std::invalid_argument);
}

TEST_CASE("naive layout arrangement: clockwise from above the origin, ascending masks") {
    GridDiagram d = layout_naive(3);
    auto mask_bits = [&d](int x, int y) { return d.mask_at({x, y})->bits; };
    CHECK(mask_bits(0, 0) == 0b111);
    CHECK(mask_bits(1, 0) == 0b111);
    CHECK(mask_bits(0, 1) == 1);
    CHECK(mask_bits(1, 1) == 2);
    CHECK(mask_bits(2, 0) == 3);
    CHECK(mask_bits(1, -1) == 4);
    CHECK(mask_bits(0, -1) == 5);
    CHECK(mask_bits(-1, 0) == 6);
}

TEST_CASE("christmas-tree layout slot order is deterministic") {
    GridDiagram d = layout_scd(christmas_tree_scd(4));
    Box b = bounding_box(d);
    CHECK(b.width() == 8);
    CHECK(b.height() == 7);
    CHECK(d.mask_at({0, 1}) == SubsetMask{5});
    CHECK(d.mask_at({1, 3}) == SubsetMask{1});
    CHECK(d.mask_at({4, 0}) == SubsetMask{8});
    CHECK(d.mask_at({-3, 0}) == SubsetMask{4});
}

TEST_CASE("naive layout is a valid diagram with the formula area") {
    for (int n = 3; n <= 10; ++n) {
        GridDiagram d = layout_naive(n);
        CHECK(d.area() == (1u << n) + (1u << (n - 1)) - 4);
        CHECK(validate_venn(d).overall);
    }
}

TEST_CASE("scd layout areas") {
    CHECK(layout_scd(aigner_scd(5)).area() == 34);
    CHECK(layout_scd(aigner_scd(4)).area() == 16);

    GridDiagram d3 = layout_scd(aigner_scd(3));
    CHECK(d3.area() == 7);
    CHECK(is_minimum_area(d3));

    GridDiagram d2 = layout_scd(aigner_scd(2));
    CHECK(d2.area() == 3);
    CHECK(is_minimum_area(d2));
}

TEST_CASE("scd layout rejects bad input") {
    CHECK_THROWS_AS(layout_scd(aigner_scd(1)), std::invalid_argument);
    ChainDecomposition broken = aigner_scd(4);
    broken.chains.pop_back();
    CHECK_THROWS_AS(layout_scd(broken), std::invalid_argument);
}

TEST_CASE("scd layout validity, area formula and column-convex curves") {
    for (int n = 2; n <= 10; ++n) {
        for (ScdMethod method : {ScdMethod::aigner, ScdMethod::christmas_tree}) {
            ChainDecomposition dec = make_scd(n, method);
            GridDiagram d = layout_scd(dec);
            int chain_count = static_cast<int>(dec.chains.size());
            std::size_t width = std::max(1, (chain_count - 1) / 2);
            CHECK(d.area() == width + (1u << n) - 2);
            CHECK(validate_venn(d).overall);
            for (int i = 0; i < n; ++i)
                CHECK(convexity_class(curve_cells(d, i)).column_convex);
        }
    }
}

TEST_CASE("every curve of a valid diagram has at least 2^(n-1) cells") {
    for (int n = 2; n <= 8; ++n) {
        GridDiagram d = layout_scd(aigner_scd(n));
        for (int i = 0; i < n; ++i)
            CHECK(curve_cells(d, i).size() >= (1u << (n - 1)));
    }
    for (int n = 3; n <= 8; ++n) {
        GridDiagram d = layout_naive(n);
        for (int i = 0; i < n; ++i)
            CHECK(curve_cells(d, i).size() >= (1u << (n - 1)));
    }
    // Equality in minimum-area diagrams.
    GridDiagram d3 = layout_scd(aigner_scd(3));
    for (int i = 0; i < 3; ++i) CHECK(curve_cells(d3, i).size() == 4);
}

TEST_CASE("minimum_area") {
    CHECK(minimum_area(2) == 3);
    CHECK(minimum_area(7) == 127);
    CHECK(minimum_area(1) == 1);
    CHECK_THROWS_AS(minimum_area(0), std::invalid_argument);
}

TEST_CASE("approximation ratios, exact rationals") {
    CHECK(approximation_ratio(LayoutMethod::naive, 5) == cpp_rational(44, 31));
    CHECK(approximation_ratio(LayoutMethod::scd, 10) == cpp_rational(1147, 1023));
    CHECK(approximation_ratio(LayoutMethod::scd, 16) == cpp_rational(71968, 65535));

    for (int n = 3; n <= 20; ++n)
        CHECK(approximation_ratio(LayoutMethod::naive, n) < cpp_rational(3, 2));
    for (int n = 4; n <= 20; ++n)
        CHECK(approximation_ratio(LayoutMethod::scd, n) <
              approximation_ratio(LayoutMethod::naive, n));
}

TEST_CASE("scd ratio shape at small n") {
    // The even-n ratio sequence rises through n = 8 and only then falls:
    // 16/15 < 71/63 < 288/255 > 1147/1023 > ...
    CHECK(approximation_ratio(LayoutMethod::scd, 4) < approximation_ratio(LayoutMethod::scd, 6));
    CHECK(approximation_ratio(LayoutMethod::scd, 6) < approximation_ratio(LayoutMethod::scd, 8));
    for (int n = 8; n + 2 <= 20; n += 2)
        CHECK(approximation_ratio(LayoutMethod::scd, n + 2) <
              approximation_ratio(LayoutMethod::scd, n));
}

TEST_CASE("central binomial upper bound") {
    for (int m = 1; m <= 30; ++m) CHECK(central_binomial_bound_holds(m));
    CHECK_THROWS_AS(central_binomial_bound_holds(0), std::invalid_argument);
    CHECK_THROWS_AS(central_binomial_bound_holds(31), std::invalid_argument);
}
