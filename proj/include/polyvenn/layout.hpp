#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "polyvenn/core.hpp"
#include "polyvenn/scd.hpp"

namespace polyvenn {

/// A 1 x (2^(n-1) - 2) rectangle of full-set cells at y = 0 starting at
/// (0,0), with the 2^n - 2 remaining nonempty proper subsets assigned one per
/// cell to the cells edge-adjacent to the rectangle, clockwise from the cell
/// above (0,0) in ascending binary mask order. Requires n >= 3.
GridDiagram layout_naive(int n);

/// Chain layout: a 1 x max(1, ceil((C-2)/2)) rectangle of full-set cells,
/// every chain (minus the empty and full sets) laid outward from the
/// rectangle with its largest element adjacent to it. Chains fill the up
/// columns, then the down columns, then the left and right rows. Requires a
/// decomposition that passes validate_scd with ground set size >= 2.
GridDiagram layout_scd(const ChainDecomposition& dec);

enum class ScdMethod { aigner, christmas_tree };
ChainDecomposition make_scd(int n, ScdMethod method);

/// 2^n - 1, the area floor for n curves.
std::uint64_t minimum_area(int n);

enum class LayoutMethod { naive, scd };

/// diagram_area(layout(n)) / (2^n - 1) as an exact rational. The scd method
/// uses Aigner's decomposition; any valid decomposition gives the same area.
boost::multiprecision::cpp_rational approximation_ratio(LayoutMethod method, int n);

/// Checks C(2m, m) < 2^(2m) / (sqrt(pi) * (m^2 + m/2 + 3/32)^(1/4)) with an
/// exact left side and a 50-digit float right side. Requires 1 <= m <= 30.
bool central_binomial_bound_holds(int m);

}  // namespace polyvenn
