#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyvenn/core.hpp"

namespace polyvenn {

struct SearchLimits {
    std::uint64_t max_nodes = 0;  // 0 means unlimited
    double max_seconds = 0.0;     // 0 means unlimited
};

enum class SearchStatus { found, exhausted, budget_hit };

struct SearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<GridDiagram> diagram;  // first solution in canonical order
    std::uint64_t nodes = 0;
    std::vector<GridDiagram> all_solutions;  // filled when collect_all is set
};

struct SearchOptions {
    /// Dihedral symmetry pruning for the min-area search. Sound: at least one
    /// member of every solution class survives.
    bool symmetry_pruning = true;
    /// Explore the whole space and gather every solution instead of stopping
    /// at the first one.
    bool collect_all = false;
};

/// Exhaustive search for a minimum-area diagram: the 2^n - 1 nonempty masks
/// are assigned to cells grown from a full-set seed cell at the origin.
/// Every returned diagram is re-validated. Supports 2 <= n <= 4.
SearchResult search_min_area(int n, const SearchLimits& limits = {},
                             const SearchOptions& options = {});

/// Exhaustive search for a diagram occupying exactly a width x height box
/// with every cell nonempty. Requires width * height == 2^n - 1, 2 <= n <= 4.
SearchResult search_fill_box(int n, int width, int height,
                             const SearchLimits& limits = {},
                             const SearchOptions& options = {});

}  // namespace polyvenn
