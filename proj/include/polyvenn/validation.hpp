#pragma once

#include <string>
#include <vector>

#include "polyvenn/core.hpp"

namespace polyvenn {

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Itemized Venn-validity results. The check list always contains, in order:
/// curve_count_positive, all_masks_present, masks_unique_regions,
/// empty_region_connected, curves_connected, curves_hole_free,
/// curve_perimeters_simple. overall is true iff every check passed.
struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool overall = false;
};

ValidationReport validate_venn(const GridDiagram& d);

/// Stable text rendering, one check per line plus an overall line.
std::string format_report(const ValidationReport& report);

/// Name of the first failed check, or an empty string when all passed.
std::string first_failed_check(const ValidationReport& report);

/// Valid and occupying exactly 2^n - 1 cells.
bool is_minimum_area(const GridDiagram& d);

/// Valid and fitting inside some 2^s x 2^t rectangle with s + t = n.
bool is_minimum_bbox(const GridDiagram& d);

/// All curves equal modulo translations, rotations and reflections.
/// Rejects diagrams that fail validate_venn.
bool curves_congruent(const GridDiagram& d);

}  // namespace polyvenn
