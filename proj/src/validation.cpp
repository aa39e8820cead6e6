#include "polyvenn/validation.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "flood.hpp"
#include "polyvenn/polyomino.hpp"

namespace polyvenn {

using detail::kNeighborDx;
using detail::kNeighborDy;
using detail::OffsetGrid;

namespace {

bool cells_connected(const CellSet& s) { return is_edge_connected(s); }

// Every unoccupied cell inside the inflated bounding box must reach the ring.
bool empty_region_connected(const GridDiagram& d, Cell* offender) {
    if (d.empty()) return true;
    OffsetGrid grid(bounding_box(d), 1);
    for (const auto& [cell, mask] : d.cells()) grid.at(cell.x, cell.y) = 1;
    std::vector<Cell> stack{{grid.min_x, grid.min_y}};
    grid.at(grid.min_x, grid.min_y) |= 2;
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        for (int dir = 0; dir < 4; ++dir) {
            int nx = c.x + kNeighborDx[dir];
            int ny = c.y + kNeighborDy[dir];
            if (!grid.in_bounds(nx, ny) || grid.at(nx, ny) != 0) continue;
            grid.at(nx, ny) |= 2;
            stack.push_back({nx, ny});
        }
    }
    for (int y = grid.min_y; y < grid.min_y + grid.height; ++y)
        for (int x = grid.min_x; x < grid.min_x + grid.width; ++x)
            if (grid.at(x, y) == 0) {
                if (offender) *offender = {x, y};
                return false;
            }
    return true;
}

std::string plural(std::size_t n, const char* word) {
    std::ostringstream out;
    out << n << " " << word << (n == 1 ? "" : "s");
    return out.str();
}

}  // namespace

ValidationReport validate_venn(const GridDiagram& d) {
    ValidationReport report;
    const int n = d.curve_count();
    auto add = [&report](std::string name, bool passed, std::string detail) {
        report.checks.push_back({std::move(name), passed, std::move(detail)});
    };

    add("curve_count_positive", n >= 1, "n = " + std::to_string(n));

    // Every nonempty mask over n bits must occur; masks are valid by the
    // diagram invariant, so a distinct-mask count settles presence.
    std::map<SubsetMask, CellSet> regions;
    for (const auto& [cell, mask] : d.cells()) regions[mask].insert(cell);
    const std::uint64_t wanted = (n >= 63) ? 0 : (std::uint64_t(1) << n) - 1;
    if (regions.size() == wanted) {
        add("all_masks_present", true, "all " + plural(wanted, "region mask") + " present");
    } else {
        std::string detail = std::to_string(regions.size()) + " of " +
                             std::to_string(wanted) + " region masks present";
        if (n <= 16) {
            std::string missing;
            int listed = 0;
            for (std::uint32_t bits = 1; bits <= wanted; ++bits) {
                if (regions.count(SubsetMask{bits})) continue;
                if (listed == 6) {
                    missing += ", ...";
                    break;
                }
                if (listed++) missing += ", ";
                missing += mask_letters(SubsetMask{bits});
            }
            detail += "; missing: " + missing;
        }
        add("all_masks_present", false, detail);
    }

    bool unique_ok = true;
    std::string unique_detail = "each mask forms one connected region";
    for (const auto& [mask, cells] : regions) {
        if (!cells_connected(cells)) {
            unique_ok = false;
            unique_detail = "mask " + mask_letters(mask) + " is not a single connected region";
            break;
        }
    }
    add("masks_unique_regions", unique_ok, unique_detail);

    Cell pocket{0, 0};
    bool empty_ok = empty_region_connected(d, &pocket);
    add("empty_region_connected", empty_ok,
        empty_ok ? "empty region is connected"
                 : "enclosed empty pocket at (" + std::to_string(pocket.x) + "," +
                       std::to_string(pocket.y) + ")");

    bool connected_ok = true, hole_ok = true, simple_ok = true;
    std::string connected_detail, hole_detail, simple_detail;
    for (int i = 0; i < n; ++i) {
        CellSet curve = curve_cells(d, i);
        std::string name = mask_letters(SubsetMask{}.with(i));
        if (connected_ok && !is_edge_connected(curve)) {
            connected_ok = false;
            connected_detail = "curve " + name +
                               (curve.empty() ? " has no cells" : " is disconnected");
        }
        if (hole_ok && !is_hole_free(curve)) {
            hole_ok = false;
            hole_detail = "curve " + name + " has a hole";
        }
        if (simple_ok && !try_trace_perimeter(curve)) {
            simple_ok = false;
            simple_detail = "curve " + name + " has no simple closed perimeter";
        }
    }
    add("curves_connected", connected_ok,
        connected_ok ? "all " + plural(n, "curve") + " connected" : connected_detail);
    add("curves_hole_free", hole_ok,
        hole_ok ? "all " + plural(n, "curve") + " hole-free" : hole_detail);
    add("curve_perimeters_simple", simple_ok,
        simple_ok ? "all curve perimeters are simple closed curves" : simple_detail);

    report.overall = std::all_of(report.checks.begin(), report.checks.end(),
                                 [](const ValidationCheck& c) { return c.passed; });
    return report;
}

std::string format_report(const ValidationReport& report) {
    std::ostringstream out;
    for (const auto& check : report.checks) {
        std::string name = check.name;
        name.resize(26, ' ');
        out << name << (check.passed ? "PASS" : "FAIL") << "  " << check.detail << "\n";
    }
    std::string overall = "overall";
    overall.resize(26, ' ');
    out << overall << (report.overall ? "VALID" : "INVALID") << "\n";
    return out.str();
}

std::string first_failed_check(const ValidationReport& report) {
    for (const auto& check : report.checks)
        if (!check.passed) return check.name;
    return {};
}

bool is_minimum_area(const GridDiagram& d) {
    if (!validate_venn(d).overall) return false;
    return d.curve_count() <= 62 &&
           d.area() == (std::uint64_t(1) << d.curve_count()) - 1;
}

bool is_minimum_bbox(const GridDiagram& d) {
    if (!validate_venn(d).overall) return false;
    if (d.empty()) return false;
    Box box = bounding_box(d);
    const int n = d.curve_count();
    for (int s = 0; s <= n; ++s) {
        // Guard against shift overflow; boxes beyond 2^30 never occur here.
        if (s > 30 || n - s > 30) continue;
        if (box.width() <= (1 << s) && box.height() <= (1 << (n - s))) return true;
    }
    return false;
}

bool curves_congruent(const GridDiagram& d) {
    ValidationReport report = validate_venn(d);
    if (!report.overall)
        throw std::invalid_argument("curves_congruent: diagram fails check " +
                                    first_failed_check(report));
    CellSet reference = canonical_free_form(curve_cells(d, 0));
    for (int i = 1; i < d.curve_count(); ++i)
        if (canonical_free_form(curve_cells(d, i)) != reference) return false;
    return true;
}

}  // namespace polyvenn
