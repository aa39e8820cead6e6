#include "polyvenn/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyvenn {

std::string mask_letters(SubsetMask m) {
    if (m.empty()) return "{}";
    std::string out;
    for (int i = 0; i < 32; ++i) {
        if (!m.has(i)) continue;
        if (i < 26) {
            out.push_back(static_cast<char>('A' + i));
        } else {
            out.push_back('#');
            out += std::to_string(i);
        }
    }
    return out;
}

GridDiagram::GridDiagram(int curve_count, std::vector<Entry> cells)
    : n_(curve_count), cells_(std::move(cells)) {
    if (n_ < 1) throw std::invalid_argument("GridDiagram: curve count must be at least 1");
    if (n_ > 31) throw std::invalid_argument("GridDiagram: curve count exceeds mask width");
    std::sort(cells_.begin(), cells_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        const auto& [cell, mask] = cells_[i];
        if (mask.empty())
            throw std::invalid_argument("GridDiagram: empty mask stored for a cell");
        if (!mask.fits(n_))
            throw std::invalid_argument("GridDiagram: mask uses a curve index >= curve count");
        if (i > 0 && cells_[i - 1].first == cell)
            throw std::invalid_argument("GridDiagram: duplicate cell coordinate");
    }
}

std::optional<SubsetMask> GridDiagram::mask_at(Cell c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c,
                               [](const Entry& e, Cell key) { return e.first < key; });
    if (it != cells_.end() && it->first == c) return it->second;
    return std::nullopt;
}

CellSet curve_cells(const GridDiagram& d, int curve) {
    if (curve < 0 || curve >= d.curve_count())
        throw std::out_of_range("curve_cells: curve index out of range");
    CellSet out;
    for (const auto& [cell, mask] : d.cells())
        if (mask.has(curve)) out.insert(cell);
    return out;
}

CellSet region_cells(const GridDiagram& d, SubsetMask m) {
    if (m.empty())
        throw std::invalid_argument(
            "region_cells: the empty mask denotes the unbounded region, not a cell set");
    if (!m.fits(d.curve_count()))
        throw std::invalid_argument("region_cells: mask uses a curve index >= curve count");
    CellSet out;
    for (const auto& [cell, mask] : d.cells())
        if (mask == m) out.insert(cell);
    return out;
}

std::size_t diagram_area(const GridDiagram& d) { return d.area(); }

Box bounding_box(const GridDiagram& d) {
    if (d.empty()) throw std::invalid_argument("bounding_box: empty diagram");
    Box b{d.cells().front().first, d.cells().front().first};
    for (const auto& [cell, mask] : d.cells()) {
        b.lo.x = std::min(b.lo.x, cell.x);
        b.lo.y = std::min(b.lo.y, cell.y);
        b.hi.x = std::max(b.hi.x, cell.x);
        b.hi.y = std::max(b.hi.y, cell.y);
    }
    return b;
}

Box bounding_box(const CellSet& s) {
    if (s.empty()) throw std::invalid_argument("bounding_box: empty cell set");
    Box b{*s.begin(), *s.begin()};
    for (Cell c : s) {
        b.lo.x = std::min(b.lo.x, c.x);
        b.lo.y = std::min(b.lo.y, c.y);
        b.hi.x = std::max(b.hi.x, c.x);
        b.hi.y = std::max(b.hi.y, c.y);
    }
    return b;
}

GridDiagram translated(const GridDiagram& d, int dx, int dy) {
    std::vector<GridDiagram::Entry> entries;
    entries.reserve(d.area());
    for (const auto& [cell, mask] : d.cells())
        entries.push_back({{cell.x + dx, cell.y + dy}, mask});
    return GridDiagram(d.curve_count(), std::move(entries));
}

Cell dihedral_cell(int k, Cell c) {
    // Transform the doubled cell center so cells land on cells exactly.
    int cx = 2 * c.x + 1;
    int cy = 2 * c.y + 1;
    int tx = 0, ty = 0;
    switch (k) {
        case 0: tx = cx; ty = cy; break;
        case 1: tx = -cy; ty = cx; break;
        case 2: tx = -cx; ty = -cy; break;
        case 3: tx = cy; ty = -cx; break;
        case 4: tx = -cx; ty = cy; break;
        case 5: tx = cy; ty = cx; break;
        case 6: tx = cx; ty = -cy; break;
        case 7: tx = -cy; ty = -cx; break;
        default: throw std::out_of_range("dihedral_cell: transform index must be 0..7");
    }
    return {(tx - 1) / 2, (ty - 1) / 2};
}

GridDiagram transformed(const GridDiagram& d, int k) {
    std::vector<GridDiagram::Entry> entries;
    entries.reserve(d.area());
    for (const auto& [cell, mask] : d.cells())
        entries.push_back({dihedral_cell(k, cell), mask});
    return GridDiagram(d.curve_count(), std::move(entries));
}

}  // namespace polyvenn
