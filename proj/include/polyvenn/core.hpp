#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace polyvenn {

/// A subset of the curve labels, one bit per curve. Bit 0 is curve "A".
struct SubsetMask {
    std::uint32_t bits = 0;

    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }
    constexpr bool has(int curve) const { return (bits >> curve) & 1u; }
    constexpr SubsetMask with(int curve) const { return {bits | (1u << curve)}; }
    constexpr SubsetMask without(int curve) const { return {bits & ~(1u << curve)}; }
    constexpr bool subset_of(SubsetMask other) const { return (bits & ~other.bits) == 0; }
    constexpr bool proper_subset_of(SubsetMask other) const {
        return subset_of(other) && bits != other.bits;
    }
    /// True when no bit at position n or above is set.
    constexpr bool fits(int n) const { return n >= 32 || (bits >> n) == 0; }

    friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;
};

constexpr SubsetMask full_mask(int n) {
    return {n >= 32 ? ~0u : (1u << n) - 1u};
}

/// Letter form of a mask, e.g. {bit0,bit2} -> "AC". The empty mask renders as "{}".
std::string mask_letters(SubsetMask m);

/// The unit cell [x,x+1] x [y,y+1]; y grows upward.
/// The same struct doubles as a lattice point where one is needed.
struct Cell {
    int x = 0;
    int y = 0;
    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

using CellSet = std::set<Cell>;

/// Inclusive cell-aligned bounding box.
struct Box {
    Cell lo;
    Cell hi;
    int width() const { return hi.x - lo.x + 1; }
    int height() const { return hi.y - lo.y + 1; }
};

/// A finite mapping from lattice cells to nonempty subset masks.
///
/// Invariants enforced at construction: the curve count is at least 1, every
/// stored mask is nonempty and uses only bits below the curve count, and no
/// cell appears twice. Values are immutable afterwards.
class GridDiagram {
public:
    using Entry = std::pair<Cell, SubsetMask>;

    explicit GridDiagram(int curve_count) : GridDiagram(curve_count, {}) {}
    GridDiagram(int curve_count, std::vector<Entry> cells);

    int curve_count() const { return n_; }
    std::size_t area() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    /// Entries sorted by cell coordinate.
    const std::vector<Entry>& cells() const { return cells_; }
    std::optional<SubsetMask> mask_at(Cell c) const;

    friend bool operator==(const GridDiagram&, const GridDiagram&) = default;

private:
    int n_ = 1;
    std::vector<Entry> cells_;
};

/// Cells covered by curve `curve` (all cells whose mask has that bit set).
CellSet curve_cells(const GridDiagram& d, int curve);

/// Cells whose mask equals `m` exactly. The empty mask is rejected: the empty
/// region is the unbounded complement, not a cell set.
CellSet region_cells(const GridDiagram& d, SubsetMask m);

std::size_t diagram_area(const GridDiagram& d);

/// Tight bounding box of the occupied cells; throws on an empty diagram.
Box bounding_box(const GridDiagram& d);
Box bounding_box(const CellSet& s);

GridDiagram translated(const GridDiagram& d, int dx, int dy);

/// One of the 8 dihedral transforms of the square lattice, k in 0..7.
/// k 0..3 are counterclockwise rotations, 4..7 the mirrored rotations.
/// Cells map to cells (the transform acts on cell centers).
Cell dihedral_cell(int k, Cell c);
GridDiagram transformed(const GridDiagram& d, int k);

}  // namespace polyvenn
