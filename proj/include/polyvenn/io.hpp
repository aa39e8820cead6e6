#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "polyvenn/core.hpp"

namespace polyvenn {

/// PVN v1 text format. Header lines "pvn 1", "n <int>", "rows <int>",
/// "cols <int>", "origin <x> <y>" (bottom-left cell of the bounding box),
/// then `rows` lines of `cols` whitespace-separated tokens, topmost row
/// first. A token is "." for an empty cell or the lowercase hex mask.
std::string serialize_pvn(const GridDiagram& d);

struct PvnParseError : std::runtime_error {
    PvnParseError(int line_number, const std::string& message);
    int line = 0;
};

/// Inverse of serialize_pvn; parse_pvn(serialize_pvn(d)) == d.
GridDiagram parse_pvn(std::string_view text);

/// Fixed-width grid of hex mask tokens, '.' for empty cells, top row first.
/// Identical to the grid block of the PVN format.
std::string render_ascii(const GridDiagram& d);

/// One closed stroke per curve from its traced perimeter, inset inward by
/// 0.06*(i+1) cell units for curve i, 32 units per cell, fixed 8-color
/// palette. Rejects diagrams that fail validate_venn, naming the first
/// failed check. Byte-deterministic.
std::string render_svg(const GridDiagram& d);

}  // namespace polyvenn
