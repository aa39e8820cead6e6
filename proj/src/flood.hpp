#pragma once

// Internal helpers shared by the analysis, validation and search units.

#include <cstdint>
#include <vector>

#include "polyvenn/core.hpp"

namespace polyvenn::detail {

constexpr int kNeighborDx[4] = {1, 0, -1, 0};
constexpr int kNeighborDy[4] = {0, 1, 0, -1};

/// Dense byte grid covering a bounding box inflated by a fixed ring.
struct OffsetGrid {
    int min_x = 0;
    int min_y = 0;
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    OffsetGrid(const Box& box, int inflate)
        : min_x(box.lo.x - inflate),
          min_y(box.lo.y - inflate),
          width(box.width() + 2 * inflate),
          height(box.height() + 2 * inflate),
          data(static_cast<std::size_t>(width) * height, 0) {}

    bool in_bounds(int x, int y) const {
        return x >= min_x && x < min_x + width && y >= min_y && y < min_y + height;
    }
    std::uint8_t& at(int x, int y) {
        return data[static_cast<std::size_t>(y - min_y) * width + (x - min_x)];
    }
    std::uint8_t at(int x, int y) const {
        return data[static_cast<std::size_t>(y - min_y) * width + (x - min_x)];
    }
};

}  // namespace polyvenn::detail
