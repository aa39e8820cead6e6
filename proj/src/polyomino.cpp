#include "polyvenn/polyomino.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "flood.hpp"

namespace polyvenn {

using detail::kNeighborDx;
using detail::kNeighborDy;
using detail::OffsetGrid;

namespace {

constexpr std::uint8_t kOccupied = 1;
constexpr std::uint8_t kVisited = 2;

OffsetGrid occupancy_grid(const CellSet& s, int inflate) {
    OffsetGrid grid(bounding_box(s), inflate);
    for (Cell c : s) grid.at(c.x, c.y) |= kOccupied;
    return grid;
}

// Flood over cells matching `occupied` from a seed; marks kVisited, returns count.
std::size_t flood(OffsetGrid& grid, Cell seed, bool occupied) {
    std::vector<Cell> stack{seed};
    grid.at(seed.x, seed.y) |= kVisited;
    std::size_t count = 0;
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        ++count;
        for (int dir = 0; dir < 4; ++dir) {
            int nx = c.x + kNeighborDx[dir];
            int ny = c.y + kNeighborDy[dir];
            if (!grid.in_bounds(nx, ny)) continue;
            std::uint8_t& cell = grid.at(nx, ny);
            if ((cell & kVisited) || bool(cell & kOccupied) != occupied) continue;
            cell |= kVisited;
            stack.push_back({nx, ny});
        }
    }
    return count;
}

}  // namespace

bool is_edge_connected(const CellSet& s) {
    if (s.empty()) return false;
    OffsetGrid grid = occupancy_grid(s, 0);
    return flood(grid, *s.begin(), true) == s.size();
}

bool is_hole_free(const CellSet& s) {
    if (s.empty()) return true;
    OffsetGrid grid = occupancy_grid(s, 1);
    std::size_t empty_total = static_cast<std::size_t>(grid.width) * grid.height - s.size();
    // The inflated corner lies on the outer ring, so it seeds the infinite face.
    std::size_t reached = flood(grid, {grid.min_x, grid.min_y}, false);
    return reached == empty_total;
}

std::optional<PerimeterPath> try_trace_perimeter(const CellSet& s) {
    if (s.empty()) return std::nullopt;
    // Directed boundary edges with the interior on the left; the outer
    // boundary of a hole-free polyomino is then one counterclockwise cycle.
    std::map<Cell, Cell> next;
    std::size_t edge_total = 0;
    auto has = [&s](int x, int y) { return s.count({x, y}) != 0; };
    auto add_edge = [&](Cell from, Cell to) -> bool {
        ++edge_total;
        return next.emplace(from, to).second;
    };
    for (Cell c : s) {
        if (!has(c.x, c.y - 1) && !add_edge({c.x, c.y}, {c.x + 1, c.y})) return std::nullopt;
        if (!has(c.x + 1, c.y) && !add_edge({c.x + 1, c.y}, {c.x + 1, c.y + 1}))
            return std::nullopt;
        if (!has(c.x, c.y + 1) && !add_edge({c.x + 1, c.y + 1}, {c.x, c.y + 1}))
            return std::nullopt;
        if (!has(c.x - 1, c.y) && !add_edge({c.x, c.y + 1}, {c.x, c.y})) return std::nullopt;
    }
    // Two outgoing edges from one point is a pinch; a duplicate key caught it.
    PerimeterPath path;
    Cell start = next.begin()->first;  // least boundary vertex
    Cell at = start;
    do {
        path.vertices.push_back(at);
        auto it = next.find(at);
        if (it == next.end()) return std::nullopt;
        at = it->second;
        if (path.vertices.size() > edge_total) return std::nullopt;
    } while (at != start);
    if (path.edge_count() != edge_total) return std::nullopt;  // more than one loop
    return path;
}

PerimeterPath trace_perimeter(const CellSet& s) {
    if (!is_edge_connected(s))
        throw std::invalid_argument("trace_perimeter: precondition is_edge_connected failed");
    if (!is_hole_free(s))
        throw std::invalid_argument("trace_perimeter: precondition is_hole_free failed");
    auto path = try_trace_perimeter(s);
    if (!path) throw std::logic_error("trace_perimeter: boundary walk failed unexpectedly");
    return *path;
}

ConvexityFlags convexity_class(const CellSet& s) {
    if (!is_edge_connected(s))
        throw std::invalid_argument("convexity_class: cell set is not edge-connected");
    std::map<int, std::pair<int, int>> row_span, col_span;  // min/max per line
    std::map<int, int> row_count, col_count;
    for (Cell c : s) {
        auto [rit, rnew] = row_span.emplace(c.y, std::pair{c.x, c.x});
        if (!rnew) {
            rit->second.first = std::min(rit->second.first, c.x);
            rit->second.second = std::max(rit->second.second, c.x);
        }
        auto [cit, cnew] = col_span.emplace(c.x, std::pair{c.y, c.y});
        if (!cnew) {
            cit->second.first = std::min(cit->second.first, c.y);
            cit->second.second = std::max(cit->second.second, c.y);
        }
        ++row_count[c.y];
        ++col_count[c.x];
    }
    ConvexityFlags flags;
    flags.row_convex = true;
    for (const auto& [y, span] : row_span)
        if (row_count[y] != span.second - span.first + 1) flags.row_convex = false;
    flags.column_convex = true;
    for (const auto& [x, span] : col_span)
        if (col_count[x] != span.second - span.first + 1) flags.column_convex = false;
    flags.convex = flags.row_convex && flags.column_convex;
    return flags;
}

namespace {

std::vector<Cell> normalized_sorted(std::vector<Cell> cells) {
    int min_x = cells.front().x, min_y = cells.front().y;
    for (Cell c : cells) {
        min_x = std::min(min_x, c.x);
        min_y = std::min(min_y, c.y);
    }
    for (Cell& c : cells) {
        c.x -= min_x;
        c.y -= min_y;
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

std::vector<Cell> canonical_cells(const std::vector<Cell>& cells) {
    std::vector<Cell> best;
    for (int k = 0; k < 8; ++k) {
        std::vector<Cell> image;
        image.reserve(cells.size());
        for (Cell c : cells) image.push_back(dihedral_cell(k, c));
        image = normalized_sorted(std::move(image));
        if (best.empty() || image < best) best = std::move(image);
    }
    return best;
}

}  // namespace

CellSet canonical_free_form(const CellSet& s) {
    if (s.empty()) throw std::invalid_argument("canonical_free_form: empty cell set");
    std::vector<Cell> cells(s.begin(), s.end());
    auto canon = canonical_cells(cells);
    return CellSet(canon.begin(), canon.end());
}

std::vector<std::vector<Cell>> enumerate_fixed_polyominoes(int k) {
    if (k < 1 || k > 8)
        throw std::out_of_range("enumerate_fixed_polyominoes: supported range is 1..8");
    std::set<std::vector<Cell>> level{{Cell{0, 0}}};
    for (int size = 1; size < k; ++size) {
        std::set<std::vector<Cell>> grown;
        for (const auto& poly : level) {
            CellSet cells(poly.begin(), poly.end());
            for (Cell c : poly) {
                for (int dir = 0; dir < 4; ++dir) {
                    Cell nb{c.x + kNeighborDx[dir], c.y + kNeighborDy[dir]};
                    if (cells.count(nb)) continue;
                    std::vector<Cell> extended(poly);
                    extended.push_back(nb);
                    grown.insert(normalized_sorted(std::move(extended)));
                }
            }
        }
        level = std::move(grown);
    }
    return {level.begin(), level.end()};
}

std::uint64_t count_fixed_polyominoes(int k) {
    if (k < 1 || k > 8)
        throw std::out_of_range("count_fixed_polyominoes: supported range is 1..8");
    return enumerate_fixed_polyominoes(k).size();
}

std::uint64_t count_free_polyominoes(int k) {
    if (k < 1 || k > 8)
        throw std::out_of_range("count_free_polyominoes: supported range is 1..8");
    std::set<std::vector<Cell>> classes;
    for (const auto& poly : enumerate_fixed_polyominoes(k)) classes.insert(canonical_cells(poly));
    return classes.size();
}

boost::multiprecision::cpp_int count_column_convex(int k) {
    if (k < 1) throw std::out_of_range("count_column_convex: k must be at least 1");
    using boost::multiprecision::cpp_int;
    const cpp_int seeds[4] = {1, 2, 6, 19};
    if (k <= 4) return seeds[k - 1];
    cpp_int a = seeds[1], b = seeds[2], c = seeds[3];  // a(k-3), a(k-2), a(k-1)
    for (int i = 5; i <= k; ++i) {
        cpp_int next = 5 * c - 7 * b + 4 * a;
        a = b;
        b = c;
        c = next;
    }
    return c;
}

std::uint64_t count_column_convex_bruteforce(int k) {
    if (k < 1 || k > 7)
        throw std::out_of_range("count_column_convex_bruteforce: supported range is 1..7");
    std::uint64_t count = 0;
    for (const auto& poly : enumerate_fixed_polyominoes(k)) {
        CellSet cells(poly.begin(), poly.end());
        if (convexity_class(cells).column_convex) ++count;
    }
    return count;
}

}  // namespace polyvenn
