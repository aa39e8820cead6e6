#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "polyvenn/core.hpp"

namespace polyvenn {

/// True iff s is nonempty and 4-adjacency connects all cells.
bool is_edge_connected(const CellSet& s);

/// True iff the complement of s, including the infinite face, is 4-connected.
bool is_hole_free(const CellSet& s);

/// A closed boundary walk. Vertices are lattice points; consecutive vertices
/// are a unit step apart and the last vertex connects back to the first, so
/// the edge count equals the vertex count.
struct PerimeterPath {
    std::vector<Cell> vertices;
    std::size_t edge_count() const { return vertices.size(); }
};

/// Attempts the boundary walk without checking preconditions. Returns nullopt
/// unless the boundary of s is a single simple closed curve (every lattice
/// point on 0 or 2 boundary edges, one cycle covering all of them).
std::optional<PerimeterPath> try_trace_perimeter(const CellSet& s);

/// Boundary of s as one counterclockwise closed path starting from the
/// lexicographically least boundary vertex. Requires is_edge_connected(s) and
/// is_hole_free(s); violations throw with the failing predicate named.
PerimeterPath trace_perimeter(const CellSet& s);

struct ConvexityFlags {
    bool row_convex = false;
    bool column_convex = false;
    bool convex = false;
};

/// Row/column contiguity flags. Rejects disconnected input.
ConvexityFlags convexity_class(const CellSet& s);

/// Canonical representative of the free equivalence class of s: the
/// lexicographically least sorted cell list over the 8 dihedral transforms,
/// after translating the minimum corner to (0,0). Rejects the empty set.
CellSet canonical_free_form(const CellSet& s);

/// All fixed k-ominoes as normalized sorted cell lists, 1 <= k <= 8.
std::vector<std::vector<Cell>> enumerate_fixed_polyominoes(int k);

std::uint64_t count_fixed_polyominoes(int k);  // 1 <= k <= 8
std::uint64_t count_free_polyominoes(int k);   // 1 <= k <= 8

/// Number of fixed column-convex k-ominoes by Polya's recurrence
/// a(k) = 5a(k-1) - 7a(k-2) + 4a(k-3), seeds 1, 2, 6, 19, in exact integers.
boost::multiprecision::cpp_int count_column_convex(int k);  // k >= 1

/// Same count by filtering the fixed enumeration, 1 <= k <= 7.
std::uint64_t count_column_convex_bruteforce(int k);

}  // namespace polyvenn
