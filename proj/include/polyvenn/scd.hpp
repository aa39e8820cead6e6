#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "polyvenn/core.hpp"

namespace polyvenn {

/// A chain of subsets ordered by strict inclusion, smallest first.
using Chain = std::vector<SubsetMask>;

struct ChainDecomposition {
    int ground_set_size = 0;
    std::vector<Chain> chains;
};

/// Subset order used by Aigner's algorithm: x precedes y iff m(x,y) < m(y,x),
/// where m(x,y) is the smallest element of x not in y and a negative-infinity
/// sentinel when x is a subset of y. Equal inputs are rejected.
std::strong_ordering lex_compare(SubsetMask x, SubsetMask y);

/// Total comparator form of lex_compare: false on equal inputs.
bool lex_less(SubsetMask x, SubsetMask y);

/// Inductive construction of de Bruijn, van Ebbenhorst Tengbergen and
/// Kruyswijk (Knuth's "Christmas tree pattern"). Each step adjoins the next
/// element and replaces every chain by its truncation and its extension,
/// truncated chain first.
ChainDecomposition christmas_tree_scd(int n);

/// Aigner's greedy lexicographic construction: start each chain at the
/// lex-least uncovered set of the smallest uncovered rank, then repeatedly
/// extend with the lex-least uncovered superset one rank up.
ChainDecomposition aigner_scd(int n);

struct ScdValidation {
    bool partition_ok = false;  // chains disjoint, union is the full powerset
    bool count_ok = false;      // exactly C(n, floor(n/2)) chains
    bool eq1_ok = false;        // strict inclusion between consecutive elements
    bool eq2_ok = false;        // |x_i| = n - |x_{t-i+1}| for i <= ceil(t/2)
    bool ok() const { return partition_ok && count_ok && eq1_ok && eq2_ok; }
};

ScdValidation validate_scd(const ChainDecomposition& dec);

/// Exact binomial coefficient; n small enough for the result to fit 64 bits.
std::uint64_t binomial(int n, int k);

}  // namespace polyvenn
