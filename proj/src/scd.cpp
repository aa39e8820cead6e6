#include "polyvenn/scd.hpp"

#include <bit>
#include <stdexcept>

namespace polyvenn {

std::strong_ordering lex_compare(SubsetMask x, SubsetMask y) {
    if (x == y) throw std::invalid_argument("lex_compare: inputs must be distinct");
    std::uint32_t x_only = x.bits & ~y.bits;
    std::uint32_t y_only = y.bits & ~x.bits;
    if (x_only == 0) return std::strong_ordering::less;     // x subset of y
    if (y_only == 0) return std::strong_ordering::greater;  // y subset of x
    return std::countr_zero(x_only) <=> std::countr_zero(y_only);
}

bool lex_less(SubsetMask x, SubsetMask y) {
    if (x == y) return false;
    return lex_compare(x, y) == std::strong_ordering::less;
}

ChainDecomposition christmas_tree_scd(int n) {
    if (n < 1) throw std::invalid_argument("christmas_tree_scd: n must be at least 1");
    if (n > 24) throw std::invalid_argument("christmas_tree_scd: n too large");
    std::vector<Chain> chains{{SubsetMask{0}, SubsetMask{1}}};
    for (int element = 1; element < n; ++element) {
        std::vector<Chain> grown;
        grown.reserve(2 * chains.size());
        for (const Chain& chain : chains) {
            if (chain.size() > 1) grown.emplace_back(chain.begin() + 1, chain.end());
            Chain extended;
            extended.reserve(chain.size() + 1);
            extended.push_back(chain.front());
            for (SubsetMask m : chain) extended.push_back(m.with(element));
            grown.push_back(std::move(extended));
        }
        chains = std::move(grown);
    }
    return {n, std::move(chains)};
}

namespace {

// Ascending-element combinations of {0..n-1} taken k at a time, in the order
// induced by lex_compare on equal-size sets.
struct CombinationCursor {
    int n;
    int k;
    bool exhausted = false;
    std::vector<int> elements;

    CombinationCursor(int n, int k) : n(n), k(k) {
        for (int i = 0; i < k; ++i) elements.push_back(i);
        if (k > n) exhausted = true;
    }

    SubsetMask mask() const {
        SubsetMask m;
        for (int e : elements) m = m.with(e);
        return m;
    }

    void advance() {
        int i = k - 1;
        while (i >= 0 && elements[i] == n - k + i) --i;
        if (i < 0) {
            exhausted = true;
            return;
        }
        ++elements[i];
        for (int j = i + 1; j < k; ++j) elements[j] = elements[j - 1] + 1;
    }
};

}  // namespace

ChainDecomposition aigner_scd(int n) {
    if (n < 1) throw std::invalid_argument("aigner_scd: n must be at least 1");
    if (n > 24) throw std::invalid_argument("aigner_scd: n too large");
    const std::uint32_t total = 1u << n;
    std::vector<bool> covered(total, false);
    std::vector<CombinationCursor> rank;
    rank.reserve(n + 1);
    for (int k = 0; k <= n; ++k) rank.emplace_back(n, k);

    std::vector<Chain> chains;
    std::uint32_t remaining = total;
    int start_rank = 0;
    while (remaining > 0) {
        // Chain starts at a given rank come in increasing lex order, so each
        // cursor only ever moves forward.
        while (start_rank <= n &&
               (rank[start_rank].exhausted || covered[rank[start_rank].mask().bits])) {
            if (rank[start_rank].exhausted)
                ++start_rank;
            else
                rank[start_rank].advance();
        }
        if (start_rank > n) break;
        SubsetMask current = rank[start_rank].mask();
        Chain chain{current};
        covered[current.bits] = true;
        --remaining;
        for (int size = start_rank + 1; size <= n; ++size) {
            bool extended = false;
            for (int e = 0; e < n; ++e) {
                if (current.has(e)) continue;
                SubsetMask candidate = current.with(e);
                if (covered[candidate.bits]) continue;
                current = candidate;
                chain.push_back(current);
                covered[current.bits] = true;
                --remaining;
                extended = true;
                break;
            }
            if (!extended) break;
        }
        chains.push_back(std::move(chain));
    }
    return {n, std::move(chains)};
}

ScdValidation validate_scd(const ChainDecomposition& dec) {
    ScdValidation result;
    int n = dec.ground_set_size;
    if (n < 0 || n > 24) return result;

    const std::uint64_t total = 1ull << n;
    std::vector<bool> seen(total, false);
    bool partition = true;
    std::uint64_t count = 0;
    for (const Chain& chain : dec.chains) {
        for (SubsetMask m : chain) {
            if (!m.fits(n) || seen[m.bits]) {
                partition = false;
                continue;
            }
            seen[m.bits] = true;
            ++count;
        }
    }
    result.partition_ok = partition && count == total;

    result.count_ok = dec.chains.size() == binomial(n, n / 2);

    result.eq1_ok = true;
    result.eq2_ok = true;
    for (const Chain& chain : dec.chains) {
        if (chain.empty()) {
            result.eq1_ok = false;
            continue;
        }
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            if (!chain[i].proper_subset_of(chain[i + 1])) result.eq1_ok = false;
        std::size_t t = chain.size();
        for (std::size_t i = 0; i < (t + 1) / 2; ++i)
            if (chain[i].count() != n - chain[t - 1 - i].count()) result.eq2_ok = false;
    }
    return result;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (result > static_cast<unsigned __int128>(UINT64_MAX))
            throw std::overflow_error("binomial: result does not fit 64 bits");
    }
    return static_cast<std::uint64_t>(result);
}

}  // namespace polyvenn
