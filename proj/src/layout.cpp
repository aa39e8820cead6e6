#include "polyvenn/layout.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <stdexcept>

namespace polyvenn {

GridDiagram layout_naive(int n) {
    if (n < 3) throw std::invalid_argument("layout_naive: n must be at least 3");
    if (n > 24) throw std::invalid_argument("layout_naive: n too large");
    const int w = (1 << (n - 1)) - 2;
    const SubsetMask full = full_mask(n);

    std::vector<GridDiagram::Entry> entries;
    entries.reserve((std::size_t(1) << n) + (std::size_t(1) << (n - 1)));
    for (int x = 0; x < w; ++x) entries.push_back({{x, 0}, full});

    // Perimeter slots clockwise from the cell above (0,0).
    std::vector<Cell> slots;
    slots.reserve(2 * w + 2);
    for (int x = 0; x < w; ++x) slots.push_back({x, 1});
    slots.push_back({w, 0});
    for (int x = w - 1; x >= 0; --x) slots.push_back({x, -1});
    slots.push_back({-1, 0});

    std::uint32_t mask = 1;
    for (Cell slot : slots) entries.push_back({slot, SubsetMask{mask++}});
    return GridDiagram(n, std::move(entries));
}

GridDiagram layout_scd(const ChainDecomposition& dec) {
    const int n = dec.ground_set_size;
    if (n < 2) throw std::invalid_argument("layout_scd: ground set size must be at least 2");
    if (!validate_scd(dec).ok())
        throw std::invalid_argument("layout_scd: decomposition fails validate_scd");

    const SubsetMask full = full_mask(n);
    const int chain_count = static_cast<int>(dec.chains.size());
    const int w = std::max(1, (chain_count - 1) / 2);  // ceil((C-2)/2)

    std::vector<GridDiagram::Entry> entries;
    entries.reserve((std::size_t(1) << n) + w);
    for (int x = 0; x < w; ++x) entries.push_back({{x, 0}, full});

    std::vector<Chain> truncated;
    truncated.reserve(chain_count);
    for (const Chain& chain : dec.chains) {
        Chain kept;
        for (SubsetMask m : chain)
            if (!m.empty() && m != full) kept.push_back(m);
        if (!kept.empty()) truncated.push_back(std::move(kept));
    }

    // Slot anchors and outward steps: up columns, down columns, left, right.
    std::vector<std::pair<Cell, Cell>> slots;
    slots.reserve(2 * w + 2);
    for (int x = 0; x < w; ++x) slots.push_back({{x, 1}, {0, 1}});
    for (int x = 0; x < w; ++x) slots.push_back({{x, -1}, {0, -1}});
    slots.push_back({{-1, 0}, {-1, 0}});
    slots.push_back({{w, 0}, {1, 0}});
    if (truncated.size() > slots.size())
        throw std::logic_error("layout_scd: more chains than perimeter slots");

    for (std::size_t i = 0; i < truncated.size(); ++i) {
        const Chain& chain = truncated[i];
        auto [anchor, step] = slots[i];
        // Largest element sits adjacent to the rectangle.
        for (std::size_t j = 0; j < chain.size(); ++j) {
            SubsetMask m = chain[chain.size() - 1 - j];
            Cell c{anchor.x + static_cast<int>(j) * step.x,
                   anchor.y + static_cast<int>(j) * step.y};
            entries.push_back({c, m});
        }
    }
    return GridDiagram(n, std::move(entries));
}

ChainDecomposition make_scd(int n, ScdMethod method) {
    return method == ScdMethod::aigner ? aigner_scd(n) : christmas_tree_scd(n);
}

std::uint64_t minimum_area(int n) {
    if (n < 1 || n > 63) throw std::invalid_argument("minimum_area: n must be in 1..63");
    return (std::uint64_t(1) << n) - 1;
}

boost::multiprecision::cpp_rational approximation_ratio(LayoutMethod method, int n) {
    std::size_t area = method == LayoutMethod::naive
                           ? layout_naive(n).area()
                           : layout_scd(aigner_scd(n)).area();
    return boost::multiprecision::cpp_rational(area, minimum_area(n));
}

bool central_binomial_bound_holds(int m) {
    if (m < 1 || m > 30)
        throw std::invalid_argument("central_binomial_bound_holds: m must be in 1..30");
    using Float = boost::multiprecision::cpp_bin_float_50;
    static const Float pi("3.14159265358979323846264338327950288419716939937511");
    const std::uint64_t lhs = binomial(2 * m, m);
    Float poly = Float(m) * m + Float(m) / 2 + Float(3) / 32;
    Float rhs = boost::multiprecision::ldexp(Float(1), 2 * m) /
                (sqrt(pi) * sqrt(sqrt(poly)));
    return Float(lhs) < rhs;
}

}  // namespace polyvenn
