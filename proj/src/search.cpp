#include "polyvenn/search.hpp"

#include <chrono>
#include <stdexcept>

#include "flood.hpp"
#include "polyvenn/validation.hpp"

namespace polyvenn {

using detail::kNeighborDx;
using detail::kNeighborDy;

namespace {

class Budget {
public:
    explicit Budget(const SearchLimits& limits)
        : max_nodes_(limits.max_nodes == 0 ? UINT64_MAX : limits.max_nodes),
          use_deadline_(limits.max_seconds > 0) {
        if (limits.max_seconds < 0)
            throw std::invalid_argument("search: malformed limits (negative seconds)");
        if (use_deadline_)
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(limits.max_seconds));
    }

    bool tick() {
        if (hit_) return false;
        if (++nodes_ > max_nodes_) {
            hit_ = true;
            return false;
        }
        if (use_deadline_ && (nodes_ & 0xFFFu) == 0 &&
            std::chrono::steady_clock::now() >= deadline_) {
            hit_ = true;
            return false;
        }
        return true;
    }

    bool hit() const { return hit_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    std::uint64_t nodes_ = 0;
    std::uint64_t max_nodes_;
    bool use_deadline_;
    bool hit_ = false;
    std::chrono::steady_clock::time_point deadline_{};
};

void record_solution(GridDiagram d, const SearchOptions& options, SearchResult& result,
                     bool& stop) {
    if (!result.diagram) result.diagram = d;
    result.status = SearchStatus::found;
    if (options.collect_all)
        result.all_solutions.push_back(std::move(d));
    else
        stop = true;
}

// Backtracking search over connected mask-labelled supports grown from a
// full-set seed at the origin. Cells are discovered as neighbors of included
// cells and decided include-or-forbid in discovery order, which enumerates
// every support exactly once.
class MinAreaSearcher {
public:
    MinAreaSearcher(int n, const SearchOptions& options, Budget& budget,
                    SearchResult& result)
        : n_(n),
          target_(static_cast<int>((1u << n) - 1)),
          radius_(target_),
          side_(2 * target_ + 1),
          options_(options),
          budget_(budget),
          result_(result),
          state_(static_cast<std::size_t>(side_) * side_, kUntouched),
          mask_(static_cast<std::size_t>(side_) * side_, 0),
          stamp_(static_cast<std::size_t>(side_) * side_, 0) {}

    void run() {
        include_origin();
        recurse(0);
    }

private:
    static constexpr std::uint8_t kUntouched = 0;
    static constexpr std::uint8_t kCandidate = 1;
    static constexpr std::uint8_t kIncluded = 2;
    static constexpr std::uint8_t kForbidden = 3;

    std::size_t index(Cell c) const {
        return static_cast<std::size_t>(c.y + radius_) * side_ + (c.x + radius_);
    }
    bool on_grid(Cell c) const {
        return c.x >= -radius_ && c.x <= radius_ && c.y >= -radius_ && c.y <= radius_;
    }
    bool growable(Cell c) const {
        // Any support of target_ cells that contains the origin stays within
        // this radius, so cells beyond it never need a decision.
        return c.x > -radius_ && c.x < radius_ && c.y > -radius_ && c.y < radius_;
    }

    void include_origin() {
        Cell origin{0, 0};
        state_[index(origin)] = kIncluded;
        mask_[index(origin)] = full_bits();
        assigned_.push_back(origin);
        // used_ tracks masks by value: bit (m-1) set when mask m is in use.
        used_ = 1u << (full_bits() - 1);
        for (int i = 0; i < n_; ++i) curve_size_[i] = 1;
        for (int dir = 0; dir < 4; ++dir) {
            Cell nb{origin.x + kNeighborDx[dir], origin.y + kNeighborDy[dir]};
            state_[index(nb)] = kCandidate;
            candidates_.push_back(nb);
        }
    }

    std::uint32_t full_bits() const { return (1u << n_) - 1u; }

    void recurse(std::size_t next) {
        if (stop_) return;
        if (!budget_.tick()) {
            stop_ = true;
            return;
        }
        if (static_cast<int>(assigned_.size()) == target_) {
            finalize();
            return;
        }
        if (next == candidates_.size()) return;
        Cell c = candidates_[next];

        bool allow_include = true;
        bool allow_forbid = true;
        if (options_.symmetry_pruning) {
            // Force the right neighbor of the origin into every support, and
            // keep only supports where a present down neighbor implies a
            // present up neighbor. Each dihedral class retains a member.
            if (c == Cell{1, 0}) allow_forbid = false;
            if (c == Cell{0, -1} && state_[index(Cell{0, 1})] == kForbidden)
                allow_include = false;
        }

        if (allow_include) {
            for (std::uint32_t m = 1; m < full_bits(); ++m) {
                if (used_ & (1u << (m - 1))) continue;
                include(c, m);
                if (curves_feasible() && no_sealed_pocket()) recurse(next + 1);
                undo_include(c, m);
                if (stop_) return;
            }
        }
        if (allow_forbid) {
            state_[index(c)] = kForbidden;
            if (escapes(c)) recurse(next + 1);
            state_[index(c)] = kCandidate;
        }
    }

    void include(Cell c, std::uint32_t m) {
        state_[index(c)] = kIncluded;
        mask_[index(c)] = m;
        used_ |= 1u << (m - 1);
        assigned_.push_back(c);
        for (int i = 0; i < n_; ++i)
            if (m & (1u << i)) ++curve_size_[i];
        appended_.push_back(0);
        for (int dir = 0; dir < 4; ++dir) {
            Cell nb{c.x + kNeighborDx[dir], c.y + kNeighborDy[dir]};
            if (!growable(nb) || state_[index(nb)] != kUntouched) continue;
            state_[index(nb)] = kCandidate;
            candidates_.push_back(nb);
            ++appended_.back();
        }
    }

    void undo_include(Cell c, std::uint32_t m) {
        for (int i = 0; i < appended_.back(); ++i) {
            state_[index(candidates_.back())] = kUntouched;
            candidates_.pop_back();
        }
        appended_.pop_back();
        for (int i = 0; i < n_; ++i)
            if (m & (1u << i)) --curve_size_[i];
        assigned_.pop_back();
        used_ &= ~(1u << (m - 1));
        state_[index(c)] = kCandidate;
    }

    // Every cell already assigned to curve i must stay reachable from the
    // origin through cells that are either on the curve or still free.
    bool curves_feasible() {
        for (int i = 0; i < n_; ++i) {
            ++stamp_now_;
            int found = 0;
            flood_stack_.clear();
            flood_stack_.push_back(Cell{0, 0});
            stamp_[index(Cell{0, 0})] = stamp_now_;
            while (!flood_stack_.empty()) {
                Cell c = flood_stack_.back();
                flood_stack_.pop_back();
                std::uint8_t st = state_[index(c)];
                if (st == kIncluded && (mask_[index(c)] & (1u << i))) ++found;
                if (found == curve_size_[i]) break;
                for (int dir = 0; dir < 4; ++dir) {
                    Cell nb{c.x + kNeighborDx[dir], c.y + kNeighborDy[dir]};
                    if (!on_grid(nb) || stamp_[index(nb)] == stamp_now_) continue;
                    std::uint8_t nst = state_[index(nb)];
                    bool passable = (nst == kIncluded)
                                        ? (mask_[index(nb)] & (1u << i)) != 0
                                        : nst != kForbidden;
                    if (!passable) continue;
                    stamp_[index(nb)] = stamp_now_;
                    flood_stack_.push_back(nb);
                }
            }
            if (found != curve_size_[i]) return false;
        }
        return true;
    }

    // A forbidden cell walled off from the grid border by included cells can
    // never rejoin the outer empty region.
    bool no_sealed_pocket() {
        ++stamp_now_;
        flood_stack_.clear();
        Cell corner{-radius_, -radius_};
        stamp_[index(corner)] = stamp_now_;
        flood_stack_.push_back(corner);
        while (!flood_stack_.empty()) {
            Cell c = flood_stack_.back();
            flood_stack_.pop_back();
            for (int dir = 0; dir < 4; ++dir) {
                Cell nb{c.x + kNeighborDx[dir], c.y + kNeighborDy[dir]};
                if (!on_grid(nb) || stamp_[index(nb)] == stamp_now_) continue;
                if (state_[index(nb)] == kIncluded) continue;
                stamp_[index(nb)] = stamp_now_;
                flood_stack_.push_back(nb);
            }
        }
        for (Cell c : candidates_)
            if (state_[index(c)] == kForbidden && stamp_[index(c)] != stamp_now_) return false;
        return true;
    }

    // Flood from a newly forbidden cell through non-included cells; it must
    // reach the grid border to stay part of the outer empty region.
    bool escapes(Cell from) {
        ++stamp_now_;
        flood_stack_.clear();
        flood_stack_.push_back(from);
        stamp_[index(from)] = stamp_now_;
        while (!flood_stack_.empty()) {
            Cell c = flood_stack_.back();
            flood_stack_.pop_back();
            if (c.x == -radius_ || c.x == radius_ || c.y == -radius_ || c.y == radius_)
                return true;
            for (int dir = 0; dir < 4; ++dir) {
                Cell nb{c.x + kNeighborDx[dir], c.y + kNeighborDy[dir]};
                if (!on_grid(nb) || stamp_[index(nb)] == stamp_now_) continue;
                if (state_[index(nb)] == kIncluded) continue;
                stamp_[index(nb)] = stamp_now_;
                flood_stack_.push_back(nb);
            }
        }
        return false;
    }

    void finalize() {
        std::vector<GridDiagram::Entry> entries;
        entries.reserve(assigned_.size());
        for (Cell c : assigned_) entries.push_back({c, SubsetMask{mask_[index(c)]}});
        GridDiagram d(n_, std::move(entries));
        if (validate_venn(d).overall) record_solution(std::move(d), options_, result_, stop_);
    }

    int n_;
    int target_;
    int radius_;
    int side_;
    SearchOptions options_;
    Budget& budget_;
    SearchResult& result_;
    bool stop_ = false;

    std::vector<std::uint8_t> state_;
    std::vector<std::uint32_t> mask_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t stamp_now_ = 0;
    std::vector<Cell> candidates_;
    std::vector<Cell> assigned_;
    std::vector<int> appended_ = {};
    std::vector<Cell> flood_stack_;
    std::uint32_t used_ = 0;
    int curve_size_[32] = {};
};

// Assigns the 2^n - 1 masks to the cells of a fixed box in row-major order,
// top row first.
class FillBoxSearcher {
public:
    FillBoxSearcher(int n, int width, int height, const SearchOptions& options,
                    Budget& budget, SearchResult& result)
        : n_(n),
          width_(width),
          height_(height),
          options_(options),
          budget_(budget),
          result_(result),
          mask_(static_cast<std::size_t>(width) * height, 0),
          stamp_(static_cast<std::size_t>(width + 2) * (height + 2), 0) {
        for (int y = height_ - 1; y >= 0; --y)
            for (int x = 0; x < width_; ++x) slots_.push_back({x, y});
    }

    void run() { recurse(0); }

private:
    std::size_t index(Cell c) const {
        return static_cast<std::size_t>(c.y) * width_ + c.x;
    }
    bool in_box(Cell c) const {
        return c.x >= 0 && c.x < width_ && c.y >= 0 && c.y < height_;
    }
    std::size_t ring_index(Cell c) const {
        return static_cast<std::size_t>(c.y + 1) * (width_ + 2) + (c.x + 1);
    }
    std::uint32_t full_bits() const { return (1u << n_) - 1u; }

    void recurse(std::size_t slot) {
        if (stop_) return;
        if (!budget_.tick()) {
            stop_ = true;
            return;
        }
        if (slot == slots_.size()) {
            finalize();
            return;
        }
        Cell c = slots_[slot];
        for (std::uint32_t m = 1; m <= full_bits(); ++m) {
            if (used_ & (1u << (m - 1))) continue;
            mask_[index(c)] = m;
            used_ |= 1u << (m - 1);
            ++assigned_;
            if (feasible()) recurse(slot + 1);
            --assigned_;
            used_ &= ~(1u << (m - 1));
            mask_[index(c)] = 0;
            if (stop_) return;
        }
    }

    // Necessary conditions on the partial assignment, per curve: assigned
    // curve cells must be joinable through unassigned cells, and no assigned
    // off-curve cell may already be walled in by the curve.
    bool feasible() {
        for (int i = 0; i < n_; ++i) {
            if (!curve_connectable(i)) return false;
            if (curve_has_sealed_hole(i)) return false;
        }
        return true;
    }

    bool curve_connectable(int curve) {
        Cell seed{-1, -1};
        int members = 0;
        for (int y = 0; y < height_ && seed.x < 0; ++y)
            for (int x = 0; x < width_; ++x)
                if (mask_[index({x, y})] & (1u << curve)) {
                    seed = {x, y};
                    break;
                }
        if (seed.x < 0) return true;
        for (std::size_t j = 0; j < mask_.size(); ++j)
            if (mask_[j] & (1u << curve)) ++members;
        ++stamp_now_;
        flood_stack_.clear();
        flood_stack_.push_back(seed);
        stamp_[ring_index(seed)] = stamp_now_;
        int reached = 0;
        while (!flood_stack_.empty()) {
            Cell c = flood_stack_.back();
            flood_stack_.pop_back();
            if (mask_[index(c)] & (1u << curve)) ++reached;
            if (reached == members) return true;
            for (int dir = 0; dir < 4; ++dir) {
                Cell nb{c.x + kNeighborDx[dir], c.y + kNeighborDy[dir]};
                if (!in_box(nb) || stamp_[ring_index(nb)] == stamp_now_) continue;
                std::uint32_t nm = mask_[index(nb)];
                if (nm != 0 && !(nm & (1u << curve))) continue;
                stamp_[ring_index(nb)] = stamp_now_;
                flood_stack_.push_back(nb);
            }
        }
        return reached == members;
    }

    bool curve_has_sealed_hole(int curve) {
        // Flood the off-curve side from outside the box; assigned cells
        // without the curve bit must be reachable, or the finished curve
        // would enclose them.
        ++stamp_now_;
        flood_stack_.clear();
        Cell start{-1, -1};
        stamp_[ring_index(start)] = stamp_now_;
        flood_stack_.push_back(start);
        while (!flood_stack_.empty()) {
            Cell c = flood_stack_.back();
            flood_stack_.pop_back();
            for (int dir = 0; dir < 4; ++dir) {
                Cell nb{c.x + kNeighborDx[dir], c.y + kNeighborDy[dir]};
                if (nb.x < -1 || nb.x > width_ || nb.y < -1 || nb.y > height_) continue;
                if (stamp_[ring_index(nb)] == stamp_now_) continue;
                if (in_box(nb) && (mask_[index(nb)] & (1u << curve))) continue;
                stamp_[ring_index(nb)] = stamp_now_;
                flood_stack_.push_back(nb);
            }
        }
        for (int y = 0; y < height_; ++y)
            for (int x = 0; x < width_; ++x) {
                std::uint32_t m = mask_[index({x, y})];
                if (m != 0 && !(m & (1u << curve)) &&
                    stamp_[ring_index({x, y})] != stamp_now_)
                    return true;
            }
        return false;
    }

    void finalize() {
        std::vector<GridDiagram::Entry> entries;
        entries.reserve(mask_.size());
        for (int y = 0; y < height_; ++y)
            for (int x = 0; x < width_; ++x)
                entries.push_back({{x, y}, SubsetMask{mask_[index({x, y})]}});
        GridDiagram d(n_, std::move(entries));
        if (validate_venn(d).overall) record_solution(std::move(d), options_, result_, stop_);
    }

    int n_;
    int width_;
    int height_;
    SearchOptions options_;
    Budget& budget_;
    SearchResult& result_;
    bool stop_ = false;

    std::vector<std::uint32_t> mask_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t stamp_now_ = 0;
    std::vector<Cell> slots_;
    std::vector<Cell> flood_stack_;
    std::uint32_t used_ = 0;
    int assigned_ = 0;
};

}  // namespace

SearchResult search_min_area(int n, const SearchLimits& limits, const SearchOptions& options) {
    if (n < 2 || n > 4)
        throw std::invalid_argument("search_min_area: supported range is 2 <= n <= 4");
    Budget budget(limits);
    SearchResult result;
    MinAreaSearcher searcher(n, options, budget, result);
    searcher.run();
    result.nodes = budget.nodes();
    if (!result.diagram) result.status = budget.hit() ? SearchStatus::budget_hit
                                                      : SearchStatus::exhausted;
    return result;
}

SearchResult search_fill_box(int n, int width, int height, const SearchLimits& limits,
                             const SearchOptions& options) {
    if (n < 2 || n > 4)
        throw std::invalid_argument("search_fill_box: supported range is 2 <= n <= 4");
    if (width < 1 || height < 1)
        throw std::invalid_argument("search_fill_box: box sides must be positive");
    if (static_cast<std::uint64_t>(width) * height != (std::uint64_t(1) << n) - 1)
        throw std::invalid_argument("search_fill_box: box area must equal 2^n - 1");
    Budget budget(limits);
    SearchResult result;
    FillBoxSearcher searcher(n, width, height, options, budget, result);
    searcher.run();
    result.nodes = budget.nodes();
    if (!result.diagram) result.status = budget.hit() ? SearchStatus::budget_hit
                                                      : SearchStatus::exhausted;
    return result;
}

}  // namespace polyvenn
