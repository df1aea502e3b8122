#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "blockinv/design.hpp"

namespace blockinv {

struct Coloring {
    std::vector<int> assignment;  // vertex -> color in [0, colors)
    int colors = 0;
};

struct ChromaReport {
    int chi = 0;
    bool is_vertex_critical = false;
    int max_clique_lower_bound = 0;
    // Set when an explicit clique size was queried.
    std::optional<std::pair<int, bool>> has_clique_of;
};

enum class TieBreak { LowestIndex, HighestIndex };

// A partial assignment fixing the colors of some vertices; used to split the
// coloring search tree into independent subtrees.
using ColoringPrefix = std::vector<std::pair<int, int>>;

namespace detail {

// Depth-first enumeration of proper colorings with incremental candidate
// domains. The next vertex is always one with the fewest remaining candidate
// colors (ties by index per `tie`); on a wipeout the last step is undone.
// The visitor is called with the complete assignment at every leaf and may
// return false to stop the whole search.
template <class Visitor>
class ColoringSearch {
public:
    ColoringSearch(const CollinearityGraph& g, int colors, Visitor& visit,
                   TieBreak tie)
        : g_(g),
          colors_(colors),
          visit_(visit),
          tie_(tie),
          n_(g.num_vertices()),
          full_mask_(colors >= 64 ? ~0ULL : ((1ULL << colors) - 1)),
          avail_(static_cast<std::size_t>(n_), full_mask_),
          assignment_(static_cast<std::size_t>(n_), -1) {}

    // Applies prefix assignments (with propagation), then enumerates the
    // remaining subtree. Returns false if the visitor stopped the search.
    bool run(const ColoringPrefix& prefix = {}) {
        if (colors_ > 64) throw ValidationError("more than 64 colors unsupported");
        if (colors_ == 0) return true;
        uncolored_ = n_;
        for (auto [v, c] : prefix) {
            if (((avail_[v] >> c) & 1ULL) == 0) return true;  // dead subtree
            assign(v, c);
        }
        return descend();
    }

    // Expands one level: picks the next vertex for the given prefix state and
    // reports its candidate colors in ascending order. Empty result means the
    // prefix is either complete or wiped out.
    std::vector<int> branch_colors(const ColoringPrefix& prefix,
                                   bool& complete) {
        complete = false;
        uncolored_ = n_;
        for (auto [v, c] : prefix) {
            if (((avail_[v] >> c) & 1ULL) == 0) return {};
            assign(v, c);
        }
        if (uncolored_ == 0) {
            complete = true;
            return {};
        }
        int v = pick_vertex();
        std::vector<int> out;
        std::uint64_t mask = avail_[v];
        while (mask) {
            int c = std::countr_zero(mask);
            out.push_back(c);
            mask &= mask - 1;
        }
        branch_vertex_ = v;
        return out;
    }

    int branch_vertex() const { return branch_vertex_; }

private:
    bool descend() {
        if (uncolored_ == 0) return visit_(assignment_);
        int v = pick_vertex();
        std::uint64_t mask = avail_[v];
        while (mask) {
            int c = std::countr_zero(mask);
            mask &= mask - 1;
            std::size_t mark = trail_.size();
            if (assign(v, c)) {
                if (!descend()) return false;
            }
            undo(v, c, mark);
        }
        return true;
    }

    int pick_vertex() const {
        int best = -1, best_count = colors_ + 1;
        for (int v = 0; v < n_; ++v) {
            if (assignment_[v] >= 0) continue;
            int count = std::popcount(avail_[v]);
            bool better = count < best_count;
            if (count == best_count && tie_ == TieBreak::HighestIndex)
                better = true;  // later index wins ties
            if (better) {
                best = v;
                best_count = count;
            }
        }
        return best;
    }

    // Returns false on wipeout (some uncolored vertex lost its last color);
    // the trail still records every change for the caller to undo.
    bool assign(int v, int c) {
        assignment_[v] = c;
        --uncolored_;
        bool ok = true;
        const std::uint64_t bit = 1ULL << c;
        for (int w : g_.neighbors(v)) {
            if (assignment_[w] >= 0 || !(avail_[w] & bit)) continue;
            avail_[w] &= ~bit;
            trail_.push_back(w);
            if (avail_[w] == 0) ok = false;
        }
        return ok;
    }

    void undo(int v, int c, std::size_t mark) {
        const std::uint64_t bit = 1ULL << c;
        while (trail_.size() > mark) {
            avail_[trail_.back()] |= bit;
            trail_.pop_back();
        }
        assignment_[v] = -1;
        ++uncolored_;
    }

    const CollinearityGraph& g_;
    int colors_;
    Visitor& visit_;
    TieBreak tie_;
    int n_;
    std::uint64_t full_mask_;
    std::vector<std::uint64_t> avail_;
    std::vector<int> assignment_;
    std::vector<int> trail_;
    int uncolored_ = 0;
    int branch_vertex_ = -1;
};

}  // namespace detail

// Visits every proper coloring exactly once. The visitor is invoked with
// const std::vector<int>& (vertex -> color) and returns bool; returning false
// aborts the enumeration. A prefix restricts the search to one subtree.
template <class Visitor>
bool for_each_proper_coloring(const CollinearityGraph& g, int colors,
                              Visitor&& visit,
                              TieBreak tie = TieBreak::LowestIndex,
                              const ColoringPrefix& prefix = {}) {
    if (colors < 0) throw ValidationError("negative color count");
    if (g.num_vertices() == 0) {
        std::vector<int> empty;
        return visit(empty);
    }
    if (colors == 0) return true;
    detail::ColoringSearch<Visitor> search(g, colors, visit, tie);
    return search.run(prefix);
}

// Splits the search tree into at least min_tasks disjoint subtrees (fewer if
// the whole tree is smaller). Enumerating every returned prefix visits each
// proper coloring exactly once, in any task order.
std::vector<ColoringPrefix> split_coloring_tasks(const CollinearityGraph& g,
                                                 int colors,
                                                 std::size_t min_tasks);

std::uint64_t count_proper_colorings(const CollinearityGraph& g, int colors,
                                     TieBreak tie = TieBreak::LowestIndex);

bool is_q_colorable(const CollinearityGraph& g, int q);

int chromatic_number(const CollinearityGraph& g);

// Requires q == chromatic_number(g); true iff deleting any single vertex
// lowers the chromatic number.
bool is_vertex_critical(const CollinearityGraph& g, int q);

bool has_clique(const CollinearityGraph& g, int s);

// Size of a greedily grown clique; a lower bound for the chromatic number.
int clique_lower_bound(const CollinearityGraph& g);

ChromaReport analyze(const CollinearityGraph& g,
                     std::optional<int> clique_query = std::nullopt);

}  // namespace blockinv
