#include "blockinv/chroma.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace blockinv {

std::vector<ColoringPrefix> split_coloring_tasks(const CollinearityGraph& g,
                                                 int colors,
                                                 std::size_t min_tasks) {
    if (min_tasks == 0) min_tasks = 1;
    if (g.num_vertices() == 0 || colors <= 0) return {ColoringPrefix{}};

    auto nop = [](const std::vector<int>&) { return true; };
    std::deque<ColoringPrefix> frontier;
    frontier.push_back({});
    std::vector<ColoringPrefix> tasks;
    while (!frontier.empty() && tasks.size() + frontier.size() < min_tasks) {
        ColoringPrefix node = std::move(frontier.front());
        frontier.pop_front();
        detail::ColoringSearch<decltype(nop)> search(g, colors, nop,
                                                     TieBreak::LowestIndex);
        bool complete = false;
        std::vector<int> choices = search.branch_colors(node, complete);
        if (complete) {
            tasks.push_back(std::move(node));
            continue;
        }
        if (choices.empty()) continue;  // wiped out, no colorings below
        int v = search.branch_vertex();
        for (int c : choices) {
            ColoringPrefix child = node;
            child.emplace_back(v, c);
            frontier.push_back(std::move(child));
        }
    }
    for (auto& node : frontier) tasks.push_back(std::move(node));
    if (tasks.empty()) tasks.push_back({});  // degenerate: nothing colorable
    return tasks;
}

std::uint64_t count_proper_colorings(const CollinearityGraph& g, int colors,
                                     TieBreak tie) {
    std::uint64_t count = 0;
    for_each_proper_coloring(
        g, colors,
        [&count](const std::vector<int>&) {
            ++count;
            return true;
        },
        tie);
    return count;
}

namespace {

// Decision-only search. Colors are interchangeable here, so a fresh color is
// only ever tried at its first index (cap = used + 1); this collapses the
// q!-fold color symmetry that the enumerator must not collapse.
class DecisionSearch {
public:
    DecisionSearch(const CollinearityGraph& g, int q)
        : g_(g),
          q_(q),
          n_(g.num_vertices()),
          avail_(static_cast<std::size_t>(n_),
                 q >= 64 ? ~0ULL : ((1ULL << q) - 1)),
          assignment_(static_cast<std::size_t>(n_), -1) {}

    bool solve() {
        if (q_ > 64) throw ValidationError("more than 64 colors unsupported");
        if (n_ == 0) return true;
        if (q_ == 0) return false;
        uncolored_ = n_;
        return descend(0);
    }

private:
    bool descend(int used) {
        if (uncolored_ == 0) return true;
        int v = pick_vertex();
        int open = std::min(q_, used + 1);
        std::uint64_t mask =
            avail_[v] & (open >= 64 ? ~0ULL : ((1ULL << open) - 1));
        while (mask) {
            int c = std::countr_zero(mask);
            mask &= mask - 1;
            std::size_t mark = trail_.size();
            if (assign(v, c)) {
                if (descend(std::max(used, c + 1))) return true;
            }
            undo(v, c, mark);
        }
        return false;
    }

    int pick_vertex() const {
        int best = -1, best_count = q_ + 1;
        for (int v = 0; v < n_; ++v) {
            if (assignment_[v] >= 0) continue;
            int count = std::popcount(avail_[v]);
            if (count < best_count) {
                best = v;
                best_count = count;
            }
        }
        return best;
    }

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
    int q_;
    int n_;
    std::vector<std::uint64_t> avail_;
    std::vector<int> assignment_;
    std::vector<int> trail_;
    int uncolored_ = 0;
};

// DSATUR greedy coloring; returns the number of colors it used.
int greedy_upper_bound(const CollinearityGraph& g) {
    const int n = g.num_vertices();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<std::uint64_t> neighbor_colors(static_cast<std::size_t>(n), 0);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            int sat = std::popcount(neighbor_colors[v]);
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        int c = std::countr_zero(~neighbor_colors[best]);
        color[best] = c;
        used = std::max(used, c + 1);
        for (int w : g.neighbors(best))
            if (color[w] < 0 && c < 64) neighbor_colors[w] |= 1ULL << c;
    }
    return used;
}

bool extend_clique(const CollinearityGraph& g, int need,
                   std::vector<int>& cands) {
    if (need <= 0) return true;
    while (static_cast<int>(cands.size()) >= need) {
        int v = cands.back();
        cands.pop_back();
        std::vector<int> next;
        next.reserve(cands.size());
        for (int w : cands)
            if (g.adjacent(v, w)) next.push_back(w);
        if (extend_clique(g, need - 1, next)) return true;
    }
    return false;
}

}  // namespace

bool is_q_colorable(const CollinearityGraph& g, int q) {
    if (q < 0) throw ValidationError("negative color count");
    DecisionSearch search(g, q);
    return search.solve();
}

int clique_lower_bound(const CollinearityGraph& g) {
    const int n = g.num_vertices();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&g](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<int> clique;
    for (int v : order) {
        bool fits = true;
        for (int u : clique)
            if (!g.adjacent(u, v)) {
                fits = false;
                break;
            }
        if (fits) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

bool has_clique(const CollinearityGraph& g, int s) {
    if (s < 1) throw ValidationError("clique size must be positive");
    if (s == 1) return g.num_vertices() >= 1;
    std::vector<int> cands;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) >= s - 1) cands.push_back(v);
    return extend_clique(g, s, cands);
}

int chromatic_number(const CollinearityGraph& g) {
    if (g.num_vertices() == 0) return 0;
    int lower = clique_lower_bound(g);
    int upper = greedy_upper_bound(g);
    for (int q = lower; q < upper; ++q)
        if (is_q_colorable(g, q)) return q;
    return upper;
}

bool is_vertex_critical(const CollinearityGraph& g, int q) {
    int chi = chromatic_number(g);
    if (q != chi)
        throw ValidationError("q does not match the chromatic number");
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!is_q_colorable(g.without_vertex(v), q - 1)) return false;
    return true;
}

ChromaReport analyze(const CollinearityGraph& g,
                     std::optional<int> clique_query) {
    ChromaReport report;
    report.chi = chromatic_number(g);
    report.max_clique_lower_bound = clique_lower_bound(g);
    report.is_vertex_critical = is_vertex_critical(g, report.chi);
    if (clique_query)
        report.has_clique_of = {{*clique_query, has_clique(g, *clique_query)}};
    return report;
}

}  // namespace blockinv
