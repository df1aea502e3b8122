#include "blockinv/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace blockinv {

PointPermutation::PointPermutation(std::vector<int> image)
    : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : image_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw ValidationError("image array is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

PointPermutation PointPermutation::identity(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i;
    return PointPermutation(std::move(image));
}

PointPermutation PointPermutation::from_cycles(const std::string& text, int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i;
    std::vector<bool> moved(static_cast<std::size_t>(n), false);

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() &&
               std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
            }
            if (i >= text.size()) throw ParseError("unterminated cycle");
            if (text[i] == ')') {
                ++i;
                break;
            }
            std::string digits;
            while (i < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i])))
                digits.push_back(text[i++]);
            if (digits.empty()) throw ParseError("expected point index in cycle");
            int v = std::stoi(digits);
            if (v >= n) throw ParseError("cycle entry out of range");
            cycle.push_back(v);
        }
        if (cycle.size() < 2) throw ParseError("cycle of length < 2");
        for (int v : cycle) {
            if (moved[static_cast<std::size_t>(v)])
                throw ParseError("point repeated across cycles");
            moved[static_cast<std::size_t>(v)] = true;
        }
        for (std::size_t j = 0; j < cycle.size(); ++j)
            image[static_cast<std::size_t>(cycle[j])] =
                cycle[(j + 1) % cycle.size()];
        skip_ws();
    }
    return PointPermutation(std::move(image));
}

PointPermutation PointPermutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i)
        inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
    return PointPermutation(std::move(inv));
}

bool PointPermutation::is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (image_[i] != static_cast<int>(i)) return false;
    return true;
}

PointPermutation operator*(const PointPermutation& a,
                           const PointPermutation& b) {
    if (a.size() != b.size())
        throw ValidationError("permutation size mismatch");
    std::vector<int> image(static_cast<std::size_t>(a.size()));
    for (int x = 0; x < a.size(); ++x)
        image[static_cast<std::size_t>(x)] = a.apply(b.apply(x));
    return PointPermutation(std::move(image));
}

namespace {

std::vector<std::vector<int>> normalized_blocks(const BlockDesign& design) {
    std::vector<std::vector<int>> blocks = design.blocks();
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

std::vector<std::vector<int>> apply_to_blocks(const BlockDesign& design,
                                              const std::vector<int>& image) {
    std::vector<std::vector<int>> blocks = design.blocks();
    for (auto& b : blocks) {
        for (int& p : b) p = image[static_cast<std::size_t>(p)];
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

}  // namespace

bool is_design_automorphism(const BlockDesign& design,
                            const PointPermutation& perm) {
    if (perm.size() != design.num_points())
        throw ValidationError("permutation size mismatch");
    return apply_to_blocks(design, perm.image()) == normalized_blocks(design);
}

namespace {

// Backtracker over point images. Pair co-occurrence counts prune hard and
// are preserved by every automorphism; the block multiset is re-checked at
// each leaf since pair counts alone are only necessary.
class DesignAutCounter {
public:
    explicit DesignAutCounter(const BlockDesign& design)
        : design_(design),
          n_(design.num_points()),
          target_(normalized_blocks(design)),
          degrees_(design.point_degrees()),
          pair_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0),
          image_(static_cast<std::size_t>(n_), -1),
          used_(static_cast<std::size_t>(n_), false) {
        for (const auto& b : design.blocks())
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = i + 1; j < b.size(); ++j) {
                    ++pair_[idx(b[i], b[j])];
                    ++pair_[idx(b[j], b[i])];
                }
    }

    std::uint64_t count() {
        count_ = 0;
        dfs(0);
        return count_;
    }

private:
    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(v);
    }

    void dfs(int p) {
        if (p == n_) {
            if (apply_to_blocks(design_, image_) == target_) ++count_;
            return;
        }
        for (int q = 0; q < n_; ++q) {
            if (used_[static_cast<std::size_t>(q)]) continue;
            if (degrees_[static_cast<std::size_t>(q)] !=
                degrees_[static_cast<std::size_t>(p)])
                continue;
            bool ok = true;
            for (int prev = 0; prev < p; ++prev)
                if (pair_[idx(p, prev)] !=
                    pair_[idx(q, image_[static_cast<std::size_t>(prev)])]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image_[static_cast<std::size_t>(p)] = q;
            used_[static_cast<std::size_t>(q)] = true;
            dfs(p + 1);
            used_[static_cast<std::size_t>(q)] = false;
            image_[static_cast<std::size_t>(p)] = -1;
        }
    }

    const BlockDesign& design_;
    int n_;
    std::vector<std::vector<int>> target_;
    std::vector<int> degrees_;
    std::vector<int> pair_;
    std::vector<int> image_;
    std::vector<bool> used_;
    std::uint64_t count_ = 0;
};

// Iterated degree/neighborhood refinement; vertices may only map within
// their stable class.
std::vector<int> refine_classes(const CollinearityGraph& g) {
    const int n = g.num_vertices();
    std::vector<int> color(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
    std::size_t classes = 0;
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, std::vector<int>> buckets;
        for (int v = 0; v < n; ++v) {
            std::vector<int> sig;
            sig.reserve(g.neighbors(v).size());
            for (int w : g.neighbors(v))
                sig.push_back(color[static_cast<std::size_t>(w)]);
            std::sort(sig.begin(), sig.end());
            buckets[{color[static_cast<std::size_t>(v)], std::move(sig)}]
                .push_back(v);
        }
        int next = 0;
        for (const auto& [key, members] : buckets) {
            for (int v : members) color[static_cast<std::size_t>(v)] = next;
            ++next;
        }
        if (static_cast<std::size_t>(next) == classes) break;
        classes = static_cast<std::size_t>(next);
    }
    return color;
}

class GraphAutCounter {
public:
    explicit GraphAutCounter(const CollinearityGraph& g)
        : g_(g),
          n_(g.num_vertices()),
          class_(refine_classes(g)),
          image_(static_cast<std::size_t>(n_), -1),
          used_(static_cast<std::size_t>(n_), false) {}

    std::uint64_t count() {
        count_ = 0;
        dfs(0);
        return count_;
    }

private:
    void dfs(int v) {
        if (v == n_) {
            ++count_;
            return;
        }
        for (int w = 0; w < n_; ++w) {
            if (used_[static_cast<std::size_t>(w)]) continue;
            if (class_[static_cast<std::size_t>(w)] !=
                class_[static_cast<std::size_t>(v)])
                continue;
            bool ok = true;
            for (int prev = 0; prev < v; ++prev)
                if (g_.adjacent(v, prev) !=
                    g_.adjacent(w, image_[static_cast<std::size_t>(prev)])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image_[static_cast<std::size_t>(v)] = w;
            used_[static_cast<std::size_t>(w)] = true;
            dfs(v + 1);
            used_[static_cast<std::size_t>(w)] = false;
        }
    }

    const CollinearityGraph& g_;
    int n_;
    std::vector<int> class_;
    std::vector<int> image_;
    std::vector<bool> used_;
    std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t design_aut_order(const BlockDesign& design) {
    return DesignAutCounter(design).count();
}

std::uint64_t graph_aut_order(const CollinearityGraph& graph) {
    return GraphAutCounter(graph).count();
}

namespace {

// Minimal-code search for the canonical key. Points receive labels 0..n-1
// one at a time; assigning label j emits a "chunk" describing how the new
// point meets the already-labeled part of every block containing it. The
// chunk sequence reconstructs the block multiset exactly, so the levelwise
// lexicographic minimum over all labelings is a complete isomorphism
// invariant. Branch-and-bound against the best complete code found so far;
// whenever a strictly smaller prefix appears, the incumbent is refreshed by
// a greedy completion of that prefix.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const BlockDesign& design)
        : n_(design.num_points()),
          block_size_(design.block_size()),
          point_blocks_(static_cast<std::size_t>(n_)),
          label_(static_cast<std::size_t>(n_), -1),
          block_labels_(static_cast<std::size_t>(design.num_blocks())) {
        for (int b = 0; b < design.num_blocks(); ++b)
            for (int p : design.block(b))
                point_blocks_[static_cast<std::size_t>(p)].push_back(b);
    }

    std::vector<std::vector<int>> run() {
        best_.clear();
        greedy_into_best(0);
        dfs(0);
        return best_;
    }

    // The chunk sequence of the labeling that maps each point to itself.
    std::vector<std::vector<int>> identity_code() {
        std::vector<std::vector<int>> code;
        code.reserve(static_cast<std::size_t>(n_));
        for (int p = 0; p < n_; ++p) {
            code.push_back(chunk_of(p));
            assign(p, p);
        }
        for (int p = n_ - 1; p >= 0; --p) unassign(p);
        return code;
    }

private:
    // Chunk for labeling point p next: its degree, then one signature per
    // containing block. A signature lists the labels already present in the
    // block, prefixed by the count of still-unlabeled slots so that blocks
    // sharing more labeled points compare smaller.
    std::vector<int> chunk_of(int p) const {
        std::vector<std::vector<int>> sigs;
        sigs.reserve(point_blocks_[static_cast<std::size_t>(p)].size());
        for (int b : point_blocks_[static_cast<std::size_t>(p)]) {
            const auto& labels = block_labels_[static_cast<std::size_t>(b)];
            std::vector<int> sig;
            sig.reserve(labels.size() + 1);
            sig.push_back(block_size_ - static_cast<int>(labels.size()));
            sig.insert(sig.end(), labels.begin(), labels.end());
            sigs.push_back(std::move(sig));
        }
        std::sort(sigs.begin(), sigs.end());
        std::vector<int> chunk;
        chunk.push_back(
            static_cast<int>(point_blocks_[static_cast<std::size_t>(p)].size()));
        for (const auto& sig : sigs)
            chunk.insert(chunk.end(), sig.begin(), sig.end());
        return chunk;
    }

    void assign(int p, int j) {
        label_[static_cast<std::size_t>(p)] = j;
        for (int b : point_blocks_[static_cast<std::size_t>(p)])
            block_labels_[static_cast<std::size_t>(b)].push_back(j);
        stack_.push_back(p);
    }

    void unassign(int p) {
        label_[static_cast<std::size_t>(p)] = -1;
        for (int b : point_blocks_[static_cast<std::size_t>(p)])
            block_labels_[static_cast<std::size_t>(b)].pop_back();
        stack_.pop_back();
    }

    // Completes the current prefix greedily (always the minimal chunk) and
    // installs the result as the incumbent.
    void greedy_into_best(int depth) {
        std::vector<int> chosen;
        for (int j = depth; j < n_; ++j) {
            int best_p = -1;
            std::vector<int> best_chunk;
            for (int p = 0; p < n_; ++p) {
                if (label_[static_cast<std::size_t>(p)] >= 0) continue;
                auto chunk = chunk_of(p);
                if (best_p < 0 || chunk < best_chunk) {
                    best_p = p;
                    best_chunk = std::move(chunk);
                }
            }
            prefix_.push_back(std::move(best_chunk));
            assign(best_p, j);
            chosen.push_back(best_p);
        }
        best_ = prefix_;
        for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) unassign(*it);
        prefix_.resize(static_cast<std::size_t>(depth));
    }

    void dfs(int j) {
        if (j == n_) return;
        std::vector<std::pair<std::vector<int>, int>> candidates;
        for (int p = 0; p < n_; ++p)
            if (label_[static_cast<std::size_t>(p)] < 0)
                candidates.emplace_back(chunk_of(p), p);
        std::sort(candidates.begin(), candidates.end());
        for (auto& [chunk, p] : candidates) {
            auto cmp = chunk <=> best_[static_cast<std::size_t>(j)];
            if (cmp > 0) break;  // sorted: everything after is larger too
            prefix_.push_back(chunk);
            assign(p, j);
            if (cmp < 0) greedy_into_best(j + 1);
            dfs(j + 1);
            unassign(p);
            prefix_.pop_back();
        }
    }

    int n_;
    int block_size_;
    std::vector<std::vector<int>> point_blocks_;
    std::vector<int> label_;
    std::vector<std::vector<int>> block_labels_;
    std::vector<int> stack_;
    std::vector<std::vector<int>> prefix_;
    std::vector<std::vector<int>> best_;
};

}  // namespace

CanonicalKey canonical_key(const BlockDesign& design) {
    CanonicalSearch search(design);
    auto chunks = search.run();
    CanonicalKey key;
    key.code = {design.num_points(), design.block_size(), design.num_blocks()};
    for (const auto& chunk : chunks) {
        key.code.push_back(static_cast<int>(chunk.size()));
        key.code.insert(key.code.end(), chunk.begin(), chunk.end());
    }
    return key;
}

bool is_canonical_labeling(const BlockDesign& design) {
    CanonicalSearch search(design);
    auto best = search.run();
    return search.identity_code() == best;
}

std::string CanonicalKey::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (i) out << '.';
        out << code[i];
    }
    return out.str();
}

}  // namespace blockinv
