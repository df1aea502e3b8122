#include "blockinv/design.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace blockinv {

BlockDesign::BlockDesign(std::vector<std::vector<int>> blocks,
                         std::optional<int> num_points)
    : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw ValidationError("design has no blocks");
    block_size_ = static_cast<int>(blocks_.front().size());
    if (block_size_ == 0) throw ValidationError("empty block");
    int max_index = -1;
    for (const auto& b : blocks_) {
        if (static_cast<int>(b.size()) != block_size_)
            throw ValidationError("blocks of unequal size");
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] < 0) throw ValidationError("negative point index");
            max_index = std::max(max_index, b[i]);
            for (std::size_t j = i + 1; j < b.size(); ++j)
                if (b[i] == b[j])
                    throw ValidationError("repeated point inside a block");
        }
    }
    num_points_ = num_points.value_or(max_index + 1);
    if (max_index >= num_points_)
        throw ValidationError("point index out of declared range");

    auto degs = point_degrees();
    point_degree_ = degs.empty() ? 0 : degs.front();
    for (int d : degs)
        if (d != point_degree_) {
            point_degree_ = 0;
            break;
        }
}

std::vector<int> BlockDesign::point_degrees() const {
    std::vector<int> degs(static_cast<std::size_t>(num_points_), 0);
    for (const auto& b : blocks_)
        for (int p : b) ++degs[static_cast<std::size_t>(p)];
    return degs;
}

std::string BlockDesign::to_block_list() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out << "; ";
        for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j) out << ',';
            out << blocks_[i][j];
        }
    }
    return out.str();
}

CollinearityGraph::CollinearityGraph(int num_vertices)
    : n_(num_vertices),
      words_(static_cast<std::size_t>((num_vertices + 63) / 64)),
      adj_(static_cast<std::size_t>(num_vertices) * words_, 0),
      neighbors_(static_cast<std::size_t>(num_vertices)) {
    if (num_vertices < 0) throw ValidationError("negative vertex count");
}

CollinearityGraph::CollinearityGraph(
    int num_vertices, const std::vector<std::pair<int, int>>& edges)
    : CollinearityGraph(num_vertices) {
    for (auto [u, v] : edges) add_edge(u, v);
}

CollinearityGraph CollinearityGraph::complete(int num_vertices) {
    CollinearityGraph g(num_vertices);
    for (int u = 0; u < num_vertices; ++u)
        for (int v = u + 1; v < num_vertices; ++v) g.add_edge(u, v);
    return g;
}

void CollinearityGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw ValidationError("edge endpoint out of range");
    if (u == v) throw ValidationError("loop edge");
    if (adjacent(u, v)) return;
    adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
    adj_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
    ++num_edges_;
}

CollinearityGraph CollinearityGraph::without_vertex(int v) const {
    CollinearityGraph g(n_ - 1);
    auto shift = [v](int x) { return x > v ? x - 1 : x; };
    for (int u = 0; u < n_; ++u) {
        if (u == v) continue;
        for (int w : neighbors_[u])
            if (w != v && u < w) g.add_edge(shift(u), shift(w));
    }
    return g;
}

bool CollinearityGraph::operator==(const CollinearityGraph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

namespace {

// Splits on a separator, trimming ASCII whitespace around each piece.
std::vector<std::string> split_trim(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    for (auto& p : parts) {
        std::size_t a = 0, b = p.size();
        while (a < b && std::isspace(static_cast<unsigned char>(p[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(p[b - 1]))) --b;
        p = p.substr(a, b - a);
    }
    return parts;
}

int parse_point_index(const std::string& token) {
    if (token.empty()) throw ParseError("empty point index");
    for (char ch : token)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError("non-integer token '" + token + "'");
    if (token.size() > 9) throw ParseError("point index too large");
    return std::stoi(token);
}

}  // namespace

BlockDesign parse_block_list(const std::string& text,
                             std::optional<int> num_points) {
    auto segments = split_trim(text, ';');
    if (!segments.empty() && segments.back().empty()) segments.pop_back();
    if (segments.empty()) throw ParseError("no blocks in input");
    std::vector<std::vector<int>> blocks;
    blocks.reserve(segments.size());
    for (const auto& seg : segments) {
        if (seg.empty()) throw ParseError("empty block");
        std::vector<int> block;
        for (const auto& token : split_trim(seg, ','))
            block.push_back(parse_point_index(token));
        blocks.push_back(std::move(block));
    }
    try {
        return BlockDesign(std::move(blocks), num_points);
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
}

BlockDesign parse_symbolic(const std::string& text) {
    std::vector<std::vector<int>> blocks;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < n) {
        if (text[i] != '(') throw ParseError("expected '('");
        ++i;
        std::vector<int> block;
        while (i < n && text[i] != ')') {
            char ch = text[i];
            if (ch < 'a' || ch > 'z')
                throw ParseError("non-letter inside brackets");
            block.push_back(ch - 'a');
            ++i;
        }
        if (i == n) throw ParseError("unbalanced parentheses");
        ++i;  // ')'
        if (block.empty()) throw ParseError("empty bracket");
        long exponent = 1;
        skip_ws();
        if (i < n && text[i] == '^') {
            ++i;
            skip_ws();
            std::string digits;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
                digits.push_back(text[i++]);
            if (digits.empty()) throw ParseError("missing exponent");
            if (digits.size() > 6) throw ParseError("exponent too large");
            exponent = std::stol(digits);
            if (exponent == 0) throw ParseError("exponent 0");
        }
        for (long e = 0; e < exponent; ++e) blocks.push_back(block);
        skip_ws();
    }
    if (blocks.empty()) throw ParseError("no blocks in input");
    try {
        return BlockDesign(std::move(blocks));
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
}

ValidationReport validate(const BlockDesign& design) {
    ValidationReport report;
    report.observed_degrees = design.point_degrees();
    report.is_biregular = true;
    for (int d : report.observed_degrees)
        if (d != report.observed_degrees.front()) {
            report.is_biregular = false;
            break;
        }

    // Block-membership sets per point; identical sets mean repeated vertices.
    std::vector<std::vector<int>> memberships(
        static_cast<std::size_t>(design.num_points()));
    for (int b = 0; b < design.num_blocks(); ++b)
        for (int p : design.block(b))
            memberships[static_cast<std::size_t>(p)].push_back(b);
    std::map<std::vector<int>, int> seen_membership;
    for (const auto& m : memberships) {
        if (++seen_membership[m] > 1) {
            report.has_repeated_vertices = true;
            break;
        }
    }

    std::map<std::vector<int>, int> seen_blocks;
    for (const auto& b : design.blocks()) {
        std::vector<int> key = b;
        std::sort(key.begin(), key.end());
        if (++seen_blocks[key] > 1) {
            report.has_repeated_blocks = true;
            break;
        }
    }
    return report;
}

CollinearityGraph collinearity(const BlockDesign& design) {
    CollinearityGraph g(design.num_points());
    for (const auto& b : design.blocks())
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                g.add_edge(b[i], b[j]);
    return g;
}

namespace {

int tuple_parity(const std::vector<int>& from, const std::vector<int>& to) {
    // Parity of the permutation carrying tuple `from` onto tuple `to`.
    const std::size_t k = from.size();
    std::vector<int> perm(k);
    for (std::size_t i = 0; i < k; ++i) {
        auto it = std::find(to.begin(), to.end(), from[i]);
        perm[i] = static_cast<int>(it - to.begin());
    }
    std::vector<bool> seen(k, false);
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace

int reorder_sign(const BlockDesign& a, const BlockDesign& b) {
    if (a.num_blocks() != b.num_blocks() || a.block_size() != b.block_size())
        throw ValidationError("designs are not reorderings of each other");
    // Match blocks one-to-one by their underlying sets.
    std::map<std::vector<int>, std::vector<int>> pool;
    for (int i = 0; i < b.num_blocks(); ++i) {
        std::vector<int> key = b.block(i);
        std::sort(key.begin(), key.end());
        pool[key].push_back(i);
    }
    int sign = 1;
    for (int i = 0; i < a.num_blocks(); ++i) {
        std::vector<int> key = a.block(i);
        std::sort(key.begin(), key.end());
        auto it = pool.find(key);
        if (it == pool.end() || it->second.empty())
            throw ValidationError("designs are not reorderings of each other");
        int j = it->second.back();
        it->second.pop_back();
        sign *= tuple_parity(a.block(i), b.block(j));
    }
    return sign;
}

BlockDesign relabel(const BlockDesign& design, const std::vector<int>& image) {
    if (static_cast<int>(image.size()) != design.num_points())
        throw ValidationError("permutation size mismatch");
    std::vector<std::vector<int>> blocks = design.blocks();
    for (auto& b : blocks)
        for (int& p : b) p = image.at(static_cast<std::size_t>(p));
    return BlockDesign(std::move(blocks), design.num_points());
}

}  // namespace blockinv
