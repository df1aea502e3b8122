#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace blockinv {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A block design: an ordered list of blocks over points 0..num_points-1.
// Blocks are ordered tuples, not sets; the within-block order carries the
// sign of the determinant factor the block stands for. Block-list order is
// irrelevant to the encoded polynomial but preserved for serialization.
class BlockDesign {
public:
    // Throws ValidationError on out-of-range indices, a repeated point
    // inside one block, or blocks of unequal sizes.
    explicit BlockDesign(std::vector<std::vector<int>> blocks,
                         std::optional<int> num_points = std::nullopt);

    int num_points() const { return num_points_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    int block_size() const { return block_size_; }

    // The common point degree when the design is biregular, 0 otherwise.
    int point_degree() const { return point_degree_; }

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int i) const { return blocks_.at(i); }

    // Number of blocks containing each point.
    std::vector<int> point_degrees() const;

    // Round-trips through parse_block_list exactly.
    std::string to_block_list() const;

private:
    std::vector<std::vector<int>> blocks_;
    int num_points_ = 0;
    int block_size_ = 0;
    int point_degree_ = 0;
};

// Simple graph on the design's points; two points are adjacent iff they
// share a block.
class CollinearityGraph {
public:
    explicit CollinearityGraph(int num_vertices);
    CollinearityGraph(int num_vertices,
                      const std::vector<std::pair<int, int>>& edges);

    static CollinearityGraph complete(int num_vertices);

    int num_vertices() const { return n_; }
    std::size_t num_edges() const { return num_edges_; }

    bool adjacent(int u, int v) const {
        return (adj_[static_cast<std::size_t>(u) * words_ +
                     static_cast<std::size_t>(v >> 6)] >>
                (v & 63)) &
               1u;
    }

    void add_edge(int u, int v);

    int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }

    // Induced subgraph with vertex v removed; remaining vertices are
    // renumbered 0..n-2 preserving relative order.
    CollinearityGraph without_vertex(int v) const;

    bool operator==(const CollinearityGraph& other) const;

private:
    int n_ = 0;
    std::size_t words_ = 0;
    std::size_t num_edges_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::vector<int>> neighbors_;
};

struct ValidationReport {
    bool is_biregular = false;
    std::vector<int> observed_degrees;
    // Two points lying in exactly the same set of blocks. For odd point
    // degree this forces the encoded polynomial to vanish identically.
    bool has_repeated_vertices = false;
    // Two blocks equal as sets.
    bool has_repeated_blocks = false;
};

// Grammar: design := block (';' block)*, block := int (',' int)*.
// ASCII whitespace is ignored everywhere; a single trailing ';' is allowed.
// num_points is inferred as max index + 1 unless overridden.
BlockDesign parse_block_list(const std::string& text,
                             std::optional<int> num_points = std::nullopt);

// Grammar: term := '(' letter+ ')' ('^' posint)?, design = concatenation of
// terms. Letters a..z name points 0..25; an exponent repeats the block.
BlockDesign parse_symbolic(const std::string& text);

ValidationReport validate(const BlockDesign& design);

CollinearityGraph collinearity(const BlockDesign& design);

// For two designs with the same multiset of blocks-as-sets: the product over
// matched block pairs of the parity of the permutation carrying one tuple
// order to the other. Throws ValidationError if the multisets differ.
int reorder_sign(const BlockDesign& a, const BlockDesign& b);

// Applies a point permutation (given as an image array) to every block.
BlockDesign relabel(const BlockDesign& design, const std::vector<int>& image);

}  // namespace blockinv
