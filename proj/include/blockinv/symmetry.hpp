#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "blockinv/design.hpp"

namespace blockinv {

class PointPermutation {
public:
    // Validates that the image array is a bijection on [0, n).
    explicit PointPermutation(std::vector<int> image);

    static PointPermutation identity(int n);

    // Cycle notation with fixed points omitted, e.g. "(2 3)(7 8)(9 10)".
    // Entries may be separated by spaces or commas.
    static PointPermutation from_cycles(const std::string& text, int n);

    int size() const { return static_cast<int>(image_.size()); }
    int apply(int p) const { return image_.at(static_cast<std::size_t>(p)); }
    const std::vector<int>& image() const { return image_; }

    PointPermutation inverse() const;
    bool is_identity() const;

    // (a * b)(x) = a(b(x))
    friend PointPermutation operator*(const PointPermutation& a,
                                      const PointPermutation& b);
    bool operator==(const PointPermutation& other) const = default;

private:
    std::vector<int> image_;
};

// True iff applying perm to every block (as a set) permutes the multiset of
// blocks-as-sets onto itself.
bool is_design_automorphism(const BlockDesign& design,
                            const PointPermutation& perm);

// Order of the group of point permutations preserving the block multiset.
std::uint64_t design_aut_order(const BlockDesign& design);

std::uint64_t graph_aut_order(const CollinearityGraph& graph);

// Opaque comparable key; equal keys exactly when the designs are isomorphic
// as point-permuted block multisets.
struct CanonicalKey {
    std::vector<int> code;

    auto operator<=>(const CanonicalKey&) const = default;
    std::string to_string() const;
};

CanonicalKey canonical_key(const BlockDesign& design);

// True iff labeling every point by itself already achieves the canonical
// code, i.e. the design is its own class representative.
bool is_canonical_labeling(const BlockDesign& design);

}  // namespace blockinv
