#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockinv/chroma.hpp"
#include "blockinv/design.hpp"
#include "blockinv/exact.hpp"

namespace blockinv {

// An ordered list of integer linear forms; the evaluation point is the sum
// of their d-th powers, d being the design's point degree.
struct FormSet {
    std::vector<std::vector<ExactInt>> forms;

    int count() const { return static_cast<int>(forms.size()); }
    int dim() const { return forms.empty() ? 0 : static_cast<int>(forms[0].size()); }

    static FormSet from_ints(const std::vector<std::vector<long>>& rows);
};

// One vector per line, comma-separated integers, all lines equal length.
// Lines starting with '#' and blank lines are ignored.
FormSet parse_form_set(const std::string& text);

// Exact determinant; cofactor expansion for tiny inputs, fraction-free
// elimination above. Throws ValidationError unless the input is square.
ExactInt det(const std::vector<std::vector<ExactInt>>& rows);

// Determinants of every ordered color tuple, indexed in base r. Tuples with
// a repeated color hold 0. Shared by all blocks of a design and built once
// per evaluation; the int64 mirror backs the 128-bit accumulation fast path
// when the product bound certifies that no overflow is possible.
class DetTable {
public:
    DetTable(const FormSet& forms, int block_size);

    int color_count() const { return r_; }
    int tuple_size() const { return k_; }

    const ExactInt& value(std::size_t index) const { return exact_[index]; }

    std::size_t index_of(const std::vector<int>& tuple) const;

    // True when every per-term product of num_blocks entries fits safely in
    // a signed 128-bit accumulator.
    bool fast_path_certified(int num_blocks) const;

    const std::vector<std::int64_t>& fast_values() const { return fast_; }
    const std::vector<ExactInt>& exact_values() const { return exact_; }

private:
    int r_ = 0;
    int k_ = 0;
    bool fits_int64_ = true;
    ExactInt max_abs_ = 0;
    std::vector<ExactInt> exact_;
    std::vector<std::int64_t> fast_;
};

struct EvalResult {
    ExactInt value;
    std::uint64_t num_colorings = 0;  // proper colorings visited
};

// Sum over proper colorings of the collinearity graph (colors are form
// indices) of the product over blocks of det(forms picked by the coloring,
// rows in block tuple order).
EvalResult evaluate_detailed(const BlockDesign& design, const FormSet& forms);

ExactInt evaluate(const BlockDesign& design, const FormSet& forms);

// Identical value to evaluate for every parts >= 1; the coloring search tree
// is split into disjoint subtrees whose exact partial sums are combined.
ExactInt parallel_evaluate(const BlockDesign& design, const FormSet& forms,
                           int parts);

struct BatchResult {
    std::vector<ExactInt> raw;
    ExactInt gcd;  // gcd of absolute nonzero values, 0 if all zero
    std::vector<ExactInt> normalized;
};

BatchResult evaluate_batch(const std::vector<BlockDesign>& designs,
                           const FormSet& forms);

}  // namespace blockinv
