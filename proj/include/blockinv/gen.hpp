#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "blockinv/design.hpp"

namespace blockinv {

class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GenParams {
    int num_points = 0;
    int num_blocks = 0;
    int block_size = 0;
    int point_degree = 0;
    bool allow_repeated_blocks = true;

    bool consistent() const {
        return static_cast<long>(num_blocks) * block_size ==
               static_cast<long>(num_points) * point_degree;
    }
};

struct PipelineVerdict {
    enum class Kind {
        RejectedRepeatedVertices,
        RejectedChi,
        RejectedHasClique,
        RejectedNotVertexCritical,
        Viable,
    };
    Kind kind = Kind::Viable;
    int chi = -1;  // set whenever the chromatic number was computed

    std::string tag() const;
};

// Emits exactly one representative per isomorphism class of designs with the
// given parameters, in a deterministic order. Designs are grown block by
// block (blocks as sorted tuples in nondecreasing sequence order, point
// degrees capped); a finished candidate is kept only when its own labeling
// is the canonical one for its class.
// Without `unbounded`, throws GuardExceeded when the raw search space
// estimate passes 10^7.
void generate(const GenParams& params,
              const std::function<void(const BlockDesign&)>& emit,
              bool unbounded = false,
              const std::function<void(std::uint64_t)>& progress = nullptr);

std::vector<BlockDesign> generate_all(const GenParams& params,
                                      bool unbounded = false);

// Independent oracle: enumerates every block multiset satisfying the
// constraints and dedups by canonical key. Guarded at 10^7 raw candidates.
std::vector<BlockDesign> brute_force_generate(const GenParams& params);

// The filter pipeline, applied in order: repeated-vertex rejection, exact
// chromatic number (must equal target_colors), clique fast path, then the
// vertex-criticality requirement.
PipelineVerdict pipeline_filter(const BlockDesign& design, int target_colors);

}  // namespace blockinv
