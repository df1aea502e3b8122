#include "blockinv/gen.hpp"

#include <algorithm>
#include <set>

#include "blockinv/chroma.hpp"
#include "blockinv/exact.hpp"
#include "blockinv/symmetry.hpp"

namespace blockinv {

std::string PipelineVerdict::tag() const {
    switch (kind) {
        case Kind::RejectedRepeatedVertices:
            return "rejected_repeated_vertices";
        case Kind::RejectedChi:
            return "rejected_chi";
        case Kind::RejectedHasClique:
            return "rejected_has_clique";
        case Kind::RejectedNotVertexCritical:
            return "rejected_not_vertex_critical";
        case Kind::Viable:
            return "viable";
    }
    return "unknown";
}

namespace {

constexpr std::uint64_t kGuardLimit = 10'000'000;

std::vector<std::vector<int>> candidate_blocks(int num_points, int block_size) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    // lexicographic K-subsets of [0, num_points)
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(current.size()) == block_size) {
            out.push_back(current);
            return;
        }
        int need = block_size - static_cast<int>(current.size());
        for (int p = next; p + need <= num_points; ++p) {
            current.push_back(p);
            self(self, p + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Multisets of num_blocks candidate blocks, as an upper bound on the raw
// search space.
ExactInt raw_candidate_estimate(const GenParams& params) {
    ExactInt subsets;
    mpz_bin_uiui(subsets.get_mpz_t(),
                 static_cast<unsigned long>(params.num_points),
                 static_cast<unsigned long>(params.block_size));
    if (subsets > kGuardLimit) return subsets;  // already hopeless
    ExactInt estimate;
    unsigned long t = subsets.get_ui();
    mpz_bin_uiui(estimate.get_mpz_t(),
                 t + static_cast<unsigned long>(params.num_blocks) - 1,
                 static_cast<unsigned long>(params.num_blocks));
    return estimate;
}

void check_params(const GenParams& params) {
    if (params.num_points < 1 || params.num_blocks < 1 ||
        params.block_size < 1 || params.point_degree < 1)
        throw ValidationError("generation parameters must be positive");
    if (params.block_size > params.num_points)
        throw ValidationError("block size exceeds point count");
    if (!params.consistent())
        throw ValidationError(
            "num_blocks * block_size must equal num_points * point_degree");
}

// Depth-first enumeration of block multisets (nondecreasing sequences of
// sorted blocks) with per-point degree caps; calls sink on every completed
// biregular candidate.
class DesignEnumerator {
public:
    DesignEnumerator(const GenParams& params,
                     std::function<void(const BlockDesign&)> sink,
                     std::function<void(std::uint64_t)> progress)
        : params_(params),
          cands_(candidate_blocks(params.num_points, params.block_size)),
          degree_(static_cast<std::size_t>(params.num_points), 0),
          sink_(std::move(sink)),
          progress_(std::move(progress)) {}

    void run() { dfs(0); }

private:
    void dfs(std::size_t start) {
        const int placed = static_cast<int>(chosen_.size());
        if (placed == params_.num_blocks) {
            for (int d : degree_)
                if (d != params_.point_degree) return;
            std::vector<std::vector<int>> blocks;
            blocks.reserve(chosen_.size());
            for (std::size_t idx : chosen_) blocks.push_back(cands_[idx]);
            sink_(BlockDesign(std::move(blocks), params_.num_points));
            return;
        }
        const int remaining = params_.num_blocks - placed;
        for (int p = 0; p < params_.num_points; ++p)
            if (params_.point_degree - degree_[static_cast<std::size_t>(p)] >
                remaining)
                return;  // this point can no longer reach its degree
        for (std::size_t idx = start; idx < cands_.size(); ++idx) {
            const auto& block = cands_[idx];
            bool fits = true;
            for (int p : block)
                if (degree_[static_cast<std::size_t>(p)] >=
                    params_.point_degree) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            for (int p : block) ++degree_[static_cast<std::size_t>(p)];
            chosen_.push_back(idx);
            if (progress_ && (++visited_ % 1'000'000 == 0))
                progress_(visited_);
            dfs(params_.allow_repeated_blocks ? idx : idx + 1);
            chosen_.pop_back();
            for (int p : block) --degree_[static_cast<std::size_t>(p)];
        }
    }

    const GenParams& params_;
    std::vector<std::vector<int>> cands_;
    std::vector<int> degree_;
    std::vector<std::size_t> chosen_;
    std::function<void(const BlockDesign&)> sink_;
    std::function<void(std::uint64_t)> progress_;
    std::uint64_t visited_ = 0;
};

}  // namespace

void generate(const GenParams& params,
              const std::function<void(const BlockDesign&)>& emit,
              bool unbounded,
              const std::function<void(std::uint64_t)>& progress) {
    check_params(params);
    if (!unbounded && raw_candidate_estimate(params) > kGuardLimit)
        throw GuardExceeded(
            "raw search space above 10^7; pass unbounded to force the run");
    DesignEnumerator walker(
        params,
        [&emit](const BlockDesign& design) {
            // keep exactly the member whose own labeling is canonical
            if (is_canonical_labeling(design)) emit(design);
        },
        progress);
    walker.run();
}

std::vector<BlockDesign> generate_all(const GenParams& params, bool unbounded) {
    std::vector<BlockDesign> out;
    generate(params, [&out](const BlockDesign& d) { out.push_back(d); },
             unbounded);
    return out;
}

std::vector<BlockDesign> brute_force_generate(const GenParams& params) {
    check_params(params);
    if (raw_candidate_estimate(params) > kGuardLimit)
        throw GuardExceeded("brute-force search space above 10^7 candidates");
    std::vector<BlockDesign> out;
    std::set<CanonicalKey> seen;
    DesignEnumerator walker(
        params,
        [&](const BlockDesign& design) {
            if (seen.insert(canonical_key(design)).second)
                out.push_back(design);
        },
        nullptr);
    walker.run();
    return out;
}

PipelineVerdict pipeline_filter(const BlockDesign& design, int target_colors) {
    if (target_colors < 1) throw ValidationError("target colors must be >= 1");
    PipelineVerdict verdict;
    if (validate(design).has_repeated_vertices) {
        verdict.kind = PipelineVerdict::Kind::RejectedRepeatedVertices;
        return verdict;
    }
    CollinearityGraph g = collinearity(design);
    verdict.chi = chromatic_number(g);
    if (verdict.chi != target_colors) {
        verdict.kind = PipelineVerdict::Kind::RejectedChi;
        return verdict;
    }
    // A clique of target size certifies non-criticality as long as some
    // vertex lies outside it.
    if (g.num_vertices() > target_colors && has_clique(g, target_colors)) {
        verdict.kind = PipelineVerdict::Kind::RejectedHasClique;
        return verdict;
    }
    if (!is_vertex_critical(g, target_colors)) {
        verdict.kind = PipelineVerdict::Kind::RejectedNotVertexCritical;
        return verdict;
    }
    verdict.kind = PipelineVerdict::Kind::Viable;
    return verdict;
}

}  // namespace blockinv
