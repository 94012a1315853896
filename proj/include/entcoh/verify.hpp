#pragma once

#include <vector>

#include "entcoh/report.hpp"
#include "entcoh/types.hpp"

namespace entcoh {

// Default dims per theorem: 2x2 and 2x3 for the bipartite theorems 1-6,
// 2x2x2 for the multiparty theorems 7-8.
std::vector<Dims> default_verify_dims(int theorem_id);

// Run the verification suite of one theorem. Trials are independent and may
// execute concurrently (capped by ENTCOH_THREADS); per-trial seeds derive
// from (seed, trial index) so the report is byte-identical regardless of
// parallelism.
TheoremReport verify_theorem(int theorem_id, int trials, const std::vector<Dims>& dims_list,
                             std::uint64_t seed, const OptimizerConfig& cfg);

TheoremReport verify_theorem(int theorem_id, int trials, const Dims& dims, std::uint64_t seed,
                             const OptimizerConfig& cfg);

}  // namespace entcoh
