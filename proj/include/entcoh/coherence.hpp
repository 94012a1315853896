#pragma once

#include <optional>
#include <vector>

#include "entcoh/entanglement.hpp"
#include "entcoh/entropy.hpp"
#include "entcoh/types.hpp"

namespace entcoh {

// One-way locally distinguishable basis: the party order()[0] measures in
// first_basis, announces, and each later party measures in a basis selected
// by the outcomes announced so far. levels()[t] holds one unitary per outcome
// chain of the earlier parties, chains flattened in mixed radix with the
// earliest outcome most significant.
class ConditionalProductBasis {
 public:
  ConditionalProductBasis(Dims dims, std::vector<int> order,
                          std::vector<std::vector<Matrix>> levels);

  const Dims& dims() const { return dims_; }
  const std::vector<int>& order() const { return order_; }
  const std::vector<std::vector<Matrix>>& levels() const { return levels_; }

  OrthonormalBasis expand() const;

  static ConditionalProductBasis computational(const Dims& dims);

 private:
  Dims dims_;
  std::vector<int> order_;
  std::vector<std::vector<Matrix>> levels_;
};

// Random conditional product basis with the given measurement order.
ConditionalProductBasis random_cpb(const Dims& dims, const std::vector<int>& order,
                                   std::uint64_t seed);

struct CoherenceResult {
  double value = 0.0;
  std::optional<ConditionalProductBasis> achieving_basis;
  std::optional<PureDecomposition> achieving_decomposition;
  bool converged = false;
};

// Relative entropy of coherence of a pure state: the Shannon entropy of the
// overlap probabilities |<b_i|psi>|^2.
double coherence_pure(const PureState& psi, const OrthonormalBasis& basis);

// Minimum of coherence_pure over conditional product bases across the split.
// The system is grouped into the two blocks of the split; the achieving
// basis lives on the grouped two-party dims.
CoherenceResult min_coherence_pure(const PureState& psi, const Bipartition& split,
                                   const OptimizerConfig& cfg);

// Relative entropy of coherence of a (mixed) state with respect to a basis:
// S(dephase(rho, B)) - S(rho), the pinching closed form.
double relative_coherence(const DensityMatrix& rho, const OrthonormalBasis& basis);

// Minimum of relative_coherence over conditional product bases across the
// split (an upper bound on the minimum over all locally distinguishable
// bases; bounded below by the relative entropy of entanglement).
CoherenceResult min_relative_coherence(const DensityMatrix& rho, const Bipartition& split,
                                       const OptimizerConfig& cfg);

// Convex-roof coherence over locally distinguishable bases. The inner basis
// minimum of each pure component equals its entanglement entropy, so the
// computation coincides with the convex-roof entanglement of formation.
CoherenceResult convex_roof_coherence(const DensityMatrix& rho, const Bipartition& split,
                                      const OptimizerConfig& cfg);

}  // namespace entcoh
