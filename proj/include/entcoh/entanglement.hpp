#pragma once

#include <cstdint>
#include <vector>

#include "entcoh/schmidt.hpp"
#include "entcoh/types.hpp"

namespace entcoh {

struct OptimizerConfig {
  int restarts = 32;
  int max_iters = 2000;
  double tol = 1e-7;
  std::uint64_t seed = 0;
  // 0 = auto: (total dimension)^2, the Schroedinger-HJW default
  Index ansatz_size = 0;

  void check() const;
  Index resolved_ansatz_size(const Dims& dims) const;
};

// Weights plus pure states realizing a density matrix.
class PureDecomposition {
 public:
  PureDecomposition(RealVector weights, std::vector<PureState> states);

  const RealVector& weights() const { return weights_; }
  const std::vector<PureState>& states() const { return states_; }
  size_t size() const { return states_.size(); }

  DensityMatrix reconstruct() const;
  double reconstruction_defect(const DensityMatrix& target) const;

 private:
  RealVector weights_;
  std::vector<PureState> states_;
};

// Mixture of states that are product across a declared bipartition.
class SeparableAnsatz {
 public:
  SeparableAnsatz(Bipartition split, RealVector weights, std::vector<PureState> product_states);

  const Bipartition& split() const { return split_; }
  const RealVector& weights() const { return weights_; }
  const std::vector<PureState>& product_states() const { return states_; }
  DensityMatrix to_density() const;

 private:
  Bipartition split_;
  RealVector weights_;
  std::vector<PureState> states_;
};

struct PptResult {
  bool ppt = false;
  double min_eigenvalue = 0.0;
};

// Positive-partial-transpose test across the split.
PptResult is_ppt(const DensityMatrix& rho, const Bipartition& split);

// Wootters concurrence of a two-qubit state.
double concurrence_2q(const DensityMatrix& rho);

// Two-qubit entanglement of formation, closed form from the concurrence.
double eof_2q(const DensityMatrix& rho);

struct ConvexRoofResult {
  double value = 0.0;
  PureDecomposition decomposition;
  bool converged = false;
  Index ansatz_size = 0;  // decomposition cardinality searched
};

// Convex-roof entanglement of formation: minimize the average entanglement
// entropy over all decompositions, parameterized Schroedinger-HJW style by
// column-orthonormal mixing matrices acting on the spectral vectors.
// Returns an upper bound plus the achieving decomposition.
ConvexRoofResult eof_convex_roof(const DensityMatrix& rho, const Bipartition& split,
                                 const OptimizerConfig& cfg);

struct ReeResult {
  double value = 0.0;
  SeparableAnsatz ansatz;
  bool converged = false;
};

// Relative entropy of entanglement: minimize S(rho || sigma) over mixtures of
// product states by alternating exact weight solves with annealed random
// rotations of the product factors. Returns an upper bound.
ReeResult relative_entropy_of_entanglement(const DensityMatrix& rho, const Bipartition& split,
                                           const OptimizerConfig& cfg);

}  // namespace entcoh
