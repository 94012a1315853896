#pragma once

#include <vector>

#include "entcoh/types.hpp"

namespace entcoh {

// Schmidt form of a bipartite pure state: psi = sum_i c_i |l_i> (x) |r_i>,
// coefficients descending and truncated at kRankTol.
struct SchmidtForm {
  RealVector coefficients;  // descending, all > kRankTol
  Matrix left_basis;        // dA x rank, orthonormal columns
  Matrix right_basis;       // dB x rank, orthonormal columns
  Index rank() const { return coefficients.size(); }
};

SchmidtForm schmidt_decompose(const PureState& psi, const Bipartition& split);

// Schmidt rank > 1 across the split (second coefficient above 1e-8).
bool is_entangled_pure(const PureState& psi, const Bipartition& split);

// Entangled across every one of the 2^(m-1) - 1 bipartitions.
bool is_gme_pure(const PureState& psi);

// All bipartitions of m parties, each as the party set containing party 0.
std::vector<Bipartition> all_bipartitions(Index parties);

// Local von Neumann entropy across the split, in ebits.
double entanglement_entropy(const PureState& psi, const Bipartition& split);

}  // namespace entcoh
