#include "entcoh/schmidt.hpp"

#include "entcoh/entropy.hpp"
#include "entcoh/qmat.hpp"

namespace entcoh {

SchmidtForm schmidt_decompose(const PureState& psi, const Bipartition& split) {
  detail::require(psi.dims().parties() >= 2,
                  "schmidt_decompose: need at least two subsystems");
  const auto grouped = group_bipartite(psi, split);
  const Index da = grouped.grouped[0], db = grouped.grouped[1];
  // amps index = iA * dB + iB, so a row-major reshape gives M(iA, iB)
  Matrix m(da, db);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < db; ++j) m(i, j) = grouped.amps(i * db + j);

  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > kRankTol) ++rank;
  detail::require(rank >= 1, "schmidt_decompose: zero state");

  SchmidtForm out;
  out.coefficients = sv.head(rank);
  out.left_basis = svd.matrixU().leftCols(rank);
  // M = U S V^dag and psi = sum_i s_i |u_i>|conj(v_i)>
  out.right_basis = svd.matrixV().leftCols(rank).conjugate();
  return out;
}

bool is_entangled_pure(const PureState& psi, const Bipartition& split) {
  const auto sf = schmidt_decompose(psi, split);
  return sf.rank() > 1 && sf.coefficients(1) > 1e-8;
}

std::vector<Bipartition> all_bipartitions(Index parties) {
  detail::require(parties >= 2, "all_bipartitions: need at least two parties");
  std::vector<Bipartition> out;
  // enumerate subsets containing party 0 to avoid double counting
  const Index m = parties;
  for (Index mask = 0; mask < (Index{1} << (m - 1)); ++mask) {
    std::vector<int> a{0};
    for (Index p = 1; p < m; ++p)
      if (mask & (Index{1} << (p - 1))) a.push_back(static_cast<int>(p));
    if (static_cast<Index>(a.size()) < m) out.emplace_back(a);
  }
  return out;
}

bool is_gme_pure(const PureState& psi) {
  detail::require(psi.dims().parties() >= 2, "is_gme_pure: need at least two parties");
  for (const auto& split : all_bipartitions(psi.dims().parties()))
    if (!is_entangled_pure(psi, split)) return false;
  return true;
}

double entanglement_entropy(const PureState& psi, const Bipartition& split) {
  const auto sf = schmidt_decompose(psi, split);
  RealVector p = sf.coefficients.array().square();
  p /= p.sum();
  return shannon_entropy(p);
}

}  // namespace entcoh
