#pragma once

#include <vector>

#include "entcoh/types.hpp"

namespace entcoh {

// Kronecker product; accepts arbitrary Eigen expressions.
template <typename DerivedA, typename DerivedB>
Matrix tensor_product(const Eigen::MatrixBase<DerivedA>& a,
                      const Eigen::MatrixBase<DerivedB>& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          Complex(a(i, j)) * b;
  return out;
}

// Kronecker product of a list of column vectors, left to right.
Vector tensor_all(const std::vector<Vector>& factors);

// Raw partial trace of a square operator over the subsystems not in `keep`;
// the kept subsystems appear in ascending index order.
Matrix partial_trace_raw(const Matrix& op, const Dims& dims, const std::vector<int>& keep);

// Partial trace of a state; result dims are the kept subsystems.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// Transpose the party_set_a indices of rho; Hermitian, trace one, possibly
// indefinite.
Matrix partial_transpose(const DensityMatrix& rho, const Bipartition& split);

// Extend orthonormal columns to a full unitary (Gram-Schmidt against the
// identity columns).
Matrix complete_orthonormal(const Matrix& cols);

// Closest unitary in Frobenius norm (polar factor).
Matrix closest_unitary(const Matrix& m);

struct HermitianEig {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // columns, orthonormal
};

// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
// (M + M^dag)/2; an asymmetry beyond kHermTol is an error.
HermitianEig hermitian_eig(const Matrix& m);

// Permute subsystems: perm[k] is the original party placed at slot k.
// Returns amplitudes (or the operator) reindexed to the permuted Dims.
Vector permute_subsystems(const Vector& amps, const Dims& dims, const std::vector<int>& perm);
Matrix permute_subsystems(const Matrix& op, const Dims& dims, const std::vector<int>& perm);

// Group the system into (A, B) = (split parties, complement), each block in
// ascending party order. Returns the permuted amplitudes together with the
// grouped two-party Dims (dA, dB).
struct GroupedState {
  Dims grouped;  // exactly two parties
  Vector amps;
};
GroupedState group_bipartite(const PureState& psi, const Bipartition& split);

struct GroupedDensity {
  Dims grouped;
  Matrix mat;
};
GroupedDensity group_bipartite(const DensityMatrix& rho, const Bipartition& split);

}  // namespace entcoh
