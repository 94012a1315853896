#pragma once

#include <limits>

#include "entcoh/types.hpp"

namespace entcoh {

// Complete orthonormal basis, stored as the unitary whose columns are the
// elements.
class OrthonormalBasis {
 public:
  OrthonormalBasis(Dims dims, Matrix elements);

  const Dims& dims() const { return dims_; }
  const Matrix& elements() const { return u_; }
  Index size() const { return u_.cols(); }
  PureState element(Index i) const { return PureState(dims_, u_.col(i)); }

 private:
  Dims dims_;
  Matrix u_;
};

// Probabilistic mixture of the projectors of a basis.
class BasisMixture {
 public:
  BasisMixture(OrthonormalBasis basis, RealVector weights);

  const OrthonormalBasis& basis() const { return basis_; }
  const RealVector& weights() const { return weights_; }
  DensityMatrix to_density() const;

 private:
  OrthonormalBasis basis_;
  RealVector weights_;
};

inline double infinity() { return std::numeric_limits<double>::infinity(); }

// Shannon entropy in bits. Mildly negative entries are clipped to zero and
// the vector renormalized; a sum off by more than 1e-6 is an error.
double shannon_entropy(const RealVector& p);

// Binary entropy h(x) = -x log2 x - (1-x) log2 (1-x).
double binary_entropy(double x);

// S(rho) = -tr(rho log2 rho), in bits.
double von_neumann_entropy(const DensityMatrix& rho);

// S(rho || sigma) = tr(rho log2 rho - rho log2 sigma), in bits.
// Returns +infinity when supp(rho) is not contained in supp(sigma).
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

// Pinching: sum_i <b_i|rho|b_i> |b_i><b_i|.
DensityMatrix dephase(const DensityMatrix& rho, const OrthonormalBasis& basis);

// Diagonal of rho in the given basis (the dephasing weights).
RealVector dephasing_weights(const DensityMatrix& rho, const OrthonormalBasis& basis);

}  // namespace entcoh
