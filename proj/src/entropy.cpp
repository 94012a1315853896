#include "entcoh/entropy.hpp"

#include <cmath>

#include "entcoh/qmat.hpp"

namespace entcoh {

OrthonormalBasis::OrthonormalBasis(Dims dims, Matrix elements)
    : dims_(std::move(dims)), u_(std::move(elements)) {
  detail::require(u_.rows() == dims_.total() && u_.cols() == dims_.total(),
                  "OrthonormalBasis: need exactly dim elements of length dim");
  detail::require(u_.allFinite(), "OrthonormalBasis: entries must be finite");
  const Matrix gram = u_.adjoint() * u_;
  const double defect = (gram - Matrix::Identity(u_.cols(), u_.cols())).cwiseAbs().maxCoeff();
  detail::require(defect <= kOrthoTol, "OrthonormalBasis: elements are not orthonormal");
  // completeness follows for a square orthonormal set; check anyway
  const Matrix comp = u_ * u_.adjoint();
  detail::require((comp - Matrix::Identity(u_.rows(), u_.rows())).cwiseAbs().maxCoeff() <= kOrthoTol,
                  "OrthonormalBasis: elements are not complete");
}

BasisMixture::BasisMixture(OrthonormalBasis basis, RealVector weights)
    : basis_(std::move(basis)), weights_(std::move(weights)) {
  detail::require(weights_.size() == basis_.size(),
                  "BasisMixture: one weight per basis element required");
  detail::require(weights_.minCoeff() >= 0.0,
                  "BasisMixture: weights must be nonnegative");
  detail::require(std::abs(weights_.sum() - 1.0) <= kNormTol,
                  "BasisMixture: weights must sum to 1");
}

DensityMatrix BasisMixture::to_density() const {
  Matrix m = basis_.elements() * weights_.asDiagonal().toDenseMatrix().cast<Complex>() *
             basis_.elements().adjoint();
  m = 0.5 * (m + m.adjoint().eval());
  return DensityMatrix(basis_.dims(), std::move(m));
}

double shannon_entropy(const RealVector& p) {
  detail::require(p.size() >= 1, "shannon_entropy: empty vector");
  detail::require(p.allFinite(), "shannon_entropy: entries must be finite");
  detail::require(p.minCoeff() >= -1e-6, "shannon_entropy: negative probability");
  detail::require(std::abs(p.sum() - 1.0) <= 1e-6,
                  "shannon_entropy: probabilities must sum to 1");
  RealVector q = p.cwiseMax(0.0);
  q /= q.sum();
  double h = 0.0;
  for (Index i = 0; i < q.size(); ++i)
    if (q(i) > kNullEig) h -= q(i) * std::log2(q(i));
  return h < 0.0 ? 0.0 : h;
}

double binary_entropy(double x) {
  double h = 0.0;
  if (x > kNullEig) h -= x * std::log2(x);
  if (1.0 - x > kNullEig) h -= (1.0 - x) * std::log2(1.0 - x);
  return h < 0.0 ? 0.0 : h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto eig = hermitian_eig(rho.matrix());
  double h = 0.0;
  for (Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double lam = eig.eigenvalues(i);
    if (lam > kNullEig) h -= lam * std::log2(lam);
  }
  return h < 0.0 ? 0.0 : h;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::require(rho.dim() == sigma.dim(), "relative_entropy: dimension mismatch");
  const auto er = hermitian_eig(rho.matrix());
  const auto es = hermitian_eig(sigma.matrix());

  // support check: rho eigenvectors with weight > 1e-10 must not leak into
  // the null space of sigma
  for (Index i = 0; i < er.eigenvalues.size(); ++i) {
    if (er.eigenvalues(i) <= 1e-10) continue;
    double leak = 0.0;
    for (Index j = 0; j < es.eigenvalues.size(); ++j)
      if (es.eigenvalues(j) <= kNullEig)
        leak += std::norm(es.eigenvectors.col(j).dot(er.eigenvectors.col(i)));
    if (leak > 1e-10) return infinity();
  }

  double value = 0.0;
  for (Index i = 0; i < er.eigenvalues.size(); ++i) {
    const double r = er.eigenvalues(i);
    if (r > kNullEig) value += r * std::log2(r);
  }
  for (Index j = 0; j < es.eigenvalues.size(); ++j) {
    const double s = es.eigenvalues(j);
    if (s <= kNullEig) continue;
    const double weight =
        (es.eigenvectors.col(j).adjoint() * rho.matrix() * es.eigenvectors.col(j))(0).real();
    if (weight > 0.0) value -= weight * std::log2(s);
  }
  return value < 0.0 ? 0.0 : value;
}

RealVector dephasing_weights(const DensityMatrix& rho, const OrthonormalBasis& basis) {
  detail::require(rho.dims() == basis.dims(), "dephase: dimension mismatch");
  const Matrix& u = basis.elements();
  RealVector w(basis.size());
  for (Index i = 0; i < basis.size(); ++i)
    w(i) = std::max(0.0, (u.col(i).adjoint() * rho.matrix() * u.col(i))(0).real());
  return w;
}

DensityMatrix dephase(const DensityMatrix& rho, const OrthonormalBasis& basis) {
  RealVector w = dephasing_weights(rho, basis);
  w /= w.sum();
  return BasisMixture(basis, w).to_density();
}

}  // namespace entcoh
