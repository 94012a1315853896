#include "entcoh/random.hpp"

#include <cmath>

#include "entcoh/qmat.hpp"

namespace entcoh {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double Rng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller on pinned uniforms; u1 in (0, 1]
  const double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Complex Rng::cgauss() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

Vector random_unit_vector(Index dim, Rng& rng) {
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = rng.cgauss();
  v.normalize();
  return v;
}

PureState random_pure(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  return PureState(dims, random_unit_vector(dims.total(), rng));
}

Matrix random_unitary(Index dim, Rng& rng) {
  Matrix g(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) g(i, j) = rng.cgauss();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    q.col(j) *= (a > 0.0) ? rjj / a : Complex(1.0, 0.0);
  }
  return q;
}

DensityMatrix random_density(const Dims& dims, Index rank, std::uint64_t seed) {
  detail::require(rank >= 1 && rank <= dims.total(),
                  "random_density: rank must be in [1, total dimension]");
  Rng rng(seed);
  if (rank == 1) {
    const Vector v = random_unit_vector(dims.total(), rng);
    return DensityMatrix(dims, v * v.adjoint());
  }
  // columns of g are the unnormalized environment components of a random
  // purification; gg^dag / tr is the environment partial trace
  Matrix g(dims.total(), rank);
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = 0; j < g.cols(); ++j) g(i, j) = rng.cgauss();
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint().eval());
  return DensityMatrix(dims, std::move(m));
}

PureState random_product_pure(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vector> factors;
  for (Index k = 0; k < dims.parties(); ++k)
    factors.push_back(random_unit_vector(dims[k], rng));
  return PureState(dims, tensor_all(factors));
}

}  // namespace entcoh
