#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entcoh/catalog.hpp"
#include "entcoh/coherence.hpp"
#include "entcoh/entropy.hpp"
#include "entcoh/qmat.hpp"
#include "entcoh/random.hpp"

using namespace entcoh;

namespace {

DensityMatrix diag_density(const Dims& dims, const RealVector& p) {
  Matrix m = Matrix::Zero(p.size(), p.size());
  for (Index i = 0; i < p.size(); ++i) m(i, i) = p(i);
  return DensityMatrix(dims, m);
}

OrthonormalBasis random_basis(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  return OrthonormalBasis(dims, random_unitary(dims.total(), rng));
}

}  // namespace

TEST_CASE("shannon entropy fixed points") {
  RealVector deterministic(2), fair(2), biased(2);
  deterministic << 1.0, 0.0;
  fair << 0.5, 0.5;
  biased << 0.75, 0.25;
  CHECK(shannon_entropy(deterministic) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(shannon_entropy(fair) == doctest::Approx(1.0).epsilon(1e-12));
  // direct evaluation of the binary entropy
  const double expected = -(0.75 * std::log2(0.75) + 0.25 * std::log2(0.25));
  CHECK(expected == doctest::Approx(0.8112781244591328).epsilon(1e-12));
  CHECK(shannon_entropy(biased) == doctest::Approx(expected).epsilon(1e-12));

  RealVector bad(2);
  bad << 0.6, 0.6;
  CHECK_THROWS_AS(shannon_entropy(bad), std::invalid_argument);

  RealVector tiny_negative(2);
  tiny_negative << 1.0 + 1e-9, -1e-9;
  CHECK(shannon_entropy(tiny_negative) == doctest::Approx(0.0).epsilon(1e-7));
}

TEST_CASE("von Neumann entropy fixed points") {
  const auto bell = DensityMatrix::from_pure(bell_phi_plus());
  CHECK(von_neumann_entropy(bell) == doctest::Approx(0.0).epsilon(1e-10));

  for (Index d : {2, 3, 4}) {
    const DensityMatrix mixed(Dims({d}), Matrix::Identity(d, d) / static_cast<double>(d));
    CHECK(von_neumann_entropy(mixed) ==
          doctest::Approx(std::log2(static_cast<double>(d))).epsilon(1e-12));
  }

  RealVector p(2);
  p << 0.75, 0.25;
  CHECK(von_neumann_entropy(diag_density(Dims({2}), p)) ==
        doctest::Approx(0.8112781244591328).epsilon(1e-12));
}

TEST_CASE("relative entropy fixed points") {
  const DensityMatrix rho = random_density(Dims({2, 2}), 3, 5);
  CHECK(relative_entropy(rho, rho) == doctest::Approx(0.0).epsilon(1e-9));

  RealVector p0(2), p1(2);
  p0 << 1.0, 0.0;
  p1 << 0.0, 1.0;
  const auto zero = diag_density(Dims({2}), p0);
  const auto one = diag_density(Dims({2}), p1);
  CHECK(std::isinf(relative_entropy(zero, one)));

  CHECK_THROWS_AS(
      relative_entropy(rho, DensityMatrix(Dims({2}), Matrix::Identity(2, 2) * 0.5)),
      std::invalid_argument);
}

TEST_CASE("relative entropy of a Schmidt state to its dephasing") {
  // S(|psi><psi| || sum_i a_i^2 |ii><ii|) = H({a_i^2}) for psi = sum_i a_i|ii>
  const double theta = 0.7;
  Vector amps = Vector::Zero(4);
  amps(0) = std::cos(theta);
  amps(3) = std::sin(theta);
  const PureState psi(Dims({2, 2}), amps);
  Matrix diag = Matrix::Zero(4, 4);
  diag(0, 0) = std::cos(theta) * std::cos(theta);
  diag(3, 3) = std::sin(theta) * std::sin(theta);
  const DensityMatrix sigma(Dims({2, 2}), diag);
  const double expected = binary_entropy(std::cos(theta) * std::cos(theta));
  CHECK(relative_entropy(DensityMatrix::from_pure(psi), sigma) ==
        doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("dephasing fixed points") {
  const Dims dims({2, 2});
  const auto comp = computational_basis(dims);

  // a basis mixture is untouched
  Rng rng(9);
  const auto basis = random_basis(dims, 21);
  RealVector w(4);
  w << 0.4, 0.3, 0.2, 0.1;
  const auto mix = BasisMixture(basis, w).to_density();
  CHECK((dephase(mix, basis).matrix() - mix.matrix()).cwiseAbs().maxCoeff() < 1e-10);

  // |+><+| dephases to I/2
  Vector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const DensityMatrix pp(Dims({2}), plus * plus.adjoint());
  const auto deph = dephase(pp, computational_basis(Dims({2})));
  CHECK((deph.matrix() - 0.5 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);

  // rho2(0.75) dephases to diag(0, 1/2, 1/2, 0) in the computational basis
  const auto deph2 = dephase(rho2(0.75), comp);
  RealVector expected(4);
  expected << 0.0, 0.5, 0.5, 0.0;
  for (Index i = 0; i < 4; ++i) {
    CHECK(deph2.matrix()(i, i).real() == doctest::Approx(expected(i)).epsilon(1e-12));
    for (Index j = 0; j < 4; ++j)
      if (i != j) CHECK(std::abs(deph2.matrix()(i, j)) < 1e-12);
  }

  CHECK_THROWS_AS(dephase(rho2(0.5), computational_basis(Dims({2, 3}))),
                  std::invalid_argument);
}

TEST_CASE("basis invariants are enforced") {
  Matrix u = Matrix::Identity(4, 4);
  u(0, 0) = 0.9;  // not orthonormal
  CHECK_THROWS_AS(OrthonormalBasis(Dims({2, 2}), u), std::invalid_argument);

  RealVector w(4);
  w << 0.5, 0.5, 0.2, -0.2;
  CHECK_THROWS_AS(BasisMixture(computational_basis(Dims({2, 2})), w), std::invalid_argument);
}

TEST_CASE("relative entropy is nonnegative and faithful") {
  int near_zero = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const DensityMatrix rho = random_density(Dims({2, 2}), 4, 2 * s);
    const DensityMatrix sigma = random_density(Dims({2, 2}), 4, 2 * s + 1);
    const double v = relative_entropy(rho, sigma);
    CHECK(v >= 0.0);
    if (v <= 1e-8) {
      ++near_zero;
      CHECK((rho.matrix() - sigma.matrix()).cwiseAbs().maxCoeff() <= 1e-6);
    }
  }
  CHECK(near_zero == 0);  // independent draws never collide
}

TEST_CASE("dephasing never decreases entropy and obeys the pinching identity") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const DensityMatrix rho = random_density(Dims({2, 2}), 1 + s % 4, 3000 + s);
    const auto basis = random_basis(Dims({2, 2}), 4000 + s);
    const auto pinched = dephase(rho, basis);
    const double s_rho = von_neumann_entropy(rho);
    const double s_pin = von_neumann_entropy(pinched);
    CHECK(s_pin >= s_rho - 1e-8);
    CHECK(relative_entropy(rho, pinched) == doctest::Approx(s_pin - s_rho).epsilon(1e-8));
  }
}

TEST_CASE("entropy of the spectrum equals the von Neumann entropy") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const DensityMatrix rho = random_density(Dims({2, 3}), 1 + s % 6, 6000 + s);
    RealVector eigs = hermitian_eig(rho.matrix()).eigenvalues.cwiseMax(0.0);
    eigs /= eigs.sum();
    CHECK(shannon_entropy(eigs) == doctest::Approx(von_neumann_entropy(rho)).epsilon(1e-8));
  }
}
