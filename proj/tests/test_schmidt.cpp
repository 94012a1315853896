#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entcoh/catalog.hpp"
#include "entcoh/entropy.hpp"
#include "entcoh/qmat.hpp"
#include "entcoh/random.hpp"
#include "entcoh/schmidt.hpp"

using namespace entcoh;

namespace {

PureState two_qubit_schmidt(double theta) {
  Vector v = Vector::Zero(4);
  v(0) = std::cos(theta);
  v(3) = std::sin(theta);
  return PureState(Dims({2, 2}), v);
}

Vector reconstruct(const SchmidtForm& sf) {
  Vector out = Vector::Zero(sf.left_basis.rows() * sf.right_basis.rows());
  for (Index i = 0; i < sf.rank(); ++i)
    out += sf.coefficients(i) *
           tensor_product(sf.left_basis.col(i), sf.right_basis.col(i)).col(0);
  return out;
}

}  // namespace

TEST_CASE("schmidt coefficients of named states") {
  const auto bell = schmidt_decompose(bell_psi_plus(), Bipartition({0}));
  CHECK(bell.rank() == 2);
  CHECK(bell.coefficients(0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(bell.coefficients(1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

  // |0> (x) |+> is product
  Vector v = Vector::Zero(4);
  v(0) = v(1) = 1.0 / std::sqrt(2.0);
  const auto prod = schmidt_decompose(PureState(Dims({2, 2}), v), Bipartition({0}));
  CHECK(prod.rank() == 1);
  CHECK(prod.coefficients(0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("schmidt coefficients against the closed-form 2x2 singular values") {
  // (|00> + |01> + |10>)/sqrt(3) reshapes to [[1,1],[1,0]]/sqrt(3); its
  // singular values are sqrt((3 ± sqrt(5))/6)
  Vector v = Vector::Zero(4);
  v(0) = v(1) = v(2) = 1.0 / std::sqrt(3.0);
  const auto sf = schmidt_decompose(PureState(Dims({2, 2}), v), Bipartition({0}));
  const double s0 = std::sqrt((3.0 + std::sqrt(5.0)) / 6.0);
  const double s1 = std::sqrt((3.0 - std::sqrt(5.0)) / 6.0);
  REQUIRE(sf.rank() == 2);
  CHECK(sf.coefficients(0) == doctest::Approx(s0).epsilon(1e-12));
  CHECK(sf.coefficients(1) == doctest::Approx(s1).epsilon(1e-12));
}

TEST_CASE("schmidt form invariants on random states") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Dims dims = s % 2 ? Dims({2, 3}) : Dims({3, 3});
    const PureState psi = random_pure(dims, 10 + s);
    const auto sf = schmidt_decompose(psi, Bipartition({0}));
    CHECK(std::abs(sf.coefficients.array().square().sum() - 1.0) < 1e-9);
    CHECK(sf.coefficients.minCoeff() > 1e-10);
    for (Index i = 0; i + 1 < sf.rank(); ++i)
      CHECK(sf.coefficients(i) >= sf.coefficients(i + 1));
    CHECK((reconstruct(sf) - psi.amplitudes()).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((sf.left_basis.adjoint() * sf.left_basis -
           Matrix::Identity(sf.rank(), sf.rank()))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
    CHECK((sf.right_basis.adjoint() * sf.right_basis -
           Matrix::Identity(sf.rank(), sf.rank()))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
  }

  // multiparty split {0,2} of a 2x2x2 state reconstructs after regrouping
  const PureState psi = random_pure(Dims({2, 2, 2}), 99);
  const Bipartition split({0, 2});
  const auto sf = schmidt_decompose(psi, split);
  const auto grouped = group_bipartite(psi, split);
  CHECK((reconstruct(sf) - grouped.amps).cwiseAbs().maxCoeff() < 1e-8);

  CHECK_THROWS_AS(schmidt_decompose(PureState(Dims({4}), Vector::Unit(4, 0)), Bipartition({0})),
                  std::invalid_argument);
}

TEST_CASE("pure-state entanglement detection") {
  CHECK(is_entangled_pure(bell_psi_plus(), Bipartition({0})));
  CHECK_FALSE(is_entangled_pure(random_product_pure(Dims({2, 2}), 4), Bipartition({0})));
  // theta = 0.01: second Schmidt coefficient sin(0.01) ~ 1e-2 > 1e-8
  CHECK(is_entangled_pure(two_qubit_schmidt(0.01), Bipartition({0})));
}

TEST_CASE("genuine multiparty entanglement") {
  CHECK(is_gme_pure(ghz(3)));
  CHECK(is_gme_pure(w_state(3)));

  // |psi+>_{12} (x) |0>_3 is product across the 12|3 cut
  const Vector psi_plus = bell_psi_plus().amplitudes();
  const Vector zero = Vector::Unit(2, 0);
  const PureState bisep(Dims({2, 2, 2}), tensor_product(psi_plus, zero).col(0));
  CHECK_FALSE(is_gme_pure(bisep));
  CHECK(is_entangled_pure(bisep, Bipartition({0})));

  // W3 has Schmidt rank 2 across each single-party cut: verify via the
  // closed-form 2x2 Gram spectrum of the reshaped amplitudes
  const auto w3 = w_state(3);
  for (int p = 0; p < 3; ++p) {
    const auto grouped = group_bipartite(w3, Bipartition({p}));
    Matrix m(2, 4);
    for (Index x = 0; x < 8; ++x) m(x / 4, x % 4) = grouped.amps(x);
    const Matrix g = m * m.adjoint();
    const double tr = g.trace().real();
    const double det = (g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0)).real();
    const double lam_min = 0.5 * (tr - std::sqrt(std::max(0.0, tr * tr - 4.0 * det)));
    CHECK(std::sqrt(std::max(0.0, lam_min)) > 1e-8);
  }

  CHECK(static_cast<int>(all_bipartitions(3).size()) == 3);
  CHECK(static_cast<int>(all_bipartitions(4).size()) == 7);
}

TEST_CASE("entanglement entropy values and symmetry") {
  CHECK(entanglement_entropy(bell_phi_plus(), Bipartition({0})) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(entanglement_entropy(random_product_pure(Dims({2, 3}), 8), Bipartition({0})) ==
        doctest::Approx(0.0).epsilon(1e-9));

  for (double theta : {0.2, 0.5, M_PI / 4}) {
    const double expected = binary_entropy(std::cos(theta) * std::cos(theta));
    CHECK(entanglement_entropy(two_qubit_schmidt(theta), Bipartition({0})) ==
          doctest::Approx(expected).epsilon(1e-10));
  }

  for (std::uint64_t s = 0; s < 10; ++s) {
    const PureState psi = random_pure(Dims({2, 3}), 60 + s);
    const double ea = entanglement_entropy(psi, Bipartition({0}));
    const double eb = entanglement_entropy(psi, Bipartition({1}));
    CHECK(ea == doctest::Approx(eb).epsilon(1e-8));
    // matches the reduced-state von Neumann entropy on either side
    const auto rho = DensityMatrix::from_pure(psi);
    CHECK(ea == doctest::Approx(von_neumann_entropy(partial_trace(rho, {0}))).epsilon(1e-8));
    CHECK(ea == doctest::Approx(von_neumann_entropy(partial_trace(rho, {1}))).epsilon(1e-8));
  }
}
