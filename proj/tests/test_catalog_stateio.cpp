#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "entcoh/catalog.hpp"
#include "entcoh/entropy.hpp"
#include "entcoh/locc.hpp"
#include "entcoh/qmat.hpp"
#include "entcoh/random.hpp"
#include "entcoh/stateio.hpp"

using namespace entcoh;

TEST_CASE("catalog constructions satisfy their defining equations") {
  // <psi+|rho2(p)|psi+> = p to machine precision
  for (double p : {0.1, 0.5, 0.75}) {
    const auto rho = rho2(p);
    const Vector plus = bell_psi_plus().amplitudes();
    const Vector minus = bell_psi_minus().amplitudes();
    CHECK(std::abs((plus.adjoint() * rho.matrix() * plus)(0).real() - p) < 1e-15);
    CHECK(std::abs((minus.adjoint() * rho.matrix() * minus)(0).real() - (1.0 - p)) < 1e-15);
  }

  // rho2(0.75) has the nondegenerate spectrum {0.75, 0.25, 0, 0}
  const auto eig = hermitian_eig(rho2(0.75).matrix());
  CHECK(eig.eigenvalues(3) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(eig.eigenvalues(2) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(std::abs(eig.eigenvalues(1)) < 1e-12);

  const auto g = ghz(3);
  CHECK(g.amplitudes()(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(g.amplitudes()(7).real() == doctest::Approx(1.0 / std::sqrt(2.0)));

  const auto w3 = w_state(3);
  for (Index i : {1, 2, 4})
    CHECK(std::abs(w3.amplitudes()(i) - 1.0 / std::sqrt(3.0)) < 1e-15);

  // domino: nine orthonormal fully product elements
  const auto dom = domino_basis();
  CHECK(dom.size() == 9);
  CHECK(is_product_basis(dom));

  CHECK(catalog("bell_phi+").index() == 0);
  CHECK(std::get<DensityMatrix>(catalog("rho2(0.75)")).dims() == Dims({2, 2}));
  CHECK(std::get<PureState>(catalog("ghz(3)")).dims() == Dims({2, 2, 2}));
  CHECK(std::get<PureState>(catalog("w(4)")).dims() == Dims({2, 2, 2, 2}));
  CHECK(std::get<OrthonormalBasis>(catalog("computational(2x3)")).size() == 6);
  CHECK_THROWS_AS(catalog("unknown_state"), std::invalid_argument);
  CHECK_THROWS_AS(catalog("rho2"), std::invalid_argument);
  CHECK_THROWS_AS(catalog("rho2(1.5)"), std::invalid_argument);
}

TEST_CASE("state files round trip") {
  const PureState psi = random_pure(Dims({2, 3}), 1);
  const auto psi_back = std::get<PureState>(parse_state_text(serialize(psi)));
  CHECK((psi_back.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff() == 0.0);

  const DensityMatrix rho = random_density(Dims({2, 2}), 3, 2);
  const auto rho_back = std::get<DensityMatrix>(parse_state_text(serialize(rho)));
  CHECK((rho_back.matrix() - rho.matrix()).cwiseAbs().maxCoeff() == 0.0);

  Rng rng(3);
  const OrthonormalBasis basis(Dims({2, 2}), random_unitary(4, rng));
  const auto basis_back = std::get<OrthonormalBasis>(parse_state_text(serialize(basis)));
  CHECK((basis_back.elements() - basis.elements()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("malformed state files name the violated invariant") {
  CHECK_THROWS_WITH_AS(parse_state_text("blob 2x2\n0 0\n"), doctest::Contains("unknown kind"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_state_text("pure 2x2\n1 0\n0 0\n"),
                       doctest::Contains("complex entries"), std::invalid_argument);
  // unnormalized pure vector
  CHECK_THROWS_WITH_AS(parse_state_text("pure 2\n1 0\n1 0\n"),
                       doctest::Contains("not normalized"), std::invalid_argument);
  // density with trace 2
  CHECK_THROWS_WITH_AS(parse_state_text("density 2\n1 0\n0 0\n0 0\n1 0\n"),
                       doctest::Contains("trace"), std::invalid_argument);
  // valid header, non-orthonormal basis
  CHECK_THROWS_WITH_AS(
      parse_state_text("basis 2\n1 0\n0 0\n1 0\n0 0\n"),
      doctest::Contains("orthonormal"), std::invalid_argument);
  // trailing garbage
  CHECK_THROWS_WITH_AS(parse_state_text("pure 2\n1 0\n0 0\n9 9\n"),
                       doctest::Contains("trailing"), std::invalid_argument);
}

TEST_CASE("state files persist through disk") {
  const DensityMatrix rho = rho2(0.3);
  const std::string path = "rho2_roundtrip.state";
  save_state_file(path, rho);
  const auto back = std::get<DensityMatrix>(load_state_file(path));
  CHECK((back.matrix() - rho.matrix()).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(load_state_file("does_not_exist.state"), std::invalid_argument);
  std::remove(path.c_str());
}
