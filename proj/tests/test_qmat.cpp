#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entcoh/catalog.hpp"
#include "entcoh/qmat.hpp"
#include "entcoh/random.hpp"

using namespace entcoh;

namespace {

Matrix random_hermitian(Index d, Rng& rng) {
  Matrix g(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) g(i, j) = rng.cgauss();
  return 0.5 * (g + g.adjoint().eval());
}

}  // namespace

TEST_CASE("dims index convention") {
  const Dims dims({2, 3, 2});
  CHECK(dims.total() == 12);
  // first subsystem most significant
  CHECK(dims.index_of({1, 0, 0}) == 6);
  CHECK(dims.index_of({0, 2, 1}) == 5);
  for (Index x = 0; x < dims.total(); ++x) CHECK(dims.index_of(dims.digits(x)) == x);
  CHECK_THROWS_AS(Dims({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Dims({}), std::invalid_argument);
  CHECK(Dims::parse("2x3x2") == dims);
  CHECK_THROWS_AS(Dims::parse("2xx3"), std::invalid_argument);
}

TEST_CASE("type invariants are enforced") {
  Vector bad(4);
  bad << 1.0, 1.0, 0.0, 0.0;  // norm sqrt(2)
  CHECK_THROWS_AS(PureState(Dims({2, 2}), bad), std::invalid_argument);

  Matrix not_herm = Matrix::Zero(2, 2);
  not_herm(0, 1) = 1.0;
  CHECK_THROWS_AS(DensityMatrix(Dims({2}), not_herm), std::invalid_argument);

  Matrix wrong_trace = 2.0 * Matrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix(Dims({2}), wrong_trace), std::invalid_argument);

  Matrix indefinite = Matrix::Zero(2, 2);
  indefinite(0, 0) = 1.5;
  indefinite(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix(Dims({2}), indefinite), std::invalid_argument);

  CHECK_THROWS_AS(Bipartition({}), std::invalid_argument);
  CHECK_THROWS_AS(Bipartition({0, 1}).check_against(Dims({2, 2})), std::invalid_argument);
}

TEST_CASE("tensor product basics") {
  const Matrix i2 = Matrix::Identity(2, 2);
  CHECK((tensor_product(i2, i2) - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

  Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  const Matrix out = tensor_product(p0, p1);
  for (Index r = 0; r < 4; ++r)
    for (Index c = 0; c < 4; ++c)
      CHECK(out(r, c) == (r == 1 && c == 1 ? Complex(1.0) : Complex(0.0)));
}

TEST_CASE("tensor product definition on random factors") {
  Rng rng(42);
  Matrix a(2, 2), b(3, 3);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) a(i, j) = rng.cgauss();
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) b(i, j) = rng.cgauss();
  const Matrix out = tensor_product(a, b);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      for (Index k = 0; k < 3; ++k)
        for (Index l = 0; l < 3; ++l)
          CHECK(std::abs(out(i * 3 + k, j * 3 + l) - a(i, j) * b(k, l)) < 1e-15);
}

TEST_CASE("partial trace of maximally entangled and product states") {
  const auto bell = DensityMatrix::from_pure(bell_psi_plus());
  const auto red = partial_trace(bell, {0});
  CHECK((red.matrix() - 0.5 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);

  // product state reduces to its factor
  Rng rng(7);
  const Vector a = random_unit_vector(2, rng), b = random_unit_vector(3, rng);
  const Matrix rho_a = a * a.adjoint(), rho_b = b * b.adjoint();
  const DensityMatrix prod(Dims({2, 3}), tensor_product(rho_a, rho_b));
  CHECK((partial_trace(prod, {0}).matrix() - rho_a).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((partial_trace(prod, {1}).matrix() - rho_b).cwiseAbs().maxCoeff() < 1e-12);

  const auto ghz3 = DensityMatrix::from_pure(ghz(3));
  const auto one = partial_trace(ghz3, {2});
  CHECK(std::abs(one.matrix()(0, 0).real() - 0.5) < 1e-12);
  CHECK(std::abs(one.matrix()(1, 1).real() - 0.5) < 1e-12);
  CHECK(std::abs(one.matrix()(0, 1)) < 1e-12);

  CHECK_THROWS_AS(partial_trace(bell, {}), std::invalid_argument);
}

TEST_CASE("partial trace preserves the trace") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const DensityMatrix rho = random_density(Dims({2, 3}), 4, s);
    CHECK(std::abs(partial_trace(rho, {0}).matrix().trace().real() - 1.0) < 1e-10);
    CHECK(std::abs(partial_trace(rho, {1}).matrix().trace().real() - 1.0) < 1e-10);
  }
}

TEST_CASE("partial transpose") {
  // separable product state stays PSD
  Rng rng(3);
  const Vector a = random_unit_vector(2, rng), b = random_unit_vector(2, rng);
  const DensityMatrix prod(Dims({2, 2}),
                           tensor_product(a * a.adjoint(), b * b.adjoint()));
  const auto e_prod = hermitian_eig(partial_transpose(prod, Bipartition({0})));
  CHECK(e_prod.eigenvalues.minCoeff() >= -1e-12);

  // Bell state: PT spectrum is {1/2, 1/2, 1/2, -1/2}
  const auto bell = DensityMatrix::from_pure(bell_psi_plus());
  const auto e_bell = hermitian_eig(partial_transpose(bell, Bipartition({0})));
  CHECK(e_bell.eigenvalues.minCoeff() == doctest::Approx(-0.5).epsilon(1e-12));

  // the p = 1/2 Bell mixture is separable, so its PT is PSD
  const auto e_rho2 = hermitian_eig(partial_transpose(rho2(0.5), Bipartition({0})));
  CHECK(e_rho2.eigenvalues.minCoeff() >= -1e-12);

  // applying the index-swap map twice is the identity
  for (std::uint64_t s = 0; s < 10; ++s) {
    const DensityMatrix rho = random_density(Dims({2, 3}), 6, 100 + s);
    const Matrix pt = partial_transpose(rho, Bipartition({0}));
    const Dims& dims = rho.dims();
    Matrix twice(pt.rows(), pt.cols());
    for (Index r = 0; r < pt.rows(); ++r) {
      for (Index c = 0; c < pt.cols(); ++c) {
        auto rd = dims.digits(r);
        auto cd = dims.digits(c);
        std::swap(rd[0], cd[0]);
        twice(dims.index_of(rd), dims.index_of(cd)) = pt(r, c);
      }
    }
    CHECK((twice - rho.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("hermitian_eig on fixed and random matrices") {
  Matrix diag = Matrix::Zero(2, 2);
  diag(0, 0) = 0.3;
  diag(1, 1) = 0.7;
  const auto e1 = hermitian_eig(diag);
  CHECK(e1.eigenvalues(0) == doctest::Approx(0.3));
  CHECK(e1.eigenvalues(1) == doctest::Approx(0.7));

  Matrix pauli_x = Matrix::Zero(2, 2);
  pauli_x(0, 1) = pauli_x(1, 0) = 1.0;
  const auto e2 = hermitian_eig(pauli_x);
  CHECK(e2.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(e2.eigenvalues(1) == doctest::Approx(1.0));
  Vector minus(2), plus(2);
  minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK(std::abs(e2.eigenvectors.col(0).dot(minus)) == doctest::Approx(1.0));
  CHECK(std::abs(e2.eigenvectors.col(1).dot(plus)) == doctest::Approx(1.0));

  Rng rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    const Index d = 2 + rep % 5;
    const Matrix h = random_hermitian(d, rng);
    const auto e = hermitian_eig(h);
    Matrix rebuilt = Matrix::Zero(d, d);
    for (Index i = 0; i < d; ++i)
      rebuilt += e.eigenvalues(i) * (e.eigenvectors.col(i) * e.eigenvectors.col(i).adjoint());
    CHECK((rebuilt - h).cwiseAbs().maxCoeff() < 1e-8 * std::max(1.0, h.norm()));
    CHECK((e.eigenvectors.adjoint() * e.eigenvectors - Matrix::Identity(d, d))
              .cwiseAbs()
              .maxCoeff() < 1e-8);
  }

  CHECK_THROWS_AS(hermitian_eig(Matrix::Zero(2, 3)), std::invalid_argument);
  Matrix skew = Matrix::Zero(2, 2);
  skew(0, 1) = 1e-6;  // asymmetry above tolerance
  CHECK_THROWS_AS(hermitian_eig(skew), std::invalid_argument);
}

TEST_CASE("density matrix spectra behave") {
  for (std::uint64_t s = 0; s < 25; ++s) {
    const DensityMatrix rho = random_density(Dims({3, 3}), 1 + s % 9, 5000 + s);
    const auto e = hermitian_eig(rho.matrix());
    CHECK(std::abs(e.eigenvalues.sum() - 1.0) < 1e-8);
    CHECK(e.eigenvalues.minCoeff() >= -1e-8);
  }
}

TEST_CASE("product states factor through partial traces") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const PureState prod = random_product_pure(Dims({2, 3}), 900 + s);
    const DensityMatrix rho = DensityMatrix::from_pure(prod);
    const Matrix a = partial_trace(rho, {0}).matrix();
    const Matrix b = partial_trace(rho, {1}).matrix();
    CHECK((tensor_product(a, b) - rho.matrix()).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("permute_subsystems round trip") {
  const Dims dims({2, 3, 2});
  Rng rng(77);
  const Vector v = random_unit_vector(dims.total(), rng);
  const Vector w = permute_subsystems(v, dims, {2, 0, 1});
  const Vector back = permute_subsystems(w, Dims({2, 2, 3}), {1, 2, 0});
  CHECK((back - v).cwiseAbs().maxCoeff() < 1e-15);
}
