#include "entcoh/catalog.hpp"

#include <cmath>

#include "entcoh/qmat.hpp"

namespace entcoh {

namespace {

Vector superpose(const Vector& a, const Vector& b, double sign) {
  return (a + sign * b) / std::sqrt(2.0);
}

}  // namespace

PureState bell_phi_plus() {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return PureState(Dims({2, 2}), v);
}

PureState bell_psi_plus() {
  Vector v = Vector::Zero(4);
  v(1) = v(2) = 1.0 / std::sqrt(2.0);
  return PureState(Dims({2, 2}), v);
}

PureState bell_psi_minus() {
  Vector v = Vector::Zero(4);
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = -1.0 / std::sqrt(2.0);
  return PureState(Dims({2, 2}), v);
}

DensityMatrix rho2(double p) {
  detail::require(p >= 0.0 && p <= 1.0, "rho2: p must lie in [0, 1]");
  const Matrix m = p * bell_psi_plus().projector() + (1.0 - p) * bell_psi_minus().projector();
  return DensityMatrix(Dims({2, 2}), m);
}

PureState ghz(Index m) {
  detail::require(m >= 2, "ghz: need at least two qubits");
  const Index d = Index{1} << m;
  Vector v = Vector::Zero(d);
  v(0) = v(d - 1) = 1.0 / std::sqrt(2.0);
  return PureState(Dims(std::vector<Index>(static_cast<size_t>(m), 2)), v);
}

PureState w_state(Index m) {
  detail::require(m >= 2, "w: need at least two qubits");
  const Index d = Index{1} << m;
  Vector v = Vector::Zero(d);
  for (Index k = 0; k < m; ++k) v(Index{1} << k) = 1.0 / std::sqrt(static_cast<double>(m));
  return PureState(Dims(std::vector<Index>(static_cast<size_t>(m), 2)), v);
}

OrthonormalBasis domino_basis() {
  const Dims dims({3, 3});
  auto e = [](int i) { return Vector(Vector::Unit(3, i)); };
  std::vector<std::pair<Vector, Vector>> pairs = {
      {e(1), e(1)},
      {e(0), superpose(e(0), e(1), +1.0)},
      {e(0), superpose(e(0), e(1), -1.0)},
      {e(2), superpose(e(1), e(2), +1.0)},
      {e(2), superpose(e(1), e(2), -1.0)},
      {superpose(e(1), e(2), +1.0), e(0)},
      {superpose(e(1), e(2), -1.0), e(0)},
      {superpose(e(0), e(1), +1.0), e(2)},
      {superpose(e(0), e(1), -1.0), e(2)},
  };
  Matrix u(9, 9);
  for (size_t k = 0; k < pairs.size(); ++k)
    u.col(static_cast<Index>(k)) = tensor_product(pairs[k].first, pairs[k].second).col(0);
  return OrthonormalBasis(dims, std::move(u));
}

OrthonormalBasis computational_basis(const Dims& dims) {
  return OrthonormalBasis(dims, Matrix::Identity(dims.total(), dims.total()));
}

CatalogEntry catalog(const std::string& name) {
  std::string head = name;
  std::string arg;
  const auto lp = name.find('(');
  if (lp != std::string::npos) {
    detail::require(name.back() == ')', "catalog: malformed name '" + name + "'");
    head = name.substr(0, lp);
    arg = name.substr(lp + 1, name.size() - lp - 2);
  }
  if (head == "bell_phi+") return bell_phi_plus();
  if (head == "bell_psi+") return bell_psi_plus();
  if (head == "bell_psi-") return bell_psi_minus();
  if (head == "domino_basis") return domino_basis();
  if (head == "rho2") {
    detail::require(!arg.empty(), "catalog: rho2 requires a mixing parameter, e.g. rho2(0.75)");
    return rho2(std::stod(arg));
  }
  if (head == "ghz") {
    detail::require(!arg.empty(), "catalog: ghz requires a party count, e.g. ghz(3)");
    return ghz(std::stoll(arg));
  }
  if (head == "w") {
    detail::require(!arg.empty(), "catalog: w requires a party count, e.g. w(3)");
    return w_state(std::stoll(arg));
  }
  if (head == "computational") {
    detail::require(!arg.empty(), "catalog: computational requires dims, e.g. computational(2x2)");
    return computational_basis(Dims::parse(arg));
  }
  throw std::invalid_argument("catalog: unknown name '" + name + "'");
}

bool matches_known_indistinguishable(const OrthonormalBasis& basis) {
  if (basis.dims().parties() != 2 || basis.dims()[0] != 3 || basis.dims()[1] != 3) return false;
  const OrthonormalBasis known = domino_basis();
  // bijective identity match up to element order and global phases
  std::vector<bool> used(static_cast<size_t>(basis.size()), false);
  for (Index i = 0; i < known.size(); ++i) {
    bool found = false;
    for (Index j = 0; j < basis.size(); ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      const double ov = std::abs(known.elements().col(i).dot(basis.elements().col(j)));
      if (ov >= 1.0 - 1e-9) {
        used[static_cast<size_t>(j)] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace entcoh
