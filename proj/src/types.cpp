#include "entcoh/types.hpp"

#include <algorithm>
#include <sstream>

namespace entcoh {

namespace detail {

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

}  // namespace detail

Dims::Dims(std::vector<Index> subsystem_dims) : d_(std::move(subsystem_dims)) {
  detail::require(!d_.empty(), "Dims: subsystem list must be nonempty");
  total_ = 1;
  for (Index dk : d_) {
    detail::require(dk >= 2, "Dims: every subsystem dimension must be >= 2");
    total_ *= dk;
  }
  strides_.assign(d_.size(), 1);
  for (size_t k = d_.size(); k-- > 1;)
    strides_[k - 1] = strides_[k] * d_[k];
}

std::vector<Index> Dims::digits(Index index) const {
  detail::require(index >= 0 && index < total_, "Dims: index out of range");
  std::vector<Index> out(d_.size());
  for (size_t k = 0; k < d_.size(); ++k) {
    out[k] = index / strides_[k];
    index %= strides_[k];
  }
  return out;
}

Index Dims::index_of(const std::vector<Index>& digits) const {
  detail::require(digits.size() == d_.size(), "Dims: digit count mismatch");
  Index index = 0;
  for (size_t k = 0; k < d_.size(); ++k) {
    detail::require(digits[k] >= 0 && digits[k] < d_[k], "Dims: digit out of range");
    index += digits[k] * strides_[k];
  }
  return index;
}

std::string Dims::str() const {
  std::ostringstream os;
  for (size_t k = 0; k < d_.size(); ++k) {
    if (k) os << 'x';
    os << d_[k];
  }
  return os.str();
}

Dims Dims::parse(const std::string& s) {
  std::vector<Index> dims;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, 'x')) {
    detail::require(!tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos,
                    "Dims: malformed dims string '" + s + "'");
    dims.push_back(static_cast<Index>(std::stoll(tok)));
  }
  detail::require(!dims.empty(), "Dims: malformed dims string '" + s + "'");
  return Dims(dims);
}

Bipartition::Bipartition(std::vector<int> a) : party_set_a(std::move(a)) {
  std::sort(party_set_a.begin(), party_set_a.end());
  detail::require(!party_set_a.empty(), "Bipartition: party set A must be nonempty");
  detail::require(std::adjacent_find(party_set_a.begin(), party_set_a.end()) == party_set_a.end(),
                  "Bipartition: duplicate party index");
}

void Bipartition::check_against(const Dims& dims) const {
  const auto m = dims.parties();
  for (int p : party_set_a)
    detail::require(p >= 0 && p < m, "Bipartition: party index out of range");
  detail::require(static_cast<Index>(party_set_a.size()) < m,
                  "Bipartition: party set A must be a proper subset");
}

std::vector<int> Bipartition::complement(const Dims& dims) const {
  check_against(dims);
  std::vector<int> b;
  for (int p = 0; p < dims.parties(); ++p)
    if (!std::binary_search(party_set_a.begin(), party_set_a.end(), p)) b.push_back(p);
  return b;
}

std::string Bipartition::str() const {
  std::ostringstream os;
  for (size_t k = 0; k < party_set_a.size(); ++k) {
    if (k) os << ',';
    os << party_set_a[k];
  }
  return os.str();
}

PureState::PureState(Dims dims, Vector amplitudes)
    : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
  detail::require(amps_.size() == dims_.total(),
                  "PureState: amplitude length does not match dims product");
  detail::require(amps_.allFinite(), "PureState: amplitudes must be finite");
  const double norm = amps_.norm();
  detail::require(std::abs(norm - 1.0) <= kNormTol,
                  "PureState: amplitude vector is not normalized");
}

DensityMatrix::DensityMatrix(Dims dims, Matrix matrix)
    : dims_(std::move(dims)), mat_(std::move(matrix)) {
  detail::require(mat_.rows() == mat_.cols(), "DensityMatrix: matrix must be square");
  detail::require(mat_.rows() == dims_.total(),
                  "DensityMatrix: matrix side does not match dims product");
  detail::require(mat_.allFinite(), "DensityMatrix: entries must be finite");
  const double herm_defect = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  detail::require(herm_defect <= kHermTol, "DensityMatrix: matrix is not Hermitian");
  detail::require(std::abs(mat_.trace().real() - 1.0) <= kNormTol &&
                      std::abs(mat_.trace().imag()) <= kNormTol,
                  "DensityMatrix: trace must be 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (mat_ + mat_.adjoint()),
                                           Eigen::EigenvaluesOnly);
  detail::require(es.eigenvalues().minCoeff() >= -kPsdTol,
                  "DensityMatrix: matrix is not positive semidefinite");
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.dims(), psi.projector());
}

}  // namespace entcoh
