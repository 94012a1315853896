#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace entcoh {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Shared numeric tolerances.
inline constexpr double kNormTol = 1e-9;    // state normalization
inline constexpr double kHermTol = 1e-9;    // max-norm Hermiticity defect
inline constexpr double kPsdTol = 1e-9;     // admissible negative eigenvalue
inline constexpr double kOrthoTol = 1e-8;   // basis orthonormality / completeness
inline constexpr double kNullEig = 1e-12;   // eigenvalues below this count as zero
inline constexpr double kRankTol = 1e-10;   // Schmidt-rank truncation

// Subsystem dimensions d_1..d_m of a tensor-product space.
//
// Global index convention, fixed here and used everywhere:
//   index = sum_k i_k * prod_{j>k} d_j
// i.e. the first subsystem carries the largest stride, so kron(A, B)
// acts on subsystem order (A, B).
class Dims {
 public:
  explicit Dims(std::vector<Index> subsystem_dims);

  Index parties() const { return static_cast<Index>(d_.size()); }
  Index total() const { return total_; }
  Index operator[](Index k) const { return d_.at(static_cast<size_t>(k)); }
  const std::vector<Index>& list() const { return d_; }

  // Stride of subsystem k in the global index.
  Index stride(Index k) const { return strides_.at(static_cast<size_t>(k)); }

  // Decompose a global index into per-subsystem digits and back.
  std::vector<Index> digits(Index index) const;
  Index index_of(const std::vector<Index>& digits) const;

  bool operator==(const Dims& other) const { return d_ == other.d_; }
  bool operator!=(const Dims& other) const { return !(*this == other); }

  std::string str() const;                  // e.g. "2x2x3"
  static Dims parse(const std::string& s);  // inverse of str()

 private:
  std::vector<Index> d_;
  std::vector<Index> strides_;
  Index total_ = 0;
};

// A nonempty proper subset of the parties; the complement is implied.
struct Bipartition {
  std::vector<int> party_set_a;  // sorted, unique

  explicit Bipartition(std::vector<int> a);

  void check_against(const Dims& dims) const;
  std::vector<int> complement(const Dims& dims) const;
  std::string str() const;
};

// Normalized amplitude vector over a declared tensor structure.
class PureState {
 public:
  PureState(Dims dims, Vector amplitudes);

  const Dims& dims() const { return dims_; }
  const Vector& amplitudes() const { return amps_; }
  Index dim() const { return amps_.size(); }

  Matrix projector() const { return amps_ * amps_.adjoint(); }

 private:
  Dims dims_;
  Vector amps_;
};

// Trace-one positive Hermitian operator over a declared tensor structure.
class DensityMatrix {
 public:
  DensityMatrix(Dims dims, Matrix matrix);

  const Dims& dims() const { return dims_; }
  const Matrix& matrix() const { return mat_; }
  Index dim() const { return mat_.rows(); }

  static DensityMatrix from_pure(const PureState& psi);

 private:
  Dims dims_;
  Matrix mat_;
};

namespace detail {
void require(bool cond, const std::string& message);
}  // namespace detail

}  // namespace entcoh
