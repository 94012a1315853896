#include "entcoh/qmat.hpp"

#include <algorithm>
#include <numeric>

namespace entcoh {

Vector tensor_all(const std::vector<Vector>& factors) {
  detail::require(!factors.empty(), "tensor_all: empty factor list");
  Vector out = factors.front();
  for (size_t k = 1; k < factors.size(); ++k)
    out = tensor_product(out, factors[k]).col(0);
  return out;
}

namespace {

// index permutation taking the original global index to the index in the
// permuted subsystem order
std::vector<Index> index_map(const Dims& dims, const std::vector<int>& perm) {
  detail::require(static_cast<Index>(perm.size()) == dims.parties(),
                  "permute_subsystems: permutation length mismatch");
  std::vector<int> seen(perm.size(), 0);
  std::vector<Index> new_dims(perm.size());
  for (size_t k = 0; k < perm.size(); ++k) {
    detail::require(perm[k] >= 0 && perm[k] < dims.parties() && !seen[perm[k]]++,
                    "permute_subsystems: not a permutation");
    new_dims[k] = dims[perm[k]];
  }
  const Dims permuted{new_dims};
  std::vector<Index> map(static_cast<size_t>(dims.total()));
  std::vector<Index> new_digits(perm.size());
  for (Index x = 0; x < dims.total(); ++x) {
    const auto digits = dims.digits(x);
    for (size_t k = 0; k < perm.size(); ++k)
      new_digits[k] = digits[static_cast<size_t>(perm[k])];
    map[static_cast<size_t>(x)] = permuted.index_of(new_digits);
  }
  return map;
}

}  // namespace

Vector permute_subsystems(const Vector& amps, const Dims& dims, const std::vector<int>& perm) {
  const auto map = index_map(dims, perm);
  Vector out(amps.size());
  for (Index x = 0; x < amps.size(); ++x) out(map[static_cast<size_t>(x)]) = amps(x);
  return out;
}

Matrix permute_subsystems(const Matrix& op, const Dims& dims, const std::vector<int>& perm) {
  const auto map = index_map(dims, perm);
  Matrix out(op.rows(), op.cols());
  for (Index r = 0; r < op.rows(); ++r)
    for (Index c = 0; c < op.cols(); ++c)
      out(map[static_cast<size_t>(r)], map[static_cast<size_t>(c)]) = op(r, c);
  return out;
}

Matrix partial_trace_raw(const Matrix& op, const Dims& dims, const std::vector<int>& keep) {
  detail::require(!keep.empty(), "partial_trace: keep set must be nonempty");
  detail::require(op.rows() == dims.total() && op.cols() == dims.total(),
                  "partial_trace: operator side does not match dims");
  std::vector<int> keep_sorted = keep;
  std::sort(keep_sorted.begin(), keep_sorted.end());
  detail::require(std::adjacent_find(keep_sorted.begin(), keep_sorted.end()) == keep_sorted.end(),
                  "partial_trace: duplicate subsystem in keep set");
  for (int p : keep_sorted)
    detail::require(p >= 0 && p < dims.parties(), "partial_trace: subsystem index out of range");

  std::vector<int> traced;
  for (int p = 0; p < dims.parties(); ++p)
    if (!std::binary_search(keep_sorted.begin(), keep_sorted.end(), p)) traced.push_back(p);

  Index dk = 1, dt = 1;
  for (int p : keep_sorted) dk *= dims[p];
  for (int p : traced) dt *= dims[p];

  // resolve (kept index, traced index) back to a global index
  auto global_of = [&](Index ik, Index it) {
    std::vector<Index> digits(static_cast<size_t>(dims.parties()));
    for (size_t k = keep_sorted.size(); k-- > 0;) {
      const Index d = dims[keep_sorted[k]];
      digits[static_cast<size_t>(keep_sorted[k])] = ik % d;
      ik /= d;
    }
    for (size_t k = traced.size(); k-- > 0;) {
      const Index d = dims[traced[k]];
      digits[static_cast<size_t>(traced[k])] = it % d;
      it /= d;
    }
    return dims.index_of(digits);
  };

  Matrix out = Matrix::Zero(dk, dk);
  for (Index r = 0; r < dk; ++r)
    for (Index c = 0; c < dk; ++c)
      for (Index t = 0; t < dt; ++t)
        out(r, c) += op(global_of(r, t), global_of(c, t));
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  Matrix out = partial_trace_raw(rho.matrix(), rho.dims(), keep);
  std::vector<int> keep_sorted = keep;
  std::sort(keep_sorted.begin(), keep_sorted.end());
  std::vector<Index> kept_dims;
  for (int p : keep_sorted) kept_dims.push_back(rho.dims()[p]);
  out = 0.5 * (out + out.adjoint().eval());  // scrub roundoff asymmetry
  return DensityMatrix(Dims(kept_dims), std::move(out));
}

Matrix partial_transpose(const DensityMatrix& rho, const Bipartition& split) {
  const Dims& dims = rho.dims();
  split.check_against(dims);
  const auto& a = split.party_set_a;
  const Matrix& m = rho.matrix();
  Matrix out(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r) {
    auto rd = dims.digits(r);
    for (Index c = 0; c < m.cols(); ++c) {
      auto cd = dims.digits(c);
      auto rt = rd, ct = cd;
      for (int p : a) std::swap(rt[static_cast<size_t>(p)], ct[static_cast<size_t>(p)]);
      out(dims.index_of(rt), dims.index_of(ct)) = m(r, c);
    }
  }
  return out;
}

Matrix complete_orthonormal(const Matrix& cols) {
  const Index d = cols.rows(), r = cols.cols();
  detail::require(r <= d, "complete_orthonormal: more columns than rows");
  Matrix u(d, d);
  u.leftCols(r) = cols;
  Index have = r;
  for (Index k = 0; k < d && have < d; ++k) {
    Vector v = Vector::Unit(d, k);
    for (int pass = 0; pass < 2; ++pass)
      v -= u.leftCols(have) * (u.leftCols(have).adjoint() * v);
    const double nv = v.norm();
    if (nv > 1e-6) u.col(have++) = v / nv;
  }
  detail::require(have == d, "complete_orthonormal: could not complete basis");
  return u;
}

Matrix closest_unitary(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

HermitianEig hermitian_eig(const Matrix& m) {
  detail::require(m.rows() == m.cols(), "hermitian_eig: matrix must be square");
  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  detail::require(defect <= kHermTol, "hermitian_eig: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()));
  detail::require(es.info() == Eigen::Success, "hermitian_eig: eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

GroupedState group_bipartite(const PureState& psi, const Bipartition& split) {
  const Dims& dims = psi.dims();
  split.check_against(dims);
  std::vector<int> perm = split.party_set_a;
  const auto b = split.complement(dims);
  perm.insert(perm.end(), b.begin(), b.end());
  Index da = 1, db = 1;
  for (int p : split.party_set_a) da *= dims[p];
  for (int p : b) db *= dims[p];
  return {Dims({da, db}), permute_subsystems(psi.amplitudes(), dims, perm)};
}

GroupedDensity group_bipartite(const DensityMatrix& rho, const Bipartition& split) {
  const Dims& dims = rho.dims();
  split.check_against(dims);
  std::vector<int> perm = split.party_set_a;
  const auto b = split.complement(dims);
  perm.insert(perm.end(), b.begin(), b.end());
  Index da = 1, db = 1;
  for (int p : split.party_set_a) da *= dims[p];
  for (int p : b) db *= dims[p];
  return {Dims({da, db}), permute_subsystems(rho.matrix(), dims, perm)};
}

}  // namespace entcoh
