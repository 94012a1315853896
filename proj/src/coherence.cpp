#include "entcoh/coherence.hpp"

#include <algorithm>
#include <cmath>

#include "entcoh/optim.hpp"
#include "entcoh/qmat.hpp"
#include "entcoh/random.hpp"

namespace entcoh {

ConditionalProductBasis::ConditionalProductBasis(Dims dims, std::vector<int> order,
                                                 std::vector<std::vector<Matrix>> levels)
    : dims_(std::move(dims)), order_(std::move(order)), levels_(std::move(levels)) {
  const Index m = dims_.parties();
  detail::require(static_cast<Index>(order_.size()) == m,
                  "ConditionalProductBasis: order must list every party once");
  std::vector<int> seen(static_cast<size_t>(m), 0);
  for (int p : order_) {
    detail::require(p >= 0 && p < m && !seen[static_cast<size_t>(p)]++,
                    "ConditionalProductBasis: order is not a permutation");
  }
  detail::require(static_cast<Index>(levels_.size()) == m,
                  "ConditionalProductBasis: one level per party required");
  Index chains = 1;
  for (Index t = 0; t < m; ++t) {
    const Index dt = dims_[order_[static_cast<size_t>(t)]];
    detail::require(static_cast<Index>(levels_[static_cast<size_t>(t)].size()) == chains,
                    "ConditionalProductBasis: wrong number of conditional bases at a level");
    for (const Matrix& u : levels_[static_cast<size_t>(t)]) {
      detail::require(u.rows() == dt && u.cols() == dt,
                      "ConditionalProductBasis: conditional basis has wrong dimension");
      const double defect =
          (u.adjoint() * u - Matrix::Identity(dt, dt)).cwiseAbs().maxCoeff();
      detail::require(defect <= kOrthoTol,
                      "ConditionalProductBasis: conditional basis is not unitary");
    }
    chains *= dt;
  }
}

OrthonormalBasis ConditionalProductBasis::expand() const {
  const Index m = dims_.parties();
  const Index d = dims_.total();
  Matrix u(d, d);
  std::vector<Index> outcome(static_cast<size_t>(m), 0);  // outcome[t] for party order_[t]
  std::vector<Index> digits(static_cast<size_t>(m), 0);
  for (Index e = 0; e < d; ++e) {
    // enumerate outcome chains in mixed radix, earliest outcome most significant
    Index x = e;
    for (Index t = m; t-- > 0;) {
      const Index dt = dims_[order_[static_cast<size_t>(t)]];
      outcome[static_cast<size_t>(t)] = x % dt;
      x /= dt;
    }
    std::vector<Vector> factors(static_cast<size_t>(m));
    Index chain = 0;
    for (Index t = 0; t < m; ++t) {
      const Matrix& basis_t = levels_[static_cast<size_t>(t)][static_cast<size_t>(chain)];
      factors[static_cast<size_t>(order_[static_cast<size_t>(t)])] =
          basis_t.col(outcome[static_cast<size_t>(t)]);
      chain = chain * dims_[order_[static_cast<size_t>(t)]] + outcome[static_cast<size_t>(t)];
    }
    for (Index t = 0; t < m; ++t)
      digits[static_cast<size_t>(order_[static_cast<size_t>(t)])] = outcome[static_cast<size_t>(t)];
    u.col(dims_.index_of(digits)) = tensor_all(factors);
  }
  return OrthonormalBasis(dims_, std::move(u));
}

ConditionalProductBasis ConditionalProductBasis::computational(const Dims& dims) {
  std::vector<int> order(static_cast<size_t>(dims.parties()));
  for (size_t t = 0; t < order.size(); ++t) order[t] = static_cast<int>(t);
  std::vector<std::vector<Matrix>> levels;
  Index chains = 1;
  for (Index t = 0; t < dims.parties(); ++t) {
    levels.emplace_back(static_cast<size_t>(chains), Matrix::Identity(dims[t], dims[t]));
    chains *= dims[t];
  }
  return ConditionalProductBasis(dims, order, std::move(levels));
}

ConditionalProductBasis random_cpb(const Dims& dims, const std::vector<int>& order,
                                   std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<Matrix>> levels;
  Index chains = 1;
  for (size_t t = 0; t < order.size(); ++t) {
    const Index dt = dims[order[t]];
    std::vector<Matrix> level;
    for (Index c = 0; c < chains; ++c) level.push_back(random_unitary(dt, rng));
    levels.push_back(std::move(level));
    chains *= dt;
  }
  return ConditionalProductBasis(dims, order, std::move(levels));
}

double coherence_pure(const PureState& psi, const OrthonormalBasis& basis) {
  detail::require(psi.dims() == basis.dims(), "coherence_pure: dimension mismatch");
  const RealVector p = (basis.elements().adjoint() * psi.amplitudes()).cwiseAbs2();
  return shannon_entropy(p);
}

double relative_coherence(const DensityMatrix& rho, const OrthonormalBasis& basis) {
  detail::require(rho.dims() == basis.dims(), "relative_coherence: dimension mismatch");
  RealVector w = dephasing_weights(rho, basis);
  w /= w.sum();
  const double value = shannon_entropy(w) - von_neumann_entropy(rho);
  return value < 0.0 ? 0.0 : value;
}

namespace {

// Parameter block for a bipartite conditional product basis on grouped dims
// (dA, dB): one dA x dA rotation plus dA conditional dB x dB rotations, each
// applied on the left of a per-restart base unitary.
struct CpbParameterization {
  Index da = 0, db = 0;
  Matrix base_a;
  std::vector<Matrix> base_b;

  Index param_count() const { return da * da + da * db * db; }

  Matrix first(const RealVector& theta) const {
    return unitary_from_params(da, theta.head(da * da)) * base_a;
  }
  Matrix conditional(const RealVector& theta, Index i) const {
    const Index nb = db * db;
    return unitary_from_params(db, theta.segment(da * da + i * nb, nb)) *
           base_b[static_cast<size_t>(i)];
  }

  ConditionalProductBasis assemble(const Dims& grouped, const RealVector& theta) const {
    std::vector<Matrix> conds;
    for (Index i = 0; i < da; ++i) conds.push_back(conditional(theta, i));
    return ConditionalProductBasis(grouped, {0, 1}, {{first(theta)}, std::move(conds)});
  }

  static CpbParameterization identity_base(Index da, Index db) {
    CpbParameterization p;
    p.da = da;
    p.db = db;
    p.base_a = Matrix::Identity(da, da);
    p.base_b.assign(static_cast<size_t>(da), Matrix::Identity(db, db));
    return p;
  }
};

// -H(p) accumulator tolerant of slightly unnormalized probabilities
double entropy_bits(const RealVector& p) {
  double h = 0.0;
  for (Index i = 0; i < p.size(); ++i)
    if (p(i) > kNullEig) h -= p(i) * std::log2(p(i));
  return h;
}

// Try to read a conditional product basis off the eigenbasis of rho
// (grouped, dA x dB). Succeeds when every eigenvector is a product state and
// the A factors cluster into dA orthogonal groups of dB states each, i.e.
// when rho is a mixture of a one-way measure-A-first basis. The symmetric
// B-first structure is handled by the caller via transposition.
std::optional<CpbParameterization> cpb_from_eigenbasis(const Matrix& rho, Index da, Index db) {
  const auto eig = hermitian_eig(rho);
  const Index d = da * db;
  std::vector<Vector> afac, bfac;
  for (Index e = 0; e < d; ++e) {
    Matrix m(da, db);
    for (Index x = 0; x < d; ++x) m(x / db, x % db) = eig.eigenvectors(x, e);
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.singularValues().size() > 1 && svd.singularValues()(1) > 1e-7) return std::nullopt;
    const Vector a = svd.matrixU().col(0);
    Vector b = (a.adjoint() * m).transpose();
    const double nb = b.norm();
    if (nb < 1e-8) return std::nullopt;
    afac.push_back(a);
    bfac.push_back(b / nb);
  }
  // cluster by A factor; overlaps must be ~1 inside a group and ~0 across
  std::vector<std::vector<Index>> groups;
  for (Index e = 0; e < d; ++e) {
    bool placed = false;
    for (auto& g : groups) {
      const double ov = std::abs(afac[static_cast<size_t>(g[0])].dot(
          afac[static_cast<size_t>(e)].conjugate()));
      if (ov >= 1.0 - 1e-6) {
        g.push_back(e);
        placed = true;
        break;
      }
      if (ov > 1e-6) return std::nullopt;
    }
    if (!placed) groups.push_back({e});
  }
  if (static_cast<Index>(groups.size()) != da) return std::nullopt;
  for (const auto& g : groups)
    if (static_cast<Index>(g.size()) != db) return std::nullopt;

  CpbParameterization p;
  p.da = da;
  p.db = db;
  Matrix reps(da, da);
  for (Index i = 0; i < da; ++i)
    reps.col(i) = afac[static_cast<size_t>(groups[static_cast<size_t>(i)][0])];
  p.base_a = closest_unitary(reps);
  for (Index i = 0; i < da; ++i) {
    Matrix bs(db, db);
    for (Index j = 0; j < db; ++j)
      bs.col(j) = bfac[static_cast<size_t>(groups[static_cast<size_t>(i)][static_cast<size_t>(j)])];
    p.base_b.push_back(closest_unitary(bs));
  }
  return p;
}

struct CpbSearchOutcome {
  double value = 0.0;
  RealVector theta;
  CpbParameterization param;
  bool converged = false;
};

// Shared restart-and-polish driver for the two basis minimizations.
CpbSearchOutcome minimize_over_cpbs(
    const std::function<double(const CpbParameterization&, const RealVector&)>& objective,
    const std::vector<CpbParameterization>& warm_starts, Index da, Index db,
    const OptimizerConfig& cfg) {
  CpbSearchOutcome best;
  best.value = infinity();
  int restart_index = 0;
  auto run = [&](const CpbParameterization& param, double step) {
    auto f = [&](const RealVector& theta) { return objective(param, theta); };
    const auto res =
        nelder_mead(f, RealVector::Zero(param.param_count()), step, cfg.max_iters, cfg.tol);
    if (res.value < best.value) {
      best.value = res.value;
      best.theta = res.x;
      best.param = param;
      best.converged = res.converged;
    }
  };
  for (const auto& ws : warm_starts) run(ws, 0.1);
  for (; restart_index < cfg.restarts; ++restart_index) {
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(restart_index)));
    CpbParameterization param;
    param.da = da;
    param.db = db;
    param.base_a = random_unitary(da, rng);
    for (Index i = 0; i < da; ++i) param.base_b.push_back(random_unitary(db, rng));
    run(param, 0.5);
  }
  // polish best with shrinking steps until a whole restarted run no longer
  // moves the value
  bool settled = false;
  for (int round = 0; round < 10 && !settled; ++round) {
    auto f = [&](const RealVector& theta) { return objective(best.param, theta); };
    RealVector start = best.theta;
    const double before = best.value;
    const auto res = nelder_mead(
        [&](const RealVector& delta) { return f(start + delta); },
        RealVector::Zero(best.param.param_count()), round == 0 ? 0.03 : 0.005, cfg.max_iters,
        0.1 * cfg.tol);
    if (res.value < best.value) {
      best.value = res.value;
      best.theta = start + res.x;
    }
    settled = before - best.value <= 100.0 * cfg.tol;
  }
  best.converged = best.converged || settled;
  return best;
}

}  // namespace

CoherenceResult min_coherence_pure(const PureState& psi, const Bipartition& split,
                                   const OptimizerConfig& cfg) {
  cfg.check();
  const auto grouped = group_bipartite(psi, split);
  const Index da = grouped.grouped[0], db = grouped.grouped[1];
  Matrix m(da, db);
  for (Index x = 0; x < grouped.amps.size(); ++x) m(x / db, x % db) = grouped.amps(x);

  auto objective = [&](const CpbParameterization& param, const RealVector& theta) {
    const Matrix ua = param.first(theta);
    double h = 0.0;
    for (Index i = 0; i < da; ++i) {
      const Matrix ub = param.conditional(theta, i);
      const Eigen::RowVectorXcd row = ua.col(i).adjoint() * m;
      const RealVector p = (row * ub.conjugate()).cwiseAbs2().transpose();
      h += entropy_bits(p);
    }
    return h;
  };

  // warm start at the Schmidt product basis, the analytic optimum
  std::vector<CpbParameterization> warm;
  {
    const PureState gpsi(grouped.grouped, grouped.amps);
    const auto sf = schmidt_decompose(gpsi, Bipartition({0}));
    CpbParameterization p;
    p.da = da;
    p.db = db;
    p.base_a = complete_orthonormal(sf.left_basis);
    p.base_b.assign(static_cast<size_t>(da), complete_orthonormal(sf.right_basis));
    warm.push_back(std::move(p));
  }

  const auto best = minimize_over_cpbs(objective, warm, da, db, cfg);
  CoherenceResult out;
  out.value = std::max(0.0, best.value);
  out.achieving_basis = best.param.assemble(grouped.grouped, best.theta);
  out.converged = best.converged;
  return out;
}

namespace {

// One-order search: the first measurer has dimension dfirst and `mat` is the
// grouped state with that party in front.
CpbSearchOutcome search_one_order(const Matrix& mat, Index dfirst, Index dsecond,
                                  double s_rho, const OptimizerConfig& cfg) {
  auto objective = [&](const CpbParameterization& param, const RealVector& theta) {
    const Matrix ua = param.first(theta);
    RealVector p(dfirst * dsecond);
    for (Index i = 0; i < dfirst; ++i) {
      const Matrix ub = param.conditional(theta, i);
      for (Index j = 0; j < dsecond; ++j) {
        const Vector e = tensor_product(ua.col(i), ub.col(j)).col(0);
        p(i * dsecond + j) = std::max(0.0, (e.adjoint() * mat * e)(0).real());
      }
    }
    return entropy_bits(p) - s_rho;
  };
  std::vector<CpbParameterization> warm;
  warm.push_back(CpbParameterization::identity_base(dfirst, dsecond));
  if (auto p = cpb_from_eigenbasis(mat, dfirst, dsecond)) warm.push_back(std::move(*p));
  return minimize_over_cpbs(objective, warm, dfirst, dsecond, cfg);
}

}  // namespace

CoherenceResult min_relative_coherence(const DensityMatrix& rho, const Bipartition& split,
                                       const OptimizerConfig& cfg) {
  cfg.check();
  const auto grouped = group_bipartite(rho, split);
  const Index da = grouped.grouped[0], db = grouped.grouped[1];
  const double s_rho = von_neumann_entropy(DensityMatrix(grouped.grouped, grouped.mat));

  // one-way bases with either party measuring first
  const auto run_a = search_one_order(grouped.mat, da, db, s_rho, cfg);
  const Matrix swapped = permute_subsystems(grouped.mat, grouped.grouped, {1, 0});
  const auto run_b = search_one_order(swapped, db, da, s_rho, cfg);

  CoherenceResult out;
  if (run_a.value <= run_b.value) {
    out.value = std::max(0.0, run_a.value);
    out.achieving_basis = run_a.param.assemble(grouped.grouped, run_a.theta);
    out.converged = run_a.converged;
  } else {
    out.value = std::max(0.0, run_b.value);
    std::vector<Matrix> conds;
    for (Index i = 0; i < db; ++i) conds.push_back(run_b.param.conditional(run_b.theta, i));
    out.achieving_basis = ConditionalProductBasis(
        grouped.grouped, {1, 0}, {{run_b.param.first(run_b.theta)}, std::move(conds)});
    out.converged = run_b.converged;
  }
  return out;
}

CoherenceResult convex_roof_coherence(const DensityMatrix& rho, const Bipartition& split,
                                      const OptimizerConfig& cfg) {
  // inner basis minimum of each pure component equals its entanglement
  // entropy, so the roof coincides with the formation optimization
  const auto roof = eof_convex_roof(rho, split, cfg);
  CoherenceResult out;
  out.value = roof.value;
  out.achieving_decomposition = roof.decomposition;
  out.converged = roof.converged;
  return out;
}

}  // namespace entcoh
