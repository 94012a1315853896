#include "entcoh/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "entcoh/entropy.hpp"
#include "entcoh/optim.hpp"
#include "entcoh/qmat.hpp"
#include "entcoh/random.hpp"

namespace entcoh {

void OptimizerConfig::check() const {
  detail::require(restarts >= 1, "OptimizerConfig: restarts must be >= 1");
  detail::require(max_iters >= 1, "OptimizerConfig: max_iters must be >= 1");
  detail::require(tol > 0.0, "OptimizerConfig: tol must be positive");
  detail::require(ansatz_size >= 0, "OptimizerConfig: ansatz_size must be >= 0 (0 = auto)");
}

Index OptimizerConfig::resolved_ansatz_size(const Dims& dims) const {
  return ansatz_size > 0 ? ansatz_size : dims.total() * dims.total();
}

PureDecomposition::PureDecomposition(RealVector weights, std::vector<PureState> states)
    : weights_(std::move(weights)), states_(std::move(states)) {
  detail::require(weights_.size() == static_cast<Index>(states_.size()),
                  "PureDecomposition: one weight per state required");
  detail::require(!states_.empty(), "PureDecomposition: empty decomposition");
  detail::require(weights_.minCoeff() >= 0.0, "PureDecomposition: weights must be nonnegative");
  detail::require(std::abs(weights_.sum() - 1.0) <= kNormTol,
                  "PureDecomposition: weights must sum to 1");
  for (const auto& s : states_)
    detail::require(s.dims() == states_.front().dims(),
                    "PureDecomposition: states must share dims");
}

DensityMatrix PureDecomposition::reconstruct() const {
  Matrix m = Matrix::Zero(states_.front().dim(), states_.front().dim());
  for (size_t i = 0; i < states_.size(); ++i)
    m += weights_(static_cast<Index>(i)) * states_[i].projector();
  m = 0.5 * (m + m.adjoint().eval());
  return DensityMatrix(states_.front().dims(), std::move(m));
}

double PureDecomposition::reconstruction_defect(const DensityMatrix& target) const {
  return (reconstruct().matrix() - target.matrix()).cwiseAbs().maxCoeff();
}

SeparableAnsatz::SeparableAnsatz(Bipartition split, RealVector weights,
                                 std::vector<PureState> product_states)
    : split_(std::move(split)), weights_(std::move(weights)), states_(std::move(product_states)) {
  detail::require(weights_.size() == static_cast<Index>(states_.size()),
                  "SeparableAnsatz: one weight per state required");
  detail::require(!states_.empty(), "SeparableAnsatz: empty ansatz");
  detail::require(weights_.minCoeff() >= 0.0, "SeparableAnsatz: weights must be nonnegative");
  detail::require(std::abs(weights_.sum() - 1.0) <= kNormTol,
                  "SeparableAnsatz: weights must sum to 1");
  for (const auto& s : states_) {
    const auto sf = schmidt_decompose(s, split_);
    detail::require(sf.rank() == 1 || sf.coefficients(1) <= 1e-8,
                    "SeparableAnsatz: state is not product across the split");
  }
}

DensityMatrix SeparableAnsatz::to_density() const {
  Matrix m = Matrix::Zero(states_.front().dim(), states_.front().dim());
  for (size_t i = 0; i < states_.size(); ++i)
    m += weights_(static_cast<Index>(i)) * states_[i].projector();
  m = 0.5 * (m + m.adjoint().eval());
  return DensityMatrix(states_.front().dims(), std::move(m));
}

PptResult is_ppt(const DensityMatrix& rho, const Bipartition& split) {
  const auto eig = hermitian_eig(partial_transpose(rho, split));
  const double min_eig = eig.eigenvalues.minCoeff();
  return {min_eig >= -kPsdTol, min_eig};
}

double concurrence_2q(const DensityMatrix& rho) {
  detail::require(rho.dims().parties() == 2 && rho.dims()[0] == 2 && rho.dims()[1] == 2,
                  "concurrence_2q: dims must be exactly 2x2");
  Matrix yy = Matrix::Zero(4, 4);
  yy(0, 3) = -1;
  yy(1, 2) = 1;
  yy(2, 1) = 1;
  yy(3, 0) = -1;
  const Matrix tilde = yy * rho.matrix().conjugate() * yy;
  const auto e = hermitian_eig(rho.matrix());
  const Matrix sq = e.eigenvectors *
                    e.eigenvalues.cwiseMax(0.0).cwiseSqrt().cast<Complex>().asDiagonal() *
                    e.eigenvectors.adjoint();
  // Hermitian and isospectral with rho * tilde
  Matrix m = sq * tilde * sq;
  m = 0.5 * (m + m.adjoint().eval());
  const auto em = hermitian_eig(m);
  const RealVector lam = em.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  const double c = lam(3) - lam(2) - lam(1) - lam(0);
  return std::clamp(c, 0.0, 1.0);
}

double eof_2q(const DensityMatrix& rho) {
  const double c = concurrence_2q(rho);
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

namespace {

// Precomputed reshaping of the split: original index -> (row, col) of the
// dA x dB amplitude matrix.
struct SplitView {
  Index da = 0, db = 0;
  std::vector<Index> map;  // original index -> da*db grouped index
};

SplitView make_split_view(const Dims& dims, const Bipartition& split) {
  split.check_against(dims);
  std::vector<int> perm = split.party_set_a;
  const auto b = split.complement(dims);
  perm.insert(perm.end(), b.begin(), b.end());
  SplitView sv;
  sv.da = 1;
  sv.db = 1;
  for (int p : split.party_set_a) sv.da *= dims[p];
  for (int p : b) sv.db *= dims[p];
  sv.map.resize(static_cast<size_t>(dims.total()));
  std::vector<Index> permuted_dims;
  for (int p : perm) permuted_dims.push_back(dims[p]);
  const Dims pd{permuted_dims};
  std::vector<Index> digits(perm.size());
  for (Index x = 0; x < dims.total(); ++x) {
    const auto dg = dims.digits(x);
    for (size_t k = 0; k < perm.size(); ++k) digits[k] = dg[static_cast<size_t>(perm[k])];
    sv.map[static_cast<size_t>(x)] = pd.index_of(digits);
  }
  return sv;
}

// p log2 p - sum_i q_i log2 q_i for the squared Schmidt spectrum q of an
// unnormalized bipartite vector; equals p * E(psi / sqrt(p)).
double weighted_entanglement(const Vector& unnormalized, const SplitView& sv) {
  Matrix m(sv.da, sv.db);
  for (Index x = 0; x < unnormalized.size(); ++x) {
    const Index g = sv.map[static_cast<size_t>(x)];
    m(g / sv.db, g % sv.db) = unnormalized(x);
  }
  RealVector q;
  if (sv.da == 2) {
    const Matrix g = m * m.adjoint();
    const double tr = g.trace().real();
    const double det = (g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0)).real();
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    q.resize(2);
    q << std::max(0.0, 0.5 * (tr - disc)), std::max(0.0, 0.5 * (tr + disc));
  } else {
    const Matrix g = m * m.adjoint();
    Eigen::SelfAdjointEigenSolver<Matrix> es(g, Eigen::EigenvaluesOnly);
    q = es.eigenvalues().cwiseMax(0.0);
  }
  const double p = q.sum();
  if (p <= kNullEig) return 0.0;
  double acc = p * std::log2(p);
  for (Index i = 0; i < q.size(); ++i)
    if (q(i) > kNullEig) acc -= q(i) * std::log2(q(i));
  return std::max(0.0, acc);
}

}  // namespace

ConvexRoofResult eof_convex_roof(const DensityMatrix& rho, const Bipartition& split,
                                 const OptimizerConfig& cfg) {
  cfg.check();
  const Dims& dims = rho.dims();
  split.check_against(dims);
  const auto eig = hermitian_eig(rho.matrix());

  std::vector<Index> keep;
  for (Index j = 0; j < eig.eigenvalues.size(); ++j)
    if (eig.eigenvalues(j) > kNullEig) keep.push_back(j);
  const Index r = static_cast<Index>(keep.size());
  Matrix scaled(dims.total(), r);
  for (Index jj = 0; jj < r; ++jj)
    scaled.col(jj) = std::sqrt(eig.eigenvalues(keep[static_cast<size_t>(jj)])) *
                     eig.eigenvectors.col(keep[static_cast<size_t>(jj)]);

  if (r == 1) {
    PureState psi(dims, scaled.col(0).normalized());
    const double value = entanglement_entropy(psi, split);
    RealVector w(1);
    w << 1.0;
    return {value, PureDecomposition(w, {psi}), true, 1};
  }

  const Index k_max =
      std::clamp(std::min(r * r, cfg.resolved_ansatz_size(dims)), r, 2 * dims.total());
  const SplitView sv = make_split_view(dims, split);

  auto make_objective = [&](Index k) {
    return [&, k](const RealVector& params) {
      const Matrix w = unitary_from_params(k, params);
      double total = 0.0;
      for (Index i = 0; i < k; ++i) {
        const Vector psi = scaled * w.row(i).head(r).transpose();
        total += weighted_entanglement(psi, sv);
      }
      return total;
    };
  };

  // The mixing-matrix dimension is searched over a ladder of sizes up to the
  // cap: small sizes give the simplex search a low-dimensional space where it
  // is strong, the cap keeps every decomposition cardinality reachable.
  std::vector<Index> sizes{r, std::min(2 * r, k_max), k_max};
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  Index best_k = sizes.front();
  RealVector best_x = RealVector::Zero(unitary_param_count(best_k));
  double best_value = make_objective(best_k)(best_x);  // spectral decomposition
  bool best_converged = false;

  for (Index k : sizes) {
    auto objective = make_objective(k);
    const Index np = unitary_param_count(k);
    for (int rs = 0; rs < cfg.restarts; ++rs) {
      RealVector x0 = RealVector::Zero(np);
      double step = 0.4;
      if (rs > 0) {
        Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(rs)));
        for (Index i = 0; i < np; ++i) x0(i) = rng.uniform(-1.5, 1.5);
        step = 0.6;
      }
      const auto res = nelder_mead(objective, x0, step, cfg.max_iters, cfg.tol);
      if (res.value < best_value) {
        best_value = res.value;
        best_x = res.x;
        best_k = k;
        best_converged = res.converged;
      }
    }
  }

  // shrink-restart polish around the best point until a whole restarted run
  // no longer moves the value
  auto objective = make_objective(best_k);
  bool settled = false;
  for (int round = 0; round < 10 && !settled; ++round) {
    const double before = best_value;
    const auto res =
        nelder_mead(objective, best_x, round == 0 ? 0.05 : 0.01, cfg.max_iters, 0.1 * cfg.tol);
    if (res.value < best_value) {
      best_value = res.value;
      best_x = res.x;
    }
    settled = before - best_value <= 100.0 * cfg.tol;
  }
  best_converged = best_converged || settled;

  const Matrix w = unitary_from_params(best_k, best_x);
  std::vector<PureState> states;
  std::vector<double> probs;
  for (Index i = 0; i < best_k; ++i) {
    const Vector psi = scaled * w.row(i).head(r).transpose();
    const double p = psi.squaredNorm();
    if (p > 1e-12) {
      states.emplace_back(dims, psi / std::sqrt(p));
      probs.push_back(p);
    }
  }
  RealVector weights = Eigen::Map<RealVector>(probs.data(), static_cast<Index>(probs.size()));
  weights /= weights.sum();
  return {std::max(0.0, best_value), PureDecomposition(weights, std::move(states)),
          best_converged, k_max};
}

namespace {

// S(rho || sigma) with the rho-dependent pieces precomputed.
struct ReeObjective {
  Matrix rho;
  double rho_log_rho = 0.0;  // tr(rho log2 rho)

  explicit ReeObjective(const Matrix& rho_in) : rho(rho_in) {
    const auto e = hermitian_eig(rho);
    for (Index i = 0; i < e.eigenvalues.size(); ++i)
      if (e.eigenvalues(i) > kNullEig)
        rho_log_rho += e.eigenvalues(i) * std::log2(e.eigenvalues(i));
  }

  double operator()(const Matrix& sigma) const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(sigma);
    const auto& s = es.eigenvalues();
    const auto& v = es.eigenvectors();
    double value = rho_log_rho;
    for (Index j = 0; j < s.size(); ++j) {
      const double weight = (v.col(j).adjoint() * rho * v.col(j))(0).real();
      if (s(j) <= kNullEig) {
        if (weight > 1e-10) return infinity();
      } else if (weight > 0.0) {
        value -= weight * std::log2(s(j));
      }
    }
    return std::max(0.0, value);
  }
};

}  // namespace

ReeResult relative_entropy_of_entanglement(const DensityMatrix& rho, const Bipartition& split,
                                           const OptimizerConfig& cfg) {
  cfg.check();
  const Dims& dims = rho.dims();
  split.check_against(dims);
  const auto grouped = group_bipartite(rho, split);
  const Index da = grouped.grouped[0], db = grouped.grouped[1];
  const Index d = da * db;
  const Index n = std::min<Index>(cfg.resolved_ansatz_size(dims), 64);
  const ReeObjective objective(grouped.mat);

  struct Candidate {
    std::vector<Vector> a, b;
    RealVector w;
    double value = 0.0;
    bool converged = false;
  };

  auto sigma_of = [&](const Candidate& c) {
    Matrix sigma = Matrix::Zero(d, d);
    for (Index i = 0; i < n; ++i) {
      if (c.w(i) <= 0.0) continue;
      const Vector prod = tensor_product(c.a[static_cast<size_t>(i)],
                                         c.b[static_cast<size_t>(i)])
                              .col(0);
      sigma += c.w(i) * (prod * prod.adjoint());
    }
    return sigma;
  };

  // exact convex weight solve at fixed product states
  auto solve_weights = [&](Candidate& c) {
    std::vector<Vector> prods(static_cast<size_t>(n));
    for (Index i = 0; i < n; ++i)
      prods[static_cast<size_t>(i)] =
          tensor_product(c.a[static_cast<size_t>(i)], c.b[static_cast<size_t>(i)]).col(0);
    auto f_w = [&](const RealVector& w) {
      Matrix sigma = Matrix::Zero(d, d);
      for (Index i = 0; i < n; ++i)
        if (w(i) > 0.0) sigma += w(i) * (prods[static_cast<size_t>(i)] *
                                         prods[static_cast<size_t>(i)].adjoint());
      return objective(sigma);
    };
    auto grad_w = [&](const RealVector& w) {
      Matrix sigma = Matrix::Zero(d, d);
      for (Index i = 0; i < n; ++i)
        if (w(i) > 0.0) sigma += w(i) * (prods[static_cast<size_t>(i)] *
                                         prods[static_cast<size_t>(i)].adjoint());
      Eigen::SelfAdjointEigenSolver<Matrix> es(sigma);
      const RealVector s = es.eigenvalues().cwiseMax(1e-14);
      const Matrix& v = es.eigenvectors();
      const Matrix r_rot = v.adjoint() * objective.rho * v;
      Eigen::MatrixXd g(d, d);  // divided differences of log2
      for (Index p = 0; p < d; ++p)
        for (Index q = 0; q < d; ++q)
          g(p, q) = (std::abs(s(p) - s(q)) < 1e-12)
                        ? 1.0 / (0.5 * (s(p) + s(q)) * M_LN2)
                        : (std::log2(s(p)) - std::log2(s(q))) / (s(p) - s(q));
      RealVector grad(n);
      for (Index i = 0; i < n; ++i) {
        const Vector x = v.adjoint() * prods[static_cast<size_t>(i)];
        Complex acc = 0.0;
        for (Index p = 0; p < d; ++p)
          for (Index q = 0; q < d; ++q)
            acc += r_rot(p, q) * g(q, p) * x(q) * std::conj(x(p));
        grad(i) = -acc.real();
      }
      return grad;
    };
    const auto res = minimize_over_simplex(f_w, grad_w, c.w, 150, 0.1 * cfg.tol);
    c.w = res.w;
    c.value = res.value;
  };

  // annealed local rotations of the product factors with periodic exact
  // weight solves; monotone by construction
  auto anneal = [&](Candidate& c, Rng& rng, int iters, double step0) {
    double step = step0;
    double window_start_value = c.value;
    double window_improvement = infinity();
    for (int t = 0; t < iters; ++t) {
      if (t > 0 && t % 200 == 0) step *= 0.5;
      Matrix sigma = sigma_of(c);
      for (Index i = 0; i < n; ++i) {
        if (c.w(i) <= 1e-14) continue;
        for (int side = 0; side < 2; ++side) {
          Vector& factor = side == 0 ? c.a[static_cast<size_t>(i)] : c.b[static_cast<size_t>(i)];
          Vector cand = factor;
          for (Index z = 0; z < cand.size(); ++z) cand(z) += step * rng.cgauss();
          cand.normalize();
          const Vector old_prod =
              tensor_product(c.a[static_cast<size_t>(i)], c.b[static_cast<size_t>(i)]).col(0);
          Vector saved = factor;
          factor = cand;
          const Vector new_prod =
              tensor_product(c.a[static_cast<size_t>(i)], c.b[static_cast<size_t>(i)]).col(0);
          const Matrix trial = sigma + c.w(i) * (new_prod * new_prod.adjoint() -
                                                 old_prod * old_prod.adjoint());
          const double f_trial = objective(trial);
          if (f_trial < c.value) {
            c.value = f_trial;
            sigma = trial;
          } else {
            factor = saved;
          }
        }
      }
      if (t % 5 == 4) solve_weights(c);
      if (t % 100 == 99) {
        window_improvement = window_start_value - c.value;
        if (window_improvement < cfg.tol) {
          step *= 0.5;  // cool faster once stagnant
          if (step < 1e-5) {
            c.converged = true;
            break;
          }
        }
        window_start_value = c.value;
      }
    }
    solve_weights(c);
    c.converged = c.converged || window_improvement < 10.0 * cfg.tol;
  };

  Candidate best;
  best.value = infinity();

  for (int rs = 0; rs < cfg.restarts; ++rs) {
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(rs)));
    Candidate c;
    c.a.resize(static_cast<size_t>(n));
    c.b.resize(static_cast<size_t>(n));
    c.w = RealVector::Constant(n, 1.0 / static_cast<double>(n));
    if (rs == 0) {
      // computational-basis dephasing of rho (separable and always feasible)
      // plus the Schmidt product pairs of every eigenvector, which contain
      // the exact optimum for pure inputs
      const auto spec = hermitian_eig(grouped.mat);
      RealVector w0 = RealVector::Zero(n);
      Index next_extra = d;
      for (Index j = 0; j < d && next_extra < n; ++j) {
        if (spec.eigenvalues(j) <= kNullEig) continue;
        Matrix m(da, db);
        for (Index x = 0; x < d; ++x) m(x / db, x % db) = spec.eigenvectors(x, j);
        Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
        for (Index t = 0; t < svd.singularValues().size() && next_extra < n; ++t) {
          if (svd.singularValues()(t) < 1e-7) break;
          c.a[static_cast<size_t>(next_extra)] = svd.matrixU().col(t);
          c.b[static_cast<size_t>(next_extra)] = svd.matrixV().col(t).conjugate();
          ++next_extra;
        }
      }
      for (Index i = 0; i < n; ++i) {
        if (i < d) {
          c.a[static_cast<size_t>(i)] = Vector::Unit(da, i / db);
          c.b[static_cast<size_t>(i)] = Vector::Unit(db, i % db);
          w0(i) = std::max(0.0, grouped.mat(i, i).real());
        } else if (i >= next_extra) {
          c.a[static_cast<size_t>(i)] = random_unit_vector(da, rng);
          c.b[static_cast<size_t>(i)] = random_unit_vector(db, rng);
        }
      }
      c.w = project_to_simplex(w0);
    } else {
      for (Index i = 0; i < n; ++i) {
        c.a[static_cast<size_t>(i)] = random_unit_vector(da, rng);
        c.b[static_cast<size_t>(i)] = random_unit_vector(db, rng);
      }
    }

    solve_weights(c);
    anneal(c, rng, cfg.max_iters, 0.4);
    if (c.value < best.value) best = c;
  }

  // targeted continuation when the winning run is still descending
  if (!best.converged) {
    Rng rng(derive_seed(cfg.seed, 0x5e771eULL));
    anneal(best, rng, 2 * cfg.max_iters, 0.02);
  }

  // back to the original subsystem ordering
  std::vector<int> perm = split.party_set_a;
  const auto bparties = split.complement(dims);
  perm.insert(perm.end(), bparties.begin(), bparties.end());
  std::vector<int> inv(perm.size());
  for (size_t k = 0; k < perm.size(); ++k) inv[static_cast<size_t>(perm[k])] = static_cast<int>(k);
  std::vector<Index> permuted_dims;
  for (int p : perm) permuted_dims.push_back(dims[p]);
  const Dims pd{permuted_dims};

  std::vector<PureState> states;
  std::vector<double> wkeep;
  for (Index i = 0; i < n; ++i) {
    if (best.w(i) <= 1e-14) continue;
    const Vector prod =
        tensor_product(best.a[static_cast<size_t>(i)], best.b[static_cast<size_t>(i)]).col(0);
    states.emplace_back(dims, permute_subsystems(prod, pd, inv));
    wkeep.push_back(best.w(i));
  }
  RealVector weights = Eigen::Map<RealVector>(wkeep.data(), static_cast<Index>(wkeep.size()));
  weights /= weights.sum();
  return {std::max(0.0, best.value),
          SeparableAnsatz(split, weights, std::move(states)), best.converged};
}

}  // namespace entcoh
