#include "entcoh/optim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "entcoh/qmat.hpp"

namespace entcoh {

NelderMeadResult nelder_mead(const std::function<double(const RealVector&)>& f,
                             const RealVector& x0, double initial_step,
                             int max_iters, double ftol) {
  const Index n = x0.size();
  // Gao-Han adaptive coefficients
  const double alpha = 1.0;
  const double beta = 1.0 + 2.0 / static_cast<double>(n);
  const double gamma = 0.75 - 0.5 / static_cast<double>(n);
  const double delta = 1.0 - 1.0 / static_cast<double>(n);

  std::vector<RealVector> xs(static_cast<size_t>(n) + 1, x0);
  std::vector<double> fs(static_cast<size_t>(n) + 1);
  for (Index i = 0; i < n; ++i) xs[static_cast<size_t>(i) + 1](i) += initial_step;
  int evals = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    fs[i] = f(xs[i]);
    ++evals;
  }

  std::vector<size_t> order(xs.size());
  std::iota(order.begin(), order.end(), size_t{0});
  auto sort_simplex = [&] {
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return fs[a] < fs[b]; });
  };

  bool converged = false;
  for (int iter = 0; iter < max_iters; ++iter) {
    sort_simplex();
    const size_t best = order.front(), worst = order.back();
    if (fs[worst] - fs[best] < ftol) {
      converged = true;
      break;
    }
    RealVector centroid = RealVector::Zero(n);
    for (size_t i = 0; i + 1 < order.size(); ++i) centroid += xs[order[i]];
    centroid /= static_cast<double>(n);

    const RealVector xr = centroid + alpha * (centroid - xs[worst]);
    const double fr = f(xr);
    ++evals;
    const size_t second_worst = order[order.size() - 2];

    if (fr < fs[best]) {
      const RealVector xe = centroid + beta * (xr - centroid);
      const double fe = f(xe);
      ++evals;
      if (fe < fr) {
        xs[worst] = xe;
        fs[worst] = fe;
      } else {
        xs[worst] = xr;
        fs[worst] = fr;
      }
    } else if (fr < fs[second_worst]) {
      xs[worst] = xr;
      fs[worst] = fr;
    } else {
      const bool outside = fr < fs[worst];
      RealVector xc;
      if (outside)
        xc = centroid + gamma * (xr - centroid);
      else
        xc = centroid - gamma * (centroid - xs[worst]);
      const double fc = f(xc);
      ++evals;
      if (fc < std::min(fr, fs[worst])) {
        xs[worst] = xc;
        fs[worst] = fc;
      } else {
        for (size_t i = 1; i < order.size(); ++i) {
          xs[order[i]] = xs[best] + delta * (xs[order[i]] - xs[best]);
          fs[order[i]] = f(xs[order[i]]);
          ++evals;
        }
      }
    }
  }
  sort_simplex();
  return {xs[order.front()], fs[order.front()], converged, evals};
}

Matrix unitary_from_params(Index n, const RealVector& params) {
  detail::require(params.size() == n * n, "unitary_from_params: need n^2 parameters");
  Matrix h = Matrix::Zero(n, n);
  Index k = 0;
  for (Index i = 0; i < n; ++i) h(i, i) = params(k++);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      h(i, j) = Complex(params(k), params(k + 1));
      h(j, i) = std::conj(h(i, j));
      k += 2;
    }
  const auto eig = hermitian_eig(h);
  Vector phases(n);
  for (Index i = 0; i < n; ++i)
    phases(i) = std::polar(1.0, eig.eigenvalues(i));
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

RealVector project_to_simplex(const RealVector& v) {
  const Index n = v.size();
  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cssv = 0.0, theta = 0.0;
  Index rho = 0;
  for (Index i = 0; i < n; ++i) {
    cssv += u[static_cast<size_t>(i)];
    const double t = (cssv - 1.0) / static_cast<double>(i + 1);
    if (u[static_cast<size_t>(i)] - t > 0.0) {
      rho = i;
      theta = t;
    }
  }
  (void)rho;
  return (v.array() - theta).cwiseMax(0.0);
}

SimplexMinResult minimize_over_simplex(
    const std::function<double(const RealVector&)>& f,
    const std::function<RealVector(const RealVector&)>& grad,
    const RealVector& w0, int max_iters, double tol) {
  RealVector w = project_to_simplex(w0);
  double fw = f(w);
  double step = 1.0;
  bool converged = false;
  for (int it = 0; it < max_iters && !converged; ++it) {
    const RealVector g = grad(w);
    bool improved = false;
    // backtracking on the projected step
    for (int bt = 0; bt < 40; ++bt) {
      const RealVector cand = project_to_simplex(w - step * g);
      const double fc = f(cand);
      if (std::isfinite(fc) && fc < fw - 1e-15) {
        const double delta = fw - fc;
        w = cand;
        fw = fc;
        improved = true;
        if (bt == 0) step *= 1.6;  // grow while easy
        if (delta < tol) converged = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved) {
      converged = true;
      break;
    }
  }
  return {w, fw, converged};
}

}  // namespace entcoh
