// Test-only reference computations, kept independent of the library's
// optimization paths: they go through the public entropy/relative-entropy
// functions and plain finite differences or grids only.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "entcoh/entropy.hpp"
#include "entcoh/qmat.hpp"
#include "entcoh/types.hpp"

namespace entcoh::oracles {

// min_w S(rho || sum_i w_i |b_i><b_i|) over the weight simplex: projected
// gradient with finite-difference gradients and Barzilai-Borwein step sizes
// (500 iterations, stops when a step no longer moves the value by 1e-10).
inline double simplex_min_relative_entropy(const DensityMatrix& rho,
                                           const OrthonormalBasis& basis) {
  const Index n = basis.size();
  auto value = [&](RealVector w) {
    w = w.cwiseMax(0.0);
    const double total = w.sum();
    if (total <= 0.0) return infinity();
    w /= total;
    Matrix sigma = basis.elements() * w.asDiagonal().toDenseMatrix().cast<Complex>() *
                   basis.elements().adjoint();
    sigma = 0.5 * (sigma + sigma.adjoint().eval());
    return relative_entropy(rho, DensityMatrix(rho.dims(), sigma));
  };
  auto project = [](RealVector v) {
    std::vector<double> u(v.data(), v.data() + v.size());
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cssv = 0.0, theta = 0.0;
    for (size_t i = 0; i < u.size(); ++i) {
      cssv += u[i];
      const double t = (cssv - 1.0) / static_cast<double>(i + 1);
      if (u[i] - t > 0.0) theta = t;
    }
    return RealVector((v.array() - theta).cwiseMax(0.0));
  };
  const double eps = 1e-7;
  auto fd_grad = [&](const RealVector& w) {
    RealVector g(n);
    for (Index i = 0; i < n; ++i) {
      RealVector up = w, down = w;
      up(i) += eps;
      down(i) = std::max(0.0, down(i) - eps);
      g(i) = (value(up) - value(down)) / (up(i) - down(i));
    }
    return g;
  };

  RealVector w = RealVector::Constant(n, 1.0 / static_cast<double>(n));
  double fw = value(w);
  RealVector g = fd_grad(w);
  double alpha = 1.0;
  for (int iter = 0; iter < 500; ++iter) {
    const RealVector target = project(w - alpha * g);
    const RealVector dir = target - w;
    if (dir.norm() < 1e-12) break;
    double lambda = 1.0;
    double fc = infinity();
    RealVector cand = w;
    for (int bt = 0; bt < 40; ++bt) {
      cand = w + lambda * dir;
      fc = value(cand);
      if (std::isfinite(fc) && fc < fw) break;
      lambda *= 0.5;
    }
    if (!(fc < fw)) break;
    const RealVector g_new = fd_grad(cand);
    const RealVector s = cand - w;
    const RealVector y = g_new - g;
    const double sy = s.dot(y);
    alpha = sy > 1e-14 ? std::clamp(s.dot(s) / sy, 1e-8, 1e8) : 10.0;
    const double delta = fw - fc;
    w = cand;
    fw = fc;
    g = g_new;
    if (delta < 1e-10) break;
  }
  return fw;
}

// concurrence of a two-qubit pure state from its amplitude determinant
inline double pure_concurrence_2q(const Vector& amps) {
  return 2.0 * std::abs(amps(0) * amps(3) - amps(1) * amps(2));
}

// Brute-force convex-roof concurrence of a rank-2 two-qubit state: grid over
// all size-2 decompositions, which are generated by 2x2 mixing unitaries
// (up to irrelevant row phases, a rotation angle and one relative phase).
inline double grid_concurrence_roof_rank2(const DensityMatrix& rho) {
  const auto eig = hermitian_eig(rho.matrix());
  const Index d = rho.dim();
  Vector e1(d), e2(d);
  double l1 = 0.0, l2 = 0.0;
  int found = 0;
  for (Index j = d; j-- > 0;) {
    if (eig.eigenvalues(j) <= 1e-12) continue;
    if (found == 0) {
      l1 = eig.eigenvalues(j);
      e1 = eig.eigenvectors.col(j);
    } else if (found == 1) {
      l2 = eig.eigenvalues(j);
      e2 = eig.eigenvectors.col(j);
    }
    ++found;
  }
  if (found == 1) return pure_concurrence_2q(e1);
  const Vector s1 = std::sqrt(l1) * e1, s2 = std::sqrt(l2) * e2;
  double best = infinity();
  const int nt = 181, np = 360;
  for (int it = 0; it < nt; ++it) {
    const double theta = 0.5 * M_PI * it / (nt - 1);
    const double c = std::cos(theta), s = std::sin(theta);
    for (int ip = 0; ip < np; ++ip) {
      const Complex phase = std::polar(1.0, 2.0 * M_PI * ip / np);
      const Vector psi1 = c * s1 + phase * s * s2;
      const Vector psi2 = -std::conj(phase) * s * s1 + c * s2;
      best = std::min(best, pure_concurrence_2q(psi1) + pure_concurrence_2q(psi2));
    }
  }
  return best;
}

}  // namespace entcoh::oracles
