#pragma once

#include <functional>

#include "entcoh/types.hpp"

namespace entcoh {

struct NelderMeadResult {
  RealVector x;
  double value = 0.0;
  bool converged = false;
  int evaluations = 0;
};

// Derivative-free simplex search with dimension-adaptive coefficients.
// Terminates when the simplex value spread drops below ftol.
NelderMeadResult nelder_mead(const std::function<double(const RealVector&)>& f,
                             const RealVector& x0, double initial_step,
                             int max_iters, double ftol);

// U = exp(i H) with H Hermitian assembled from n^2 real parameters
// (diagonal first, then re/im of the upper triangle).
Matrix unitary_from_params(Index n, const RealVector& params);
inline Index unitary_param_count(Index n) { return n * n; }

// Euclidean projection onto the probability simplex.
RealVector project_to_simplex(const RealVector& v);

struct SimplexMinResult {
  RealVector w;
  double value = 0.0;
  bool converged = false;
};

// Projected gradient descent over the probability simplex with backtracking;
// monotone in the objective.
SimplexMinResult minimize_over_simplex(
    const std::function<double(const RealVector&)>& f,
    const std::function<RealVector(const RealVector&)>& grad,
    const RealVector& w0, int max_iters, double tol);

}  // namespace entcoh
