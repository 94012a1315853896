#pragma once

#include <cstdint>
#include <random>

#include "entcoh/types.hpp"

namespace entcoh {

// Fixed scramble used to derive per-trial and per-restart seeds from
// seed ^ index; keeps streams decorrelated while staying order-independent.
std::uint64_t splitmix64(std::uint64_t x);

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base ^ index);
}

// Deterministic RNG: mt19937_64 with Box-Muller normals, so identical seeds
// give identical streams on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

  double uniform();                      // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  double normal();
  Complex cgauss();  // standard complex Gaussian
  std::uint64_t bits() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Haar-random pure state: normalized standard-complex-Gaussian vector.
PureState random_pure(const Dims& dims, std::uint64_t seed);
Vector random_unit_vector(Index dim, Rng& rng);

// Haar-random unitary (QR of a Gaussian matrix, phases fixed).
Matrix random_unitary(Index dim, Rng& rng);

// Random rank-r state: partial trace of a random bipartite pure state whose
// environment has dimension `rank`.
DensityMatrix random_density(const Dims& dims, Index rank, std::uint64_t seed);

// Tensor product of independent local Haar states.
PureState random_product_pure(const Dims& dims, std::uint64_t seed);

}  // namespace entcoh
