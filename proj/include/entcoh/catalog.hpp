#pragma once

#include <string>
#include <variant>

#include "entcoh/entropy.hpp"
#include "entcoh/types.hpp"

namespace entcoh {

// bell_phi+ = (|00> + |11>)/sqrt(2), bell_psi± = (|01> ± |10>)/sqrt(2)
PureState bell_phi_plus();
PureState bell_psi_plus();
PureState bell_psi_minus();

// rho2 = p |psi+><psi+| + (1-p) |psi-><psi-|
DensityMatrix rho2(double p);

// (|0...0> + |1...1>)/sqrt(2) on m qubits
PureState ghz(Index m);

// equal superposition of the weight-one strings on m qubits
PureState w_state(Index m);

// the nine-element 3x3 product basis that is LOCC-indistinguishable
OrthonormalBasis domino_basis();

OrthonormalBasis computational_basis(const Dims& dims);

using CatalogEntry = std::variant<PureState, DensityMatrix, OrthonormalBasis>;

// Named construction: bell_phi+, bell_psi+, bell_psi-, rho2(p), ghz(m),
// w(m), domino_basis, computational(dims).
CatalogEntry catalog(const std::string& name);

// Identity match (up to element permutation and per-element phase) against
// the curated list of LOCC-indistinguishable product bases.
bool matches_known_indistinguishable(const OrthonormalBasis& basis);

}  // namespace entcoh
