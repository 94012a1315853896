#pragma once

#include <optional>
#include <vector>

#include "entcoh/coherence.hpp"
#include "entcoh/entropy.hpp"
#include "entcoh/types.hpp"

namespace entcoh {

enum class Distinguishability { Distinguishable, Indistinguishable, Unknown };

// One node of an adaptive local projective protocol: `party` measures a
// projector onto each branch subspace; the states of branch k lie entirely
// inside subspaces[k].
struct ProtocolNode {
  int party = -1;                   // -1 at a leaf
  std::vector<int> elements;        // basis element indices handled here
  std::vector<Matrix> subspaces;    // orthonormal columns, one block per branch
  std::vector<ProtocolNode> children;
};

struct LoccVerdict {
  Distinguishability verdict = Distinguishability::Unknown;
  std::optional<ProtocolNode> protocol;          // Distinguishable certificate
  std::optional<int> entangled_element;          // Indistinguishable: witness index
  std::optional<std::vector<int>> stuck_elements;  // Unknown: block with no partition
  bool catalog_matched = false;                  // Indistinguishable via curated catalog
};

// True iff every element is fully product (Schmidt rank 1 across every cut).
bool is_product_basis(const OrthonormalBasis& basis);

// Recursive nondisturbing-partition search over product bases; sound but not
// complete, so the negative outcome is Unknown. Bases with an entangled
// element are Indistinguishable outright.
LoccVerdict nondisturbing_search(const OrthonormalBasis& basis);

// Full decision: entangled-element exclusion, then the curated catalog of
// known LOCC-indistinguishable product bases (matched by identity up to
// element permutation and phases), then the partition search.
LoccVerdict locc_distinguishable(const OrthonormalBasis& basis);

// Replay a Distinguishable certificate: every element must be identified
// with probability 1 within tolerance. Returns the largest leakage seen.
double replay_protocol(const OrthonormalBasis& basis, const ProtocolNode& root);

// Expand a conditional product basis (bridge to the coherence module).
OrthonormalBasis conditional_product_basis_to_basis(const ConditionalProductBasis& cpb);

// Extend a fully product state to a complete product basis containing it as
// element 0; locally distinguishable by construction.
OrthonormalBasis complete_product_extension(const PureState& psi);

// Per-party factors of a fully product state, phase-fixed so their tensor
// product reproduces psi; nullopt if any single-party cut is entangled.
std::optional<std::vector<Vector>> product_factors(const PureState& psi);

}  // namespace entcoh
