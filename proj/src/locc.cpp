#include "entcoh/locc.hpp"

#include <algorithm>
#include <cmath>

#include "entcoh/catalog.hpp"
#include "entcoh/qmat.hpp"
#include "entcoh/schmidt.hpp"

namespace entcoh {

std::optional<std::vector<Vector>> product_factors(const PureState& psi) {
  const Dims& dims = psi.dims();
  const Index m = dims.parties();
  std::vector<Vector> factors;
  if (m == 1) {
    factors.push_back(psi.amplitudes());
    return factors;
  }
  for (Index k = 0; k < m; ++k) {
    const auto sf = schmidt_decompose(psi, Bipartition({static_cast<int>(k)}));
    if (sf.rank() > 1 && sf.coefficients(1) > 1e-8) return std::nullopt;
    factors.push_back(sf.left_basis.col(0));
  }
  // fix the overall phase so the tensor product reproduces psi
  const Vector prod = tensor_all(factors);
  const Complex overlap = prod.dot(psi.amplitudes());  // <prod|psi>
  if (std::abs(overlap) < 1.0 - 1e-6) return std::nullopt;
  factors[0] *= overlap / std::abs(overlap);
  return factors;
}

bool is_product_basis(const OrthonormalBasis& basis) {
  detail::require(basis.dims().parties() >= 2, "is_product_basis: need at least two parties");
  for (Index e = 0; e < basis.size(); ++e)
    if (!product_factors(basis.element(e))) return false;
  return true;
}

namespace {

// factors[e][k] = party-k factor of element e
using FactorTable = std::vector<std::vector<Vector>>;

// connected components of the non-orthogonality graph of party p's factors
// restricted to `elements`
std::vector<std::vector<int>> orthogonality_components(const FactorTable& factors,
                                                       const std::vector<int>& elements,
                                                       int party) {
  const int n = static_cast<int>(elements.size());
  std::vector<int> comp(static_cast<size_t>(n), -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    comp[static_cast<size_t>(s)] = ncomp;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      const Vector& fu =
          factors[static_cast<size_t>(elements[static_cast<size_t>(u)])][static_cast<size_t>(party)];
      for (int v = 0; v < n; ++v) {
        if (comp[static_cast<size_t>(v)] >= 0) continue;
        const Vector& fv = factors[static_cast<size_t>(
            elements[static_cast<size_t>(v)])][static_cast<size_t>(party)];
        if (std::abs(fu.dot(fv)) > 1e-9) {
          comp[static_cast<size_t>(v)] = ncomp;
          stack.push_back(v);
        }
      }
    }
    ++ncomp;
  }
  std::vector<std::vector<int>> blocks(static_cast<size_t>(ncomp));
  for (int s = 0; s < n; ++s)
    blocks[static_cast<size_t>(comp[static_cast<size_t>(s)])].push_back(
        elements[static_cast<size_t>(s)]);
  return blocks;
}

// orthonormal basis of the span of the block's party-p factors
Matrix block_subspace(const FactorTable& factors, const std::vector<int>& block, int party) {
  const Index d = factors[static_cast<size_t>(block[0])][static_cast<size_t>(party)].size();
  Matrix f(d, static_cast<Index>(block.size()));
  for (size_t s = 0; s < block.size(); ++s)
    f.col(static_cast<Index>(s)) = factors[static_cast<size_t>(block[s])][static_cast<size_t>(party)];
  Eigen::ColPivHouseholderQR<Matrix> qr(f);
  qr.setThreshold(1e-9);
  const Index rank = qr.rank();
  Matrix q = qr.householderQ();
  return q.leftCols(rank);
}

// returns the protocol subtree, or the stuck block on failure
bool search_node(const FactorTable& factors, Index parties, const std::vector<int>& elements,
                 ProtocolNode& node, std::vector<int>& stuck) {
  node.elements = elements;
  node.party = -1;
  if (elements.size() <= 1) return true;
  for (int p = 0; p < parties; ++p) {
    auto blocks = orthogonality_components(factors, elements, p);
    if (blocks.size() < 2) continue;
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    ProtocolNode candidate;
    candidate.party = p;
    candidate.elements = elements;
    bool ok = true;
    for (const auto& block : blocks) {
      candidate.subspaces.push_back(block_subspace(factors, block, p));
      ProtocolNode child;
      if (!search_node(factors, parties, block, child, stuck)) {
        ok = false;
        break;
      }
      candidate.children.push_back(std::move(child));
    }
    if (ok) {
      node = std::move(candidate);
      return true;
    }
  }
  stuck = elements;
  return false;
}

}  // namespace

LoccVerdict nondisturbing_search(const OrthonormalBasis& basis) {
  detail::require(basis.dims().parties() >= 2,
                  "locc_distinguishable: need at least two parties");
  LoccVerdict out;
  FactorTable factors;
  for (Index e = 0; e < basis.size(); ++e) {
    auto f = product_factors(basis.element(e));
    if (!f) {
      // an entangled element makes the whole basis locally indistinguishable
      out.verdict = Distinguishability::Indistinguishable;
      out.entangled_element = static_cast<int>(e);
      return out;
    }
    factors.push_back(std::move(*f));
  }
  std::vector<int> all(static_cast<size_t>(basis.size()));
  for (size_t e = 0; e < all.size(); ++e) all[e] = static_cast<int>(e);
  ProtocolNode root;
  std::vector<int> stuck;
  if (search_node(factors, basis.dims().parties(), all, root, stuck)) {
    out.verdict = Distinguishability::Distinguishable;
    out.protocol = std::move(root);
  } else {
    out.verdict = Distinguishability::Unknown;
    out.stuck_elements = std::move(stuck);
  }
  return out;
}

LoccVerdict locc_distinguishable(const OrthonormalBasis& basis) {
  detail::require(basis.dims().parties() >= 2,
                  "locc_distinguishable: need at least two parties");
  // entangled-element exclusion happens inside the search; probe the catalog
  // of known indistinguishable product bases first
  if (matches_known_indistinguishable(basis)) {
    LoccVerdict out;
    out.verdict = Distinguishability::Indistinguishable;
    out.catalog_matched = true;
    return out;
  }
  return nondisturbing_search(basis);
}

namespace {

double replay_node(const OrthonormalBasis& basis, const FactorTable& factors,
                   const ProtocolNode& node, int element, double leakage) {
  if (node.party < 0) {
    // leaf: identified iff the element stands alone
    if (node.elements.size() != 1 || node.elements[0] != element) return 1.0;
    return leakage;
  }
  // locate the branch holding this element and accumulate projection loss
  for (size_t b = 0; b < node.children.size(); ++b) {
    const auto& elems = node.children[b].elements;
    if (std::find(elems.begin(), elems.end(), element) == elems.end()) continue;
    const Vector& f =
        factors[static_cast<size_t>(element)][static_cast<size_t>(node.party)];
    const double p = (node.subspaces[b].adjoint() * f).squaredNorm();
    return replay_node(basis, factors, node.children[b],
                       element, std::max(leakage, 1.0 - p));
  }
  return 1.0;  // element not routed anywhere
}

}  // namespace

double replay_protocol(const OrthonormalBasis& basis, const ProtocolNode& root) {
  FactorTable factors;
  for (Index e = 0; e < basis.size(); ++e) {
    auto f = product_factors(basis.element(e));
    detail::require(f.has_value(), "replay_protocol: basis element is not product");
    factors.push_back(std::move(*f));
  }
  double worst = 0.0;
  for (Index e = 0; e < basis.size(); ++e)
    worst = std::max(worst, replay_node(basis, factors, root, static_cast<int>(e), 0.0));
  return worst;
}

OrthonormalBasis conditional_product_basis_to_basis(const ConditionalProductBasis& cpb) {
  return cpb.expand();
}

OrthonormalBasis complete_product_extension(const PureState& psi) {
  auto factors = product_factors(psi);
  detail::require(factors.has_value(),
                  "complete_product_extension: state is entangled across some cut");
  const Dims& dims = psi.dims();
  std::vector<std::vector<Matrix>> levels;
  Index chains = 1;
  for (Index k = 0; k < dims.parties(); ++k) {
    const Matrix uk = complete_orthonormal((*factors)[static_cast<size_t>(k)]);
    levels.emplace_back(static_cast<size_t>(chains), uk);
    chains *= dims[k];
  }
  std::vector<int> order(static_cast<size_t>(dims.parties()));
  for (size_t t = 0; t < order.size(); ++t) order[t] = static_cast<int>(t);
  return ConditionalProductBasis(dims, order, std::move(levels)).expand();
}

}  // namespace entcoh
