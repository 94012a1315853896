// entcoh: entanglement and coherence measures for small multiparty states.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "entcoh/catalog.hpp"
#include "entcoh/coherence.hpp"
#include "entcoh/entanglement.hpp"
#include "entcoh/entropy.hpp"
#include "entcoh/locc.hpp"
#include "entcoh/qmat.hpp"
#include "entcoh/schmidt.hpp"
#include "entcoh/stateio.hpp"
#include "entcoh/verify.hpp"

namespace {

using namespace entcoh;

void print_value(const char* label, double x) {
  if (std::isinf(x))
    std::printf("%s = inf\n", label);
  else
    std::printf("%s = %.12g\n", label, x);
}

Bipartition parse_split(const std::string& s) {
  std::vector<int> a;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) a.push_back(std::stoi(tok));
  return Bipartition(a);
}

DensityMatrix as_density(const StateFileContent& content) {
  if (const auto* rho = std::get_if<DensityMatrix>(&content)) return *rho;
  if (const auto* psi = std::get_if<PureState>(&content)) return DensityMatrix::from_pure(*psi);
  throw std::invalid_argument("expected a pure or density state file, got a basis");
}

PureState as_pure(const StateFileContent& content) {
  if (const auto* psi = std::get_if<PureState>(&content)) return *psi;
  throw std::invalid_argument("expected a pure state file");
}

OrthonormalBasis as_basis(const StateFileContent& content) {
  if (const auto* b = std::get_if<OrthonormalBasis>(&content)) return *b;
  throw std::invalid_argument("expected a basis file");
}

struct CommonOpts {
  std::string state_file;
  std::string basis_file;
  std::string sigma_file;
  std::string split_str = "0";
  std::string out_file;
  OptimizerConfig cfg;
};

int run(int argc, char** argv) {
  CLI::App app{"entanglement and coherence measures with locally distinguishable bases"};
  app.require_subcommand(1);
  CommonOpts o;

  auto add_state = [&](CLI::App* cmd) {
    cmd->add_option("--state", o.state_file, "state file (pure or density)")->required();
  };
  auto add_opt_flags = [&](CLI::App* cmd) {
    cmd->add_option("--restarts", o.cfg.restarts, "optimizer restarts");
    cmd->add_option("--tol", o.cfg.tol, "optimizer tolerance");
    cmd->add_option("--seed", o.cfg.seed, "optimizer seed");
    cmd->add_option("--split", o.split_str, "party set A, e.g. 0 or 0,2");
  };

  auto* c_entropy = app.add_subcommand("entropy", "von Neumann entropy in bits");
  add_state(c_entropy);

  auto* c_releent = app.add_subcommand("releent", "relative entropy S(rho||sigma) in bits");
  add_state(c_releent);
  c_releent->add_option("--sigma", o.sigma_file, "second state file")->required();

  auto* c_schmidt = app.add_subcommand("schmidt", "Schmidt coefficients across a split");
  add_state(c_schmidt);
  c_schmidt->add_option("--split", o.split_str, "party set A, e.g. 0 or 0,2");

  auto* c_ppt = app.add_subcommand("ppt", "positive-partial-transpose test");
  add_state(c_ppt);
  c_ppt->add_option("--split", o.split_str, "party set A");

  auto* c_eof = app.add_subcommand("eof", "entanglement of formation in ebits");
  add_state(c_eof);
  add_opt_flags(c_eof);

  auto* c_ree = app.add_subcommand("ree", "relative entropy of entanglement in bits");
  add_state(c_ree);
  add_opt_flags(c_ree);

  auto* c_coh = app.add_subcommand("coherence", "coherence with respect to a basis");
  add_state(c_coh);
  c_coh->add_option("--basis", o.basis_file, "basis file")->required();

  auto* c_mincoh =
      app.add_subcommand("min-coherence", "minimal coherence over conditional product bases");
  add_state(c_mincoh);
  add_opt_flags(c_mincoh);

  auto* c_locc = app.add_subcommand("locc-check", "local distinguishability of a basis");
  c_locc->add_option("--basis", o.basis_file, "basis file")->required();

  std::string catalog_name;
  double catalog_p = -1.0;
  std::string catalog_dims;
  auto* c_catalog = app.add_subcommand("catalog", "write a canonical state or basis");
  c_catalog->add_option("name", catalog_name,
                        "bell_phi+ | bell_psi+ | bell_psi- | rho2(p) | ghz(m) | w(m) | "
                        "domino_basis | computational(dims)")
      ->required();
  c_catalog->add_option("--p", catalog_p, "mixing parameter for rho2");
  c_catalog->add_option("--dims", catalog_dims, "dims for computational, e.g. 2x3");
  c_catalog->add_option("--out", o.out_file, "output file (default: stdout)");

  int theorem_id = 0;
  int trials = 20;
  std::string dims_str;
  std::uint64_t seed = 7;
  auto* c_verify = app.add_subcommand("verify", "run a theorem verification suite");
  c_verify->add_option("--theorem", theorem_id, "theorem id 1..8")->required();
  c_verify->add_option("--trials", trials, "trials per dims");
  c_verify->add_option("--dims", dims_str, "dims, e.g. 2x2 (default per theorem)");
  c_verify->add_option("--seed", seed, "suite seed");
  c_verify->add_option("--restarts", o.cfg.restarts, "optimizer restarts");
  c_verify->add_option("--tol", o.cfg.tol, "optimizer tolerance");
  c_verify->add_option("--out", o.out_file, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (c_entropy->parsed()) {
    print_value("von_neumann_entropy_bits", von_neumann_entropy(as_density(load_state_file(o.state_file))));
    return 0;
  }
  if (c_releent->parsed()) {
    const double v = relative_entropy(as_density(load_state_file(o.state_file)),
                                      as_density(load_state_file(o.sigma_file)));
    print_value("relative_entropy_bits", v);
    return 0;
  }
  if (c_schmidt->parsed()) {
    const PureState psi = as_pure(load_state_file(o.state_file));
    const auto sf = schmidt_decompose(psi, parse_split(o.split_str));
    std::printf("schmidt_rank = %ld\ncoefficients =", static_cast<long>(sf.rank()));
    for (Index i = 0; i < sf.rank(); ++i) std::printf(" %.12g", sf.coefficients(i));
    std::printf("\n");
    return 0;
  }
  if (c_ppt->parsed()) {
    const auto res = is_ppt(as_density(load_state_file(o.state_file)), parse_split(o.split_str));
    std::printf("ppt = %s\n", res.ppt ? "yes" : "no");
    print_value("min_eigenvalue", res.min_eigenvalue);
    return 0;
  }
  if (c_eof->parsed()) {
    const DensityMatrix rho = as_density(load_state_file(o.state_file));
    if (rho.dims().parties() == 2 && rho.dims()[0] == 2 && rho.dims()[1] == 2) {
      print_value("eof_ebits", eof_2q(rho));
    } else {
      const auto res = eof_convex_roof(rho, parse_split(o.split_str), o.cfg);
      print_value("eof_upper_bound_ebits", res.value);
      std::printf("converged = %s\n", res.converged ? "yes" : "no");
    }
    return 0;
  }
  if (c_ree->parsed()) {
    const auto res = relative_entropy_of_entanglement(as_density(load_state_file(o.state_file)),
                                                      parse_split(o.split_str), o.cfg);
    print_value("ree_upper_bound_bits", res.value);
    std::printf("converged = %s\n", res.converged ? "yes" : "no");
    return 0;
  }
  if (c_coh->parsed()) {
    const auto content = load_state_file(o.state_file);
    const auto basis = as_basis(load_state_file(o.basis_file));
    if (const auto* psi = std::get_if<PureState>(&content))
      print_value("coherence_bits", coherence_pure(*psi, basis));
    else
      print_value("relative_coherence_bits", relative_coherence(as_density(content), basis));
    return 0;
  }
  if (c_mincoh->parsed()) {
    const auto content = load_state_file(o.state_file);
    const Bipartition split = parse_split(o.split_str);
    if (const auto* psi = std::get_if<PureState>(&content)) {
      const auto res = min_coherence_pure(*psi, split, o.cfg);
      print_value("min_coherence_bits", res.value);
      std::printf("converged = %s\n", res.converged ? "yes" : "no");
    } else {
      const auto res = min_relative_coherence(as_density(content), split, o.cfg);
      print_value("min_relative_coherence_bits", res.value);
      std::printf("converged = %s\n", res.converged ? "yes" : "no");
    }
    return 0;
  }
  if (c_locc->parsed()) {
    const auto verdict = locc_distinguishable(as_basis(load_state_file(o.basis_file)));
    switch (verdict.verdict) {
      case Distinguishability::Distinguishable: {
        const double leak = replay_protocol(as_basis(load_state_file(o.basis_file)),
                                            *verdict.protocol);
        std::printf("verdict = Distinguishable\n");
        print_value("replay_leakage", leak);
        break;
      }
      case Distinguishability::Indistinguishable:
        std::printf("verdict = Indistinguishable\n");
        if (verdict.entangled_element)
          std::printf("entangled_element = %d\n", *verdict.entangled_element);
        if (verdict.catalog_matched) std::printf("catalog_matched = yes\n");
        break;
      case Distinguishability::Unknown:
        std::printf("verdict = Unknown\n");
        if (verdict.stuck_elements) {
          std::printf("stuck_block =");
          for (int e : *verdict.stuck_elements) std::printf(" %d", e);
          std::printf("\n");
        }
        break;
    }
    return 0;
  }
  if (c_catalog->parsed()) {
    std::string name = catalog_name;
    if (name == "rho2" && catalog_p >= 0.0) name += "(" + std::to_string(catalog_p) + ")";
    if (name == "computational" && !catalog_dims.empty()) name += "(" + catalog_dims + ")";
    const CatalogEntry entry = catalog(name);
    const StateFileContent content =
        std::visit([](const auto& x) -> StateFileContent { return x; }, entry);
    if (o.out_file.empty())
      std::fputs(serialize(content).c_str(), stdout);
    else
      save_state_file(o.out_file, content);
    return 0;
  }
  if (c_verify->parsed()) {
    const std::vector<Dims> dims_list =
        dims_str.empty() ? default_verify_dims(theorem_id)
                         : std::vector<Dims>{Dims::parse(dims_str)};
    const TheoremReport report = verify_theorem(theorem_id, trials, dims_list, seed, o.cfg);
    std::fputs(report.summary_table().c_str(), stdout);
    if (!o.out_file.empty()) {
      std::ofstream out(o.out_file);
      detail::require(out.good(), "cannot write report to '" + o.out_file + "'");
      out << report.to_json();
    }
    return report.pass ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
