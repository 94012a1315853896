#include "entcoh/stateio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace entcoh {

namespace {

void append_entries(std::ostringstream& os, const Matrix& m) {
  char buf[64];
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", m(r, c).real(), m(r, c).imag());
      os << buf;
    }
}

std::vector<Complex> read_entries(std::istream& is, Index count, const std::string& kind) {
  std::vector<Complex> out;
  out.reserve(static_cast<size_t>(count));
  double re = 0.0, im = 0.0;
  while (static_cast<Index>(out.size()) < count && (is >> re >> im)) out.emplace_back(re, im);
  detail::require(static_cast<Index>(out.size()) == count,
                  "state file: " + kind + " needs exactly " + std::to_string(count) +
                      " complex entries");
  double extra_re = 0.0;
  detail::require(!(is >> extra_re), "state file: trailing data after the declared entries");
  return out;
}

}  // namespace

std::string serialize(const StateFileContent& content) {
  std::ostringstream os;
  if (const auto* psi = std::get_if<PureState>(&content)) {
    os << "pure " << psi->dims().str() << "\n";
    append_entries(os, psi->amplitudes());
  } else if (const auto* rho = std::get_if<DensityMatrix>(&content)) {
    os << "density " << rho->dims().str() << "\n";
    append_entries(os, rho->matrix());
  } else {
    const auto& basis = std::get<OrthonormalBasis>(content);
    os << "basis " << basis.dims().str() << "\n";
    // elements sequentially: element 0's amplitudes, then element 1's, ...
    for (Index e = 0; e < basis.size(); ++e)
      append_entries(os, basis.elements().col(e));
  }
  return os.str();
}

StateFileContent parse_state_text(const std::string& text) {
  std::istringstream is(text);
  std::string kind, dims_str;
  detail::require(static_cast<bool>(is >> kind >> dims_str),
                  "state file: missing '<kind> <dims>' header line");
  const Dims dims = Dims::parse(dims_str);
  const Index d = dims.total();
  if (kind == "pure") {
    const auto entries = read_entries(is, d, kind);
    Vector v(d);
    for (Index i = 0; i < d; ++i) v(i) = entries[static_cast<size_t>(i)];
    return PureState(dims, std::move(v));
  }
  if (kind == "density") {
    const auto entries = read_entries(is, d * d, kind);
    Matrix m(d, d);
    for (Index r = 0; r < d; ++r)
      for (Index c = 0; c < d; ++c) m(r, c) = entries[static_cast<size_t>(r * d + c)];
    return DensityMatrix(dims, std::move(m));
  }
  if (kind == "basis") {
    const auto entries = read_entries(is, d * d, kind);
    Matrix u(d, d);
    for (Index e = 0; e < d; ++e)
      for (Index i = 0; i < d; ++i) u(i, e) = entries[static_cast<size_t>(e * d + i)];
    return OrthonormalBasis(dims, std::move(u));
  }
  throw std::invalid_argument("state file: unknown kind '" + kind +
                              "' (expected pure, density or basis)");
}

StateFileContent load_state_file(const std::string& path) {
  std::ifstream in(path);
  detail::require(in.good(), "state file: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_text(buf.str());
}

void save_state_file(const std::string& path, const StateFileContent& content) {
  std::ofstream out(path);
  detail::require(out.good(), "state file: cannot write '" + path + "'");
  out << serialize(content);
}

}  // namespace entcoh
