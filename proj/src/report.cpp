#include "entcoh/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace entcoh {

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
  if (std::isnan(x)) return "\"nan\"";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

double TheoremReport::max_residual() const {
  double worst = 0.0;
  for (const auto& r : records)
    if (std::isfinite(r.residual)) worst = std::max(worst, r.residual);
  return worst;
}

int TheoremReport::unconverged_count() const {
  int n = 0;
  for (const auto& r : records) n += r.converged ? 0 : 1;
  return n;
}

int TheoremReport::failure_count() const {
  int n = 0;
  for (const auto& r : records) n += r.pass ? 0 : 1;
  return n;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string TheoremReport::to_json() const {
  std::ostringstream os;
  os << "{\n";
  os << "  \"theorem\": " << theorem_id << ",\n";
  os << "  \"check\": \"" << json_escape(check) << "\",\n";
  os << "  \"dims\": [";
  for (size_t i = 0; i < dims.size(); ++i) os << (i ? ", " : "") << '"' << dims[i] << '"';
  os << "],\n";
  os << "  \"trials_per_dims\": " << trials_per_dims << ",\n";
  os << "  \"seed\": " << seed << ",\n";
  os << "  \"config\": {\"restarts\": " << config.restarts
     << ", \"max_iters\": " << config.max_iters << ", \"tol\": " << format_number(config.tol)
     << ", \"ansatz_size\": " << config.ansatz_size << "},\n";
  os << "  \"tolerance\": " << format_number(tolerance) << ",\n";
  os << "  \"records\": [\n";
  for (size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    os << "    {\"trial\": " << r.trial << ", \"dims\": \"" << r.dims
       << "\", \"seed\": " << r.seed << ", \"values\": {";
    for (size_t v = 0; v < r.values.size(); ++v)
      os << (v ? ", " : "") << '"' << json_escape(r.values[v].first)
         << "\": " << format_number(r.values[v].second);
    os << "}, \"residual\": " << format_number(r.residual)
       << ", \"tolerance\": " << format_number(r.tolerance)
       << ", \"converged\": " << (r.converged ? "true" : "false")
       << ", \"pass\": " << (r.pass ? "true" : "false") << "}";
    os << (i + 1 < records.size() ? ",\n" : "\n");
  }
  os << "  ],\n";
  os << "  \"summary\": {\"trials\": " << records.size() << ", \"failures\": " << failure_count()
     << ", \"unconverged\": " << unconverged_count()
     << ", \"max_residual\": " << format_number(max_residual()) << "},\n";
  os << "  \"verdict\": \"" << (pass ? "pass" : "fail") << "\"\n";
  os << "}\n";
  return os.str();
}

std::string TheoremReport::summary_table() const {
  std::ostringstream os;
  os << "theorem " << theorem_id << ": " << check << "\n";
  os << "dims:";
  for (const auto& d : dims) os << ' ' << d;
  os << "  trials/dims: " << trials_per_dims << "  seed: " << seed << "\n";
  char line[160];
  std::snprintf(line, sizeof(line), "%-6s %-8s %-14s %-12s %-6s %s\n", "trial", "dims",
                "residual", "tolerance", "conv", "pass");
  os << line;
  for (const auto& r : records) {
    std::snprintf(line, sizeof(line), "%-6d %-8s %-14.6g %-12.3g %-6s %s\n", r.trial,
                  r.dims.c_str(), r.residual, r.tolerance, r.converged ? "yes" : "NO",
                  r.pass ? "pass" : "FAIL");
    os << line;
  }
  std::snprintf(line, sizeof(line),
                "verdict: %s  (failures: %d, unconverged: %d, max residual: %.6g)\n",
                pass ? "PASS" : "FAIL", failure_count(), unconverged_count(), max_residual());
  os << line;
  return os.str();
}

}  // namespace entcoh
