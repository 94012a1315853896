#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "entcoh/entanglement.hpp"
#include "entcoh/types.hpp"

namespace entcoh {

struct TrialRecord {
  int trial = 0;
  std::string dims;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> values;  // quantities compared, in order
  double residual = 0.0;
  double tolerance = 0.0;
  bool converged = true;  // false only when an optimizer failed to settle
  bool pass = false;
};

// Machine-readable verdict of one theorem-verification run. Serialization is
// deterministic: fixed key order, doubles printed with 12 significant digits.
struct TheoremReport {
  int theorem_id = 0;
  std::string check;  // the per-trial rule, human readable
  std::vector<std::string> dims;
  int trials_per_dims = 0;
  std::uint64_t seed = 0;
  OptimizerConfig config;
  double tolerance = 0.0;
  std::vector<TrialRecord> records;
  bool pass = false;

  double max_residual() const;
  int unconverged_count() const;
  int failure_count() const;

  std::string to_json() const;
  std::string summary_table() const;
};

// "%.12g" with the non-finite values spelled out
std::string format_number(double x);

}  // namespace entcoh
