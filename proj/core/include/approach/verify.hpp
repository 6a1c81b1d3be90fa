#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "approach/run_record.hpp"

namespace approach {

/// One closed-form-versus-oracle comparison. `error` is the largest
/// discrepancy found (or the largest violation for inequality checks).
struct VerifyCheck {
  std::string name;
  double error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  int grid_1d = 1001;
  int grid_2d = 101;
  int atoms_1d = 201;  // decomposition atoms for the first example
  int atoms_2d = 41;   // per axis, second example
  /// Added to the first example's cav constant; nonzero values exist to
  /// exercise the failure path.
  double perturbation = 0.0;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  RunRecord example1_grid;
  RunRecord example2_grid;
  bool all_pass() const;
};

VerifyReport verify_targets(const VerifyOptions& options = {});

/// Prints the pass/fail table and writes both grids as CSV under `csv_dir`.
/// Returns 0 when every check passes.
int cli_verify_targets(const VerifyOptions& options, const std::string& csv_dir, std::ostream& out,
                       std::ostream& err);

}  // namespace approach
