#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "approach/adversary.hpp"
#include "approach/config.hpp"
#include "approach/run_record.hpp"
#include "approach/scenarios.hpp"
#include "approach/strategy.hpp"

namespace approach {

/// Everything a configured run needs, built but not yet executed.
struct PreparedRun {
  Scenario scenario;
  ResponsePtr response;
  std::unique_ptr<Strategy> strategy;
  std::unique_ptr<Adversary> adversary;
  RunOptions options;
};

PreparedRun prepare(const RunConfig& config);
RunRecord execute(const RunConfig& config);

/// $APPROACH_OUTPUT_DIR if set, otherwise `fallback`.
std::string output_directory(const std::string& fallback = "results");

/// Plain-text digest: metadata, last checkpoint, certificate violations and
/// log-log slopes of the distance columns.
std::string summarize(const RunRecord& record);

// CLI entry points; return the process exit code.
int cli_run(const std::string& config_path, std::ostream& out, std::ostream& err);
int cli_sweep(const std::string& config_dir, int jobs, std::ostream& out, std::ostream& err);
int cli_blackwell(const std::string& config_path, std::ostream& out, std::ostream& err);
int cli_report(const std::vector<std::string>& csv_paths, double t_min, std::ostream& out,
               std::ostream& err);

}  // namespace approach
