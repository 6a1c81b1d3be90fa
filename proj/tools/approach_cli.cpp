// Command-line front end: run, sweep, verify-targets, blackwell, report.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "approach/harness.hpp"
#include "approach/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Set-valued approachability experiments"};
  app.require_subcommand(1);

  std::string config;
  auto* run = app.add_subcommand("run", "Simulate one configuration and write its CSV and summary");
  run->add_option("config", config, "Run configuration (.ini)")->required()->check(CLI::ExistingFile);

  std::string dir;
  int jobs = 0;
  auto* sweep = app.add_subcommand("sweep", "Run every .ini file in a directory");
  sweep->add_option("dir", dir, "Directory of run configurations")->required()->check(CLI::ExistingDirectory);
  sweep->add_option("-j,--jobs", jobs, "Worker threads (0: all cores)");

  approach::VerifyOptions vopt;
  std::string csv_dir;
  auto* verify = app.add_subcommand("verify-targets", "Check the closed-form targets against the oracles");
  verify->add_option("--grid-1d", vopt.grid_1d, "Points on the one-parameter grid")->check(CLI::Range(3, 100001));
  verify->add_option("--grid-2d", vopt.grid_2d, "Points per axis on the two-parameter grid")->check(CLI::Range(3, 1001));
  verify->add_option("--perturb", vopt.perturbation, "Offset added to a closed-form constant (negative test)");
  verify->add_option("--csv-dir", csv_dir, "Where to write the grids (default: output directory)");

  std::string bw_config;
  auto* blackwell = app.add_subcommand("blackwell", "Run the known-game strategy with its inner-product audit");
  blackwell->add_option("config", bw_config, "Run configuration (.ini)")->required()->check(CLI::ExistingFile);

  std::vector<std::string> csvs;
  double t_min = 100.0;
  auto* report = app.add_subcommand("report", "Fit log-log convergence slopes to run CSVs");
  report->add_option("csv", csvs, "Run CSV files")->required()->check(CLI::ExistingFile);
  report->add_option("--t-min", t_min, "Ignore checkpoints before this round");

  CLI11_PARSE(app, argc, argv);

  if (*run) return approach::cli_run(config, std::cout, std::cerr);
  if (*sweep) return approach::cli_sweep(dir, jobs, std::cout, std::cerr);
  if (*verify) {
    if (csv_dir.empty()) csv_dir = approach::output_directory();
    return approach::cli_verify_targets(vopt, csv_dir, std::cout, std::cerr);
  }
  if (*blackwell) return approach::cli_blackwell(bw_config, std::cout, std::cerr);
  if (*report) return approach::cli_report(csvs, t_min, std::cout, std::cerr);
  return 1;
}
