#include "approach/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <ostream>

#include "approach/responses.hpp"
#include "approach/targets.hpp"
#include "approach/worked_examples.hpp"

namespace approach {

namespace {

VerifyCheck check(std::string name, double error, double tolerance) {
  return {std::move(name), error, tolerance, error <= tolerance};
}

// Largest |a - b|; NaN counts as a failure.
double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double g = std::abs(a[i] - b[i]);
    if (std::isnan(g)) return INFINITY;
    worst = std::max(worst, g);
  }
  return worst;
}

// Largest amount by which lo > hi.
double max_excess(const std::vector<double>& lo, const std::vector<double>& hi) {
  double worst = 0.0;
  for (std::size_t i = 0; i < lo.size(); ++i) worst = std::max(worst, lo[i] - hi[i]);
  return worst;
}

void check_example1(const VerifyOptions& o, VerifyReport& report) {
  const ParamSpace space = example1::space();
  const TargetSet target = example1::target();
  const auto grid = space.grid(o.grid_1d);

  std::vector<double> nu, star_closed, star_solver, cav_closed, xs_closed, xs_oracle, a0, a1;
  const auto psi = std::make_shared<GenericXStar>(target);
  const PhiPsiOracle oracle(space, psi, target, o.atoms_1d, 2);
  for (const auto& theta : grid) {
    const double v = theta(0);
    nu.push_back(v);
    star_closed.push_back(example1::phi_star(v));
    star_solver.push_back(phi_star(space.at(theta), target));
    cav_closed.push_back(example1::cav_phi_star(v) + o.perturbation);
    xs_closed.push_back(example1::phi_xstar(v));
    xs_oracle.push_back(oracle.at(theta));
    a0.push_back(example1::alpha(0.0, v));
    a1.push_back(example1::alpha(1.0, v));
  }
  const auto cav_hull = cav_oracle(space, [&](const Vec& t) { return phi_star(space.at(t), target); }, o.grid_1d);

  auto& c = report.checks;
  c.push_back(check("example1 phi_star closed form vs solver", max_gap(star_closed, star_solver), 1e-6));
  c.push_back(check("example1 cav closed form vs 1-D hull", max_gap(cav_closed, cav_hull), 1e-3));
  c.push_back(check("example1 phi_xstar closed form vs decomposition oracle", max_gap(xs_closed, xs_oracle), 5e-2));
  const double spot = std::max({std::abs(example1::phi_star(0.5) - 2.5), std::abs(example1::cav_phi_star(0.5) + o.perturbation - 4.0),
                                std::abs(example1::phi_xstar(0.5) - 3.5), std::abs(example1::alpha(0.0, 0.5) - 2.5)});
  c.push_back(check("example1 spot values at nu = 1/2", spot, 1e-12));
  const double chain = std::max(max_excess(star_solver, xs_oracle), max_excess(xs_oracle, cav_hull));
  c.push_back(check("example1 ordering phi_star <= phi_xstar <= cav", chain, 1e-6));
  const double strict = std::max(example1::phi_star(0.5) - example1::phi_xstar(0.5) + 0.5,
                                 example1::phi_xstar(0.5) - example1::cav_phi_star(0.5) + 0.5);
  c.push_back(check("example1 strict gaps at nu = 1/2", std::max(0.0, strict), 0.0));

  RunRecord& g = report.example1_grid;
  g.set("example", "example1");
  g.set("atoms", std::to_string(o.atoms_1d));
  g.columns = {"nu", "phi_star", "phi_star_solver", "cav", "cav_hull", "phi_xstar", "phi_xstar_oracle", "alpha0", "alpha1"};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    g.rows.push_back({nu[i], star_closed[i], star_solver[i], cav_closed[i], cav_hull[i], xs_closed[i], xs_oracle[i], a0[i], a1[i]});
  }
}

void check_example2(const VerifyOptions& o, VerifyReport& report) {
  const ParamSpace space = example2::space();
  const TargetSet target = example2::target();
  const auto grid = space.grid(o.grid_2d);

  std::vector<double> star_closed, star_solver, cav_closed, xs_closed, xs_oracle, half;
  const PhiPsiOracle oracle(space, std::make_shared<Example2XStar>(), target, o.atoms_2d, 3);
  for (const auto& theta : grid) {
    const double v = theta(0), w = theta(1);
    star_closed.push_back(example2::phi_star(v, w));
    star_solver.push_back(phi_star(space.at(theta), target));
    cav_closed.push_back(example2::cav_phi_star(v, w));
    xs_closed.push_back(example2::phi_xstar(v, w));
    xs_oracle.push_back(oracle.at(theta));
    half.push_back(example2::alpha_half(v, w));
  }
  const auto cav_hull = cav_oracle(space, [&](const Vec& t) { return phi_star(space.at(t), target); }, o.grid_2d);

  auto& c = report.checks;
  c.push_back(check("example2 phi_star closed form vs solver", max_gap(star_closed, star_solver), 1e-6));
  c.push_back(check("example2 cav closed form vs 2-D hull", max_gap(cav_closed, cav_hull), 5e-2));
  c.push_back(check("example2 phi_xstar closed form vs hull oracle", max_gap(xs_closed, xs_oracle), 5e-2));
  Vec origin(2);
  origin << 0.0, 0.0;
  c.push_back(check("example2 phi_xstar(0,0) oracle = 1/3", std::abs(oracle.at(origin) - 1.0 / 3.0), 5e-2));
  const double spot = std::max({std::abs(example2::phi_xstar(0, 0) - 1.0 / 3.0), std::abs(example2::alpha_half(0, 0)),
                                std::abs(example2::cav_phi_star(1, -1)), std::abs(example2::cav_phi_star(0, 0) - 1.0),
                                std::abs(example2::phi_star(0, 0))});
  c.push_back(check("example2 spot values", spot, 1e-12));
  const double chain = std::max(max_excess(star_closed, xs_closed), max_excess(xs_closed, cav_closed));
  c.push_back(check("example2 ordering phi_star <= phi_xstar <= cav", chain, 1e-12));
  c.push_back(check("example2 alpha_half <= phi_xstar", max_excess(half, xs_closed), 1e-12));
  const double strict = example2::alpha_half(0, 0) - example2::phi_xstar(0, 0) + 0.25;
  c.push_back(check("example2 alpha_half strictly below at (0,0)", std::max(0.0, strict), 0.0));

  RunRecord& g = report.example2_grid;
  g.set("example", "example2");
  g.set("atoms_per_axis", std::to_string(o.atoms_2d));
  g.columns = {"v", "w", "phi_star", "phi_star_solver", "cav", "cav_hull", "phi_xstar", "phi_xstar_oracle", "alpha_half"};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    g.rows.push_back({grid[i](0), grid[i](1), star_closed[i], star_solver[i], cav_closed[i], cav_hull[i], xs_closed[i],
                      xs_oracle[i], half[i]});
  }
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

VerifyReport verify_targets(const VerifyOptions& options) {
  VerifyReport report;
  check_example1(options, report);
  check_example2(options, report);
  return report;
}

int cli_verify_targets(const VerifyOptions& options, const std::string& csv_dir, std::ostream& out,
                       std::ostream& err) {
  VerifyReport report;
  try {
    report = verify_targets(options);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  for (const auto& c : report.checks) {
    char line[256];
    std::snprintf(line, sizeof line, "%s  %-58s error %.3g (tol %.3g)\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                  c.error, c.tolerance);
    out << line;
  }
  if (!csv_dir.empty()) {
    try {
      const std::filesystem::path dir(csv_dir);
      write_file_atomic((dir / "example1_targets.csv").string(), to_csv(report.example1_grid));
      write_file_atomic((dir / "example2_targets.csv").string(), to_csv(report.example2_grid));
      out << "grids written to " << csv_dir << "\n";
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace approach
