#include "approach/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "approach/blackwell.hpp"
#include "approach/error.hpp"
#include "approach/rate_fit.hpp"

namespace approach {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Vec parse_numbers(const std::string& key, const std::string& text) {
  std::vector<double> values;
  for (const auto& item : split_list(text, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(key, "cannot parse number '" + item + "'");
    }
  }
  return Eigen::Map<Vec>(values.data(), static_cast<Eigen::Index>(values.size()));
}

PayoffMatrix point_of(const Scenario& s, const std::string& key, const std::string& text) {
  const Vec theta = parse_numbers(key, text);
  if (theta.size() != s.space.params()) {
    throw ConfigError(key, "expected " + std::to_string(s.space.params()) + " parameter(s)");
  }
  if (!s.space.contains(theta)) throw ConfigError(key, "point lies outside K");
  return s.space.at(theta);
}

std::vector<PayoffMatrix> points_of(const Scenario& s, const std::string& key, const std::string& text) {
  std::vector<PayoffMatrix> out;
  if (s.space.params() == 0 && trim(text).empty()) {
    out.push_back(s.space.at(Vec(0)));
    return out;
  }
  for (const auto& item : split_list(text, ';')) out.push_back(point_of(s, key, item));
  if (out.empty()) throw ConfigError(key, "needs at least one point");
  return out;
}

std::vector<long> parse_checkpoints(const std::string& text, long horizon) {
  if (text == "geometric" || text.empty()) return geometric_checkpoints(horizon);
  if (text.rfind("dense:", 0) == 0) {
    const Vec every = parse_numbers("run.checkpoints", text.substr(6));
    if (every.size() != 1 || every(0) < 1) throw ConfigError("run.checkpoints", "dense:<every> needs every >= 1");
    return dense_checkpoints(horizon, static_cast<long>(every(0)));
  }
  std::vector<long> out;
  const Vec ts = parse_numbers("run.checkpoints", text);
  for (Eigen::Index i = 0; i < ts.size(); ++i) out.push_back(static_cast<long>(ts(i)));
  return out;
}

std::string fmt(double v, const char* spec = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void write_outputs(const RunConfig& config, const RunRecord& record, std::ostream& out) {
  const fs::path dir = output_directory();
  const fs::path csv = dir / config.output_name();
  write_file_atomic(csv.string(), to_csv(record));
  fs::path summary = csv;
  summary.replace_extension(".summary.txt");
  write_file_atomic(summary.string(), summarize(record));
  out << "wrote " << csv.string() << "\n";
}

}  // namespace

std::string output_directory(const std::string& fallback) {
  const char* env = std::getenv("APPROACH_OUTPUT_DIR");
  return env && *env ? std::string(env) : fallback;
}

PreparedRun prepare(const RunConfig& c) {
  Scenario s = scenarios::by_name(c.scenario);
  if (!c.norm.empty() || !c.target.empty()) {
    Norm p = s.target.norm();
    try {
      if (!c.norm.empty()) p = parse_norm(c.norm);
    } catch (const Error& e) {
      throw ConfigError("scenario.norm", e.what());
    }
    try {
      s.target = c.target.empty() ? s.target.with_norm(p) : TargetSet::parse(c.target, s.target.dim(), p);
    } catch (const Error& e) {
      throw ConfigError("scenario.target", e.what());
    }
    if (s.constraint) s.constraint->payoff_set = s.target;
  }

  PreparedRun run{s, nullptr, nullptr, nullptr, {}};
  try {
    run.response = make_response(c.response, s);
  } catch (const ConfigError& e) {
    throw ConfigError("strategy.response", e.what());
  }

  const int d = s.dim(), A = s.actions();
  if (c.strategy == "blocks") {
    auto proto = c.regret_exponent > 0.0 ? std::make_unique<PolynomialWeights>(A, c.regret_exponent)
                                         : std::make_unique<PolynomialWeights>(A);
    run.strategy = std::make_unique<BlockStrategy>(d, A, run.response, std::move(proto));
  } else if (c.strategy == "constant") {
    const Vec w = parse_numbers("strategy.play", c.play);
    if (w.size() != A) throw ConfigError("strategy.play", "expected " + std::to_string(A) + " weights");
    run.strategy = std::make_unique<ConstantPlay>(MixedAction(w));
  } else if (c.strategy == "blackwell") {
    run.strategy = std::make_unique<BlackwellStrategy>(s.body(), run.response);
  } else {
    throw ConfigError("strategy.kind", "unknown strategy '" + c.strategy + "'");
  }

  const std::uint64_t adv_seed =
      c.adversary_seed >= 0 ? static_cast<std::uint64_t>(c.adversary_seed) : c.seed;
  if (c.adversary == "constant") {
    const auto pts = points_of(s, "adversary.points", c.points);
    if (pts.size() != 1) throw ConfigError("adversary.points", "constant adversary takes one point");
    run.adversary = std::make_unique<ConstantAdversary>(pts.front());
  } else if (c.adversary == "periodic" || c.adversary == "periodic_block") {
    run.adversary = std::make_unique<PeriodicAdversary>(points_of(s, "adversary.points", c.points),
                                                        c.adversary == "periodic_block");
  } else if (c.adversary == "switching") {
    const PayoffMatrix anchor = point_of(s, "adversary.anchor", c.anchor);
    const PayoffMatrix other = point_of(s, "adversary.other", c.other);
    Vec target = c.switch_target.empty() ? combine(run.response->respond(anchor), anchor)
                                         : parse_numbers("adversary.target", c.switch_target);
    if (target.size() != d) throw ConfigError("adversary.target", "expected a point of R^d");
    if (!(c.eps0 > 0.0)) throw ConfigError("adversary.eps0", "must be positive");
    run.adversary = std::make_unique<SwitchingAdversary>(anchor, other, target, c.eps0);
  } else if (c.adversary == "random") {
    std::vector<PayoffMatrix> support =
        c.points.empty() ? s.body().vertices() : points_of(s, "adversary.points", c.points);
    std::vector<double> w;
    if (!c.weights.empty()) {
      const Vec wv = parse_numbers("adversary.weights", c.weights);
      w.assign(wv.data(), wv.data() + wv.size());
      if (w.size() != support.size()) throw ConfigError("adversary.weights", "one weight per point");
    }
    run.adversary = std::make_unique<RandomAdversary>(std::move(support), std::move(w), adv_seed);
  } else if (c.adversary == "script") {
    if (c.script.empty()) throw ConfigError("adversary.script", "missing script path");
    run.adversary = std::make_unique<ScriptedAdversary>(ScriptedAdversary::load(c.script, s.space));
  } else {
    throw ConfigError("adversary.kind", "unknown adversary '" + c.adversary + "'");
  }

  RunOptions& o = run.options;
  o.horizon = c.horizon;
  o.seed = c.seed;
  o.checkpoints = parse_checkpoints(c.checkpoints, c.horizon);
  for (const auto& name : split_list(c.metrics, ';')) {
    try {
      o.metrics.push_back(make_target(name, s, run.response));
    } catch (const ConfigError& e) {
      throw ConfigError("run.metrics", e.what());
    }
  }
  o.k_max = c.k_max;
  o.audit = c.audit;
  o.sampling = c.sampling;
  if (c.pointwise) o.pointwise = run.response;
  o.strategy_label = c.strategy + "(" + c.response + ")";
  o.adversary_label = c.adversary;
  run.scenario = std::move(s);
  return run;
}

RunRecord execute(const RunConfig& config) {
  PreparedRun p = prepare(config);
  return run(p.scenario, *p.strategy, *p.adversary, p.options);
}

std::string summarize(const RunRecord& r) {
  std::ostringstream os;
  os << "run summary\n";
  for (const auto& [k, v] : r.meta) os << "  " << k << ": " << v << "\n";
  os << "  checkpoints: " << r.rows.size() << "\n";
  if (r.rows.empty()) return os.str();
  os << "final checkpoint\n";
  for (std::size_t i = 0; i < r.columns.size(); ++i) {
    os << "  " << r.columns[i] << " = " << fmt(r.rows.back()[i], "%.9g") << "\n";
  }
  if (r.has_column("gap")) {
    const auto gap = r.column("gap"), bound = r.column("bound");
    int violations = 0, checked = 0;
    for (std::size_t i = 0; i < gap.size(); ++i) {
      if (std::isnan(gap[i])) continue;
      ++checked;
      if (gap[i] > bound[i]) ++violations;
    }
    if (checked) os << "certificate: " << violations << " violation(s) over " << checked << " checkpoints\n";
  }
  const auto t = r.column("t");
  const double t_min = std::max(10.0, t.back() / 1000.0);
  for (const auto& col : r.columns) {
    if (col.rfind("dist_", 0) != 0 && col != "cost_dist") continue;
    try {
      const RateFit f = fit_rate(r, col, t_min);
      if (f.converged) {
        os << "rate " << col << ": exactly zero at some checkpoint, no slope fitted\n";
      } else {
        os << "rate " << col << ": slope " << fmt(f.slope) << " (R^2 " << fmt(f.r_squared, "%.3f") << ", "
           << f.points << " points)\n";
      }
    } catch (const DomainError&) {
      os << "rate " << col << ": too few checkpoints\n";
    }
  }
  return os.str();
}

int cli_run(const std::string& config_path, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig config = RunConfig::load(config_path);
    const RunRecord record = execute(config);
    write_outputs(config, record, out);
    out << summarize(record);
    return 0;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cli_sweep(const std::string& config_dir, int jobs, std::ostream& out, std::ostream& err) {
  std::vector<std::string> files;
  try {
    for (const auto& entry : fs::directory_iterator(config_dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".ini") files.push_back(entry.path().string());
    }
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    err << "error: no .ini files in " << config_dir << "\n";
    return 1;
  }
  if (jobs < 1) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  std::vector<std::string> status(files.size());
  std::vector<char> ok(files.size(), 0);
  std::atomic<std::size_t> cursor{0};
  const auto worker = [&] {
    for (std::size_t i = cursor++; i < files.size(); i = cursor++) {
      try {
        const RunConfig config = RunConfig::load(files[i]);
        const RunRecord record = execute(config);
        std::ostringstream sink;
        write_outputs(config, record, sink);
        status[i] = "ok   " + files[i] + " -> " + config.output_name() + " (" + fmt(record.wall_seconds, "%.2f") + " s)";
        ok[i] = 1;
      } catch (const std::exception& e) {
        status[i] = "FAIL " + files[i] + ": " + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < std::min<int>(jobs, static_cast<int>(files.size())); ++j) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  std::string summary = "sweep of " + config_dir + "\n";
  int failures = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    summary += status[i] + "\n";
    failures += ok[i] ? 0 : 1;
  }
  try {
    write_file_atomic((fs::path(output_directory()) / "sweep_summary.txt").string(), summary);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  out << summary;
  return failures ? 1 : 0;
}

int cli_blackwell(const std::string& config_path, std::ostream& out, std::ostream& err) {
  try {
    RunConfig config = RunConfig::load(config_path);
    config.strategy = "blackwell";
    if (config.output.empty()) config.output = config.scenario + "_blackwell_s" + std::to_string(config.seed) + ".csv";
    PreparedRun p = prepare(config);
    RunRecord record = run(p.scenario, *p.strategy, *p.adversary, p.options);
    const auto& bw = dynamic_cast<const BlackwellStrategy&>(*p.strategy);
    record.set("worst_violation", fmt(bw.worst_violation(), "%.17g"));
    write_outputs(config, record, out);
    out << summarize(record);

    const auto t = record.column("t");
    auto scaled = record.column("delta_norm");
    for (std::size_t i = 0; i < t.size(); ++i) scaled[i] /= t[i];
    const RateFit f = fit_rate(t, scaled, std::max(10.0, t.back() / 1000.0));
    out << "worst inner-product violation: " << fmt(bw.worst_violation(), "%.3g") << "\n";
    if (f.converged) {
      out << "||delta_T||/T reached zero\n";
    } else {
      out << "||delta_T||/T slope: " << fmt(f.slope) << "\n";
    }
    return 0;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cli_report(const std::vector<std::string>& csv_paths, double t_min, std::ostream& out,
               std::ostream& err) {
  RunRecord report;
  report.columns = {"file_index", "column_index", "points", "slope", "intercept", "r_squared", "converged"};
  std::string text;
  int status = 0;
  for (std::size_t f = 0; f < csv_paths.size(); ++f) {
    report.set("file_" + std::to_string(f), csv_paths[f]);
    try {
      const RunRecord r = read_csv_file(csv_paths[f]);
      text += csv_paths[f] + "\n";
      for (std::size_t c = 0; c < r.columns.size(); ++c) {
        const auto& col = r.columns[c];
        if (col.rfind("dist_", 0) != 0 && col != "cost_dist" && col != "gap" && col != "pointwise_gap") continue;
        try {
          const RateFit fit = fit_rate(r, col, t_min);
          report.rows.push_back({static_cast<double>(f), static_cast<double>(c), static_cast<double>(fit.points),
                                 fit.slope, fit.intercept, fit.r_squared, fit.converged ? 1.0 : 0.0});
          text += "  " + col + ": " +
                  (fit.converged ? std::string("exactly zero at some checkpoint") : "slope " + fmt(fit.slope) + ", R^2 " + fmt(fit.r_squared, "%.3f")) +
                  "\n";
        } catch (const DomainError& e) {
          text += "  " + col + ": " + e.what() + "\n";
        }
      }
    } catch (const std::exception& e) {
      err << "error: " << csv_paths[f] << ": " << e.what() << "\n";
      status = 1;
    }
  }
  try {
    write_file_atomic((fs::path(output_directory()) / "report.csv").string(), to_csv(report));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  out << text;
  return status;
}

}  // namespace approach
