#include "approach/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "approach/error.hpp"
#include "approach/hull.hpp"
#include "approach/worked_examples.hpp"

namespace approach {

// ---------------------------------------------------------------- Scenario

Vec Scenario::payoff_view(const Vec& r) const {
  return constraint ? Vec(constraint->payoff_map * r) : r;
}

double Scenario::payoff_distance(const Vec& r, double alpha) const {
  return distance_to_expansion(payoff_view(r), target, std::max(0.0, alpha));
}

double Scenario::cost_distance(const Vec& r) const {
  if (!constraint) return 0.0;
  return distance(Vec(constraint->cost_map * r), constraint->cost_set);
}

ResponsePtr Scenario::best_response() const {
  if (constraint) return std::make_shared<ConstrainedXStar>(*constraint);
  return std::make_shared<GenericXStar>(target);
}

// ---------------------------------------------------------------- built-ins

namespace scenarios {

Scenario example1() { return {"example1", example1::space(), example1::target(), std::nullopt}; }

Scenario example2() { return {"example2", example2::space(), example2::target(), std::nullopt}; }

Scenario example2_quadrant() {
  Vec lo(2), hi(2);
  lo << 0.0, -1.0;
  hi << 1.0, 0.0;
  ParamSpace space(PayoffMatrix::zero(1, 2),
                   {PayoffMatrix::from_columns({{1.0}, {0.0}}), PayoffMatrix::from_columns({{0.0}, {1.0}})},
                   lo, hi);
  return {"example2_quadrant", std::move(space), example2::target(), std::nullopt};
}

Scenario constrained_demo() {
  return build_constrained_scenario(PayoffMatrix::from_columns({{1.0}, {0.0}}),
                                    PayoffMatrix::from_columns({{1.0}, {0.0}}),
                                    TargetSet::half_line_below(0.5), TargetSet::half_line_above(1.0),
                                    "constrained_demo");
}

Scenario losses() {
  ParamSpace space(PayoffMatrix::zero(1, 2),
                   {PayoffMatrix::from_columns({{1.0}, {0.0}}), PayoffMatrix::from_columns({{0.0}, {1.0}})},
                   Vec::Zero(2), Vec::Ones(2));
  return {"losses", std::move(space), TargetSet::half_line_below(0.0), std::nullopt};
}

std::vector<std::string> names() {
  return {"example1", "example2", "example2_quadrant", "constrained_demo", "losses"};
}

Scenario by_name(const std::string& id) {
  if (id == "example1") return example1();
  if (id == "example2") return example2();
  if (id == "example2_quadrant") return example2_quadrant();
  if (id == "constrained_demo") return constrained_demo();
  if (id == "losses") return losses();
  throw ConfigError("name", "unknown scenario '" + id + "'");
}

}  // namespace scenarios

Scenario build_constrained_scenario(const PayoffMatrix& u, const PayoffMatrix& c, TargetSet cost_set,
                                   TargetSet payoff_set, std::string id) {
  if (u.actions() != c.actions()) throw DimensionError("payoff and cost matrices differ in A");
  const int k = u.dim(), g = c.dim(), d = k + g;
  Mat stacked(d, u.actions());
  stacked << u.entries(), c.entries();
  Mat payoff_map = Mat::Zero(k, d);
  payoff_map.leftCols(k).setIdentity();
  Mat cost_map = Mat::Zero(g, d);
  cost_map.rightCols(g).setIdentity();
  CostConstraint constraint{payoff_map, cost_map, payoff_set, std::move(cost_set)};
  Scenario s{std::move(id), ParamSpace::point(PayoffMatrix(stacked)), std::move(payoff_set), constraint};
  const ConstrainedXStar check(constraint);
  const ConvexBody body = s.body();
  for (const auto& v : body.vertices()) {
    if (check.infeasibility(v) > 1e-7) {
      throw InfeasibleError("cost constraint cannot be met at a vertex of K");
    }
  }
  return s;
}

double alpha_unif_estimate(const Scenario& scenario, int per_axis) {
  const PhiStarTarget phi = scenario.constraint ? PhiStarTarget(*scenario.constraint)
                                                : PhiStarTarget(scenario.target);
  const auto grid = scenario.space.params() == 0 ? std::vector<Vec>{Vec(0)}
                                                 : scenario.space.grid(per_axis);
  double best = 0.0;
  for (const auto& theta : grid) best = std::max(best, phi(scenario.space.at(theta)));
  return best;
}

std::vector<long> geometric_checkpoints(long horizon, double ratio) {
  if (horizon < 1) throw DomainError("horizon must be >= 1");
  std::vector<long> out;
  for (double v = 1.0; v <= static_cast<double>(horizon); v *= ratio) {
    const auto t = static_cast<long>(std::ceil(v - 1e-9));
    if (out.empty() || out.back() < t) out.push_back(t);
  }
  if (out.back() != horizon) out.push_back(horizon);
  return out;
}

std::vector<long> dense_checkpoints(long horizon, long every) {
  if (horizon < 1 || every < 1) throw DomainError("horizon and spacing must be >= 1");
  std::vector<long> out;
  for (long t = every; t <= horizon; t += every) out.push_back(t);
  if (out.empty() || out.back() != horizon) out.push_back(horizon);
  return out;
}

// ---------------------------------------------------------------- targets

namespace {

Vec parse_weights(const std::string& text, int expected) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(text, "expected comma-separated numbers");
    }
  }
  if (static_cast<int>(values.size()) != expected) {
    throw ConfigError(text, "expected " + std::to_string(expected) + " weights");
  }
  return Eigen::Map<Vec>(values.data(), expected);
}

ScoreFn scenario_score(const Scenario& s) {
  if (!s.constraint) {
    return [target = s.target](const Vec& r) { return distance(r, target); };
  }
  return [c = *s.constraint](const Vec& r) { return distance(Vec(c.payoff_map * r), c.payoff_set); };
}

// Concave envelope of phi_star sampled on the parameter grid.
class EnvelopeTarget final : public TargetFunction {
 public:
  EnvelopeTarget(const Scenario& s, int per_axis) : space_(s.space) {
    const PhiStarTarget phi = s.constraint ? PhiStarTarget(*s.constraint) : PhiStarTarget(s.target);
    if (space_.params() == 0) {
      constant_ = phi(space_.at(Vec(0)));
      return;
    }
    const auto grid = space_.grid(per_axis);
    std::vector<double> values;
    for (const auto& theta : grid) values.push_back(phi(space_.at(theta)));
    if (space_.params() == 1) {
      std::vector<double> xs;
      for (const auto& theta : grid) xs.push_back(theta(0));
      one_ = std::make_shared<UpperEnvelope1d>(xs, values);
    } else if (space_.params() == 2) {
      std::vector<std::array<double, 2>> sites;
      for (const auto& theta : grid) sites.push_back({theta(0), theta(1)});
      two_ = std::make_shared<UpperEnvelope2d>(sites, values);
    } else {
      throw ConfigError("metrics", "cav needs at most 2 parameters");
    }
  }
  double operator()(const PayoffMatrix& m) const override {
    if (one_) return (*one_)(space_.locate(m)(0));
    if (two_) {
      const Vec theta = space_.locate(m);
      return (*two_)(theta(0), theta(1));
    }
    return constant_;
  }
  std::string name() const override { return "cav"; }

 private:
  ParamSpace space_;
  double constant_ = 0.0;
  std::shared_ptr<UpperEnvelope1d> one_;
  std::shared_ptr<UpperEnvelope2d> two_;
};

int oracle_resolution(const Scenario& s) {
  return s.space.params() <= 1 ? 201 : (s.dim() == 1 ? 41 : 7);
}

}  // namespace

NamedTarget make_target(const std::string& name, const Scenario& s, ResponsePtr response) {
  const int budget = s.dim() * s.actions() + 1;
  if (name == "phi_star") {
    return {name, s.constraint ? std::make_shared<PhiStarTarget>(*s.constraint)
                               : std::make_shared<PhiStarTarget>(s.target)};
  }
  if (name == "cav") {
    if (s.id == "example1") {
      return {name, std::make_shared<ClosedFormTarget>(
                        name, s.space, [](const Vec& th) { return example1::cav_phi_star(th(0)); })};
    }
    if (s.id == "example2") {
      return {name, std::make_shared<ClosedFormTarget>(name, s.space, [](const Vec& th) {
                return example2::cav_phi_star(th(0), th(1));
              })};
    }
    return {name, std::make_shared<EnvelopeTarget>(s, s.space.params() <= 1 ? 1001 : 101)};
  }
  if (name == "phi_xstar") {
    if (s.id == "example1") {
      return {name, std::make_shared<ClosedFormTarget>(
                        name, s.space, [](const Vec& th) { return example1::phi_xstar(th(0)); })};
    }
    if (s.id == "example2") {
      return {name, std::make_shared<ClosedFormTarget>(
                        name, s.space, [](const Vec& th) { return example2::phi_xstar(th(0), th(1)); })};
    }
    return {name, std::make_shared<PhiPsiOracle>(s.space, s.best_response(), scenario_score(s),
                                                 oracle_resolution(s), budget)};
  }
  if (name == "phi_psi") {
    if (!response) throw ConfigError("metrics", "phi_psi needs a response function");
    return {name, std::make_shared<PhiPsiOracle>(s.space, std::move(response), scenario_score(s),
                                                 oracle_resolution(s), budget)};
  }
  if (name.rfind("alpha:", 0) == 0) {
    if (s.constraint) throw ConfigError("metrics", "alpha targets are for unconstrained scenarios");
    MixedAction x(parse_weights(name.substr(6), s.actions()));
    return {name, std::make_shared<AlphaTarget>(std::move(x), s.target)};
  }
  throw ConfigError("metrics", "unknown target function '" + name + "'");
}

ResponsePtr make_response(const std::string& spec, const Scenario& s) {
  if (spec == "xstar") return s.best_response();
  if (spec == "example1_xstar") return std::make_shared<Example1XStar>();
  if (spec == "example2_xstar") return std::make_shared<Example2XStar>();
  if (spec.rfind("constant:", 0) == 0) {
    return std::make_shared<ConstantResponse>(MixedAction(parse_weights(spec.substr(9), s.actions())));
  }
  if (spec.rfind("table:", 0) == 0) {
    return std::make_shared<TabulatedResponse>(TabulatedResponse::load(spec.substr(6), s.space));
  }
  throw ConfigError("response", "unknown response '" + spec + "'");
}

// ---------------------------------------------------------------- run

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void audit_move(const Scenario& s, const PayoffMatrix& m, long t) {
  const Vec theta = s.space.locate(m);
  const double residual = (s.space.at(theta).entries() - m.entries()).norm();
  if (residual > 1e-9 * (1.0 + m.entries().norm()) || !s.space.contains(theta, 1e-9)) {
    throw AuditError("adversary left K at round " + std::to_string(t));
  }
}

}  // namespace

RunRecord run(const Scenario& s, Strategy& strategy, Adversary& adversary, const RunOptions& o) {
  if (o.horizon < 1) throw DomainError("horizon must be >= 1");
  const auto started = std::chrono::steady_clock::now();
  const int d = s.dim(), A = s.actions(), k = s.space.params();
  const double k_max = o.k_max >= 0.0 ? o.k_max : body_norm_bound(s.body());

  std::vector<long> checkpoints = o.checkpoints.empty() ? geometric_checkpoints(o.horizon) : o.checkpoints;
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 1 || checkpoints[i] > o.horizon || (i && checkpoints[i] <= checkpoints[i - 1])) {
      throw DomainError("checkpoints must be strictly increasing within [1, T]");
    }
  }

  RunRecord rec;
  rec.set("scenario", s.id);
  rec.set("strategy", o.strategy_label.empty() ? strategy.name() : o.strategy_label);
  rec.set("adversary", o.adversary_label.empty() ? adversary.name() : o.adversary_label);
  rec.set("seed", std::to_string(o.seed));
  rec.set("horizon", std::to_string(o.horizon));
  rec.set("target", s.target.describe());
  rec.set("norm", to_string(s.target.norm()));
  rec.set("k_max", format_double(k_max));
  rec.set("sampling", o.sampling ? "1" : "0");

  rec.columns.push_back("t");
  for (int i = 0; i < d; ++i) rec.columns.push_back("rbar_" + std::to_string(i + 1));
  for (int j = 0; j < k; ++j) rec.columns.push_back("theta_" + std::to_string(j + 1));
  for (const auto& m : o.metrics) rec.columns.push_back("dist_" + m.name);
  if (s.constraint) rec.columns.push_back("cost_dist");
  rec.columns.insert(rec.columns.end(), {"gap", "bound", "delta_norm"});
  if (o.pointwise) rec.columns.push_back("pointwise_gap");
  if (o.sampling) {
    for (int i = 0; i < d; ++i) rec.columns.push_back("sample_rbar_" + std::to_string(i + 1));
  }

  Xoshiro256 sampler(o.seed ^ 0x5851f42d4c957f2dULL);
  History h{0, Vec::Zero(d), Mat::Zero(d, A)};
  Vec sum_r = Vec::Zero(d), sum_pointwise = Vec::Zero(d), sum_sample = Vec::Zero(d);
  Mat sum_m = Mat::Zero(d, A);
  std::size_t next = 0;
  const double nan = std::numeric_limits<double>::quiet_NaN();

  for (long t = 1; t <= o.horizon && next < checkpoints.size(); ++t) {
    const PayoffMatrix m = adversary.next(h);
    if (m.dim() != d || m.actions() != A) throw DimensionError("adversary move has the wrong shape");
    if (o.audit) audit_move(s, m, t);
    const MixedAction x = strategy.act();
    strategy.observe(m);

    const Vec r = combine(x, m);
    sum_r += r;
    sum_m += m.entries();
    if (o.pointwise) sum_pointwise += r - combine(o.pointwise->respond(m), m);
    if (o.sampling) {
      const double u = sampler.uniform();
      double acc = 0.0;
      int a = A - 1;
      for (int i = 0; i < A; ++i) {
        acc += x[i];
        if (u < acc) {
          a = i;
          break;
        }
      }
      sum_sample += m.column(a);
    }
    const auto tt = static_cast<double>(t);
    h.t = t;
    h.rbar = sum_r / tt;
    h.mbar = sum_m / tt;

    if (t != checkpoints[next]) continue;
    ++next;
    const PayoffMatrix mbar(h.mbar);
    std::vector<double> row;
    row.push_back(tt);
    for (int i = 0; i < d; ++i) row.push_back(h.rbar(i));
    const Vec theta = s.space.locate(mbar);
    for (int j = 0; j < k; ++j) row.push_back(theta(j));
    for (const auto& metric : o.metrics) row.push_back(s.payoff_distance(h.rbar, (*metric.fn)(mbar)));
    if (s.constraint) row.push_back(s.cost_distance(h.rbar));
    const auto cert = strategy.certificate(t, k_max);
    row.push_back(cert ? cert->gap : nan);
    row.push_back(cert ? cert->bound : nan);
    const auto dn = strategy.discrepancy_norm();
    row.push_back(dn ? *dn : nan);
    if (o.pointwise) row.push_back((sum_pointwise / tt).lpNorm<1>());
    if (o.sampling) {
      for (int i = 0; i < d; ++i) row.push_back(sum_sample(i) / tt);
    }
    rec.rows.push_back(std::move(row));
  }
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return rec;
}

}  // namespace approach
