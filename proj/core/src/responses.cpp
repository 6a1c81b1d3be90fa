#include "approach/responses.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "approach/error.hpp"
#include "approach/qp.hpp"
#include "approach/worked_examples.hpp"
#include "set_model.hpp"

namespace approach {

namespace {

MixedAction simplex_point(const QpResult& result, int first, int size) {
  Vec x(size);
  for (int a = 0; a < size; ++a) x(a) = std::max(0.0, result.x[static_cast<std::size_t>(first + a)]);
  return MixedAction(std::move(x));
}

// min_x d_p(rows * x, set), optionally with cost_rows * x constrained to a set.
double solve_program(const Mat& rows, const TargetSet& set, const Mat* cost_rows,
                     const TargetSet* cost_set, std::optional<MixedAction>& argmin) {
  QpModel model;
  const int actions = static_cast<int>(rows.cols());
  const int first = detail::add_simplex(model, actions);
  const auto r = detail::linear_image(rows, first, Vec());
  const auto e = detail::residual_to_set(model, r, set);
  detail::add_norm_objective(model, e, set.norm());
  if (cost_rows != nullptr) {
    detail::require_membership(model, detail::linear_image(*cost_rows, first, Vec()), *cost_set);
  }
  const QpResult result = model.solve();
  argmin = simplex_point(result, first, actions);
  return detail::objective_to_norm(result.objective, set.norm());
}

}  // namespace

// ---------------------------------------------------------------- GenericXStar

GenericXStar::GenericXStar(TargetSet target, double tolerance)
    : target_(std::move(target)), tolerance_(tolerance) {}

BestResponse GenericXStar::solve(const PayoffMatrix& m) const {
  if (m.dim() != target_.dim()) throw DimensionError("payoff dimension differs from the target set");
  const int actions = m.actions();
  std::vector<double> pure(static_cast<std::size_t>(actions));
  double best_pure = std::numeric_limits<double>::infinity();
  for (int a = 0; a < actions; ++a) {
    pure[static_cast<std::size_t>(a)] = distance(m.column(a), target_);
    best_pure = std::min(best_pure, pure[static_cast<std::size_t>(a)]);
  }
  double optimum = best_pure;
  std::optional<MixedAction> mixed;
  if (best_pure > tolerance_ && actions > 1) {
    optimum = std::min(optimum, solve_program(m.entries(), target_, nullptr, nullptr, mixed));
  }
  for (int a = 0; a < actions; ++a) {
    if (pure[static_cast<std::size_t>(a)] <= optimum + tolerance_) {
      return {MixedAction::pure(actions, a), pure[static_cast<std::size_t>(a)]};
    }
  }
  return {*mixed, distance(combine(*mixed, m), target_)};
}

// ---------------------------------------------------------------- ConstrainedXStar

ConstrainedXStar::ConstrainedXStar(CostConstraint constraint, double tolerance)
    : c_(std::move(constraint)), tolerance_(tolerance) {
  if (c_.payoff_map.rows() != c_.payoff_set.dim() || c_.cost_map.rows() != c_.cost_set.dim()) {
    throw DimensionError("constraint maps and sets disagree in dimension");
  }
  if (c_.payoff_map.cols() != c_.cost_map.cols()) {
    throw DimensionError("payoff and cost maps act on different spaces");
  }
}

double ConstrainedXStar::infeasibility(const PayoffMatrix& m) const {
  if (m.dim() != c_.cost_map.cols()) throw DimensionError("payoff dimension differs from the maps");
  const Mat cost_rows = c_.cost_map * m.entries();
  std::optional<MixedAction> unused;
  return solve_program(cost_rows, c_.cost_set.with_norm(Norm::L1), nullptr, nullptr, unused);
}

BestResponse ConstrainedXStar::solve(const PayoffMatrix& m) const {
  if (m.dim() != c_.payoff_map.cols()) throw DimensionError("payoff dimension differs from the maps");
  if (infeasibility(m) > 1e-7) throw InfeasibleError("no mixed action satisfies the cost constraint");
  const Mat payoff_rows = c_.payoff_map * m.entries();
  const Mat cost_rows = c_.cost_map * m.entries();
  const int actions = m.actions();

  std::optional<MixedAction> mixed;
  double optimum = 0.0;
  if (actions > 1) {
    optimum = solve_program(payoff_rows, c_.payoff_set, &cost_rows, &c_.cost_set, mixed);
  } else {
    mixed = MixedAction::pure(1, 0);
    optimum = distance(payoff_rows.col(0), c_.payoff_set);
  }
  for (int a = 0; a < actions; ++a) {
    if (distance(cost_rows.col(a), c_.cost_set.with_norm(Norm::L1)) > 1e-9) continue;
    const double value = distance(payoff_rows.col(a), c_.payoff_set);
    if (value <= optimum + tolerance_) return {MixedAction::pure(actions, a), value};
  }
  return {*mixed, distance(payoff_rows * mixed->weights(), c_.payoff_set)};
}

// ---------------------------------------------------------------- closed forms

MixedAction ConstantResponse::respond(const PayoffMatrix& m) const {
  if (m.actions() != x_.size()) throw DimensionError("constant response has the wrong length");
  return x_;
}

Example1XStar::Example1XStar() : space_(example1::space()) {}

MixedAction Example1XStar::respond(const PayoffMatrix& m) const {
  return example1::xstar(space_.locate(m)(0));
}

MixedAction Example2XStar::respond(const PayoffMatrix& m) const {
  if (m.dim() != 1 || m.actions() != 2) throw DimensionError("second example has d = 1, A = 2");
  return example2::xstar(m(0, 0), m(0, 1));
}

// ---------------------------------------------------------------- table

TabulatedResponse::TabulatedResponse(ParamSpace space, std::vector<Vec> params,
                                     std::vector<MixedAction> actions)
    : space_(std::move(space)), params_(std::move(params)), actions_(std::move(actions)) {
  if (params_.empty() || params_.size() != actions_.size()) {
    throw DomainError("response table needs matching, non-empty rows");
  }
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (params_[i].size() != space_.params() || actions_[i].size() != space_.actions()) {
      throw DimensionError("response table row has the wrong width");
    }
  }
}

TabulatedResponse TabulatedResponse::load(const std::string& path, const ParamSpace& space) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open response table");
  std::vector<Vec> params;
  std::vector<MixedAction> actions;
  const int k = space.params();
  const int a = space.actions();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    for (char& ch : line) {
      if (ch == ',') ch = ' ';
    }
    std::istringstream row(line);
    std::vector<double> values;
    double v = 0.0;
    while (row >> v) values.push_back(v);
    if (!row.eof()) throw ConfigError(path + ":" + std::to_string(lineno), "not a number");
    if (values.empty()) continue;
    if (static_cast<int>(values.size()) != k + a) {
      throw ConfigError(path + ":" + std::to_string(lineno), "expected " + std::to_string(k + a) + " values");
    }
    params.push_back(Eigen::Map<Vec>(values.data(), k));
    actions.emplace_back(Vec(Eigen::Map<Vec>(values.data() + k, a)));
  }
  return TabulatedResponse(space, std::move(params), std::move(actions));
}

MixedAction TabulatedResponse::respond(const PayoffMatrix& m) const {
  const Vec theta = space_.locate(m);
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < params_.size(); ++i) {
    const double dist = (params_[i] - theta).squaredNorm();
    if (dist < best_d) {
      best_d = dist;
      best = i;
    }
  }
  return actions_[best];
}

}  // namespace approach
