#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "approach/geometry.hpp"
#include "approach/param_space.hpp"

namespace approach {

/// A map from payoff matrices to mixed actions.
class ResponseFunction {
 public:
  virtual ~ResponseFunction() = default;
  virtual MixedAction respond(const PayoffMatrix& m) const = 0;
  virtual std::string name() const = 0;
};

using ResponsePtr = std::shared_ptr<const ResponseFunction>;

struct BestResponse {
  MixedAction action;
  double value;  // distance achieved by `action`
};

/// argmin_x d_p(x (.) m, C). Pure actions that are optimal up to the
/// tolerance win, lowest index first.
class GenericXStar final : public ResponseFunction {
 public:
  explicit GenericXStar(TargetSet target, double tolerance = 1e-8);

  MixedAction respond(const PayoffMatrix& m) const override { return solve(m).action; }
  std::string name() const override { return "xstar"; }
  BestResponse solve(const PayoffMatrix& m) const;
  const TargetSet& target() const noexcept { return target_; }

 private:
  TargetSet target_;
  double tolerance_;
};

/// Payoff and cost views of an m in R^{d x A}: P selects payoff rows, G
/// selects cost rows (both as matrices acting on R^d).
struct CostConstraint {
  Mat payoff_map;
  Mat cost_map;
  TargetSet payoff_set;
  TargetSet cost_set;
};

/// argmin_x d_p(P(x (.) m), payoff_set) subject to G(x (.) m) in cost_set.
/// Throws InfeasibleError when no mixed action meets the cost constraint.
class ConstrainedXStar final : public ResponseFunction {
 public:
  explicit ConstrainedXStar(CostConstraint constraint, double tolerance = 1e-8);

  MixedAction respond(const PayoffMatrix& m) const override { return solve(m).action; }
  std::string name() const override { return "constrained_xstar"; }
  BestResponse solve(const PayoffMatrix& m) const;
  /// min_x d_1(G(x (.) m), cost_set); zero iff feasible.
  double infeasibility(const PayoffMatrix& m) const;
  const CostConstraint& constraint() const noexcept { return c_; }

 private:
  CostConstraint c_;
  double tolerance_;
};

class ConstantResponse final : public ResponseFunction {
 public:
  explicit ConstantResponse(MixedAction x) : x_(std::move(x)) {}
  MixedAction respond(const PayoffMatrix& m) const override;
  std::string name() const override { return "constant"; }

 private:
  MixedAction x_;
};

/// Closed-form best response of the first worked example (reads nu off m).
class Example1XStar final : public ResponseFunction {
 public:
  Example1XStar();
  MixedAction respond(const PayoffMatrix& m) const override;
  std::string name() const override { return "example1_xstar"; }

 private:
  ParamSpace space_;
};

/// Closed-form best response of the second worked example.
class Example2XStar final : public ResponseFunction {
 public:
  MixedAction respond(const PayoffMatrix& m) const override;
  std::string name() const override { return "example2_xstar"; }
};

class CallbackResponse final : public ResponseFunction {
 public:
  CallbackResponse(std::string name, std::function<MixedAction(const PayoffMatrix&)> fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}
  MixedAction respond(const PayoffMatrix& m) const override { return fn_(m); }
  std::string name() const override { return name_; }

 private:
  std::string name_;
  std::function<MixedAction(const PayoffMatrix&)> fn_;
};

/// Nearest-neighbour lookup in a table of (parameter, action) rows over a
/// parameterized K.
class TabulatedResponse final : public ResponseFunction {
 public:
  TabulatedResponse(ParamSpace space, std::vector<Vec> params, std::vector<MixedAction> actions);
  /// Whitespace/comma separated rows: k parameters followed by A weights.
  /// Lines starting with '#' are ignored.
  static TabulatedResponse load(const std::string& path, const ParamSpace& space);

  MixedAction respond(const PayoffMatrix& m) const override;
  std::string name() const override { return "table"; }

 private:
  ParamSpace space_;
  std::vector<Vec> params_;
  std::vector<MixedAction> actions_;
};

}  // namespace approach
