#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "approach/geometry.hpp"
#include "approach/hull.hpp"
#include "approach/param_space.hpp"
#include "approach/responses.hpp"

namespace approach {

/// A map m -> expansion radius that a strategy aims for.
class TargetFunction {
 public:
  virtual ~TargetFunction() = default;
  virtual double operator()(const PayoffMatrix& m) const = 0;
  virtual std::string name() const = 0;
};

using TargetPtr = std::shared_ptr<const TargetFunction>;

/// min_x d_p(x (.) m, C).
double phi_star(const PayoffMatrix& m, const TargetSet& target);

/// Distance of a fixed mixed action's payoff to C.
double alpha_x(const PayoffMatrix& m, const MixedAction& x, const TargetSet& target);

/// Best-in-hindsight radius, through any best-response solver that reports
/// its achieved value.
class PhiStarTarget final : public TargetFunction {
 public:
  explicit PhiStarTarget(TargetSet target);
  /// Constrained variant: min payoff distance subject to the cost constraint.
  explicit PhiStarTarget(CostConstraint constraint);
  double operator()(const PayoffMatrix& m) const override;
  std::string name() const override { return "phi_star"; }

 private:
  std::optional<GenericXStar> plain_;
  std::optional<ConstrainedXStar> constrained_;
};

class AlphaTarget final : public TargetFunction {
 public:
  AlphaTarget(MixedAction x, TargetSet target) : x_(std::move(x)), target_(std::move(target)) {}
  double operator()(const PayoffMatrix& m) const override { return alpha_x(m, x_, target_); }
  std::string name() const override { return "alpha"; }

 private:
  MixedAction x_;
  TargetSet target_;
};

/// A formula in the parameters of a ParamSpace.
class ClosedFormTarget final : public TargetFunction {
 public:
  ClosedFormTarget(std::string name, ParamSpace space, std::function<double(const Vec&)> fn)
      : name_(std::move(name)), space_(std::move(space)), fn_(std::move(fn)) {}
  double operator()(const PayoffMatrix& m) const override { return fn_(space_.locate(m)); }
  std::string name() const override { return name_; }

 private:
  std::string name_;
  ParamSpace space_;
  std::function<double(const Vec&)> fn_;
};

/// Least concave majorant of f sampled on the `per_axis` grid of a 1- or
/// 2-parameter space. Values are returned in `space.grid(per_axis)` order.
std::vector<double> cav_oracle(const ParamSpace& space, const std::function<double(const Vec&)>& f,
                               int per_axis);

/// Convex score of a payoff vector, e.g. r -> d_p(r, C).
using ScoreFn = std::function<double(const Vec&)>;

/// sup over decompositions sum_i lambda_i m_i = m (atoms on the parameter
/// grid, at most `budget` of them) of score(sum_i lambda_i Psi(m_i) (.) m_i).
///
/// One parameter: exact over the atom grid using bracketing pairs.
/// Two parameters with scalar payoffs: the attainable payoffs at theta form
/// the interval between the lower and upper envelopes of Psi(m) (.) m, and a
/// convex score peaks at an end. Two parameters otherwise: brute force over
/// atom triples (small grids only). The score must be convex.
class PhiPsiOracle final : public TargetFunction {
 public:
  PhiPsiOracle(ParamSpace space, ResponsePtr psi, ScoreFn score, int per_axis, int budget);
  PhiPsiOracle(ParamSpace space, ResponsePtr psi, const TargetSet& target, int per_axis, int budget);

  double operator()(const PayoffMatrix& m) const override { return at(space_.locate(m)); }
  std::string name() const override { return "phi_psi"; }
  double at(const Vec& theta) const;
  int budget() const noexcept { return budget_; }

 private:
  double direct(const Vec& theta) const;
  double one_parameter(double theta) const;
  double lattice_pairs(const Vec& theta) const;
  double triples(const Vec& theta) const;

  ParamSpace space_;
  ResponsePtr psi_;
  ScoreFn score_;
  int per_axis_;
  int budget_;
  std::vector<Vec> atoms_;
  std::vector<Vec> payoffs_;  // Psi(m_i) (.) m_i
  std::shared_ptr<UpperEnvelope2d> upper_;
  std::shared_ptr<UpperEnvelope2d> lower_;  // envelope of the negated payoffs
};

/// Distance from (mbar, rbar) to the graph {(m, r): r in C_phi(m)} over the
/// grid of a parameter space, Euclidean in the stacked coordinates.
double graph_distance(const PayoffMatrix& mbar, const Vec& rbar, const ParamSpace& space,
                      const std::function<double(const Vec&)>& phi, const TargetSet& target,
                      int per_axis);

}  // namespace approach
