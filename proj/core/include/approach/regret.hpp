#pragma once

#include <memory>

#include "approach/geometry.hpp"

namespace approach {

/// Full-information scalar regret minimizer over A actions (payoffs are
/// gains). Must not need the payoff range or the horizon in advance.
class RegretMinimizer {
 public:
  virtual ~RegretMinimizer() = default;

  virtual MixedAction next_action() const = 0;
  /// Payoff vector of the round just played with `next_action()`.
  virtual void observe(const Vec& payoffs) = 0;
  virtual int actions() const = 0;
  virtual long rounds() const = 0;
  /// A new instance with the same parameters and no history.
  virtual std::unique_ptr<RegretMinimizer> fresh() const = 0;
};

/// Polynomially weighted average forecaster: weights proportional to
/// (R_a^+)^(q-1) with q = max(2, 2 ln A). Its guarantee is
/// regret <= 2 sqrt(2e) B sqrt(T ln A) (about 4.66 B sqrt(T ln A)).
class PolynomialWeights final : public RegretMinimizer {
 public:
  explicit PolynomialWeights(int actions);
  PolynomialWeights(int actions, double exponent);

  MixedAction next_action() const override { return current_; }
  void observe(const Vec& payoffs) override;
  int actions() const override { return static_cast<int>(regret_.size()); }
  long rounds() const override { return rounds_; }
  std::unique_ptr<RegretMinimizer> fresh() const override;

  double exponent() const noexcept { return q_; }
  const Vec& cumulative_regret() const noexcept { return regret_; }
  /// The weight rule applied to an arbitrary regret vector.
  static MixedAction weights_for(const Vec& regret, double exponent);

 private:
  double q_;
  Vec regret_;
  long rounds_ = 0;
  MixedAction current_;
};

}  // namespace approach
