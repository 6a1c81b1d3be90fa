#include "approach/regret.hpp"

#include <cmath>

#include "approach/error.hpp"

namespace approach {

namespace {

double default_exponent(int actions) {
  return std::max(2.0, 2.0 * std::log(static_cast<double>(actions)));
}

}  // namespace

PolynomialWeights::PolynomialWeights(int actions)
    : PolynomialWeights(actions, default_exponent(actions)) {}

PolynomialWeights::PolynomialWeights(int actions, double exponent)
    : q_(exponent), regret_(Vec::Zero(std::max(actions, 1))), current_(MixedAction::uniform(std::max(actions, 1))) {
  if (actions < 1) throw DimensionError("regret minimizer needs at least one action");
  if (!(exponent >= 1.0)) throw DomainError("polynomial exponent must be >= 1");
}

MixedAction PolynomialWeights::weights_for(const Vec& regret, double exponent) {
  const Vec positive = regret.cwiseMax(0.0);
  const double top = positive.maxCoeff();
  if (!(top > 0.0)) return MixedAction::uniform(static_cast<int>(regret.size()));
  // Normalizing by the largest entry keeps the powers in range for any scale.
  Vec w = (positive / top).array().pow(exponent - 1.0).matrix();
  return MixedAction(w / w.sum());
}

void PolynomialWeights::observe(const Vec& payoffs) {
  if (payoffs.size() != regret_.size()) throw DimensionError("payoff vector length differs from A");
  if (!payoffs.allFinite()) throw DomainError("non-finite payoff");
  const double played = current_.weights().dot(payoffs);
  regret_.array() += payoffs.array() - played;
  ++rounds_;
  current_ = weights_for(regret_, q_);
}

std::unique_ptr<RegretMinimizer> PolynomialWeights::fresh() const {
  return std::make_unique<PolynomialWeights>(actions(), q_);
}

}  // namespace approach
