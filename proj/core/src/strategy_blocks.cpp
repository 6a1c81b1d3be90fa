#include <cmath>

#include "approach/error.hpp"
#include "approach/strategy.hpp"

namespace approach {

long completed_blocks(long t) {
  if (t < 0) throw DomainError("negative round index");
  auto n = static_cast<long>((std::sqrt(8.0 * static_cast<double>(t) + 1.0) - 1.0) / 2.0);
  while (n * (n + 1) / 2 > t) --n;
  while ((n + 1) * (n + 2) / 2 <= t) ++n;
  return n;
}

double recurrence_ratio(double g1, double g2, long n_max) {
  if (!(g1 > 0.0) || !(g2 > 0.0)) throw DomainError("recurrence constants must be positive");
  const double c = std::max(2.0 * g1 * g1, g2);
  double u = g2;
  double worst = u / c;
  for (long n = 1; n < n_max; ++n) {
    const auto next = static_cast<double>(n + 1);
    u = u + 2.0 * g1 * std::sqrt(next * u) + g2 * next * next;
    worst = std::max(worst, u / (c * next * next * next));
  }
  return worst;
}

double discrepancy_bound(double k_max, int actions, long n) {
  const auto nn = static_cast<double>(n);
  return 2.0 * k_max * std::sqrt(2.0 * nn * nn * nn * std::log(static_cast<double>(actions)));
}

BlockStrategy::BlockStrategy(int d, int actions, ResponsePtr response,
                             std::unique_ptr<RegretMinimizer> prototype)
    : d_(d),
      actions_(actions),
      response_(std::move(response)),
      prototype_(prototype ? std::move(prototype) : std::make_unique<PolynomialWeights>(actions)),
      delta_(Vec::Zero(d)),
      block_sum_(Mat::Zero(d, actions)) {
  if (d < 1 || actions < 1) throw DimensionError("block strategy needs d >= 1 and A >= 1");
  if (!response_) throw DomainError("block strategy needs a response function");
  if (prototype_->actions() != actions) throw DimensionError("regret minimizer has the wrong A");
  current_ = prototype_->fresh();
  payoff_prefix_.push_back(Vec::Zero(d));
  matrix_prefix_.push_back(Mat::Zero(d, actions));
  weighted_target_prefix_.push_back(Vec::Zero(d));
}

MixedAction BlockStrategy::act() {
  if (!pending_) pending_ = current_->next_action();
  return *pending_;
}

void BlockStrategy::observe(const PayoffMatrix& m) {
  if (m.dim() != d_ || m.actions() != actions_) throw DimensionError("payoff matrix shape differs");
  const MixedAction x = act();
  pending_.reset();

  payoff_prefix_.push_back(payoff_prefix_.back() + m.entries() * x.weights());
  matrix_prefix_.push_back(matrix_prefix_.back() + m.entries());
  block_sum_ += m.entries();
  current_->observe(-(m.entries().transpose() * delta_));
  ++t_;
  ++pos_;
  if (pos_ == block_) close_block();
}

void BlockStrategy::close_block() {
  const PayoffMatrix average(block_sum_ / static_cast<double>(block_));
  ++response_calls_;
  const MixedAction x = response_->respond(average);
  Vec target = combine(x, average);
  weighted_target_prefix_.push_back(weighted_target_prefix_.back() +
                                    static_cast<double>(block_) * target);
  block_targets_.push_back(std::move(target));
  delta_ = payoff_prefix_.back() - weighted_target_prefix_.back();
  start_norms_.push_back(delta_.norm());

  ++block_;
  pos_ = 0;
  block_sum_.setZero();
  current_ = prototype_->fresh();
}

Vec BlockStrategy::audit_discrepancy() const {
  const long start = static_cast<long>(block_ - 1) * block_ / 2;
  Vec delta = Vec::Zero(d_);
  for (long t = 1; t <= start; ++t) {
    delta += payoff_prefix_[static_cast<std::size_t>(t)] - payoff_prefix_[static_cast<std::size_t>(t - 1)];
  }
  for (std::size_t k = 0; k < block_targets_.size(); ++k) {
    delta -= static_cast<double>(k + 1) * block_targets_[k];
  }
  return delta;
}

std::optional<Certificate> BlockStrategy::certificate(long at_T, double k_max) const {
  if (at_T < 1) throw DomainError("certificate needs T >= 1");
  if (at_T > t_) throw DomainError("certificate requested beyond the rounds played");
  const long n = completed_blocks(at_T);
  const long start = n * (n - 1) / 2;
  const auto T = static_cast<double>(at_T);
  const auto idx = [](long t) { return static_cast<std::size_t>(t); };

  const PayoffMatrix part((matrix_prefix_[idx(at_T)] - matrix_prefix_[idx(start)]) /
                          static_cast<double>(at_T - start));
  ++response_calls_;
  const Vec part_target = combine(response_->respond(part), part);

  Certificate c;
  c.comparator = (weighted_target_prefix_[idx(n - 1)] +
                  static_cast<double>(at_T - start) * part_target) / T;
  c.gap = (payoff_prefix_[idx(at_T)] / T - c.comparator).norm();
  c.bound = 8.0 * k_max * std::sqrt(std::log(static_cast<double>(actions_))) * std::pow(T, -0.25) +
            std::sqrt(2.0) * k_max / std::sqrt(T);
  return c;
}

}  // namespace approach
