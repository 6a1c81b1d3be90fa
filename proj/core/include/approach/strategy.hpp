#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "approach/geometry.hpp"
#include "approach/regret.hpp"
#include "approach/responses.hpp"

namespace approach {

struct Certificate {
  Vec comparator;  // c_T
  double gap;      // || rbar_T - c_T ||_2
  double bound;
};

/// Decision-maker side of the repeated interaction: commit to x_t, then see m_t.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual MixedAction act() = 0;
  virtual void observe(const PayoffMatrix& m) = 0;
  virtual std::string name() const = 0;
  virtual std::optional<Certificate> certificate(long /*at_T*/, double /*k_max*/) const {
    return std::nullopt;
  }
  /// Norm of the strategy's internal discrepancy vector, if it keeps one.
  virtual std::optional<double> discrepancy_norm() const { return std::nullopt; }
};

/// Plays the same mixed action every round.
class ConstantPlay final : public Strategy {
 public:
  explicit ConstantPlay(MixedAction x) : x_(std::move(x)) {}
  MixedAction act() override { return x_; }
  void observe(const PayoffMatrix&) override {}
  std::string name() const override { return "constant"; }

 private:
  MixedAction x_;
};

/// Regret minimization in blocks of increasing length: block n lasts n
/// rounds and runs a fresh regret minimizer on the scalar payoffs
/// -<delta_n, m_a>, where delta_n is the running difference between what was
/// obtained and what the response function would have obtained on each
/// finished block's average. Never looks at K.
class BlockStrategy final : public Strategy {
 public:
  BlockStrategy(int d, int actions, ResponsePtr response,
                std::unique_ptr<RegretMinimizer> prototype = nullptr);

  MixedAction act() override;
  void observe(const PayoffMatrix& m) override;
  std::string name() const override { return "blocks"; }

  /// c_T, ||rbar_T - c_T||_2 and 8 K sqrt(ln A) T^(-1/4) + sqrt(2) K T^(-1/2).
  /// Any 1 <= at_T <= rounds() is allowed; the response is queried once on
  /// the average of the rounds after the last complete block before at_T.
  std::optional<Certificate> certificate(long at_T, double k_max) const override;
  std::optional<double> discrepancy_norm() const override { return delta_.norm(); }

  long rounds() const noexcept { return t_; }
  int block() const noexcept { return block_; }
  int position() const noexcept { return pos_; }
  const Vec& discrepancy() const noexcept { return delta_; }
  /// delta recomputed from the stored history with the defining sum.
  Vec audit_discrepancy() const;
  /// Norms of delta at the start of blocks 2, 3, ...
  const std::vector<double>& block_start_norms() const noexcept { return start_norms_; }
  /// Psi(mbar^(k)) (.) mbar^(k) for the finished blocks.
  const std::vector<Vec>& block_targets() const noexcept { return block_targets_; }
  long response_calls() const noexcept { return response_calls_; }

 private:
  void close_block();

  int d_;
  int actions_;
  ResponsePtr response_;
  std::unique_ptr<RegretMinimizer> prototype_;
  std::unique_ptr<RegretMinimizer> current_;

  long t_ = 0;
  int block_ = 1;
  int pos_ = 0;  // rounds already played in the current block
  Vec delta_;
  Mat block_sum_;

  // Prefix sums by round (index t holds the sum of the first t rounds).
  std::vector<Vec> payoff_prefix_;
  std::vector<Mat> matrix_prefix_;
  std::vector<Vec> block_targets_;
  std::vector<Vec> weighted_target_prefix_;  // sum_{k <= n} k * target_k
  std::vector<double> start_norms_;
  mutable long response_calls_ = 0;
  std::optional<MixedAction> pending_;
};

/// Largest n with n(n+1)/2 <= t.
long completed_blocks(long t);

/// Iterates u_1 = g2, u_{n+1} = u_n + 2 g1 sqrt((n+1) u_n) + g2 (n+1)^2 and
/// returns max_n u_n / (max(2 g1^2, g2) n^3) over n <= n_max.
double recurrence_ratio(double g1, double g2, long n_max);

/// 2 K sqrt(2 n^3 ln A): bound on ||delta_{n+1}||.
double discrepancy_bound(double k_max, int actions, long n);

}  // namespace approach
