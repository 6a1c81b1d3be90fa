#pragma once

#include <memory>
#include <string>
#include <vector>

#include "approach/geometry.hpp"
#include "approach/param_space.hpp"
#include "approach/rng.hpp"

namespace approach {

/// What the opponent knows before committing m_{t+1}: the averages of the
/// first t rounds, computed from the mixed actions (expected payoffs).
struct History {
  long t = 0;
  Vec rbar;
  Mat mbar;
};

class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual PayoffMatrix next(const History& h) = 0;
  virtual std::string name() const = 0;
};

class ConstantAdversary final : public Adversary {
 public:
  explicit ConstantAdversary(PayoffMatrix m) : m_(std::move(m)) {}
  PayoffMatrix next(const History&) override { return m_; }
  std::string name() const override { return "constant"; }

 private:
  PayoffMatrix m_;
};

/// Cycles through a schedule, one entry per round or one entry per block of
/// the block strategy (block n covers rounds n(n-1)/2 + 1 .. n(n+1)/2).
class PeriodicAdversary final : public Adversary {
 public:
  PeriodicAdversary(std::vector<PayoffMatrix> schedule, bool per_block);
  PayoffMatrix next(const History& h) override;
  std::string name() const override { return per_block_ ? "periodic_block" : "periodic"; }

 private:
  std::vector<PayoffMatrix> schedule_;
  bool per_block_;
};

/// The opponent from the impossibility argument: play `anchor` until the
/// average payoff is within eps (sup norm) of `target`, say at round T',
/// then play `other` until round 2T', halve eps and start again.
class SwitchingAdversary final : public Adversary {
 public:
  SwitchingAdversary(PayoffMatrix anchor, PayoffMatrix other, Vec target, double eps0 = 0.1);
  PayoffMatrix next(const History& h) override;
  std::string name() const override { return "switching"; }

  double epsilon() const noexcept { return eps_; }
  /// Rounds T' at which each switch happened.
  const std::vector<long>& switch_rounds() const noexcept { return switches_; }

 private:
  PayoffMatrix anchor_;
  PayoffMatrix other_;
  Vec target_;
  double eps_;
  bool switched_ = false;
  long until_ = 0;
  std::vector<long> switches_;
};

/// Independent draws from a distribution over a finite list of matrices
/// (typically the vertices of K).
class RandomAdversary final : public Adversary {
 public:
  RandomAdversary(std::vector<PayoffMatrix> support, std::vector<double> weights, std::uint64_t seed);
  PayoffMatrix next(const History& h) override;
  std::string name() const override { return "random"; }

 private:
  std::vector<PayoffMatrix> support_;
  std::vector<double> cumulative_;
  Xoshiro256 rng_;
};

/// A fixed sequence read from a file, repeated when exhausted. Each line
/// holds either the parameters of a point of `space` or the d*A entries in
/// column-major order; '#' starts a comment line.
class ScriptedAdversary final : public Adversary {
 public:
  explicit ScriptedAdversary(std::vector<PayoffMatrix> sequence);
  static ScriptedAdversary load(const std::string& path, const ParamSpace& space);
  PayoffMatrix next(const History& h) override;
  std::string name() const override { return "script"; }

 private:
  std::vector<PayoffMatrix> sequence_;
};

}  // namespace approach
