#pragma once

#include <limits>
#include <optional>

#include "approach/geometry.hpp"
#include "approach/matrix_game.hpp"
#include "approach/responses.hpp"
#include "approach/strategy.hpp"

namespace approach {

/// Known-game strategy without projections: each round solves the matrix
/// game <delta, x (.) v_j> between the actions and the vertices of K, plays
/// the minimizing mixture and compares itself with Psi_C(m~) (.) m~ for the
/// maximizing point m~. Needs K; Psi_C should map each m into C.
class BlackwellStrategy final : public Strategy {
 public:
  struct Choice {
    MixedAction x;
    PayoffMatrix m_tilde;
    double value;
    double value_gap;  // upper minus lower game value
  };

  BlackwellStrategy(ConvexBody body, ResponsePtr response, double tolerance = 1e-6);

  Choice choose() const;
  /// delta += x (.) m - Psi(m~) (.) m~, after checking
  /// <delta, x (.) m> <= <delta, Psi(m~) (.) m~> + tolerance (AuditError otherwise).
  void step(const PayoffMatrix& m, const Choice& choice);

  MixedAction act() override;
  void observe(const PayoffMatrix& m) override;
  std::string name() const override { return "blackwell"; }
  std::optional<double> discrepancy_norm() const override { return delta_.norm(); }

  const Vec& discrepancy() const noexcept { return delta_; }
  long rounds() const noexcept { return t_; }
  /// Largest <delta, x (.) m> - <delta, Psi(m~) (.) m~> seen so far.
  double worst_violation() const noexcept { return worst_; }
  double tolerance() const noexcept { return tolerance_; }

 private:
  ConvexBody body_;
  ResponsePtr response_;
  double tolerance_;
  Vec delta_;
  long t_ = 0;
  double worst_ = -std::numeric_limits<double>::infinity();
  std::optional<Choice> pending_;
};

}  // namespace approach
