#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "approach/adversary.hpp"
#include "approach/geometry.hpp"
#include "approach/param_space.hpp"
#include "approach/responses.hpp"
#include "approach/run_record.hpp"
#include "approach/strategy.hpp"
#include "approach/targets.hpp"

namespace approach {

/// A game environment: the parameterized set K of opponent moves, the
/// target set and, optionally, a cost constraint. With a constraint the
/// target set applies to payoff_map * r and costs must reach cost_set.
struct Scenario {
  std::string id;
  ParamSpace space;
  TargetSet target;
  std::optional<CostConstraint> constraint;

  int dim() const { return space.dim(); }
  int actions() const { return space.actions(); }
  ConvexBody body() const { return space.body(); }
  /// The part of r measured against the target set.
  Vec payoff_view(const Vec& r) const;
  /// d_p(P r, target_alpha).
  double payoff_distance(const Vec& r, double alpha) const;
  /// d_p(G r, cost_set), 0 without a constraint.
  double cost_distance(const Vec& r) const;
  /// x* for this scenario (constrained when a constraint is present).
  ResponsePtr best_response() const;
};

namespace scenarios {

Scenario example1();
Scenario example2();
/// Second example restricted to v in [0, 1], w in [-1, 0], where {0} is
/// reachable against every move.
Scenario example2_quadrant();
/// Scalar payoff u = (1, 0), scalar cost c = (1, 0), cost set (-inf, 0.5],
/// payoff set [1, inf): the best constrained play is (1/2, 1/2).
Scenario constrained_demo();
/// Scalar losses in [0, 1]^2 to be kept in (-inf, 0].
Scenario losses();

Scenario by_name(const std::string& id);
std::vector<std::string> names();

}  // namespace scenarios

/// Stacks m = [u; c] (payoff rows over cost rows) into a one-point scenario.
/// Throws InfeasibleError if no mixed action meets the cost constraint.
Scenario build_constrained_scenario(const PayoffMatrix& u, const PayoffMatrix& c, TargetSet cost_set,
                                   TargetSet payoff_set, std::string id = "constrained");

/// max over the parameter grid of phi_star (a diagnostic for 1 or 2
/// parameters; exact problem is hard in general).
double alpha_unif_estimate(const Scenario& scenario, int per_axis);

/// {ceil(1.2^k)} intersected with [1, horizon], plus the horizon itself.
std::vector<long> geometric_checkpoints(long horizon, double ratio = 1.2);
std::vector<long> dense_checkpoints(long horizon, long every);

struct NamedTarget {
  std::string name;
  TargetPtr fn;
};

struct RunOptions {
  long horizon = 1000;
  std::uint64_t seed = 1;
  std::vector<long> checkpoints;  // empty: geometric grid
  std::vector<NamedTarget> metrics;
  /// K_max for the certificate; negative means "from the scenario's K".
  double k_max = -1.0;
  /// Check that every adversary move lies in K.
  bool audit = true;
  /// Also draw a_t ~ x_t and record the realized average payoff.
  bool sampling = false;
  /// Record || avg x_t (.) m_t - avg Psi(m_t) (.) m_t ||_1 with this Psi.
  ResponsePtr pointwise;
  std::string strategy_label;
  std::string adversary_label;
};

/// Simulates the repeated interaction. Columns: t, rbar_i, theta_j (the
/// parameters of mbar), dist_<metric>, cost_dist (constrained scenarios),
/// gap, bound, delta_norm (NaN when the strategy has none), then the
/// optional pointwise_gap and sample_rbar_i.
RunRecord run(const Scenario& scenario, Strategy& strategy, Adversary& adversary,
              const RunOptions& options);

/// Targets by name: phi_star, cav, phi_xstar, phi_psi (needs `response`),
/// alpha:<w1,...,wA>.
NamedTarget make_target(const std::string& name, const Scenario& scenario, ResponsePtr response);

/// Responses by name: xstar, example1_xstar, example2_xstar,
/// constant:<w1,...,wA>, table:<path>.
ResponsePtr make_response(const std::string& spec, const Scenario& scenario);

}  // namespace approach
