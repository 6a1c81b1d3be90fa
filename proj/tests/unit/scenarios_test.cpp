#include <gtest/gtest.h>

#include <cmath>

#include "approach/error.hpp"
#include "approach/rng.hpp"
#include "approach/scenarios.hpp"
#include "approach/worked_examples.hpp"

using namespace approach;

namespace {

Vec vec(std::initializer_list<double> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

RunRecord run_example1(Adversary& adv, long horizon, std::vector<std::string> metrics) {
  const Scenario s = scenarios::example1();
  const ResponsePtr psi = s.best_response();
  BlockStrategy strategy(2, 2, psi);
  RunOptions o;
  o.horizon = horizon;
  for (const auto& name : metrics) o.metrics.push_back(make_target(name, s, psi));
  return run(s, strategy, adv, o);
}

}  // namespace

TEST(Rng, KnownStream) {
  Xoshiro256 a(1), b(1), c(2);
  const auto first = a.next();
  EXPECT_EQ(first, b.next());
  EXPECT_NE(first, c.next());
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Checkpoints, GeometricIncludesHorizon) {
  const auto cp = geometric_checkpoints(100);
  EXPECT_EQ(cp.front(), 1);
  EXPECT_EQ(cp.back(), 100);
  for (std::size_t i = 1; i < cp.size(); ++i) EXPECT_LT(cp[i - 1], cp[i]);
  const auto dense = dense_checkpoints(95, 10);
  EXPECT_EQ(dense.front(), 10);
  EXPECT_EQ(dense.back(), 95);
}

TEST(Adversaries, PeriodicPerBlock) {
  PeriodicAdversary adv({example1::at(1.0), example1::at(0.0)}, true);
  History h;
  // Round t + 1 belongs to block completed_blocks(t) + 1.
  const long rounds[] = {0, 1, 2, 3, 4, 5, 6};
  const double expect[] = {1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 0.0};
  for (int i = 0; i < 7; ++i) {
    h.t = rounds[i];
    EXPECT_EQ(adv.next(h), example1::at(expect[i])) << i;
  }
}

TEST(Adversaries, RandomIsSeeded) {
  const auto body = example2::space().body();
  RandomAdversary a(body.vertices(), {}, 17), b(body.vertices(), {}, 17);
  History h;
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(h), b.next(h));
}

TEST(Adversaries, SwitchingHalvesEpsilon) {
  PayoffMatrix anchor = example1::at(1.0), other = example1::at(0.0);
  SwitchingAdversary adv(anchor, other, vec({3, 4}), 0.1);
  History h;
  h.t = 10;
  h.rbar = vec({3.05, 4.0});
  EXPECT_EQ(adv.next(h), other);
  EXPECT_DOUBLE_EQ(adv.epsilon(), 0.1);
  ASSERT_EQ(adv.switch_rounds().size(), 1u);
  EXPECT_EQ(adv.switch_rounds()[0], 10);
  h.t = 19;
  h.rbar = vec({0, 0});
  EXPECT_EQ(adv.next(h), other);
  h.t = 20;
  EXPECT_EQ(adv.next(h), anchor);
  EXPECT_DOUBLE_EQ(adv.epsilon(), 0.05);
}

TEST(Run, ConstantOpponentReachesFourExpansion) {
  ConstantAdversary adv(example1::at(1.0));
  const RunRecord r = run_example1(adv, 10000, {"phi_star"});
  EXPECT_LT(r.column("dist_phi_star").back(), 0.05);
}

TEST(Run, AlternatingOpponentSeparatesTargets) {
  PeriodicAdversary adv({example1::at(1.0), example1::at(0.0)}, true);
  const RunRecord r = run_example1(adv, 10000, {"phi_star", "phi_xstar"});
  EXPECT_GT(r.column("dist_phi_star").back(), 0.9);
  EXPECT_LT(r.column("dist_phi_xstar").back(), 0.05);
  EXPECT_NEAR(r.column("theta_1").back(), 0.5, 0.02);
}

TEST(Run, CertificateHoldsEverywhere) {
  RandomAdversary adv(example1::space().body().vertices(), {}, 3);
  const RunRecord r = run_example1(adv, 5000, {"phi_star"});
  const auto gap = r.column("gap"), bound = r.column("bound");
  for (std::size_t i = 0; i < gap.size(); ++i) EXPECT_LE(gap[i], bound[i]);
}

TEST(Run, SingleActionTracksAverageMatrix) {
  const ParamSpace space(PayoffMatrix::zero(1, 1), {PayoffMatrix::from_columns({{1.0}})}, vec({0.0}), vec({1.0}));
  const Scenario s{"single", space, TargetSet::half_line_below(0.0), std::nullopt};
  BlockStrategy strategy(1, 1, s.best_response());
  RandomAdversary adv(s.body().vertices(), {}, 5);
  RunOptions o;
  o.horizon = 300;
  const RunRecord r = run(s, strategy, adv, o);
  const auto rbar = r.column("rbar_1"), theta = r.column("theta_1");
  for (std::size_t i = 0; i < rbar.size(); ++i) EXPECT_NEAR(rbar[i], theta[i], 1e-12);
}

TEST(Run, AuditRejectsMovesOutsideK) {
  ConstantAdversary adv(PayoffMatrix::zero(2, 2));
  EXPECT_THROW(run_example1(adv, 10, {}), AuditError);
}

TEST(Run, ConstrainedDemoMeetsBothTargets) {
  const Scenario s = scenarios::constrained_demo();
  BlockStrategy strategy(2, 2, s.best_response());
  ConstantAdversary adv(s.space.at(Vec(0)));
  RunOptions o;
  o.horizon = 1000;
  o.metrics.push_back(make_target("phi_star", s, s.best_response()));
  const RunRecord r = run(s, strategy, adv, o);
  EXPECT_LE(r.column("cost_dist").back(), 0.05);
  EXPECT_LE(r.column("dist_phi_star").back(), 0.1);
}

TEST(Run, SameSeedSameRecord) {
  const Scenario s = scenarios::example2();
  RunOptions o;
  o.horizon = 2000;
  o.sampling = true;
  o.metrics.push_back(make_target("phi_star", s, s.best_response()));
  auto once = [&] {
    BlockStrategy strategy(1, 2, s.best_response());
    RandomAdversary adv(s.body().vertices(), {}, 8);
    return run(s, strategy, adv, o);
  };
  EXPECT_TRUE(same_content(once(), once()));
}

TEST(Estimates, UniformRadius) {
  EXPECT_NEAR(alpha_unif_estimate(scenarios::example1(), 101), 4.0, 1e-9);
  EXPECT_NEAR(alpha_unif_estimate(scenarios::example2(), 21), 1.0, 1e-9);
  Scenario whole = scenarios::example2();
  whole.target = TargetSet::whole(1);
  EXPECT_DOUBLE_EQ(alpha_unif_estimate(whole, 11), 0.0);
}

TEST(Names, LookupIsComplete) {
  for (const auto& n : scenarios::names()) EXPECT_EQ(scenarios::by_name(n).id, n);
  EXPECT_ANY_THROW(scenarios::by_name("nope"));
}
