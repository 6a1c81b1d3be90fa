#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "approach/error.hpp"
#include "approach/responses.hpp"
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

}  // namespace

TEST(GenericXStar, FirstExampleMiddleRegion) {
  const GenericXStar psi(example1::target());
  const MixedAction x = psi.respond(example1::at(0.5));
  EXPECT_NEAR(x[0], 0.0, 1e-9);
  EXPECT_NEAR(x[1], 1.0, 1e-9);
  EXPECT_NEAR(psi.solve(example1::at(0.5)).value, 2.5, 1e-9);
}

TEST(GenericXStar, FirstExampleOuterRegions) {
  const GenericXStar psi(example1::target());
  EXPECT_NEAR(psi.respond(example1::at(0.1))[0], 1.0, 1e-9);
  EXPECT_NEAR(psi.respond(example1::at(0.9))[0], 1.0, 1e-9);
}

TEST(GenericXStar, SecondExampleOppositeSigns) {
  const GenericXStar psi(example2::target());
  const MixedAction x = psi.respond(example2::at(1.0, -1.0));
  EXPECT_NEAR(x[0], 0.5, 1e-7);
  EXPECT_NEAR(x[1], 0.5, 1e-7);
  const MixedAction y = psi.respond(example2::at(0.25, -0.75));
  // |w| / (|v| + |w|) on the first action.
  EXPECT_NEAR(y[0], 0.75, 1e-7);
}

TEST(GenericXStar, PrefersFeasiblePureAction) {
  const auto m = PayoffMatrix::from_columns({{1.0, 1.0}, {-1.0, -0.5}});
  const GenericXStar psi(TargetSet::negative_orthant(2, Norm::L2));
  const BestResponse b = psi.solve(m);
  EXPECT_LE(b.value, 1e-6);
  EXPECT_DOUBLE_EQ(b.action[1], 1.0);
}

TEST(GenericXStar, MatchesGridSearchOnPolytopeTarget) {
  const auto m = PayoffMatrix::from_columns({{2.0, 0.0}, {0.0, 3.0}, {-1.0, -1.0}});
  const TargetSet c = TargetSet::polytope({vec({1, 1}), vec({1, 2}), vec({2, 1})}, Norm::L2);
  const GenericXStar psi(c);
  double best = 1e9;
  for (int i = 0; i <= 100; ++i) {
    for (int j = 0; i + j <= 100; ++j) {
      const MixedAction x(vec({i / 100.0, j / 100.0, (100 - i - j) / 100.0}));
      best = std::min(best, distance(combine(x, m), c));
    }
  }
  const double got = psi.solve(m).value;
  EXPECT_LE(got, best + 1e-7);
  EXPECT_GE(got, best - 0.05);
}

TEST(ClosedFormResponses, AgreeWithSolver) {
  const Example1XStar e1;
  const GenericXStar g1(example1::target());
  for (double nu : {0.0, 0.1, 0.3, 0.5, 0.7, 0.8, 1.0}) {
    const PayoffMatrix m = example1::at(nu);
    EXPECT_NEAR(distance(combine(e1.respond(m), m), example1::target()), g1.solve(m).value, 1e-9) << nu;
  }
  const Example2XStar e2;
  const GenericXStar g2(example2::target());
  for (double v : {-1.0, -0.3, 0.0, 0.4, 1.0}) {
    for (double w : {-1.0, -0.6, 0.0, 0.2, 1.0}) {
      const PayoffMatrix m = example2::at(v, w);
      EXPECT_NEAR(distance(combine(e2.respond(m), m), example2::target()), g2.solve(m).value, 1e-7) << v << "," << w;
    }
  }
  const MixedAction origin = e2.respond(example2::at(0.0, 0.0));
  EXPECT_DOUBLE_EQ(origin[0], 0.5);
}

TEST(ConstrainedXStar, HandSolvedInstance) {
  const Scenario s = scenarios::constrained_demo();
  const ConstrainedXStar psi(*s.constraint);
  const PayoffMatrix m = s.space.at(Vec(0));
  const BestResponse b = psi.solve(m);
  EXPECT_NEAR(b.action[0], 0.5, 1e-7);
  const Vec r = combine(b.action, m);
  EXPECT_NEAR(r(0), 0.5, 1e-7);  // payoff
  EXPECT_NEAR(r(1), 0.5, 1e-7);  // cost
  EXPECT_NEAR(b.value, 0.5, 1e-7);
}

TEST(ConstrainedXStar, VacuousConstraintReducesToPlainProblem) {
  const auto u = PayoffMatrix::from_columns({{3.0}, {0.5}, {-2.0}});
  const auto c = PayoffMatrix::from_columns({{1.0}, {5.0}, {-4.0}});
  const Scenario s = build_constrained_scenario(u, c, TargetSet::whole(1), TargetSet::half_line_above(1.0));
  const ConstrainedXStar psi(*s.constraint);
  const GenericXStar plain(TargetSet::half_line_above(1.0));
  EXPECT_NEAR(psi.solve(s.space.at(Vec(0))).value, plain.solve(u).value, 1e-7);
  EXPECT_DOUBLE_EQ(s.cost_distance(vec({0.0, 123.0})), 0.0);
}

TEST(ConstrainedXStar, SingleActionIsForced) {
  const auto u = PayoffMatrix::from_columns({{0.2}});
  const auto c = PayoffMatrix::from_columns({{0.1}});
  const Scenario s = build_constrained_scenario(u, c, TargetSet::half_line_below(0.5), TargetSet::half_line_above(1.0));
  const ConstrainedXStar psi(*s.constraint);
  EXPECT_DOUBLE_EQ(psi.respond(s.space.at(Vec(0)))[0], 1.0);
}

TEST(ConstrainedXStar, InfeasibleInstanceIsReported) {
  const auto u = PayoffMatrix::from_columns({{1.0}, {0.0}});
  const auto c = PayoffMatrix::from_columns({{1.0}, {2.0}});
  EXPECT_THROW(build_constrained_scenario(u, c, TargetSet::half_line_below(0.5), TargetSet::half_line_above(1.0)),
               InfeasibleError);
}

TEST(ConstrainedXStar, ScaledCostsGiveSameResponse) {
  const auto u = PayoffMatrix::from_columns({{1.0}, {0.0}});
  const auto c = PayoffMatrix::from_columns({{1.0}, {0.0}});
  const Scenario a = build_constrained_scenario(u, c, TargetSet::half_line_below(0.5), TargetSet::half_line_above(1.0));
  const Scenario b =
      build_constrained_scenario(u, 2.0 * c, TargetSet::half_line_below(1.0), TargetSet::half_line_above(1.0));
  const MixedAction xa = ConstrainedXStar(*a.constraint).respond(a.space.at(Vec(0)));
  const MixedAction xb = ConstrainedXStar(*b.constraint).respond(b.space.at(Vec(0)));
  EXPECT_NEAR(xa[0], xb[0], 1e-7);
}

TEST(TabulatedResponse, NearestRowWins) {
  const auto path = std::filesystem::temp_directory_path() / "approach_table_test.txt";
  {
    std::ofstream out(path);
    out << "# nu, x1, x2\n0.0 1 0\n0.5, 0, 1\n1.0 1 0\n";
  }
  const auto table = TabulatedResponse::load(path.string(), example1::space());
  EXPECT_DOUBLE_EQ(table.respond(example1::at(0.45))[1], 1.0);
  EXPECT_DOUBLE_EQ(table.respond(example1::at(0.9))[0], 1.0);
  std::filesystem::remove(path);
}
