#include <gtest/gtest.h>

#include <cmath>

#include "approach/targets.hpp"
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

TEST(ClosedForms, FirstExampleValues) {
  EXPECT_DOUBLE_EQ(example1::phi_star(0.5), 2.5);
  EXPECT_DOUBLE_EQ(example1::phi_star(1.0), 4.0);
  EXPECT_DOUBLE_EQ(example1::phi_star(0.0), 4.0);
  EXPECT_DOUBLE_EQ(example1::cav_phi_star(0.37), 4.0);
  EXPECT_DOUBLE_EQ(example1::alpha(1.0, 0.5), 3.5);
  EXPECT_DOUBLE_EQ(example1::alpha(0.0, 0.5), 2.5);
  EXPECT_DOUBLE_EQ(example1::phi_xstar(0.5), 3.5);
}

TEST(ClosedForms, FirstExampleBreakpoints) {
  EXPECT_DOUBLE_EQ(example1::phi_star(0.25), 3.75);
  EXPECT_DOUBLE_EQ(example1::phi_star(0.75), 3.75);
  const MixedAction mid = example1::xstar(0.5);
  EXPECT_DOUBLE_EQ(mid[1], 1.0);
  EXPECT_DOUBLE_EQ(example1::xstar(0.9)[0], 1.0);
}

TEST(ClosedForms, SecondExampleValues) {
  EXPECT_DOUBLE_EQ(example2::phi_star(0.5, -0.5), 0.0);
  EXPECT_DOUBLE_EQ(example2::phi_star(0.5, 0.8), 0.5);
  EXPECT_DOUBLE_EQ(example2::cav_phi_star(1.0, -1.0), 0.0);
  EXPECT_DOUBLE_EQ(example2::cav_phi_star(0.0, 0.0), 1.0);
  EXPECT_NEAR(example2::phi_xstar(0.0, 0.0), 1.0 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(example2::alpha_half(0.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(example2::alpha_half(0.6, 0.2), 0.4);
}

TEST(ClosedForms, SecondExampleAlternativeForm) {
  // phi^{x*} in the form max(min{(1+v)/2, (1+w)/2, (1+v+w)/3}, min{(1-v)/2, (1-w)/2, (1-v-w)/3}).
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      const double v = -1.0 + i / 20.0, w = -1.0 + j / 20.0;
      const double up = std::min({(1 + v) / 2, (1 + w) / 2, (1 + v + w) / 3});
      const double down = std::min({(1 - v) / 2, (1 - w) / 2, (1 - v - w) / 3});
      EXPECT_NEAR(example2::phi_xstar(v, w), std::max(up, down), 1e-12) << v << "," << w;
    }
  }
}

TEST(PhiStar, SolverAgreesWithClosedForm) {
  for (int i = 0; i <= 20; ++i) {
    const double nu = i / 20.0;
    EXPECT_NEAR(phi_star(example1::at(nu), example1::target()), example1::phi_star(nu), 1e-9);
  }
}

TEST(PhiStar, MatchesDistanceOfResponse) {
  const GenericXStar psi(example2::target());
  for (double v : {-0.7, 0.2, 0.9}) {
    for (double w : {-0.4, 0.3, 1.0}) {
      const PayoffMatrix m = example2::at(v, w);
      EXPECT_NEAR(phi_star(m, example2::target()), distance(combine(psi.respond(m), m), example2::target()), 1e-6);
    }
  }
}

TEST(CavOracle, FirstExampleIsFlat) {
  const auto space = example1::space();
  const auto cav = cav_oracle(space, [](const Vec& t) { return example1::phi_star(t(0)); }, 1001);
  for (double v : cav) EXPECT_NEAR(v, 4.0, 1e-9);
}

TEST(CavOracle, AffineInputUnchanged) {
  const auto space = example2::space();
  const auto f = [](const Vec& t) { return 0.3 * t(0) - 0.2 * t(1) + 1.0; };
  const auto cav = cav_oracle(space, f, 21);
  const auto grid = space.grid(21);
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_NEAR(cav[i], f(grid[i]), 1e-9);
}

TEST(CavOracle, SecondExampleMatchesClosedForm) {
  const auto space = example2::space();
  const auto cav = cav_oracle(space, [](const Vec& t) { return example2::phi_star(t(0), t(1)); }, 101);
  const auto grid = space.grid(101);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_NEAR(cav[i], example2::cav_phi_star(grid[i](0), grid[i](1)), 0.03);
  }
}

TEST(PhiPsiOracle, FirstExampleEqualsAlphaOne) {
  const auto psi = std::make_shared<GenericXStar>(example1::target());
  const PhiPsiOracle oracle(example1::space(), psi, example1::target(), 201, 2);
  for (int i = 0; i <= 50; ++i) {
    const double nu = i / 50.0;
    EXPECT_NEAR(oracle.at(vec({nu})), example1::alpha(1.0, nu), 1e-3) << nu;
  }
}

TEST(PhiPsiOracle, SecondExampleAtOrigin) {
  const PhiPsiOracle oracle(example2::space(), std::make_shared<Example2XStar>(), example2::target(), 41, 3);
  EXPECT_NEAR(oracle.at(vec({0.0, 0.0})), 1.0 / 3.0, 1e-2);
}

TEST(PhiPsiOracle, SingleAtomIsDirectEvaluation) {
  const auto psi = std::make_shared<GenericXStar>(example1::target());
  const PhiPsiOracle oracle(example1::space(), psi, example1::target(), 51, 1);
  for (double nu : {0.1, 0.5, 0.8}) EXPECT_NEAR(oracle.at(vec({nu})), example1::phi_star(nu), 1e-9);
}

TEST(PhiPsiOracle, MonotoneInBudgetAndGrid) {
  const auto psi = std::make_shared<Example2XStar>();
  const auto space = example2::space();
  const PhiPsiOracle one(space, psi, example2::target(), 9, 1);
  const PhiPsiOracle two(space, psi, example2::target(), 9, 2);
  const PhiPsiOracle three(space, psi, example2::target(), 9, 3);
  const PhiPsiOracle finer(space, psi, example2::target(), 17, 3);
  for (const auto& theta : space.grid(9)) {
    EXPECT_LE(one.at(theta), two.at(theta) + 1e-12);
    EXPECT_LE(two.at(theta), three.at(theta) + 1e-9);
    EXPECT_LE(three.at(theta), finer.at(theta) + 1e-9);
  }
}

TEST(PhiPsiOracle, BudgetIsCapped) {
  const auto psi = std::make_shared<Example2XStar>();
  EXPECT_ANY_THROW(PhiPsiOracle(example2::space(), psi, example2::target(), 5, 4));
  EXPECT_ANY_THROW(PhiPsiOracle(example2::space(), psi, example2::target(), 5, 0));
}

TEST(GraphDistance, MembershipGivesZero) {
  const auto space = example1::space();
  const auto phi = [](const Vec& t) { return example1::phi_star(t(0)); };
  EXPECT_NEAR(graph_distance(example1::at(1.0), vec({3, 4}), space, phi, example1::target(), 101), 0.0, 1e-12);
  EXPECT_NEAR(graph_distance(example1::at(0.5), vec({2, 2}), space, phi, example1::target(), 101), 0.0, 1e-12);
}

TEST(GraphDistance, NeverExceedsPointwiseDistance) {
  const auto space = example1::space();
  const auto phi = [](const Vec& t) { return example1::phi_star(t(0)); };
  for (double nu : {0.0, 0.3, 0.5, 0.9}) {
    const Vec r = vec({4.0, 4.2});
    const double g = graph_distance(example1::at(nu), r, space, phi, example1::target(), 101);
    EXPECT_LE(g, euclidean_distance_to_expansion(r, example1::target(), example1::phi_star(nu)) + 1e-12);
  }
}

TEST(Alpha, ConstantPlayTarget) {
  const AlphaTarget a(MixedAction::uniform(2), example2::target());
  EXPECT_NEAR(a(example2::at(0.6, 0.2)), 0.4, 1e-12);
}
