#include <gtest/gtest.h>

#include <cmath>

#include "approach/error.hpp"
#include "approach/geometry.hpp"
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

TEST(Combine, PureActionPicksColumn) {
  const Vec r = combine(MixedAction::pure(2, 0), example1::m_dagger());
  EXPECT_DOUBLE_EQ(r(0), 3.0);
  EXPECT_DOUBLE_EQ(r(1), 4.0);
}

TEST(Combine, EvenMixAveragesColumns) {
  const Vec r = combine(MixedAction::uniform(2), example1::m_dagger());
  EXPECT_DOUBLE_EQ(r(0), 1.5);
  EXPECT_DOUBLE_EQ(r(1), 4.5);
}

TEST(Combine, IdenticalColumnsAreAFixedPoint) {
  const auto m = PayoffMatrix::from_columns({{2.0, -1.0}, {2.0, -1.0}, {2.0, -1.0}});
  const Vec r = combine(MixedAction::uniform(3), m);
  EXPECT_NEAR(r(0), 2.0, 1e-15);
  EXPECT_NEAR(r(1), -1.0, 1e-15);
}

TEST(Combine, RejectsMismatchedSizes) {
  EXPECT_THROW(combine(MixedAction::uniform(3), example1::m_dagger()), DimensionError);
}

TEST(MixedAction, RejectsNegativeWeights) {
  EXPECT_THROW(MixedAction(vec({1.5, -0.5})), DomainError);
}

TEST(Distance, OrthantInSupNorm) {
  const auto c = TargetSet::negative_orthant(2, Norm::Linf);
  EXPECT_DOUBLE_EQ(distance_to_expansion(vec({3, 4}), c, 0.0), 4.0);
  EXPECT_DOUBLE_EQ(distance_to_expansion(vec({3, 4}), c, 4.0), 0.0);
}

TEST(Distance, OrthantInEuclideanNorm) {
  const auto c = TargetSet::negative_orthant(2, Norm::L2);
  EXPECT_DOUBLE_EQ(distance_to_expansion(vec({3, 4}), c, 0.0), 5.0);
}

TEST(Distance, NegativeRadiusIsRejected) {
  EXPECT_THROW(distance_to_expansion(vec({3, 4}), TargetSet::negative_orthant(2), -1.0), DomainError);
}

TEST(Distance, HalfLinesAndSingleton) {
  EXPECT_DOUBLE_EQ(distance(vec({2.0}), TargetSet::half_line_below(0.5)), 1.5);
  EXPECT_DOUBLE_EQ(distance(vec({0.0}), TargetSet::half_line_below(0.5)), 0.0);
  EXPECT_DOUBLE_EQ(distance(vec({0.25}), TargetSet::half_line_above(1.0)), 0.75);
  EXPECT_DOUBLE_EQ(distance(vec({3, 4}), TargetSet::singleton(vec({0, 0}), Norm::L1)), 7.0);
  EXPECT_DOUBLE_EQ(distance(vec({3, 4}), TargetSet::whole(2)), 0.0);
}

TEST(Distance, PolytopeMatchesSegmentProjection) {
  // Segment from (0,0) to (2,0); the point (1,1) projects to (1,0).
  const auto c = TargetSet::polytope({vec({0, 0}), vec({2, 0})}, Norm::L2);
  EXPECT_NEAR(distance(vec({1, 1}), c), 1.0, 1e-7);
  EXPECT_NEAR(distance(vec({3, 0}), c), 1.0, 1e-7);
  const auto c1 = c.with_norm(Norm::L1);
  EXPECT_NEAR(distance(vec({3, 1}), c1), 2.0, 1e-7);
  const auto cinf = c.with_norm(Norm::Linf);
  EXPECT_NEAR(distance(vec({3, 1}), cinf), 1.0, 1e-7);
}

TEST(Distance, EuclideanToSupExpansion) {
  // C_1 for the orthant in sup norm is (-inf, 1]^2.
  const auto c = TargetSet::negative_orthant(2, Norm::Linf);
  EXPECT_NEAR(euclidean_distance_to_expansion(vec({3, 4}), c, 1.0), std::hypot(2.0, 3.0), 1e-12);
  EXPECT_NEAR(euclidean_distance_to_expansion(vec({0.5, 4}), c, 1.0), 3.0, 1e-12);
}

TEST(Distance, EuclideanToL1BallExpansionUsesSolver) {
  // {0} expanded by the unit l1 ball; from (2,2) the closest point is (0.5,0.5).
  const auto c = TargetSet::singleton(vec({0, 0}), Norm::L1);
  EXPECT_NEAR(euclidean_distance_to_expansion(vec({2, 2}), c, 1.0), 1.5 * std::sqrt(2.0), 1e-6);
}

TEST(Simplex, ProjectionExamples) {
  const MixedAction a = project_to_simplex(vec({0.5, 0.5}));
  EXPECT_NEAR(a[0], 0.5, 1e-15);
  const MixedAction b = project_to_simplex(vec({2, 0}));
  EXPECT_NEAR(b[0], 1.0, 1e-15);
  EXPECT_NEAR(b[1], 0.0, 1e-15);
  const MixedAction c = project_to_simplex(vec({0.8, 0.6, 0.6}));
  EXPECT_NEAR(c[0], 0.4666667, 1e-6);
  EXPECT_NEAR(c[1], 0.2666667, 1e-6);
  EXPECT_NEAR(c[2], 0.2666667, 1e-6);
}

TEST(Simplex, ProjectionBeatsGridSearch) {
  const Vec v = vec({0.9, -0.3, 0.7});
  const MixedAction p = project_to_simplex(v);
  const double best = (p.weights() - v).norm();
  for (int i = 0; i <= 100; ++i) {
    for (int j = 0; i + j <= 100; ++j) {
      const Vec q = vec({i / 100.0, j / 100.0, (100 - i - j) / 100.0});
      EXPECT_LE(best, (q - v).norm() + 1e-12);
    }
  }
}

TEST(BodyNorm, Examples) {
  EXPECT_NEAR(body_norm_bound(ConvexBody({example1::m_dagger(), example1::m_sharp()})), std::sqrt(52.0), 1e-12);
  EXPECT_DOUBLE_EQ(body_norm_bound(ConvexBody({PayoffMatrix::zero(2, 2)})), 0.0);
  EXPECT_NEAR(body_norm_bound(example2::space().body()), 2.0 * std::sqrt(2.0), 1e-12);
}

TEST(ConvexBody, DistanceToSegment) {
  const ConvexBody k({example1::m_dagger(), example1::m_sharp()});
  EXPECT_TRUE(k.contains(example1::at(0.3)));
  EXPECT_FALSE(k.contains(PayoffMatrix::zero(2, 2)));
}

TEST(TargetSet, DescribeParsesBack) {
  const std::vector<TargetSet> sets = {TargetSet::negative_orthant(2, Norm::Linf), TargetSet::singleton(vec({1, -2})),
                                       TargetSet::half_line_below(0.5), TargetSet::half_line_above(1.0),
                                       TargetSet::polytope({vec({0, 0}), vec({1, 2})}), TargetSet::whole(2)};
  for (const auto& s : sets) {
    const auto back = TargetSet::parse(s.describe(), s.dim(), s.norm());
    EXPECT_EQ(back.describe(), s.describe());
    EXPECT_EQ(back.kind(), s.kind());
  }
}

TEST(Norm, ParseAndPrint) {
  EXPECT_EQ(parse_norm("inf"), Norm::Linf);
  EXPECT_EQ(parse_norm("1"), Norm::L1);
  EXPECT_EQ(parse_norm(to_string(Norm::L2)), Norm::L2);
  EXPECT_THROW(parse_norm("3"), Error);
}
