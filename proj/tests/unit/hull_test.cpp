#include <gtest/gtest.h>

#include <cmath>

#include "approach/hull.hpp"
#include "approach/rng.hpp"

using namespace approach;

TEST(Envelope1d, WShapeIsCappedByEndpoints) {
  std::vector<double> xs, ys;
  for (int i = 0; i <= 100; ++i) {
    const double x = i / 100.0;
    xs.push_back(x);
    ys.push_back(4.0 - 6.0 * std::min(std::abs(x - 0.25), std::abs(x - 0.75)) - 1.0 * (x > 0.25 && x < 0.75));
  }
  ys.front() = 4.0;
  ys.back() = 4.0;
  const UpperEnvelope1d env(xs, ys);
  for (double x : {0.0, 0.3, 0.5, 0.99, 1.0}) EXPECT_NEAR(env(x), 4.0, 1e-12);
}

TEST(Envelope1d, AffineInputIsItsOwnEnvelope) {
  std::vector<double> xs, ys;
  for (int i = 0; i <= 20; ++i) {
    xs.push_back(i * 0.1 - 1.0);
    ys.push_back(2.0 * xs.back() + 1.0);
  }
  const UpperEnvelope1d env(xs, ys);
  for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_NEAR(env(xs[i]), ys[i], 1e-12);
}

TEST(Envelope1d, ConcaveMajorant) {
  Xoshiro256 rng(5);
  std::vector<double> xs, ys;
  for (int i = 0; i < 60; ++i) {
    xs.push_back(i / 59.0);
    ys.push_back(rng.uniform());
  }
  const UpperEnvelope1d env(xs, ys);
  for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_GE(env(xs[i]), ys[i] - 1e-12);
  for (int i = 1; i < 98; ++i) {
    const double a = (i - 1) / 98.0, b = i / 98.0, c = (i + 1) / 98.0;
    EXPECT_GE(env(b), 0.5 * (env(a) + env(c)) - 1e-12);
  }
}

TEST(Envelope2d, ConeOnSquare) {
  // 1 - |x - y| / 2 is concave and piecewise linear on the grid lines.
  std::vector<std::array<double, 2>> sites;
  std::vector<double> values;
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const double x = -1.0 + 0.1 * i, y = -1.0 + 0.1 * j;
      sites.push_back({x, y});
      values.push_back(1.0 - std::abs(x - y) / 2.0);
    }
  }
  const UpperEnvelope2d env(sites, values);
  EXPECT_NEAR(env(0.0, 0.0), 1.0, 1e-9);
  EXPECT_NEAR(env(1.0, -1.0), 0.0, 1e-9);
  EXPECT_NEAR(env(0.33, -0.21), 1.0 - 0.27, 1e-9);
}

TEST(Envelope2d, SaddleBecomesFlatTop) {
  // Four corners at 1 and the centre at 0: the envelope is 1 everywhere.
  std::vector<std::array<double, 2>> sites = {{-1, -1}, {1, -1}, {-1, 1}, {1, 1}, {0, 0}};
  std::vector<double> values = {1, 1, 1, 1, 0};
  const UpperEnvelope2d env(sites, values);
  EXPECT_NEAR(env(0.0, 0.0), 1.0, 1e-9);
  EXPECT_NEAR(env(0.5, -0.2), 1.0, 1e-9);
}

TEST(Envelope2d, CollinearSitesFallBackToOneDimension) {
  std::vector<std::array<double, 2>> sites = {{0, 0}, {1, 1}, {2, 2}};
  std::vector<double> values = {0, -1, 0};
  const UpperEnvelope2d env(sites, values);
  EXPECT_NEAR(env(1.0, 1.0), 0.0, 1e-12);
}

TEST(Envelope2d, MajorizesRandomSamples) {
  Xoshiro256 rng(9);
  std::vector<std::array<double, 2>> sites;
  std::vector<double> values;
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j <= 10; ++j) {
      sites.push_back({i / 10.0, j / 10.0});
      values.push_back(rng.uniform());
    }
  }
  const UpperEnvelope2d env(sites, values);
  for (std::size_t i = 0; i < sites.size(); ++i) EXPECT_GE(env(sites[i][0], sites[i][1]), values[i] - 1e-9);
}
