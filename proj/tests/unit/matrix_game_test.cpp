#include <gtest/gtest.h>

#include "approach/matrix_game.hpp"
#include "approach/rng.hpp"

using namespace approach;

TEST(MatrixGame, MatchingPennies) {
  Mat m(2, 2);
  m << 1, -1, -1, 1;
  const GameSolution g = solve_matrix_game(m);
  EXPECT_NEAR(g.value, 0.0, 1e-12);
  EXPECT_NEAR(g.row[0], 0.5, 1e-12);
  EXPECT_NEAR(g.column[0], 0.5, 1e-12);
}

TEST(MatrixGame, ZeroMatrixIsUniform) {
  const GameSolution g = solve_matrix_game(Mat::Zero(2, 3));
  EXPECT_NEAR(g.row[0], 0.5, 1e-12);
  EXPECT_NEAR(g.value, 0.0, 1e-12);
}

TEST(MatrixGame, OneByOne) {
  Mat m(1, 1);
  m << 2.5;
  const GameSolution g = solve_matrix_game(m);
  EXPECT_DOUBLE_EQ(g.value, 2.5);
  EXPECT_DOUBLE_EQ(g.row[0], 1.0);
}

TEST(MatrixGame, DominatedRow) {
  Mat m(2, 2);
  m << 1, 2, 3, 4;  // row 0 is better for the minimizer everywhere
  const GameSolution g = solve_matrix_game(m);
  EXPECT_NEAR(g.row[0], 1.0, 1e-12);
  EXPECT_NEAR(g.value, 2.0, 1e-12);
}

TEST(MatrixGame, RandomGamesHaveMatchingValues) {
  Xoshiro256 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = 2 + static_cast<int>(rng.below(4)), c = 2 + static_cast<int>(rng.below(4));
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) m(i, j) = 2.0 * rng.uniform() - 1.0;
    }
    const GameSolution g = solve_matrix_game(m);
    EXPECT_NEAR(g.upper_value, g.lower_value, 1e-7) << r << "x" << c;
    EXPECT_NEAR(g.value, g.upper_value, 1e-7);
  }
}
