#pragma once

#include "approach/geometry.hpp"

namespace approach {

/// Zero-sum game with payoff matrix M (rows: minimizer, columns: maximizer).
struct GameSolution {
  MixedAction row;
  MixedAction column;
  double value;        // row^T M column
  double upper_value;  // max_j (row^T M)_j, what the row player guarantees
  double lower_value;  // min_i (M column)_i, what the column player guarantees
};

/// Exact for 2 x n and n x 2 games (lower envelope of lines); linear
/// programming otherwise. Flat optima are broken toward the middle / uniform.
GameSolution solve_matrix_game(const Mat& payoff);

}  // namespace approach
