#include "approach/matrix_game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "approach/error.hpp"
#include "approach/qp.hpp"
#include "set_model.hpp"

namespace approach {

namespace {

GameSolution finish(const Mat& m, MixedAction row, MixedAction column) {
  const Vec against_row = m.transpose() * row.weights();
  const Vec against_col = m * column.weights();
  const double value = row.weights().dot(against_col);
  return {std::move(row), std::move(column), value, against_row.maxCoeff(), against_col.minCoeff()};
}

// Two rows: the row player picks p = P(row 0) minimizing max_j line_j(p).
GameSolution two_rows(const Mat& m) {
  const Eigen::Index n = m.cols();
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  const double tol = 1e-12 * scale;
  const auto line = [&](Eigen::Index j, double p) { return m(1, j) + p * (m(0, j) - m(1, j)); };
  const auto envelope = [&](double p) {
    double v = -std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < n; ++j) v = std::max(v, line(j, p));
    return v;
  };

  std::vector<double> candidates{0.0, 1.0};
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      const double sj = m(0, j) - m(1, j), sk = m(0, k) - m(1, k);
      if (sj == sk) continue;
      const double p = (m(1, k) - m(1, j)) / (sj - sk);
      if (p > 0.0 && p < 1.0) candidates.push_back(p);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  double best = std::numeric_limits<double>::infinity();
  for (double p : candidates) best = std::min(best, envelope(p));
  // The optimal set is an interval; take its midpoint.
  double lo = 2.0, hi = -1.0;
  for (double p : candidates) {
    if (envelope(p) <= best + tol) {
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
  }
  const double p = 0.5 * (lo + hi);
  const double value = envelope(p);

  std::vector<Eigen::Index> flat, rising, falling;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (line(j, p) < value - tol) continue;
    const double s = m(0, j) - m(1, j);
    if (std::abs(s) <= tol) {
      flat.push_back(j);
    } else if (s > 0.0) {
      rising.push_back(j);
    } else {
      falling.push_back(j);
    }
  }
  Vec y = Vec::Zero(n);
  if (!flat.empty()) {
    for (auto j : flat) y(j) = 1.0 / static_cast<double>(flat.size());
  } else if (p <= 0.0 && !rising.empty()) {
    y(rising.front()) = 1.0;
  } else if (p >= 1.0 && !falling.empty()) {
    y(falling.front()) = 1.0;
  } else if (!rising.empty() && !falling.empty()) {
    const auto j = rising.front(), k = falling.front();
    const double sj = m(0, j) - m(1, j), sk = m(0, k) - m(1, k);
    y(j) = -sk / (sj - sk);
    y(k) = sj / (sj - sk);
  } else {
    // Round-off left no usable active pair; fall back to the best pure column.
    Eigen::Index j = 0;
    double worst = -std::numeric_limits<double>::infinity();
    for (Eigen::Index c = 0; c < n; ++c) {
      const double g = std::min(m(0, c), m(1, c));
      if (g > worst) {
        worst = g;
        j = c;
      }
    }
    y(j) = 1.0;
  }
  Vec x(2);
  x << p, 1.0 - p;
  return finish(m, MixedAction(x), MixedAction(y));
}

// min v s.t. (M^T x)_j <= v, x in the simplex (after shifting M positive).
MixedAction lp_row_player(const Mat& m) {
  const double shift = 1.0 - m.minCoeff();
  QpModel model;
  const int rows = static_cast<int>(m.rows());
  const int first = detail::add_simplex(model, rows);
  const int v = model.add_variable();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    AffineExpr e;
    for (int a = 0; a < rows; ++a) e.add(first + a, m(a, j) + shift);
    e.add(v, -1.0);
    model.add_less_equal(e, 0.0);
  }
  model.add_linear_cost(AffineExpr{}.add(v, 1.0));
  const QpResult r = model.solve();
  Vec x(rows);
  for (int a = 0; a < rows; ++a) x(a) = std::max(0.0, r.x[static_cast<std::size_t>(first + a)]);
  return MixedAction(x);
}

}  // namespace

GameSolution solve_matrix_game(const Mat& payoff) {
  if (payoff.rows() < 1 || payoff.cols() < 1) throw DimensionError("empty game matrix");
  if (!payoff.allFinite()) throw DomainError("game matrix has non-finite entries");
  const Eigen::Index rows = payoff.rows(), cols = payoff.cols();
  if (rows == 1 || cols == 1) {
    // One side has nothing to choose; the other picks a best pure reply.
    if (rows == 1 && cols == 1) return finish(payoff, MixedAction::pure(1, 0), MixedAction::pure(1, 0));
    if (rows == 1) {
      Eigen::Index j = 0;
      payoff.row(0).maxCoeff(&j);
      return finish(payoff, MixedAction::pure(1, 0), MixedAction::pure(static_cast<int>(cols), static_cast<int>(j)));
    }
    Eigen::Index i = 0;
    payoff.col(0).minCoeff(&i);
    return finish(payoff, MixedAction::pure(static_cast<int>(rows), static_cast<int>(i)), MixedAction::pure(1, 0));
  }
  if (rows == 2) return two_rows(payoff);
  if (cols == 2) {
    const Mat flipped = -payoff.transpose();
    GameSolution s = two_rows(flipped);
    return finish(payoff, s.column, s.row);
  }
  MixedAction x = lp_row_player(payoff);
  MixedAction y = lp_row_player(-payoff.transpose());
  return finish(payoff, std::move(x), std::move(y));
}

}  // namespace approach
