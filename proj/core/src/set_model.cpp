#include "set_model.hpp"

#include <cmath>

#include "approach/error.hpp"

namespace approach::detail {

int add_simplex(QpModel& model, int size) {
  const int first = model.add_variables(size);
  AffineExpr sum;
  for (int a = 0; a < size; ++a) sum.add(first + a, 1.0);
  model.add_equality(sum, 1.0);
  return first;
}

std::vector<AffineExpr> linear_image(const Mat& rows, int first, const Vec& offset) {
  std::vector<AffineExpr> r(static_cast<std::size_t>(rows.rows()));
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    auto& e = r[static_cast<std::size_t>(i)];
    e.constant = offset.size() > 0 ? offset(i) : 0.0;
    for (Eigen::Index a = 0; a < rows.cols(); ++a) {
      if (rows(i, a) != 0.0) e.add(first + static_cast<int>(a), rows(i, a));
    }
  }
  return r;
}

std::vector<AffineExpr> residual_to_set(QpModel& model, const std::vector<AffineExpr>& r,
                                        const TargetSet& set) {
  if (static_cast<int>(r.size()) != set.dim()) {
    throw DimensionError("point and target set dimensions differ");
  }
  std::vector<AffineExpr> e = r;
  switch (set.kind()) {
    case TargetSet::Kind::NegativeOrthant:
      // c = -s, s >= 0
      for (auto& ei : e) ei.add(model.add_variable(), 1.0);
      break;
    case TargetSet::Kind::Singleton:
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i].constant -= set.point()(static_cast<Eigen::Index>(i));
      }
      break;
    case TargetSet::Kind::HalfLineBelow:
      e[0].constant -= set.threshold();
      e[0].add(model.add_variable(), 1.0);
      break;
    case TargetSet::Kind::HalfLineAbove:
      e[0].constant -= set.threshold();
      e[0].add(model.add_variable(), -1.0);
      break;
    case TargetSet::Kind::Polytope: {
      const auto& verts = set.vertices();
      const int lambda = add_simplex(model, static_cast<int>(verts.size()));
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = 0; j < verts.size(); ++j) {
          const double v = verts[j](static_cast<Eigen::Index>(i));
          if (v != 0.0) e[i].add(lambda + static_cast<int>(j), -v);
        }
      }
      break;
    }
    case TargetSet::Kind::Whole:
      e.clear();
      break;
  }
  return e;
}

void add_norm_objective(QpModel& model, const std::vector<AffineExpr>& e, Norm p) {
  if (e.empty()) return;
  switch (p) {
    case Norm::L2:
      for (const auto& ei : e) model.add_squared_cost(ei);
      break;
    case Norm::L1:
      for (const auto& ei : e) {
        const int t = model.add_variable();
        AffineExpr up = ei;
        up.add(t, -1.0);
        model.add_less_equal(up);  // e - t <= 0
        AffineExpr down = ei;
        down.add(t, 1.0);
        model.add_greater_equal(down);  // e + t >= 0
        model.add_linear_cost(AffineExpr{}.add(t, 1.0));
      }
      break;
    case Norm::Linf: {
      const int tau = model.add_variable();
      for (const auto& ei : e) {
        AffineExpr up = ei;
        up.add(tau, -1.0);
        model.add_less_equal(up);
        AffineExpr down = ei;
        down.add(tau, 1.0);
        model.add_greater_equal(down);
      }
      model.add_linear_cost(AffineExpr{}.add(tau, 1.0));
      break;
    }
  }
}

double objective_to_norm(double objective, Norm p) {
  if (p == Norm::L2) return std::sqrt(std::max(objective, 0.0));
  return std::max(objective, 0.0);
}

std::vector<AffineExpr> add_ball_vector(QpModel& model, int size, Norm p, double radius) {
  const int plus = model.add_variables(size);
  const int minus = model.add_variables(size);
  std::vector<AffineExpr> e(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    e[static_cast<std::size_t>(i)].add(plus + i, 1.0).add(minus + i, -1.0);
  }
  switch (p) {
    case Norm::L1: {
      AffineExpr total;
      for (int i = 0; i < size; ++i) total.add(plus + i, 1.0).add(minus + i, 1.0);
      model.add_less_equal(total, radius);
      break;
    }
    case Norm::Linf:
      for (int i = 0; i < size; ++i) {
        model.add_less_equal(AffineExpr{}.add(plus + i, 1.0).add(minus + i, 1.0), radius);
      }
      break;
    case Norm::L2:
      throw DomainError("l2 balls are not polyhedral; use the closed form");
  }
  return e;
}

void require_membership(QpModel& model, const std::vector<AffineExpr>& r, const TargetSet& set) {
  const auto e = residual_to_set(model, r, set);
  for (const auto& ei : e) model.add_equality(ei, 0.0);
}

}  // namespace approach::detail
