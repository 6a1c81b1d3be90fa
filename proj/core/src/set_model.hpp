#pragma once

// Helpers that express "distance from an affine point to a target set" inside
// a QpModel. Internal to the library.

#include <vector>

#include "approach/geometry.hpp"
#include "approach/qp.hpp"

namespace approach::detail {

/// Adds A nonnegative variables summing to one; returns the first index.
int add_simplex(QpModel& model, int size);

/// r(x) = sum_a x_a * rows(:, a) + offset, as affine expressions in the
/// simplex variables starting at `first`.
std::vector<AffineExpr> linear_image(const Mat& rows, int first, const Vec& offset);

/// Residual e = r - c with a witness c in the set, introducing whatever
/// auxiliary variables the set kind needs. Whole yields an empty residual.
std::vector<AffineExpr> residual_to_set(QpModel& model, const std::vector<AffineExpr>& r,
                                        const TargetSet& set);

/// Adds the objective ||e||_p (or ||e||_2^2 for L2). Use `objective_to_norm`
/// to map the optimal objective back to a distance.
void add_norm_objective(QpModel& model, const std::vector<AffineExpr>& e, Norm p);
double objective_to_norm(double objective, Norm p);

/// Constrains e to the l_p ball of radius `radius` (used for expansions).
/// Returns the expressions of the free vector e = plus - minus.
std::vector<AffineExpr> add_ball_vector(QpModel& model, int size, Norm p, double radius);

/// Requires the affine point r to lie in the set.
void require_membership(QpModel& model, const std::vector<AffineExpr>& r, const TargetSet& set);

}  // namespace approach::detail
