#pragma once

#include <vector>

namespace approach {

struct LinearTerm {
  int var;
  double coef;
};

/// sum(coef * x[var]) + constant
struct AffineExpr {
  std::vector<LinearTerm> terms;
  double constant = 0.0;

  AffineExpr& add(int var, double coef) {
    terms.push_back({var, coef});
    return *this;
  }
  double evaluate(const std::vector<double>& x) const;
};

struct QpOptions {
  double tolerance = 1e-11;
  int max_iterations = 200;
  bool polish = true;
};

struct QpResult {
  std::vector<double> x;  // includes slack variables appended by the model
  double objective = 0.0;
  int iterations = 0;
  bool polished = false;
};

/// Small dense convex QP over nonnegative variables:
///
///   minimize   sum_k w_k * (a_k . x + c_k)^2 + l . x
///   subject to equalities / inequalities on affine expressions, x >= 0.
///
/// Solved by a Mehrotra predictor-corrector interior-point method followed by
/// an active-set polish (an equality-constrained KKT solve on the support),
/// which recovers vertex/face solutions to machine precision when the support
/// is identified. Intended for problems with tens of variables.
class QpModel {
 public:
  int add_variable() { return nvars_++; }
  int add_variables(int n);
  int variable_count() const noexcept { return nvars_; }

  void add_equality(const AffineExpr& e, double rhs = 0.0);
  void add_less_equal(const AffineExpr& e, double rhs = 0.0);
  void add_greater_equal(const AffineExpr& e, double rhs = 0.0);

  void add_linear_cost(const AffineExpr& e, double weight = 1.0);
  void add_squared_cost(const AffineExpr& e, double weight = 1.0);

  /// Throws SolverError (with the best iterate) when tolerances are not met.
  QpResult solve(const QpOptions& options = {}) const;

 private:
  struct Row {
    std::vector<LinearTerm> terms;
    double rhs;
  };
  struct Square {
    AffineExpr expr;
    double weight;
  };

  int nvars_ = 0;
  std::vector<Row> rows_;
  std::vector<Square> squares_;
  std::vector<LinearTerm> linear_;
  double constant_ = 0.0;
};

}  // namespace approach
