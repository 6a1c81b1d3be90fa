#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace approach {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Norm used for the expansions C_alpha and the distances d_p.
enum class Norm { L1, L2, Linf };

double norm_of(const Vec& v, Norm p);
std::string to_string(Norm p);
/// Accepts "1", "2", "inf" (also "l1", "l2", "linf").
Norm parse_norm(std::string_view text);

/// The opponent's move: d rows (payoff coordinates) by A columns (one
/// d-vector per decision-maker action).
class PayoffMatrix {
 public:
  PayoffMatrix() = default;
  explicit PayoffMatrix(Mat entries);

  /// Each inner list is one column m_a.
  static PayoffMatrix from_columns(std::initializer_list<std::initializer_list<double>> columns);
  /// Column-major flat layout, the same one `flattened()` produces.
  static PayoffMatrix from_flat(int d, int actions, const Vec& flat);
  static PayoffMatrix zero(int d, int actions);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  int actions() const noexcept { return static_cast<int>(m_.cols()); }
  const Mat& entries() const noexcept { return m_; }
  double operator()(int i, int a) const { return m_(i, a); }
  Vec column(int a) const { return m_.col(a); }
  Vec flattened() const;

  PayoffMatrix& operator+=(const PayoffMatrix& other);
  PayoffMatrix& operator-=(const PayoffMatrix& other);
  PayoffMatrix& operator*=(double s);
  friend PayoffMatrix operator+(PayoffMatrix a, const PayoffMatrix& b) { return a += b; }
  friend PayoffMatrix operator-(PayoffMatrix a, const PayoffMatrix& b) { return a -= b; }
  friend PayoffMatrix operator*(double s, PayoffMatrix a) { return a *= s; }
  friend bool operator==(const PayoffMatrix& a, const PayoffMatrix& b) {
    return a.m_.rows() == b.m_.rows() && a.m_.cols() == b.m_.cols() && a.m_ == b.m_;
  }

 private:
  Mat m_;
};

/// A point of the simplex over the A actions. Construction clamps round-off
/// negatives (>= -1e-12) and renormalizes to sum 1.
class MixedAction {
 public:
  explicit MixedAction(Vec weights);

  static MixedAction uniform(int actions);
  static MixedAction pure(int actions, int a);

  int size() const noexcept { return static_cast<int>(w_.size()); }
  double operator[](int a) const { return w_(a); }
  const Vec& weights() const noexcept { return w_; }

  friend bool operator==(const MixedAction& a, const MixedAction& b) {
    return a.w_.size() == b.w_.size() && a.w_ == b.w_;
  }

 private:
  Vec w_;
};

/// Base convex set C together with the norm of its expansions C_alpha.
class TargetSet {
 public:
  enum class Kind { NegativeOrthant, Singleton, HalfLineBelow, HalfLineAbove, Polytope, Whole };

  static TargetSet negative_orthant(int d, Norm p = Norm::Linf);
  static TargetSet singleton(Vec point, Norm p = Norm::L2);
  /// (-inf, threshold] in R.
  static TargetSet half_line_below(double threshold, Norm p = Norm::L2);
  /// [threshold, +inf) in R.
  static TargetSet half_line_above(double threshold, Norm p = Norm::L2);
  static TargetSet polytope(std::vector<Vec> vertices, Norm p = Norm::L2);
  static TargetSet whole(int d, Norm p = Norm::L2);

  Kind kind() const noexcept { return kind_; }
  int dim() const noexcept { return d_; }
  Norm norm() const noexcept { return p_; }
  const Vec& point() const noexcept { return point_; }
  double threshold() const noexcept { return threshold_; }
  const std::vector<Vec>& vertices() const noexcept { return vertices_; }

  TargetSet with_norm(Norm p) const;
  bool contains(const Vec& r, double tol = 1e-9) const;

  /// Short textual form, e.g. "orthant", "singleton:0,0", "below:0.5",
  /// "polytope:0,0;1,0;0,1". Parsed back by `parse`.
  std::string describe() const;
  static TargetSet parse(std::string_view text, int d, Norm p);

 private:
  TargetSet(Kind kind, int d, Norm p) : kind_(kind), d_(d), p_(p) {}

  Kind kind_;
  int d_;
  Norm p_;
  Vec point_;
  double threshold_ = 0.0;
  std::vector<Vec> vertices_;
};

/// The polytope K of admissible opponent moves, by its vertex list.
class ConvexBody {
 public:
  explicit ConvexBody(std::vector<PayoffMatrix> vertices);

  const std::vector<PayoffMatrix>& vertices() const noexcept { return vertices_; }
  int dim() const noexcept { return vertices_.front().dim(); }
  int actions() const noexcept { return vertices_.front().actions(); }
  /// Euclidean distance (over the dA entries) from m to K.
  double distance(const PayoffMatrix& m) const;
  bool contains(const PayoffMatrix& m, double tol = 1e-7) const {
    return distance(m) <= tol;
  }

 private:
  std::vector<PayoffMatrix> vertices_;
};

/// x (.) m = sum_a x_a m_a.
Vec combine(const MixedAction& x, const PayoffMatrix& m);

/// d_p(r, C) in the norm attached to C.
double distance(const Vec& r, const TargetSet& set);
/// d_p(r, C_alpha) = max(0, d_p(r, C) - alpha).
double distance_to_expansion(const Vec& r, const TargetSet& set, double alpha);
/// Euclidean distance from r to the l_p-expansion C_alpha (the set itself is
/// still expanded in the norm attached to C).
double euclidean_distance_to_expansion(const Vec& r, const TargetSet& set, double alpha);

/// Euclidean projection onto the probability simplex (sort-based).
MixedAction project_to_simplex(const Vec& v);

/// K_max = max(max_m ||m||, max_{m,m'} ||m - m'||), Frobenius norms over vertices.
double body_norm_bound(const ConvexBody& body);

}  // namespace approach
