#include "approach/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "approach/error.hpp"
#include "approach/qp.hpp"
#include "set_model.hpp"

namespace approach {

double norm_of(const Vec& v, Norm p) {
  if (v.size() == 0) return 0.0;
  switch (p) {
    case Norm::L1:
      return v.lpNorm<1>();
    case Norm::L2:
      return v.norm();
    case Norm::Linf:
      return v.lpNorm<Eigen::Infinity>();
  }
  return 0.0;
}

std::string to_string(Norm p) {
  switch (p) {
    case Norm::L1:
      return "1";
    case Norm::L2:
      return "2";
    case Norm::Linf:
      return "inf";
  }
  return "?";
}

Norm parse_norm(std::string_view text) {
  if (text == "1" || text == "l1") return Norm::L1;
  if (text == "2" || text == "l2") return Norm::L2;
  if (text == "inf" || text == "linf" || text == "Inf") return Norm::Linf;
  throw DomainError("unknown norm '" + std::string(text) + "' (expected 1, 2 or inf)");
}

// ---------------------------------------------------------------- PayoffMatrix

PayoffMatrix::PayoffMatrix(Mat entries) : m_(std::move(entries)) {
  if (m_.rows() < 1 || m_.cols() < 1) throw DimensionError("payoff matrix needs d >= 1 and A >= 1");
  if (!m_.allFinite()) throw DomainError("payoff matrix has non-finite entries");
}

PayoffMatrix PayoffMatrix::from_columns(
    std::initializer_list<std::initializer_list<double>> columns) {
  const auto actions = static_cast<Eigen::Index>(columns.size());
  if (actions == 0) throw DimensionError("no columns");
  const auto d = static_cast<Eigen::Index>(columns.begin()->size());
  Mat m(d, actions);
  Eigen::Index a = 0;
  for (const auto& col : columns) {
    if (static_cast<Eigen::Index>(col.size()) != d) throw DimensionError("ragged columns");
    Eigen::Index i = 0;
    for (double v : col) m(i++, a) = v;
    ++a;
  }
  return PayoffMatrix(std::move(m));
}

PayoffMatrix PayoffMatrix::from_flat(int d, int actions, const Vec& flat) {
  if (flat.size() != static_cast<Eigen::Index>(d) * actions) {
    throw DimensionError("flat payoff vector has the wrong length");
  }
  return PayoffMatrix(Eigen::Map<const Mat>(flat.data(), d, actions));
}

PayoffMatrix PayoffMatrix::zero(int d, int actions) { return PayoffMatrix(Mat::Zero(d, actions)); }

Vec PayoffMatrix::flattened() const { return Eigen::Map<const Vec>(m_.data(), m_.size()); }

PayoffMatrix& PayoffMatrix::operator+=(const PayoffMatrix& other) {
  if (m_.rows() != other.m_.rows() || m_.cols() != other.m_.cols()) {
    throw DimensionError("payoff matrix shapes differ");
  }
  m_ += other.m_;
  return *this;
}

PayoffMatrix& PayoffMatrix::operator-=(const PayoffMatrix& other) {
  if (m_.rows() != other.m_.rows() || m_.cols() != other.m_.cols()) {
    throw DimensionError("payoff matrix shapes differ");
  }
  m_ -= other.m_;
  return *this;
}

PayoffMatrix& PayoffMatrix::operator*=(double s) {
  m_ *= s;
  return *this;
}

// ---------------------------------------------------------------- MixedAction

MixedAction::MixedAction(Vec weights) : w_(std::move(weights)) {
  if (w_.size() < 1) throw DimensionError("mixed action over zero actions");
  if (!w_.allFinite()) throw DomainError("mixed action has non-finite weights");
  for (Eigen::Index a = 0; a < w_.size(); ++a) {
    if (w_(a) < -1e-12) throw DomainError("mixed action has a negative weight");
    w_(a) = std::max(w_(a), 0.0);
  }
  const double total = w_.sum();
  if (!(total > 0.0)) throw DomainError("mixed action weights sum to zero");
  if (total != 1.0) w_ /= total;
}

MixedAction MixedAction::uniform(int actions) {
  return MixedAction(Vec::Constant(actions, 1.0 / actions));
}

MixedAction MixedAction::pure(int actions, int a) {
  if (a < 0 || a >= actions) throw DimensionError("pure action index out of range");
  Vec w = Vec::Zero(actions);
  w(a) = 1.0;
  return MixedAction(std::move(w));
}

// ---------------------------------------------------------------- TargetSet

TargetSet TargetSet::negative_orthant(int d, Norm p) {
  if (d < 1) throw DimensionError("orthant dimension must be >= 1");
  return TargetSet(Kind::NegativeOrthant, d, p);
}

TargetSet TargetSet::singleton(Vec point, Norm p) {
  if (point.size() < 1 || !point.allFinite()) throw DomainError("bad singleton point");
  TargetSet s(Kind::Singleton, static_cast<int>(point.size()), p);
  s.point_ = std::move(point);
  return s;
}

TargetSet TargetSet::half_line_below(double threshold, Norm p) {
  if (!std::isfinite(threshold)) throw DomainError("bad half-line threshold");
  TargetSet s(Kind::HalfLineBelow, 1, p);
  s.threshold_ = threshold;
  return s;
}

TargetSet TargetSet::half_line_above(double threshold, Norm p) {
  if (!std::isfinite(threshold)) throw DomainError("bad half-line threshold");
  TargetSet s(Kind::HalfLineAbove, 1, p);
  s.threshold_ = threshold;
  return s;
}

TargetSet TargetSet::polytope(std::vector<Vec> vertices, Norm p) {
  if (vertices.empty()) throw DomainError("polytope needs at least one vertex");
  const auto d = vertices.front().size();
  for (const auto& v : vertices) {
    if (v.size() != d || d < 1) throw DimensionError("polytope vertices have mixed dimensions");
    if (!v.allFinite()) throw DomainError("polytope vertex is not finite");
  }
  TargetSet s(Kind::Polytope, static_cast<int>(d), p);
  s.vertices_ = std::move(vertices);
  return s;
}

TargetSet TargetSet::whole(int d, Norm p) {
  if (d < 1) throw DimensionError("dimension must be >= 1");
  return TargetSet(Kind::Whole, d, p);
}

TargetSet TargetSet::with_norm(Norm p) const {
  TargetSet s = *this;
  s.p_ = p;
  return s;
}

bool TargetSet::contains(const Vec& r, double tol) const { return distance(r, *this) <= tol; }

namespace {

std::string join(const Vec& v, char sep) {
  std::ostringstream os;
  os.precision(17);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v(i);
  }
  return os.str();
}

Vec parse_vector(std::string_view text, int d) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = text.find(',', pos);
    const auto piece = text.substr(pos, next == std::string_view::npos ? text.npos : next - pos);
    try {
      std::size_t used = 0;
      const std::string s(piece);
      values.push_back(std::stod(s, &used));
      if (used != s.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw DomainError("cannot parse number '" + std::string(piece) + "'");
    }
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (static_cast<int>(values.size()) != d) throw DimensionError("point has the wrong dimension");
  return Eigen::Map<Vec>(values.data(), static_cast<Eigen::Index>(values.size()));
}

}  // namespace

std::string TargetSet::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case Kind::NegativeOrthant:
      return "orthant";
    case Kind::Singleton:
      return "singleton:" + join(point_, ',');
    case Kind::HalfLineBelow:
      os << "below:" << threshold_;
      return os.str();
    case Kind::HalfLineAbove:
      os << "above:" << threshold_;
      return os.str();
    case Kind::Polytope: {
      os << "polytope:";
      for (std::size_t j = 0; j < vertices_.size(); ++j) {
        if (j) os << ';';
        os << join(vertices_[j], ',');
      }
      return os.str();
    }
    case Kind::Whole:
      return "whole";
  }
  return "?";
}

TargetSet TargetSet::parse(std::string_view text, int d, Norm p) {
  const auto colon = text.find(':');
  const auto head = text.substr(0, colon);
  const auto body = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (head == "orthant") return negative_orthant(d, p);
  if (head == "whole") return whole(d, p);
  if (head == "singleton") return singleton(parse_vector(body, d), p);
  if (head == "below" || head == "above") {
    if (d != 1) throw DimensionError("half-lines live in dimension 1");
    const double theta = parse_vector(body, 1)(0);
    return head == "below" ? half_line_below(theta, p) : half_line_above(theta, p);
  }
  if (head == "polytope") {
    std::vector<Vec> verts;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      const auto next = body.find(';', pos);
      verts.push_back(parse_vector(
          body.substr(pos, next == std::string_view::npos ? body.npos : next - pos), d));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
    return polytope(std::move(verts), p);
  }
  throw DomainError("unknown target set '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- ConvexBody

ConvexBody::ConvexBody(std::vector<PayoffMatrix> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw DomainError("convex body needs at least one vertex");
  for (const auto& v : vertices_) {
    if (v.dim() != vertices_.front().dim() || v.actions() != vertices_.front().actions()) {
      throw DimensionError("convex body vertices have mixed shapes");
    }
  }
}

double ConvexBody::distance(const PayoffMatrix& m) const {
  if (m.dim() != dim() || m.actions() != actions()) throw DimensionError("shape mismatch");
  if (vertices_.size() == 1) return (m.entries() - vertices_.front().entries()).norm();
  std::vector<Vec> flat;
  flat.reserve(vertices_.size());
  for (const auto& v : vertices_) flat.push_back(v.flattened());
  return approach::distance(m.flattened(), TargetSet::polytope(std::move(flat), Norm::L2));
}

// ---------------------------------------------------------------- free functions

Vec combine(const MixedAction& x, const PayoffMatrix& m) {
  if (x.size() != m.actions()) throw DimensionError("mixed action length differs from A");
  return m.entries() * x.weights();
}

namespace {

double polytope_distance(const Vec& r, const TargetSet& set) {
  QpModel model;
  std::vector<AffineExpr> point(static_cast<std::size_t>(r.size()));
  for (Eigen::Index i = 0; i < r.size(); ++i) point[static_cast<std::size_t>(i)].constant = r(i);
  const auto e = detail::residual_to_set(model, point, set);
  detail::add_norm_objective(model, e, set.norm());
  return detail::objective_to_norm(model.solve().objective, set.norm());
}

}  // namespace

double distance(const Vec& r, const TargetSet& set) {
  if (r.size() != set.dim()) throw DimensionError("point and target set dimensions differ");
  switch (set.kind()) {
    case TargetSet::Kind::NegativeOrthant:
      return norm_of(r.cwiseMax(0.0), set.norm());
    case TargetSet::Kind::Singleton:
      return norm_of(r - set.point(), set.norm());
    case TargetSet::Kind::HalfLineBelow:
      return std::max(0.0, r(0) - set.threshold());
    case TargetSet::Kind::HalfLineAbove:
      return std::max(0.0, set.threshold() - r(0));
    case TargetSet::Kind::Polytope:
      if (set.vertices().size() == 1) return norm_of(r - set.vertices().front(), set.norm());
      return polytope_distance(r, set);
    case TargetSet::Kind::Whole:
      return 0.0;
  }
  return 0.0;
}

double distance_to_expansion(const Vec& r, const TargetSet& set, double alpha) {
  if (!(alpha >= 0.0)) throw DomainError("expansion radius must be >= 0");
  return std::max(0.0, distance(r, set) - alpha);
}

double euclidean_distance_to_expansion(const Vec& r, const TargetSet& set, double alpha) {
  if (!(alpha >= 0.0)) throw DomainError("expansion radius must be >= 0");
  if (r.size() != set.dim()) throw DimensionError("point and target set dimensions differ");
  using K = TargetSet::Kind;
  if (set.kind() == K::Whole) return 0.0;
  if (set.norm() == Norm::L2 || set.dim() == 1) {
    // Norm balls coincide in R, and l2 expansions are Euclidean.
    const double d2 = set.norm() == Norm::L2 ? distance(r, set) : distance(r, set.with_norm(Norm::L2));
    return std::max(0.0, d2 - alpha);
  }
  if (set.norm() == Norm::Linf && set.kind() == K::NegativeOrthant) {
    return (r.array() - alpha).cwiseMax(0.0).matrix().norm();
  }
  if (set.norm() == Norm::Linf && set.kind() == K::Singleton) {
    return ((r - set.point()).cwiseAbs().array() - alpha).cwiseMax(0.0).matrix().norm();
  }
  // y = c + e with c in the set and ||e||_p <= alpha; minimize ||r - y||_2^2.
  QpModel model;
  std::vector<AffineExpr> point(static_cast<std::size_t>(r.size()));
  for (Eigen::Index i = 0; i < r.size(); ++i) point[static_cast<std::size_t>(i)].constant = r(i);
  auto e = detail::residual_to_set(model, point, set);
  const auto ball = detail::add_ball_vector(model, set.dim(), set.norm(), alpha);
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (const auto& t : ball[i].terms) e[i].add(t.var, -t.coef);
    model.add_squared_cost(e[i]);
  }
  return std::sqrt(std::max(0.0, model.solve().objective));
}

MixedAction project_to_simplex(const Vec& v) {
  if (v.size() < 1) throw DimensionError("empty vector");
  if (!v.allFinite()) throw DomainError("non-finite input");
  std::vector<double> u(v.data(), v.data() + v.size());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cumulative += u[j];
    const double t = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) theta = t;
  }
  return MixedAction((v.array() - theta).cwiseMax(0.0).matrix());
}

double body_norm_bound(const ConvexBody& body) {
  const auto& verts = body.vertices();
  double best = 0.0;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    best = std::max(best, verts[i].entries().norm());
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      best = std::max(best, (verts[i].entries() - verts[j].entries()).norm());
    }
  }
  return best;
}

}  // namespace approach
