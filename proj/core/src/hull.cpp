#include "approach/hull.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "approach/error.hpp"

namespace approach {

// ---------------------------------------------------------------- 1-D

UpperEnvelope1d::UpperEnvelope1d(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size()) throw DimensionError("envelope inputs differ in length");
  if (xs.size() < 2) throw DomainError("envelope needs at least 2 samples");
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return xs[a] < xs[b]; });

  for (std::size_t k : order) {
    const double x = xs[k];
    const double y = ys[k];
    if (!hx_.empty() && hx_.back() == x) {
      if (y <= hy_.back()) continue;
      hx_.pop_back();
      hy_.pop_back();
    }
    while (hx_.size() >= 2) {
      const std::size_t n = hx_.size();
      const double cross = (hx_[n - 1] - hx_[n - 2]) * (y - hy_[n - 2]) -
                           (hy_[n - 1] - hy_[n - 2]) * (x - hx_[n - 2]);
      if (cross < 0.0) break;
      hx_.pop_back();
      hy_.pop_back();
    }
    hx_.push_back(x);
    hy_.push_back(y);
  }
}

double UpperEnvelope1d::operator()(double x) const {
  if (hx_.size() == 1 || x <= hx_.front()) return hy_.front();
  if (x >= hx_.back()) return hy_.back();
  const auto it = std::upper_bound(hx_.begin(), hx_.end(), x);
  const auto j = static_cast<std::size_t>(it - hx_.begin());
  const double t = (x - hx_[j - 1]) / (hx_[j] - hx_[j - 1]);
  return hy_[j - 1] + t * (hy_[j] - hy_[j - 1]);
}

// ---------------------------------------------------------------- 2-D

namespace {

using P3 = std::array<double, 3>;

P3 sub(const P3& a, const P3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
P3 cross(const P3& a, const P3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot(const P3& a, const P3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double length(const P3& a) { return std::sqrt(dot(a, a)); }

std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Face {
  std::array<int, 3> v;
  P3 normal;  // unit, outward
  double offset;
  bool alive = true;
};

class Hull3d {
 public:
  explicit Hull3d(const std::vector<P3>& pts) : p_(pts) {}

  void build() {
    const int n = static_cast<int>(p_.size());
    std::array<int, 4> t = initial_tetrahedron();
    P3 centroid{0, 0, 0};
    for (int i : t) {
      for (int k = 0; k < 3; ++k) centroid[k] += p_[static_cast<std::size_t>(i)][k] / 4.0;
    }
    const std::array<std::array<int, 3>, 4> tri{{{t[0], t[1], t[2]}, {t[0], t[1], t[3]},
                                                 {t[0], t[2], t[3]}, {t[1], t[2], t[3]}}};
    for (auto f : tri) {
      Face face = make_face(f[0], f[1], f[2]);
      if (dot(face.normal, centroid) - face.offset > 0.0) face = make_face(f[0], f[2], f[1]);
      add_face(face);
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [](int a, int b) {
      return mix(static_cast<std::uint64_t>(a)) < mix(static_cast<std::uint64_t>(b));
    });
    std::vector<char> visible;
    std::vector<int> vis;
    std::vector<std::pair<int, int>> horizon;
    for (int i : order) {
      if (i == t[0] || i == t[1] || i == t[2] || i == t[3]) continue;
      const P3& q = p_[static_cast<std::size_t>(i)];
      vis.clear();
      for (int f : alive_) {
        const Face& face = faces_[static_cast<std::size_t>(f)];
        if (dot(face.normal, q) - face.offset > eps_) vis.push_back(f);
      }
      if (vis.empty()) continue;
      visible.assign(faces_.size(), 0);
      for (int f : vis) visible[static_cast<std::size_t>(f)] = 1;
      horizon.clear();
      for (int f : vis) {
        const auto& v = faces_[static_cast<std::size_t>(f)].v;
        for (int e = 0; e < 3; ++e) {
          const int a = v[static_cast<std::size_t>(e)];
          const int b = v[static_cast<std::size_t>((e + 1) % 3)];
          const auto it = edges_.find(key(b, a));
          if (it == edges_.end() || !visible[static_cast<std::size_t>(it->second)]) {
            horizon.emplace_back(a, b);
          }
        }
      }
      for (int f : vis) {
        auto& face = faces_[static_cast<std::size_t>(f)];
        face.alive = false;
        for (int e = 0; e < 3; ++e) {
          edges_.erase(key(face.v[static_cast<std::size_t>(e)], face.v[static_cast<std::size_t>((e + 1) % 3)]));
        }
      }
      for (const auto& [a, b] : horizon) add_face(make_face(a, b, i));
      alive_.erase(std::remove_if(alive_.begin(), alive_.end(),
                                  [&](int f) { return !faces_[static_cast<std::size_t>(f)].alive; }),
                   alive_.end());
    }
  }

  std::vector<Face> faces() const {
    std::vector<Face> out;
    for (int f : alive_) out.push_back(faces_[static_cast<std::size_t>(f)]);
    return out;
  }

 private:
  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }

  Face make_face(int a, int b, int c) const {
    Face f;
    f.v = {a, b, c};
    const P3& pa = p_[static_cast<std::size_t>(a)];
    P3 nrm = cross(sub(p_[static_cast<std::size_t>(b)], pa), sub(p_[static_cast<std::size_t>(c)], pa));
    const double len = length(nrm);
    if (len > 0.0) {
      for (double& v : nrm) v /= len;
    }
    f.normal = nrm;
    f.offset = dot(nrm, pa);
    return f;
  }

  void add_face(const Face& f) {
    const int idx = static_cast<int>(faces_.size());
    faces_.push_back(f);
    alive_.push_back(idx);
    for (int e = 0; e < 3; ++e) {
      edges_[key(f.v[static_cast<std::size_t>(e)], f.v[static_cast<std::size_t>((e + 1) % 3)])] = idx;
    }
  }

  std::array<int, 4> initial_tetrahedron() {
    const int n = static_cast<int>(p_.size());
    const auto at = [&](int i) -> const P3& { return p_[static_cast<std::size_t>(i)]; };
    double scale = 0.0;
    for (const auto& q : p_) scale = std::max({scale, std::abs(q[0]), std::abs(q[1]), std::abs(q[2])});
    eps_ = 1e-13 * (1.0 + scale);

    int a = 0;
    for (int i = 1; i < n; ++i) {
      if (at(i)[0] < at(a)[0] || (at(i)[0] == at(a)[0] && at(i)[1] < at(a)[1])) a = i;
    }
    int b = a;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      const double dd = length(sub(at(i), at(a)));
      if (dd > best) {
        best = dd;
        b = i;
      }
    }
    int c = a;
    best = -1.0;
    const P3 ab = sub(at(b), at(a));
    for (int i = 0; i < n; ++i) {
      const double dd = length(cross(ab, sub(at(i), at(a))));
      if (dd > best) {
        best = dd;
        c = i;
      }
    }
    const P3 nrm = cross(ab, sub(at(c), at(a)));
    int d = a;
    best = -1.0;
    for (int i = 0; i < n; ++i) {
      const double dd = std::abs(dot(nrm, sub(at(i), at(a))));
      if (dd > best) {
        best = dd;
        d = i;
      }
    }
    if (!(best > 0.0) || a == b || c == a || c == b) throw DomainError("degenerate point set");
    return {a, b, c, d};
  }

  const std::vector<P3>& p_;
  std::vector<Face> faces_;
  std::vector<int> alive_;
  std::unordered_map<std::uint64_t, int> edges_;
  double eps_ = 0.0;
};

}  // namespace

UpperEnvelope2d::UpperEnvelope2d(const std::vector<std::array<double, 2>>& sites,
                                 const std::vector<double>& values)
    : sites_(sites), values_(values) {
  if (sites.size() != values.size()) throw DimensionError("envelope inputs differ in length");
  if (sites.size() < 2) throw DomainError("envelope needs at least 2 samples");

  double xmin = sites[0][0], xmax = xmin, ymin = sites[0][1], ymax = ymin;
  for (const auto& s : sites) {
    xmin = std::min(xmin, s[0]);
    xmax = std::max(xmax, s[0]);
    ymin = std::min(ymin, s[1]);
    ymax = std::max(ymax, s[1]);
  }
  const double extent = std::max({xmax - xmin, ymax - ymin, 1e-300});

  // Collinear sites: reduce to one dimension along the spanning direction.
  std::size_t far = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const double dd = std::hypot(sites[i][0] - sites[0][0], sites[i][1] - sites[0][1]);
    if (dd > best) {
      best = dd;
      far = i;
    }
  }
  const double ux = sites[far][0] - sites[0][0];
  const double uy = sites[far][1] - sites[0][1];
  double spread = 0.0;
  for (const auto& s : sites) {
    spread = std::max(spread, std::abs(ux * (s[1] - sites[0][1]) - uy * (s[0] - sites[0][0])));
  }
  if (best <= 0.0 || spread <= 1e-12 * extent * extent) {
    line_ = true;
    origin_ = sites[0];
    direction_ = {ux, uy};
    const double len2 = ux * ux + uy * uy;
    std::vector<double> ts;
    for (const auto& s : sites) {
      ts.push_back(len2 > 0.0 ? ((s[0] - origin_[0]) * ux + (s[1] - origin_[1]) * uy) / len2 : 0.0);
    }
    if (len2 == 0.0) {
      ts.push_back(1.0);
      values_.push_back(*std::max_element(values.begin(), values.end()));
    }
    line_env_.emplace_back(ts, len2 == 0.0 ? values_ : values);
    return;
  }

  // Lift with a tiny deterministic perturbation so that coplanar samples do
  // not produce degenerate facets; facet values use the exact samples.
  double fscale = 1.0;
  for (double v : values) fscale = std::max(fscale, std::abs(v));
  std::vector<P3> lifted(sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const double u = static_cast<double>(mix(i) >> 11) * 0x1.0p-53;
    lifted[i] = {sites[i][0], sites[i][1], values[i] + 1e-9 * fscale * u};
  }
  Hull3d hull(lifted);
  hull.build();
  for (const auto& f : hull.faces()) {
    if (f.normal[2] <= 1e-12) continue;
    const auto& a = sites[static_cast<std::size_t>(f.v[0])];
    const auto& b = sites[static_cast<std::size_t>(f.v[1])];
    const auto& c = sites[static_cast<std::size_t>(f.v[2])];
    const double area = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    if (std::abs(area) <= 1e-14 * extent * extent) continue;
    facets_.push_back({f.v});
  }

  x0_ = xmin;
  y0_ = ymin;
  const int side = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(facets_.size()) / 2.0)));
  nx_ = ny_ = side;
  cell_x_ = std::max(xmax - xmin, 1e-300) / nx_;
  cell_y_ = std::max(ymax - ymin, 1e-300) / ny_;
  buckets_.assign(static_cast<std::size_t>(nx_ * ny_), {});
  const auto cell = [&](double v, double origin, double width, int count) {
    return std::clamp(static_cast<int>(std::floor((v - origin) / width)), 0, count - 1);
  };
  for (std::size_t k = 0; k < facets_.size(); ++k) {
    double lx = std::numeric_limits<double>::infinity(), hx = -lx, ly = lx, hy = -lx;
    for (int v : facets_[k].v) {
      lx = std::min(lx, sites[static_cast<std::size_t>(v)][0]);
      hx = std::max(hx, sites[static_cast<std::size_t>(v)][0]);
      ly = std::min(ly, sites[static_cast<std::size_t>(v)][1]);
      hy = std::max(hy, sites[static_cast<std::size_t>(v)][1]);
    }
    const double pad_x = 1e-9 * extent;
    const int i0 = cell(lx - pad_x, x0_, cell_x_, nx_), i1 = cell(hx + pad_x, x0_, cell_x_, nx_);
    const int j0 = cell(ly - pad_x, y0_, cell_y_, ny_), j1 = cell(hy + pad_x, y0_, cell_y_, ny_);
    for (int i = i0; i <= i1; ++i) {
      for (int j = j0; j <= j1; ++j) buckets_[static_cast<std::size_t>(i * ny_ + j)].push_back(static_cast<int>(k));
    }
  }
}

double UpperEnvelope2d::facet_value(const Facet& f, double x, double y, bool& inside) const {
  const auto& a = sites_[static_cast<std::size_t>(f.v[0])];
  const auto& b = sites_[static_cast<std::size_t>(f.v[1])];
  const auto& c = sites_[static_cast<std::size_t>(f.v[2])];
  const double det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  const double l1 = ((x - a[0]) * (c[1] - a[1]) - (y - a[1]) * (c[0] - a[0])) / det;
  const double l2 = ((b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0])) / det;
  const double l0 = 1.0 - l1 - l2;
  const double tol = -1e-9;
  inside = l0 >= tol && l1 >= tol && l2 >= tol;
  return l0 * values_[static_cast<std::size_t>(f.v[0])] + l1 * values_[static_cast<std::size_t>(f.v[1])] +
         l2 * values_[static_cast<std::size_t>(f.v[2])];
}

double UpperEnvelope2d::operator()(double x, double y) const {
  if (line_) {
    const double len2 = direction_[0] * direction_[0] + direction_[1] * direction_[1];
    const double t =
        len2 > 0.0 ? ((x - origin_[0]) * direction_[0] + (y - origin_[1]) * direction_[1]) / len2 : 0.0;
    return line_env_.front()(t);
  }
  const int i = std::clamp(static_cast<int>(std::floor((x - x0_) / cell_x_)), 0, nx_ - 1);
  const int j = std::clamp(static_cast<int>(std::floor((y - y0_) / cell_y_)), 0, ny_ - 1);
  double found = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (int k : buckets_[static_cast<std::size_t>(i * ny_ + j)]) {
    bool inside = false;
    const double v = facet_value(facets_[static_cast<std::size_t>(k)], x, y, inside);
    if (inside) {
      found = std::max(found, v);
      any = true;
    }
  }
  if (any) return found;
  double lowest = std::numeric_limits<double>::infinity();
  for (const auto& f : facets_) {
    bool inside = false;
    lowest = std::min(lowest, facet_value(f, x, y, inside));
  }
  return lowest;
}

}  // namespace approach
