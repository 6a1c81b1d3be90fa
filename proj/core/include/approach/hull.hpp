#pragma once

#include <array>
#include <vector>

namespace approach {

/// Least concave majorant of the samples (x_i, y_i) on [min x, max x].
class UpperEnvelope1d {
 public:
  UpperEnvelope1d(const std::vector<double>& xs, const std::vector<double>& ys);
  /// Clamped to the sampled interval.
  double operator()(double x) const;
  const std::vector<double>& knots_x() const noexcept { return hx_; }
  const std::vector<double>& knots_y() const noexcept { return hy_; }

 private:
  std::vector<double> hx_;
  std::vector<double> hy_;
};

/// Least concave majorant of scattered samples (x_i, y_i, f_i) over the
/// convex hull of the (x_i, y_i): the upper facets of the 3-D convex hull of
/// the lifted points. Collinear sample sites fall back to the 1-D envelope.
class UpperEnvelope2d {
 public:
  UpperEnvelope2d(const std::vector<std::array<double, 2>>& sites, const std::vector<double>& values);
  /// Points outside the hull of the sites get the minimum over facet planes.
  double operator()(double x, double y) const;
  std::size_t facet_count() const noexcept { return facets_.size(); }

 private:
  struct Facet {
    std::array<int, 3> v;
  };
  double facet_value(const Facet& f, double x, double y, bool& inside) const;

  std::vector<std::array<double, 2>> sites_;
  std::vector<double> values_;
  std::vector<Facet> facets_;
  // Bucket index over the sites' bounding box.
  double x0_ = 0, y0_ = 0, cell_x_ = 1, cell_y_ = 1;
  int nx_ = 1, ny_ = 1;
  std::vector<std::vector<int>> buckets_;
  // Degenerate (collinear) input.
  bool line_ = false;
  std::array<double, 2> origin_{}, direction_{};
  std::vector<UpperEnvelope1d> line_env_;
};

}  // namespace approach
