#include "valfour/bodies.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace valfour {

Polytope Polytope::box(const std::vector<double>& lo, const std::vector<double>& hi) {
  int n = static_cast<int>(lo.size());
  if (hi.size() != lo.size()) throw std::invalid_argument("Polytope::box: size mismatch");
  Polytope K;
  K.n = n;
  int m = 1 << n;
  K.vertices.resize(m, n);
  for (int mask = 0; mask < m; ++mask)
    for (int j = 0; j < n; ++j) K.vertices(mask, j) = (mask >> j & 1) ? hi[j] : lo[j];
  return K;
}

Polytope Polytope::segment(double a, double b) {
  Polytope K;
  K.n = 1;
  K.vertices.resize(2, 1);
  K.vertices(0, 0) = a;
  K.vertices(1, 0) = b;
  return K;
}

Polytope Polytope::from_rows(int n, const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw std::invalid_argument("Polytope: empty vertex list");
  Polytope K;
  K.n = n;
  K.vertices.resize(static_cast<int>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw std::invalid_argument("Polytope: bad vertex");
    for (int j = 0; j < n; ++j) K.vertices(static_cast<int>(i), j) = rows[i][j];
  }
  return K;
}

double support(const Polytope& K, const Eigen::VectorXd& u) {
  return (K.vertices * u).maxCoeff();
}

double shadow_length(const Polytope& K, const Eigen::VectorXd& v) {
  Eigen::VectorXd proj = K.vertices * v;
  return proj.maxCoeff() - proj.minCoeff();
}

double hull_area_2d(std::vector<std::pair<double, double>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  int m = static_cast<int>(pts.size());
  if (m < 3) return 0.0;
  auto cross = [](const std::pair<double, double>& o, const std::pair<double, double>& a,
                  const std::pair<double, double>& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<double, double>> hull(2 * m);
  int k = 0;
  for (int i = 0; i < m; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  int lower = k + 1;
  for (int i = m - 2; i >= 0; --i) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  double area = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    auto& a = hull[i];
    auto& b = hull[(i + 1) % hull.size()];
    area += a.first * b.second - b.first * a.second;
  }
  return 0.5 * std::abs(area);
}

std::vector<std::pair<double, double>> ordered_hull_2d(std::vector<std::pair<double, double>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  int m = static_cast<int>(pts.size());
  if (m <= 2) return pts;
  auto cross = [](const std::pair<double, double>& o, const std::pair<double, double>& a,
                  const std::pair<double, double>& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<double, double>> hull(2 * m);
  int k = 0;
  for (int i = 0; i < m; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  int lower = k + 1;
  for (int i = m - 2; i >= 0; --i) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  // the monotone chain above is clockwise for this cross convention; reverse
  double area = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    auto& a = hull[i];
    auto& b = hull[(i + 1) % hull.size()];
    area += a.first * b.second - b.first * a.second;
  }
  if (area < 0) std::reverse(hull.begin(), hull.end());
  return hull;
}

double shadow_area(const Polytope& K, const Eigen::VectorXd& u) {
  if (K.n != 3) throw std::invalid_argument("shadow_area: need a body in R^3");
  // orthonormal basis of u^perp
  Eigen::Vector3d w = u;
  Eigen::Vector3d a = std::abs(w[2]) < 0.9 ? Eigen::Vector3d(0, 0, 1).cross(w).normalized()
                                           : Eigen::Vector3d(1, 0, 0).cross(w).normalized();
  Eigen::Vector3d b = w.cross(a);
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < K.vertices.rows(); ++i) {
    Eigen::Vector3d v = K.vertices.row(i).transpose();
    pts.push_back({v.dot(a), v.dot(b)});
  }
  return hull_area_2d(std::move(pts));
}

double projection_volume(const Polytope& K, const Eigen::MatrixXd& frame) {
  int dimE = static_cast<int>(frame.cols());
  if (K.n == 2) {
    if (dimE != 1) throw std::invalid_argument("projection_volume: need a line in R^2");
    Eigen::Vector2d u = frame.col(0);
    Eigen::Vector2d v(-u[1], u[0]);  // E^perp direction
    return shadow_length(K, v);
  }
  if (K.n == 3) {
    if (dimE == 1) return shadow_area(K, frame.col(0).normalized());
    if (dimE == 2) {
      Eigen::Vector3d a = frame.col(0), b = frame.col(1);
      Eigen::Vector3d nu = a.cross(b).normalized();
      return shadow_length(K, nu);
    }
  }
  throw std::invalid_argument("projection_volume: unsupported configuration");
}

double box_intrinsic_volume(const std::vector<double>& edges, int k) {
  int n = static_cast<int>(edges.size());
  if (k < 0 || k > n) throw std::invalid_argument("box_intrinsic_volume: bad degree");
  // elementary symmetric polynomial e_k of the edge lengths
  std::vector<double> e(k + 1, 0.0);
  e[0] = 1.0;
  for (double x : edges)
    for (int j = std::min<int>(k, n); j >= 1; --j) e[j] += x * e[j - 1];
  return e[k];
}

std::optional<std::vector<double>> as_box_edges(const Polytope& K) {
  int n = K.n;
  if (K.vertices.rows() != (1 << n)) return std::nullopt;
  std::vector<double> lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    lo[j] = K.vertices.col(j).minCoeff();
    hi[j] = K.vertices.col(j).maxCoeff();
  }
  // every corner must be present
  std::set<std::vector<double>> have;
  for (int i = 0; i < K.vertices.rows(); ++i) {
    std::vector<double> v(n);
    for (int j = 0; j < n; ++j) v[j] = K.vertices(i, j);
    have.insert(v);
  }
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<double> v(n);
    for (int j = 0; j < n; ++j) v[j] = (mask >> j & 1) ? hi[j] : lo[j];
    bool found = false;
    for (auto& h : have) {
      double d = 0;
      for (int j = 0; j < n; ++j) d += std::abs(h[j] - v[j]);
      if (d < 1e-12) { found = true; break; }
    }
    if (!found) return std::nullopt;
  }
  std::vector<double> edges(n);
  for (int j = 0; j < n; ++j) edges[j] = hi[j] - lo[j];
  return edges;
}

}  // namespace valfour
