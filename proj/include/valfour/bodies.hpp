#pragma once

// Convex bodies as vertex lists, support functions, projection volumes, and
// the analytic intrinsic volumes of boxes.

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "valfour/exterior.hpp"

namespace valfour {

struct Polytope {
  int n = 0;
  Eigen::MatrixXd vertices;  // (#vertices) x n

  static Polytope box(const std::vector<double>& lo, const std::vector<double>& hi);
  static Polytope segment(double a, double b);  // on R^1
  static Polytope from_rows(int n, const std::vector<std::vector<double>>& rows);
};

double support(const Polytope& K, const Eigen::VectorXd& u);

// length of the projection of K onto the line spanned by the unit vector v
double shadow_length(const Polytope& K, const Eigen::VectorXd& v);

// area of the projection of K (in R^3) onto the plane with unit normal u
double shadow_area(const Polytope& K, const Eigen::VectorXd& u);

// vol(P_{E^perp} K) for the subspace E spanned by the given orthonormal
// frame columns (n <= 3, dim E in {1, n-1})
double projection_volume(const Polytope& K, const Eigen::MatrixXd& frame);

// intrinsic volume V_k of an axis-aligned box with the given edge lengths
double box_intrinsic_volume(const std::vector<double>& edges, int k);

// edge lengths if K is (a translate of) an axis-aligned box
std::optional<std::vector<double>> as_box_edges(const Polytope& K);

// area of the convex hull of a 2D point set (monotone chain)
double hull_area_2d(std::vector<std::pair<double, double>> pts);

// counterclockwise ordered hull vertices (strictly convex positions)
std::vector<std::pair<double, double>> ordered_hull_2d(std::vector<std::pair<double, double>> pts);

}  // namespace valfour
