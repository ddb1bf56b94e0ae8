#pragma once

// Band-limited spectral analysis on S^{n-1}, n = 2,3: quadrature grids,
// forward/inverse harmonic transforms, pointwise evaluation, coordinate
// multiplication, and ambient partial derivatives of homogeneous extensions.
//
// Conventions:
//   n=2: f(theta) = sum_{|m|<=L} c_m e^{i m theta}, coefficients ordered
//        m = -L..L.  ||f||_{L^2(S^1)}^2 = 2 pi sum |c_m|^2.
//   n=3: f = sum_{l<=L,|m|<=l} c_{lm} Y_lm with orthonormal complex Y_lm
//        (Condon-Shortley), ordered (l,m) lexicographic, index l^2 + l + m.
//        ||f||^2 = sum |c_lm|^2.

#include <Eigen/Core>
#include <complex>
#include <memory>
#include <vector>

#include "valfour/exterior.hpp"

namespace valfour {

struct SphereGrid {
  int n = 0;         // ambient dimension (2 or 3)
  int capacity = 0;  // analyze(samples of band <= capacity, L = capacity) is exact
  Eigen::MatrixXd nodes;   // (#nodes) x n unit vectors
  Eigen::VectorXd weights; // positive, sum = area of S^{n-1}

  // n=3 internals
  int n_theta = 0, n_phi = 0;
  Eigen::VectorXd gl_x, gl_w;      // Gauss-Legendre nodes/weights in cos(theta)
  Eigen::MatrixXd plm;             // n_theta x n_modes(capacity): normalized P_l^m(cos theta), m >= 0 slots reused

  int node_count() const { return static_cast<int>(nodes.rows()); }

  // Immutable cached handle.
  static const SphereGrid& get(int n, int capacity);
};

// n=1 degenerate case: fields on S^0 = {+1,-1} are stored as the two point
// values, coeffs = (f(+1), f(-1)); every band limit represents them exactly.
struct SpectralField {
  int n = 0;
  int L = 0;
  Eigen::VectorXcd coeffs;

  SpectralField() = default;
  SpectralField(int dim, int band);

  static int mode_count(int n, int L) {
    if (n == 1) return 2;
    return n == 2 ? 2 * L + 1 : (L + 1) * (L + 1);
  }

  // n=1 accessors
  cplx& pv(int s) { return coeffs[s > 0 ? 0 : 1]; }
  cplx pv(int s) const { return coeffs[s > 0 ? 0 : 1]; }

  // n=2 accessors (m in -L..L)
  cplx& cm(int m) { return coeffs[m + L]; }
  cplx cm(int m) const { return (std::abs(m) <= L) ? coeffs[m + L] : cplx(0); }
  // n=3 accessors
  cplx& clm(int l, int m) { return coeffs[l * l + l + m]; }
  cplx clm(int l, int m) const { return (l <= L && std::abs(m) <= l) ? coeffs[l * l + l + m] : cplx(0); }

  SpectralField resized(int newL) const;  // truncate or zero-pad
  double norm_l2() const;                 // L^2(S^{n-1}) norm
  bool is_real(double tol = 1e-12) const;

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(cplx s);
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(cplx s, SpectralField a);

// Forward transform: exact for samples of band <= L when grid.capacity >= L.
SpectralField analyze(const Eigen::VectorXcd& samples, const SphereGrid& grid, int L);

// Truncated harmonic series at the grid nodes.
Eigen::VectorXcd synthesize(const SpectralField& f, const SphereGrid& grid);

// Pointwise evaluation at an arbitrary unit vector.
cplx eval_at(const SpectralField& f, const Eigen::VectorXd& u);

// Pointwise product, dealiased on an exact grid of order L_f + L_g.
SpectralField multiply(const SpectralField& f, const SpectralField& g);

// Multiplication by the coordinate function u_j (j in 1..n); band limit L+1.
SpectralField coordinate_multiply(const SpectralField& f, int j);

// Returns g with  d/dy_j (|y|^r f(y/|y|)) = |y|^{r-1} g(y/|y|).
SpectralField ambient_partial(const SpectralField& f, int r, int j);

// Composition with the antipodal map u -> -u.
SpectralField antipode(const SpectralField& f);

// Heat-kernel smoothing: modes scaled by exp(-eps m^2) resp. exp(-eps l(l+1)).
SpectralField mollify_field(const SpectralField& f, double eps);

// Projections onto even / odd parts under the antipodal map.
SpectralField parity_project(const SpectralField& f, int parity);  // parity = +1 or -1

// <f,g> = integral over the sphere of conj(f) g.
cplx inner(const SpectralField& f, const SpectralField& g);

// integral over the sphere of f.
cplx integral(const SpectralField& f);

SpectralField constant_field(int n, int L, cplx value);

// Field of the coordinate function u_j restricted to the sphere.
SpectralField coordinate_field(int n, int j, int L);

// Deterministic random band-limited field (real-valued samples).
SpectralField random_real_field(int n, int L, unsigned seed);

double sphere_area(int n);  // area of S^{n-1}

}  // namespace valfour
