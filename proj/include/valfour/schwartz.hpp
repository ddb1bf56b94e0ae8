#pragma once

// Test forms with polynomial x Gaussian coefficients on R^n, n <= 4:
//   omega = sum_I P_I(x) e^{-pi |x|^2} dx_I.
// The class is closed under the Fourier transform of forms (computed exactly
// through derivative algebra on the self-dual Gaussian), wedge, exterior
// products across factors, restriction along isometric inclusions, and exact
// pairing integrals.  Used as the Schwartz-class test space for all weak
// identities.

#include <Eigen/Core>
#include <array>
#include <map>
#include <vector>

#include "valfour/exterior.hpp"

namespace valfour {

struct Poly {
  // exponent tuple -> coefficient; variables x_1..x_4 (unused ones zero)
  std::map<std::array<std::uint8_t, 4>, cplx> terms;

  static Poly constant(cplx c);
  static Poly variable(int j);  // x_j
  bool empty() const { return terms.empty(); }
  Poly& prune(double tol = 0.0);
  cplx eval(const double* x, int n) const;
  int degree() const;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(cplx s, const Poly& a);
Poly derivative(const Poly& a, int j);
// substitute x -> A y (A is n_src x n_dst), yielding a polynomial in y
Poly compose_linear(const Poly& a, int n_src, int n_dst, const double* A);

struct SchwartzForm {
  int n = 0;
  int q = 0;
  std::map<MultiIndex, Poly> coeffs;
  UnitTag unit;

  SchwartzForm() = default;
  SchwartzForm(int dim, int degree) : n(dim), q(degree) {}

  static SchwartzForm gaussian(int n);  // e^{-pi|x|^2}, a 0-form
  SchwartzForm& add_term(const std::vector<int>& blade, const Poly& P);
};

SchwartzForm operator+(const SchwartzForm& a, const SchwartzForm& b);
SchwartzForm operator*(cplx s, const SchwartzForm& a);

// Fourier transform of the form per the Hodge-star definition with kernel
// e^{2 pi i <x,xi>}: output degree n-q on the dual space; unit gains or(V).
SchwartzForm fourier(const SchwartzForm& w, const std::string& space_label = "V");

// Pullback x -> -x (acts on blades and coefficients, not values).
SchwartzForm antipodal_pullback(const SchwartzForm& w);

// Exact pairing <a, b> = int_{R^n} a ^ b (complementary degrees).
cplx pairing(const SchwartzForm& a, const SchwartzForm& b);

// Exterior product across a factor splitting R^{n1} x R^{n2}; blades of b are
// shifted past those of a (coordinates of a first).
SchwartzForm boxtimes(const SchwartzForm& a, const SchwartzForm& b);

// Pullback along an isometric inclusion e: R^j -> R^n (columns orthonormal).
SchwartzForm restrict_isometric(const SchwartzForm& w, const Eigen::MatrixXd& e);

// d and contraction with the Euler field, exact.
SchwartzForm ext_derivative(const SchwartzForm& w);
SchwartzForm interior_euler(const SchwartzForm& w);

// Coefficient value (polynomial times Gaussian) at a point.
cplx eval_form_coeff(const SchwartzForm& w, const MultiIndex& I, const double* x);

// Deterministic random test form of pure degree q with poly degree <= deg.
SchwartzForm random_schwartz(int n, int q, int deg, unsigned seed);

}  // namespace valfour
