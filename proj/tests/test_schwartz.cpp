#include <doctest.h>

#include <cmath>

#include "valfour/quadrature.hpp"
#include "valfour/schwartz.hpp"

using namespace valfour;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Direct quadrature of F(P e^{-pi|x|^2})(xi) = int P(x) e^{-pi|x|^2 + 2 pi i <x,xi>} dx in 2D.
cplx brute_fourier_2d(const Poly& P, double xi1, double xi2) {
  Quad1D q = paneled_gl(12, -6.0, 6.0, 24);
  cplx acc = 0;
  for (std::size_t i = 0; i < q.x.size(); ++i) {
    for (std::size_t j = 0; j < q.x.size(); ++j) {
      double x[2] = {q.x[i], q.x[j]};
      double r2 = x[0] * x[0] + x[1] * x[1];
      acc += q.w[i] * q.w[j] * P.eval(x, 2) * std::exp(-kPi * r2) *
             std::exp(cplx(0, 2 * kPi * (x[0] * xi1 + x[1] * xi2)));
    }
  }
  return acc;
}
}  // namespace

TEST_CASE("Gaussian self-duality and monomial transforms against quadrature") {
  // 0-form coefficients: compare against brute-force 2D quadrature
  for (auto& P : {Poly::constant(1.0), Poly::variable(1), Poly::variable(1) * Poly::variable(2),
                  Poly::variable(2) * Poly::variable(2)}) {
    SchwartzForm w(2, 0);
    w.coeffs[MultiIndex(0, 2)] = P;
    SchwartzForm fw = fourier(w);
    // for a 0-form the transform places the coefficient on the full blade
    const Poly& Q = fw.coeffs.at(MultiIndex::from_indices({1, 2}, 2));
    for (auto [x1, x2] : {std::pair{0.3, -0.7}, std::pair{1.1, 0.2}, std::pair{0.0, 0.0}}) {
      double xi[2] = {x1, x2};
      cplx expect = brute_fourier_2d(P, x1, x2);
      cplx got = Q.eval(xi, 2) * std::exp(-kPi * (x1 * x1 + x2 * x2));
      CHECK(std::abs(got - expect) < 1e-10);
    }
  }
}

TEST_CASE("Fourier inversion on Schwartz forms: F F = (-1)^{qn} (-id)^*") {
  for (int n : {1, 2, 3}) {
    for (int q = 0; q <= n; ++q) {
      SchwartzForm w = random_schwartz(n, q, 2, 100 + 10 * n + q);
      SchwartzForm ff = fourier(fourier(w));
      double sign = ((q * n) % 2 == 0) ? 1.0 : -1.0;
      SchwartzForm expect = sign * antipodal_pullback(w);
      // compare coefficients pointwise
      for (auto& [I, P] : expect.coeffs) {
        Poly diff = ff.coeffs.count(I) ? (ff.coeffs.at(I) - P) : (cplx(-1) * P);
        for (auto& [e, c] : diff.terms) CHECK(std::abs(c) < 1e-12);
      }
    }
  }
}

TEST_CASE("pairing symmetry <F w, eta> = (-1)^{q(n-q)} <w, F eta>") {
  for (int n : {2, 3}) {
    for (int q = 0; q <= n; ++q) {
      SchwartzForm w = random_schwartz(n, q, 2, 7 * n + q);
      SchwartzForm eta = random_schwartz(n, q, 2, 90 + n + q);
      cplx lhs = pairing(fourier(w), eta);
      cplx rhs = pairing(w, fourier(eta));
      double sign = ((q * (n - q)) % 2 == 0) ? 1.0 : -1.0;
      CHECK(std::abs(lhs - sign * rhs) < 1e-12 * (1 + std::abs(lhs)));
    }
  }
}

TEST_CASE("d and i_E interchange under F with factor (-1)^{q+1} 2 pi i") {
  for (int n : {2, 3}) {
    for (int q = 0; q < n; ++q) {
      SchwartzForm w = random_schwartz(n, q, 2, 55 + n + q);
      SchwartzForm lhs = fourier(ext_derivative(w));
      SchwartzForm rhs = interior_euler(fourier(w));
      double sign = ((q + 1) % 2 == 0) ? 1.0 : -1.0;
      cplx factor = sign * cplx(0, 2 * kPi);
      // lhs = factor * rhs
      for (auto& [I, P] : lhs.coeffs) {
        Poly diff = P - factor * (rhs.coeffs.count(I) ? rhs.coeffs.at(I) : Poly());
        for (auto& [e, c] : diff.terms) CHECK(std::abs(c) < 1e-11);
      }
      for (auto& [I, P] : rhs.coeffs) CHECK((lhs.coeffs.count(I) || P.prune(1e-14).empty()));
    }
  }
}

TEST_CASE("restriction along isometric inclusions") {
  // e: R^2 -> R^3 spanning the (x1, x3)-plane
  Eigen::MatrixXd e(3, 2);
  e << 1, 0, 0, 0, 0, 1;
  SchwartzForm w = random_schwartz(3, 1, 2, 31);
  SchwartzForm r = restrict_isometric(w, e);
  // evaluate both sides on a tangent vector at a point
  double y[2] = {0.4, -0.9};
  double x[3] = {0.4, 0.0, -0.9};
  for (int b = 1; b <= 2; ++b) {
    cplx lhs = 0;
    for (auto& [I, P] : r.coeffs)
      if (I.contains(b)) lhs += P.eval(y, 2);
    cplx rhs = 0;
    int amb = (b == 1) ? 1 : 3;
    for (auto& [I, P] : w.coeffs)
      if (I.contains(amb)) rhs += P.eval(x, 3);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("boxtimes pairing factorizes with Koszul sign") {
  SchwartzForm a = random_schwartz(2, 1, 1, 3), b = random_schwartz(2, 1, 1, 4);
  SchwartzForm c = random_schwartz(2, 1, 1, 5), d = random_schwartz(2, 1, 1, 6);
  cplx lhs = pairing(boxtimes(a, b), boxtimes(c, d));
  // moving c (deg 1) past b (deg 1) costs a sign
  cplx rhs = -pairing(a, c) * pairing(b, d);
  CHECK(std::abs(lhs - rhs) < 1e-12 * (1 + std::abs(lhs)));
}
