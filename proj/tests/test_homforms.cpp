#include <doctest.h>

#include <cmath>

#include "valfour/homforms.hpp"

#include <Eigen/Dense>
#include "valfour/quadrature.hpp"

using namespace valfour;

namespace {
constexpr double kPi = 3.14159265358979323846;

// the angle form d theta = (y1 dy2 - y2 dy1)/|y|^2 as a HomForm, optionally
// with an angular density f(theta)
HomForm angle_form(const SpectralField* density = nullptr) {
  int L = density ? density->L + 1 : 1;
  HomForm w(2, 1, 0, 0);
  SpectralField u1 = coordinate_field(2, 1, 1), u2 = coordinate_field(2, 2, 1);
  SpectralField g2 = u1, g1 = cplx(-1) * u2;
  if (density) {
    g2 = multiply(*density, u1);
    g1 = cplx(-1) * multiply(*density, u2);
  }
  w.coeffs[{1, 0}] = g1.resized(L + (density ? density->L : 0));
  w.coeffs[{2, 0}] = g2.resized(L + (density ? density->L : 0));
  return w;
}

// random i_E-closed form of the given shape
HomForm random_tangential(int n, int q, int p, int L, unsigned seed) {
  HomForm w(n, q, p, 0);
  unsigned s = seed;
  for (std::uint8_t I = 0; I < (1u << n); ++I) {
    if (__builtin_popcount(I) != q) continue;
    for (std::uint8_t J = 0; J < (1u << n); ++J) {
      if (__builtin_popcount(J) != p) continue;
      w.coeffs[{I, J}] = random_real_field(n, L, s++);
    }
  }
  return tangentialize(w);
}

// evaluate the q-form part of w (per value blade J) on vectors at a point y
cplx eval_form(const HomForm& w, std::uint8_t J, const Eigen::VectorXd& y,
               const std::vector<Eigen::VectorXd>& vecs) {
  double rr = y.norm();
  Eigen::VectorXd u = y / rr;
  cplx acc = 0;
  for (auto& [key, g] : w.coeffs) {
    auto [I, Jk] = key;
    if (Jk != J) continue;
    // dy_I(v1..vq) = det of rows I
    std::vector<int> rows;
    for (int i = 1; i <= w.n; ++i)
      if (I >> (i - 1) & 1u) rows.push_back(i - 1);
    Eigen::MatrixXd M(w.q, w.q);
    for (int a = 0; a < w.q; ++a)
      for (int b = 0; b < w.q; ++b) M(a, b) = vecs[b][rows[a]];
    double det = w.q == 0 ? 1.0 : M.determinant();
    acc += eval_at(g, u) * det;
  }
  return acc * std::pow(rr, w.r - w.q);
}
}  // namespace

TEST_CASE("angle form: i_E d theta = 0 and d(d theta) = 2 pi delta atom") {
  HomForm dth = angle_form();
  CHECK(interior_euler(dth).smooth_norm() < 1e-13);
  HomForm d = ext_derivative(dth);
  CHECK(d.smooth_norm() < 1e-12);
  REQUIRE(d.atom.count(0) == 1);
  CHECK(std::abs(d.atom.at(0) - 2 * kPi) < 1e-12);
}

TEST_CASE("i_E of a constant-coefficient 1-form with r=1 is the coordinate") {
  HomForm w(2, 1, 0, 1);  // dy1 as a 1-homogeneous object
  w.coeffs[{1, 0}] = constant_field(2, 0, 1.0);
  HomForm ie = interior_euler(w);
  CHECK(ie.q == 0);
  CHECK(ie.r == 1);
  const SpectralField* f = ie.field(0, 0);
  REQUIRE(f != nullptr);
  SpectralField diff = *f - coordinate_field(2, 1, 1);
  CHECK(diff.norm_l2() < 1e-13);
}

TEST_CASE("i_E of homogeneous extensions vanishes (pointwise contraction oracle)") {
  for (int n : {2, 3}) {
    HomForm w = random_tangential(n, 1, 0, 6, 11 * n);
    CHECK(interior_euler(w).smooth_norm() < 1e-10 * (1 + w.smooth_norm()));
    // oracle: contract the form with y at random off-sphere points directly
    std::vector<Eigen::VectorXd> pts;
    Eigen::VectorXd y(n);
    y.setConstant(0.6);
    y[0] = -1.2;
    cplx v = eval_form(w, 0, y, {y});
    CHECK(std::abs(v) < 1e-10);
  }
}

TEST_CASE("Cartan identities on 0-homogeneous forms: L_E = d i_E + i_E d = 0") {
  for (int n : {2, 3}) {
    for (int q : {1, 2}) {
      if (q >= n) continue;
      HomForm w = random_tangential(n, q, 1, 5, 600 + 10 * n + q);
      HomForm lie = ext_derivative(interior_euler(w)) + interior_euler(ext_derivative(w));
      CHECK(lie.smooth_norm() < 1e-10 * (1 + w.smooth_norm()));
      // d d = 0 and i_E i_E = 0
      CHECK(ext_derivative(ext_derivative(w)).smooth_norm() < 1e-9 * (1 + w.smooth_norm()));
      CHECK(interior_euler(interior_euler(w)).smooth_norm() < 1e-12 * (1 + w.smooth_norm()));
    }
  }
}

TEST_CASE("r0 characterization: i_E-closed forms round-trip through sphere data") {
  HomForm w = random_tangential(3, 1, 0, 6, 77);
  // rebuilding from its own coefficients is the identity, and the projection
  // is idempotent
  HomForm again = tangentialize(w);
  HomForm diff = again - w;
  CHECK(diff.smooth_norm() < 1e-11 * (1 + w.smooth_norm()));
}

TEST_CASE("vertical defect examples") {
  // constant value blade dx1 over S^1: defect field u2 on the dx12 component
  HomForm w(2, 0, 1, 0);
  w.coeffs[{0, 1}] = constant_field(2, 1, 1.0);
  auto [defect, norm] = vertical_defect(w);
  const SpectralField* f = defect.field(0, 3);
  REQUIRE(f != nullptr);
  SpectralField expect = coordinate_field(2, 2, 1);
  SpectralField d = *f - expect;
  CHECK(d.norm_l2() < 1e-13);
  CHECK(norm > 0.1);
}

TEST_CASE("is_valuation_type: the angle form fails by shape") {
  HomForm dth = angle_form();
  auto rep = is_valuation_type(dth, 1e-8);
  CHECK_FALSE(rep.shape_ok);  // p = 0 but n - q = 1
  CHECK_FALSE(rep.pass);
}

TEST_CASE("gl_pullback: identity, functoriality, rotations") {
  HomForm w = random_tangential(2, 1, 1, 8, 5);
  Eigen::MatrixXd I2 = Eigen::MatrixXd::Identity(2, 2);
  HomForm wi = gl_pullback(I2, w);
  CHECK((wi - w).smooth_norm() < 1e-11 * (1 + w.smooth_norm()));

  double a = 2 * kPi / 3;
  Eigen::MatrixXd R(2, 2), S(2, 2);
  R << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  S << 1.5, 0.25, 0.0, 0.8;
  HomForm lhs = gl_pullback(S * R, w, 24);
  HomForm rhs = gl_pullback(R, gl_pullback(S, w, 24), 24);
  CHECK((lhs - rhs).smooth_norm() < 1e-8 * (1 + lhs.smooth_norm()));
}

TEST_CASE("mollify commutes with rotations") {
  HomForm w = random_tangential(3, 1, 0, 6, 8);
  Eigen::Matrix3d R;
  double a = 0.83;
  R << std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a), 0, 0, 0, 1;
  HomForm lhs = mollify(gl_pullback(R, w), 0.01);
  HomForm rhs = gl_pullback(R, mollify(w, 0.01));
  CHECK((lhs - rhs).smooth_norm() < 1e-12 * (1 + lhs.smooth_norm()));
  CHECK((mollify(w, 0.0) - w).smooth_norm() == 0.0);
}

TEST_CASE("pullback_mono_smooth: restriction identities") {
  // constant function restricts to constant
  HomForm c(2, 0, 0, 0);
  c.coeffs[{0, 0}] = constant_field(2, 2, 1.0);
  Eigen::MatrixXd e(2, 1);
  e << 1, 0;
  HomForm r = pullback_mono_smooth(LinMap(e, LinMap::Kind::mono), c);
  CHECK(r.n == 1);
  const SpectralField* f = r.field(0, 0);
  REQUIRE(f);
  CHECK(std::abs(f->pv(+1) - 1.0) < 1e-13);
  CHECK(std::abs(f->pv(-1) - 1.0) < 1e-13);

  // pointwise restriction oracle for a coordinate plane in R^3
  Eigen::MatrixXd e2(3, 2);
  e2 << 1, 0, 0, 1, 0, 0;
  HomForm w = random_tangential(3, 1, 0, 6, 99);
  HomForm rw = pullback_mono_smooth(LinMap(e2, LinMap::Kind::mono), w);
  Eigen::VectorXd y(2);
  y << 0.8, -1.3;
  Eigen::VectorXd v(2);
  v << 0.2, 0.5;
  Eigen::VectorXd ey(3), ev(3);
  ey << y[0], y[1], 0.0;
  ev << v[0], v[1], 0.0;
  cplx lhs = eval_form(rw, 0, y, {v});
  cplx rhs = eval_form(w, 0, ey, {ev});
  CHECK(std::abs(lhs - rhs) < 1e-9 * (1 + std::abs(rhs)));

  // i_E-kernel membership is preserved
  CHECK(interior_euler(rw).smooth_norm() < 1e-9 * (1 + rw.smooth_norm()));
}

TEST_CASE("pullback_mono_delta: angle form anchors") {
  Eigen::MatrixXd e(2, 1);
  e << 1, 0;
  LinMap inc(e, LinMap::Kind::mono);

  // d theta: the weak limits at +-e2 are -+pi; the d-atom (2 pi) shows up as
  // probe dependence, so the mean vanishes and the spread equals pi
  HomForm dth = angle_form();
  DeltaPullback res = pullback_mono_delta(inc, dth, 1e-6, 8, 7);
  CHECK(std::abs(res.c.at(0)) < 1e-9);
  CHECK(std::abs(res.spread - kPi) < 1e-9);

  // density sin(theta): exact since sin d theta = d(-cos), restriction is
  // -sign(x) whose derivative carries the atom -2 delta_0
  SpectralField f(2, 1);
  f.cm(1) = cplx(0, -0.5);
  f.cm(-1) = cplx(0, 0.5);  // sin(theta)
  HomForm w = angle_form(&f);
  DeltaPullback res2 = pullback_mono_delta(inc, w, 1e-6, 8, 7);
  CHECK(std::abs(res2.c.at(0) - cplx(-2.0)) < 1e-9);
  CHECK(res2.spread < 1e-9);

  // non-closed input is rejected (generic tangential 1-forms on S^2 have d != 0)
  HomForm bad = random_tangential(3, 1, 0, 4, 123);
  Eigen::MatrixXd e3(3, 1);
  e3 << 1, 0, 0;
  CHECK_THROWS(pullback_mono_delta(LinMap(e3, LinMap::Kind::mono), bad));
}

TEST_CASE("pushforward_spectral: angle form gives +-pi on the two rays") {
  HomForm dth = angle_form();
  double resid = 0;
  HomForm pf = pushforward_spectral(dth, &resid);
  CHECK(pf.n == 1);
  CHECK(pf.q == 0);
  const SpectralField* f = pf.field(0, 0);
  REQUIRE(f);
  CHECK(std::abs(f->pv(+1) - kPi) < 1e-10);
  CHECK(std::abs(f->pv(-1) + kPi) < 1e-10);
  CHECK(resid < 1e-10);
}

TEST_CASE("pushforward_weak: angle form against one-sided and odd tests") {
  HomForm dth = angle_form();
  // psi = w e^{-pi w^2} dw: <psi, p_* dtheta> = pi * int sign(w) w e^{-pi w^2} dw = 1
  SchwartzForm psi(1, 1);
  psi.coeffs[MultiIndex::from_indices({1}, 1)] = Poly::variable(1);
  auto got = pushforward_weak(1, dth, psi);
  CHECK(std::abs(got.at(0) - cplx(1.0)) < 1e-8);

  // atom pushforward: <psi0, p_* (c delta_0)> = c psi0(0)
  HomForm at(2, 2, 0, 0);
  at.atom[0] = cplx(0.5, -1.0);
  SchwartzForm psi0(1, 0);
  psi0.coeffs[MultiIndex(0, 1)] = Poly::constant(2.0);
  auto got0 = pushforward_weak(1, at, psi0);
  CHECK(std::abs(got0.at(0) - cplx(1.0, -2.0)) < 1e-14);
}

TEST_CASE("weak and spectral pushforward engines agree (n=3 -> 2)") {
  for (unsigned seed : {1u, 2u, 3u}) {
    HomForm w = random_tangential(3, 2, 0, 5, 40 + seed);
    HomForm pf = pushforward_spectral(w);
    for (unsigned ts : {11u, 12u}) {
      SchwartzForm psi = random_schwartz(2, 1, 2, ts);
      auto weak = pushforward_weak(1, w, psi);
      auto spec = pair_with_test(pf, psi);
      cplx a = weak.count(0) ? weak.at(0) : 0, b = spec.count(0) ? spec.at(0) : 0;
      CHECK(std::abs(a - b) < 1e-6 * (1 + std::abs(a)));
    }
  }
}

TEST_CASE("pair_with_test against brute polar quadrature") {
  HomForm w = random_tangential(2, 1, 0, 4, 17);
  SchwartzForm psi = random_schwartz(2, 1, 2, 18);
  auto got = pair_with_test(w, psi);
  // brute: int omega ^ psi over R^2 in polar coordinates
  Quad1D rq = paneled_gl(16, 1e-9, 7.0, 28);
  int nth = 512;
  cplx acc = 0;
  for (std::size_t i = 0; i < rq.x.size(); ++i) {
    double rr = rq.x[i];
    for (int k = 0; k < nth; ++k) {
      double th = 2 * kPi * k / nth;
      Eigen::VectorXd y(2);
      y << rr * std::cos(th), rr * std::sin(th);
      // omega ^ psi = (g1 psi2 - g2 psi1)-style volume coefficient
      cplx val = 0;
      for (auto& [key, g] : w.coeffs) {
        auto [I, J] = key;
        std::uint8_t K = static_cast<std::uint8_t>(3u & ~I);
        auto it = psi.coeffs.find(MultiIndex(K, 2));
        if (it == psi.coeffs.end()) continue;
        double x[2] = {y[0], y[1]};
        double sgn = shuffle_sign(I, K);
        val += sgn * eval_at(g, (y / rr).eval()) / rr * it->second.eval(x, 2) * std::exp(-kPi * rr * rr);
      }
      acc += val * rr * (2 * kPi / nth) * rq.w[i];
    }
  }
  CHECK(std::abs(got.at(0) - acc) < 1e-7 * (1 + std::abs(acc)));
}

TEST_CASE("local integrability guard") {
  HomForm w = random_tangential(2, 1, 0, 4, 3);
  CHECK(local_integrability_mass(w) > 0);
  HomForm top(2, 2, 0, 0);
  top.coeffs[{3, 0}] = constant_field(2, 0, 1.0);
  CHECK_THROWS(local_integrability_mass(top));
}

TEST_CASE("weak pushforward: linear in the test and shear-invariant") {
  HomForm dth = angle_form();
  SchwartzForm psi1(1, 1), psi2(1, 1);
  psi1.coeffs[MultiIndex::from_indices({1}, 1)] = Poly::variable(1);
  psi2.coeffs[MultiIndex::from_indices({1}, 1)] =
      Poly::variable(1) * Poly::variable(1) * Poly::variable(1);
  cplx a = pushforward_weak(1, dth, psi1).at(0);
  cplx b = pushforward_weak(1, dth, psi2).at(0);
  SchwartzForm sum = psi1 + psi2;
  cplx c = pushforward_weak(1, dth, sum).at(0);
  CHECK(std::abs(c - (a + b)) < 1e-10 * (1 + std::abs(c)));

  // shear fixing the kernel and inducing the identity on the target
  Eigen::MatrixXd A(2, 2);
  A << 1, 0, 0.35, 1;
  HomForm sheared = gl_pullback(A, dth, 48);
  cplx d = pushforward_weak(1, sheared, psi1).at(0);
  CHECK(std::abs(d - a) < 1e-8 * (1 + std::abs(a)));
}
