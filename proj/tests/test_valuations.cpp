#include <doctest.h>

#include <cmath>

#include "valfour/crofton.hpp"

#include <Eigen/Dense>
#include "valfour/products.hpp"
#include "valfour/valuations.hpp"

using namespace valfour;

namespace {
constexpr double kPi = 3.14159265358979323846;

double current_distance(const HomForm& a, const HomForm& b) {
  return (a - b).smooth_norm() + (a - b).atom_norm();
}

SpectralField cos_density(int mode, int L) {
  SpectralField g(2, L);
  g.cm(mode) = 0.5;
  g.cm(-mode) = 0.5;
  return g;
}
}  // namespace

TEST_CASE("tau(V_1) on R^2 equals the plane current at density 1/2") {
  ValCurrent v = intrinsic_current(2, 1, 4);
  ValCurrent p = plane_current(constant_field(2, 2, 0.5));
  CHECK(current_distance(v.cur, p.cur) < 1e-12);
}

TEST_CASE("constructor outputs are valuation-type") {
  std::vector<ValCurrent> lib;
  lib.push_back(euler_current(2));
  lib.push_back(volume_current(3));
  lib.push_back(intrinsic_current(2, 1));
  lib.push_back(intrinsic_current(3, 1));
  lib.push_back(intrinsic_current(3, 2));
  lib.push_back(plane_current(cos_density(2, 8)));
  lib.push_back(plane_current(cos_density(3, 8)));
  for (auto& v : lib) {
    auto rep = is_valuation_type(v.cur, 1e-8);
    CAPTURE(v.provenance);
    CHECK(rep.pass);
  }
}

TEST_CASE("Sym^2 symmetry of the twisted current") {
  for (auto v : {intrinsic_current(2, 1), plane_current(cos_density(3, 8)), intrinsic_current(3, 1),
                 intrinsic_current(3, 2)}) {
    HomForm tw = value_star(v.cur);
    // at every grid node the (form-blade, value-blade) matrix is symmetric
    const SphereGrid& grid = SphereGrid::get(v.n, tw.band() + 1);
    for (int node = 0; node < grid.node_count(); node += 7) {
      Eigen::VectorXd u = grid.nodes.row(node).transpose();
      for (std::uint8_t A = 0; A < (1u << v.n); ++A) {
        if (__builtin_popcount(A) != tw.q) continue;
        for (std::uint8_t B = 0; B < (1u << v.n); ++B) {
          if (__builtin_popcount(B) != tw.p) continue;
          const SpectralField* ab = tw.field(A, B);
          const SpectralField* ba = tw.field(B, A);
          cplx vab = ab ? eval_at(*ab, u) : cplx(0);
          cplx vba = ba ? eval_at(*ba, u) : cplx(0);
          CHECK(std::abs(vab - vba) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("Fourier transform of valuations: Euler <-> volume") {
  for (int n : {2, 3}) {
    ValCurrent e = euler_current(n);
    ValCurrent f = fourier_val(e);
    CHECK(f.k == n);
    CHECK(current_distance(f.cur, volume_current(n).cur) < 1e-13);
    ValCurrent b = fourier_val(f);
    CHECK(current_distance(b.cur, e.cur) < 1e-13);
  }
}

TEST_CASE("F V_k = V_{n-k}") {
  // n = 3: F V_1 = V_2, spectral comparison
  ValCurrent v1 = intrinsic_current(3, 1);
  ValCurrent f = fourier_val(v1);
  ValCurrent v2 = intrinsic_current(3, 2);
  CHECK(current_distance(f.cur, v2.cur) < 1e-12);
  // n = 2: V_1 is self-dual
  ValCurrent w = fourier_val(intrinsic_current(2, 1));
  CHECK(current_distance(w.cur, intrinsic_current(2, 1).cur) < 1e-12);
}

TEST_CASE("2-D multiplier theorem: density transforms by i^{|m|}") {
  SpectralField g(2, 8);
  g.cm(0) = 0.7;
  g.cm(2) = cplx(0.3, 0.1);
  g.cm(-2) = cplx(0.3, -0.1);
  g.cm(3) = cplx(-0.2, 0.4);
  g.cm(-3) = cplx(-0.2, -0.4);
  g.cm(5) = 0.11;
  g.cm(-5) = 0.11;
  ValCurrent v = plane_current(g);
  ValCurrent f = fourier_val(v);
  SpectralField gf = plane_density(f);
  for (int m = -8; m <= 8; ++m) {
    cplx ip = std::pow(cplx(0, 1), std::abs(m));
    CHECK(std::abs(gf.cm(m) - ip * g.cm(m)) < 1e-11);
  }
  // parity is preserved
  CHECK(parity_of(f) == parity_of(v));
}

TEST_CASE("inversion on valuations: F F = (-id)^*") {
  std::vector<ValCurrent> lib = {intrinsic_current(3, 1), plane_current(cos_density(3, 8)),
                                 plane_current(cos_density(2, 8)), euler_current(2)};
  for (auto& v : lib) {
    ValCurrent ff = fourier_val(fourier_val(v));
    ValCurrent ex = antipodal_val(v);
    CAPTURE(v.provenance);
    CHECK(current_distance(ff.cur, ex.cur) < 1e-10);
  }
}

TEST_CASE("GL equivariance of the Fourier transform") {
  // tau(F(A^* phi)) = |det A| * (A-dual action) tau(F phi): check the exact
  // current identity F(A^* phi) = |det A| (A^T)^* F(phi) through the layer
  Eigen::MatrixXd A(2, 2);
  A << 1.3, 0.4, -0.2, 0.9;
  ValCurrent v = plane_current(cos_density(2, 10));
  ValCurrent lhs = fourier_val(val_gl_pullback(A, v));
  ValCurrent rhs0 = fourier_val(v);
  ValCurrent rhs = val_gl_pullback(A.inverse().transpose(), rhs0);
  rhs.cur = cplx(std::abs(A.determinant())) * rhs.cur;  // the Dens(V) factor
  CHECK(current_distance(lhs.cur, rhs.cur) < 1e-10 * (1 + lhs.cur.smooth_norm()));
}

TEST_CASE("rotation invariance: -id fixes even valuations") {
  Eigen::MatrixXd mid = -Eigen::MatrixXd::Identity(2, 2);
  ValCurrent v = intrinsic_current(2, 1);
  ValCurrent r = val_gl_pullback(mid, v);
  CHECK(current_distance(r.cur, v.cur) < 1e-12);
  Eigen::MatrixXd mid3 = -Eigen::MatrixXd::Identity(3, 3);
  ValCurrent v3 = intrinsic_current(3, 1);
  ValCurrent r3 = val_gl_pullback(mid3, v3);
  CHECK(current_distance(r3.cur, v3.cur) < 1e-11);
}

TEST_CASE("rumin: D kappa_k = d kappa_k (already vertical) and kernel tests") {
  for (auto [n, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}}) {
    GeneratingForm kap = kappa_form(n, k, 4);
    RuminResult rr = rumin_D(kap);
    CHECK(rr.correction.norm() < 1e-9);
    CHECK(rr.vertical_norm < 1e-9);
    CHECK(rr.solve_residual < 1e-10);
    GeneratingForm dk = wedge_d(kap);
    CHECK(current_distance(rr.D.rep, dk.rep) < 1e-9);
  }
}

TEST_CASE("rumin kernel: D(alpha ^ xi) = 0 and D(d eta) = 0") {
  for (int n : {2, 3}) {
    // alpha ^ xi for random xi of bidegree (k-1, n-1-k)
    for (int k = 1; k <= n - 1; ++k) {
      GeneratingForm xi(n, k - 1, n - 1 - k);
      unsigned seed = 7 * n + k;
      for (std::uint8_t I = 0; I < (1u << n); ++I) {
        if (__builtin_popcount(I) != k - 1) continue;
        for (std::uint8_t J = 0; J < (1u << n); ++J) {
          if (__builtin_popcount(J) != n - 1 - k) continue;
          xi.rep.coeffs[{J, I}] = random_real_field(n, 3, seed++);
        }
      }
      xi.rep = tangentialize(xi.rep);
      GeneratingForm ax = wedge_alpha(xi);
      RuminResult rr = rumin_D(ax);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(rr.D.norm() < 1e-9 * (1 + ax.norm()));
    }
    // d eta for random eta of total degree n-2
    if (n == 3) {
      GeneratingForm eta(3, 1, 0);
      eta.rep.coeffs[{0, 1}] = random_real_field(3, 3, 99);
      eta.rep.coeffs[{0, 2}] = random_real_field(3, 3, 98);
      eta.rep.coeffs[{0, 4}] = random_real_field(3, 3, 97);
      GeneratingForm de = wedge_d(eta);
      RuminResult rr = rumin_D(de);
      CHECK(rr.D.norm() < 1e-8 * (1 + de.norm()));
    }
  }
}

TEST_CASE("current_from_generating reproduces the intrinsic currents") {
  for (auto [n, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}}) {
    GeneratingForm kap = kappa_form(n, k, 4);
    GradedValuation gv = current_from_generating(kap);
    REQUIRE(gv.parts.count(k) == 1);
    ValCurrent got = gv.parts.at(k);
    ValCurrent expect = intrinsic_current(n, k, got.cur.band());
    CAPTURE(n);
    CAPTURE(k);
    CHECK(current_distance(got.cur, expect.cur) < 1e-9);
    CHECK(is_valuation_type(got.cur, 1e-8).pass);
  }
}

TEST_CASE("generating data for 2 V(K, h) gives the plane current of h'' + h") {
  SpectralField h(2, 6);
  h.cm(0) = 0.4;
  h.cm(2) = cplx(0.25, -0.1);
  h.cm(-2) = cplx(0.25, 0.1);
  h.cm(3) = 0.1;
  h.cm(-3) = 0.1;
  GeneratingForm gen = generating_from_h(h);
  GradedValuation gv = current_from_generating(gen);
  REQUIRE(gv.parts.count(1) == 1);
  ValCurrent expect = plane_current(density_from_h(h));
  CHECK(current_distance(gv.parts.at(1).cur, expect.cur) < 1e-9);

  // trivial record: omega = 0, theta = 1, c0 = 1 gives euler + volume
  GradedValuation mixed = current_from_generating(GeneratingForm(2, 1, 0), 1.0, 1.0);
  REQUIRE(mixed.parts.count(0) == 1);
  REQUIRE(mixed.parts.count(2) == 1);
  CHECK(std::abs(mixed.parts.at(0).cur.atom.at(0) - cplx(1.0)) < 1e-14);
}

TEST_CASE("evaluation on bodies") {
  Polytope sq = Polytope::box({0, 0}, {1, 1});
  CHECK(std::abs(eval_on_body(euler_current(2), sq) - cplx(1.0)) < 1e-14);
  Polytope big = Polytope::box({0, 0}, {2, 2});
  CHECK(std::abs(eval_on_body(volume_current(2), big) - cplx(4.0)) < 1e-12);
  // V_1 of the unit square: half-perimeter = 2 via support-function quadrature
  CHECK(std::abs(eval_on_body(intrinsic_current(2, 1), sq) - cplx(2.0)) < 1e-12);
  ValCurrent asplane = plane_current(constant_field(2, 4, 0.5));
  CHECK(std::abs(eval_on_body(asplane, sq) - cplx(2.0)) < 1e-10);
  // boxes in R^3
  Polytope bx = Polytope::box({0, 0, 0}, {1, 2, 3});
  CHECK(std::abs(eval_on_body(intrinsic_current(3, 2), bx) - cplx(11.0)) < 1e-12);
}

TEST_CASE("crofton currents: uniform densities give intrinsic volumes") {
  // n=2: uniform density 1 -> plane density 1 = 2 V_1
  CroftonData d2 = CroftonData::smooth(2, 1, constant_field(2, 4, 1.0));
  ValCurrent c2 = crofton_current(d2);
  ValCurrent v1 = intrinsic_current(2, 1, c2.cur.band());
  HomForm scaled = cplx(2.0) * v1.cur;
  CHECK(current_distance(c2.cur, scaled) < 1e-10);

  // n=3, lines: phi = pi V_2 (Cauchy's projection formula fixes the factor)
  CroftonData d31 = CroftonData::smooth(3, 1, constant_field(3, 4, 1.0));
  ValCurrent c31 = crofton_current(d31);
  HomForm expect31 = cplx(kPi) * intrinsic_current(3, 2, c31.cur.band()).cur;
  CHECK(current_distance(c31.cur, expect31) < 1e-8);
  CHECK(is_valuation_type(c31.cur, 1e-8).pass);

  // n=3, planes: phi = pi V_1 (integral of the positive part of u1 is pi)
  CroftonData d32 = CroftonData::smooth(3, 2, constant_field(3, 4, 1.0));
  ValCurrent c32 = crofton_current(d32);
  HomForm expect32 = cplx(kPi) * intrinsic_current(3, 1, c32.cur.band()).cur;
  CHECK(current_distance(c32.cur, expect32) < 1e-8);
  CHECK(is_valuation_type(c32.cur, 1e-8).pass);
}

TEST_CASE("crofton evaluation agrees with the current route and the MC route") {
  // harmonic density on lines in R^3
  SpectralField m = constant_field(3, 4, 1.0);
  m.clm(2, 0) += 0.4;
  CroftonData d = CroftonData::smooth(3, 1, m);
  Polytope bx = Polytope::box({0, 0, 0}, {1.0, 0.7, 1.3});
  cplx quad = eval_crofton(d, bx);
  cplx mc = eval_crofton_mc(d, bx, 200000, 11);
  CHECK(std::abs(quad - mc) < 2e-2 * std::abs(quad));
  // atoms: projection onto the plane with normal e1 of a box
  CroftonAtom at;
  at.frame = Eigen::MatrixXd::Zero(3, 1);
  at.frame(0, 0) = 1.0;
  CroftonData da = CroftonData::atomic_data(3, 1, {at});
  CHECK(std::abs(eval_crofton(da, bx) - cplx(0.7 * 1.3)) < 1e-12);
  // klain involution
  CroftonData dperp = klain_fourier_atoms(klain_fourier_atoms(da));
  CHECK(std::abs(eval_crofton(dperp, bx) - eval_crofton(da, bx)) < 1e-12);
}

TEST_CASE("atomic klain action in R^2") {
  CroftonAtom at;
  at.frame = Eigen::MatrixXd::Zero(2, 1);
  at.frame(0, 0) = 1.0;  // x-axis
  CroftonData d = CroftonData::atomic_data(2, 1, {at});
  CroftonData dp = klain_fourier_atoms(d);
  // the complement of the x-axis is the y-axis
  CHECK(std::abs(std::abs(dp.atoms[0].frame(1, 0)) - 1.0) < 1e-12);
  CHECK(std::abs(dp.atoms[0].frame(0, 0)) < 1e-12);
  Polytope box = Polytope::box({0, 0}, {0.8, 0.5});
  // projection along x-axis line: shadow on y-axis has length b
  CHECK(std::abs(eval_crofton(d, box) - cplx(0.5)) < 1e-12);
  CHECK(std::abs(eval_crofton(dp, box) - cplx(0.8)) < 1e-12);
}

TEST_CASE("pullback: identity and restriction to a line") {
  ValCurrent v = plane_current(cos_density(2, 6));
  LinMap id2(Eigen::MatrixXd::Identity(2, 2), LinMap::Kind::iso);
  ValCurrent same = pullback_val(id2, v);
  CHECK(current_distance(same.cur, v.cur) < 1e-10);

  // V_1 restricted to the x-axis is the length
  Eigen::MatrixXd e(2, 1);
  e << 1, 0;
  ValCurrent r = pullback_val(LinMap(e, LinMap::Kind::mono), intrinsic_current(2, 1, 6));
  CHECK(r.n == 1);
  CHECK(r.k == 1);
  const SpectralField* f = r.cur.field(0, 1);
  REQUIRE(f);
  CHECK(std::abs(f->pv(+1) - cplx(1.0)) < 1e-9);
  CHECK(std::abs(f->pv(-1) - cplx(1.0)) < 1e-9);
}

TEST_CASE("pullback: V_1 on R^3 restricts to V_1 on R^2") {
  Eigen::MatrixXd e(3, 2);
  e << 1, 0, 0, 1, 0, 0;
  ValCurrent v = intrinsic_current(3, 1, 8);
  ValCurrent r = pullback_val(LinMap(e, LinMap::Kind::mono), v);
  ValCurrent expect = intrinsic_current(2, 1, r.cur.band());
  CHECK(current_distance(r.cur, expect.cur) < 1e-8);
}

TEST_CASE("pushforward: Fubini and the bottom-degree delta case") {
  Eigen::MatrixXd p(1, 2);
  p << 1, 0;
  LinMap proj(p, LinMap::Kind::epi);
  // vol_2 pushes to vol_1
  ValCurrent pv = pushforward_val(proj, volume_current(2));
  CHECK(pv.k == 1);
  const SpectralField* f = pv.cur.field(0, 1);
  REQUIRE(f);
  CHECK(std::abs(f->pv(+1) - cplx(1.0)) < 1e-10);
  CHECK(std::abs(f->pv(-1) - cplx(1.0)) < 1e-10);

  // V_1 pushes to the Euler characteristic with coefficient 1
  ValCurrent pe = pushforward_val(proj, intrinsic_current(2, 1, 6));
  CHECK(pe.k == 0);
  REQUIRE(pe.cur.atom.count(0) == 1);
  CHECK(std::abs(pe.cur.atom.at(0) - cplx(1.0)) < 1e-8);
}

TEST_CASE("functoriality: F(i^* phi) = (i^vee)_* F(phi) for R^1 -> R^2") {
  Eigen::MatrixXd e(2, 1);
  e << 1, 0;
  LinMap inc(e, LinMap::Kind::mono);
  LinMap proj = inc.dual();
  for (auto g : {cos_density(2, 6), cos_density(4, 6)}) {
    ValCurrent phi = plane_current(g);
    ValCurrent lhs = fourier_val(pullback_val(inc, phi));
    ValCurrent rhs = pushforward_val(proj, fourier_val(phi));
    CAPTURE(g.cm(2));
    CHECK(lhs.k == rhs.k);
    CHECK(current_distance(lhs.cur, rhs.cur) < 1e-6 * (1 + lhs.cur.smooth_norm() + lhs.cur.atom_norm()));
  }
}
