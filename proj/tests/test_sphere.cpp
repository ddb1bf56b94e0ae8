#include <doctest.h>

#include <cmath>
#include <random>

#include "valfour/sphere.hpp"

using namespace valfour;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Finite-difference oracle: numeric d/dy_j of |y|^r f(y/|y|) at off-sphere y.
double fd_partial(const SpectralField& f, int r, int j, const Eigen::VectorXd& y, double h = 1e-5) {
  auto F = [&](const Eigen::VectorXd& p) {
    double rr = p.norm();
    Eigen::VectorXd u = p / rr;
    return std::real(eval_at(f, u)) * std::pow(rr, r);
  };
  Eigen::VectorXd yp = y, ym = y;
  yp[j - 1] += h;
  ym[j - 1] -= h;
  return (F(yp) - F(ym)) / (2 * h);
}
}  // namespace

TEST_CASE("grid quadrature integrates harmonics exactly") {
  for (int n : {2, 3}) {
    int L = (n == 2) ? 24 : 12;
    const SphereGrid& g = SphereGrid::get(n, 2 * L);
    CHECK(std::abs(g.weights.sum() - sphere_area(n)) < 1e-12 * sphere_area(n));
    for (int row = 0; row < g.node_count(); ++row)
      CHECK(std::abs(g.nodes.row(row).norm() - 1.0) < 1e-14);

    // nonconstant harmonics integrate to zero
    SpectralField f = random_real_field(n, L, 42);
    if (n == 2) f.cm(0) = 0;
    else f.clm(0, 0) = 0;
    Eigen::VectorXcd smp = synthesize(f, g);
    cplx q = 0;
    for (int row = 0; row < g.node_count(); ++row) q += g.weights[row] * smp[row];
    CHECK(std::abs(q) < 1e-12 * sphere_area(n));
  }
}

TEST_CASE("analyze / synthesize round trip and Parseval") {
  for (int n : {2, 3}) {
    int L = (n == 2) ? 32 : 16;
    const SphereGrid& g = SphereGrid::get(n, L);
    SpectralField f = random_real_field(n, L, 5);
    Eigen::VectorXcd smp = synthesize(f, g);
    SpectralField f2 = analyze(smp, g, L);
    CHECK((f2.coeffs - f.coeffs).norm() < 1e-12 * f.coeffs.norm());

    // Parseval: quadrature L2 norm equals coefficient L2 norm
    double quad = 0;
    for (int row = 0; row < g.node_count(); ++row) quad += g.weights[row] * std::norm(smp[row]);
    CHECK(std::abs(std::sqrt(quad) - f.norm_l2()) < 1e-12 * f.norm_l2());
  }
}

TEST_CASE("analyze basics") {
  const SphereGrid& g2 = SphereGrid::get(2, 8);
  // constant 1 -> c_0 = 1
  Eigen::VectorXcd ones = Eigen::VectorXcd::Constant(g2.node_count(), 1.0);
  SpectralField c = analyze(ones, g2, 4);
  CHECK(std::abs(c.cm(0) - 1.0) < 1e-14);
  for (int m = 1; m <= 4; ++m) CHECK(std::abs(c.cm(m)) < 1e-14);

  // cos(3 theta) -> c_{+-3} = 1/2
  Eigen::VectorXcd cs(g2.node_count());
  for (int k = 0; k < g2.node_count(); ++k) {
    double th = std::atan2(g2.nodes(k, 1), g2.nodes(k, 0));
    cs[k] = std::cos(3 * th);
  }
  SpectralField c3 = analyze(cs, g2, 4);
  CHECK(std::abs(c3.cm(3) - 0.5) < 1e-14);
  CHECK(std::abs(c3.cm(-3) - 0.5) < 1e-14);
  CHECK(std::abs(c3.cm(1)) < 1e-14);

  // y3/|y| on S^2 -> pure l=1
  const SphereGrid& g3 = SphereGrid::get(3, 8);
  Eigen::VectorXcd z = g3.nodes.col(2).cast<cplx>();
  SpectralField u3 = analyze(z, g3, 4);
  for (int l = 0; l <= 4; ++l)
    for (int m = -l; m <= l; ++m)
      if (l != 1) CHECK(std::abs(u3.clm(l, m)) < 1e-13);
  CHECK(std::abs(u3.clm(1, 0)) > 0.1);
}

TEST_CASE("eval_at matches synthesize") {
  for (int n : {2, 3}) {
    int L = (n == 2) ? 12 : 8;
    const SphereGrid& g = SphereGrid::get(n, L);
    SpectralField f = random_real_field(n, L, 9);
    Eigen::VectorXcd smp = synthesize(f, g);
    for (int row = 0; row < g.node_count(); row += 17) {
      cplx v = eval_at(f, g.nodes.row(row).transpose());
      CHECK(std::abs(v - smp[row]) < 1e-11);
    }
  }
}

TEST_CASE("multiply: examples and dealiasing") {
  // cos * cos = (1 + cos 2theta)/2
  SpectralField cosf(2, 1);
  cosf.cm(1) = 0.5;
  cosf.cm(-1) = 0.5;
  SpectralField p = multiply(cosf, cosf);
  CHECK(std::abs(p.cm(0) - 0.5) < 1e-14);
  CHECK(std::abs(p.cm(2) - 0.25) < 1e-14);
  CHECK(std::abs(p.cm(-2) - 0.25) < 1e-14);

  // f * 1 = f
  SpectralField f = random_real_field(2, 10, 3);
  SpectralField one = constant_field(2, 0, 1.0);
  SpectralField q = multiply(f, one);
  CHECK((q.resized(10).coeffs - f.coeffs).norm() < 1e-13);

  // u1 * u2 on S^2 has pure l=2 content (quadrature projection oracle)
  SpectralField u1 = coordinate_field(3, 1, 1), u2 = coordinate_field(3, 2, 1);
  SpectralField pr = multiply(u1, u2);
  const SphereGrid& g = SphereGrid::get(3, 4);
  Eigen::VectorXcd direct(g.node_count());
  for (int row = 0; row < g.node_count(); ++row) direct[row] = g.nodes(row, 0) * g.nodes(row, 1);
  SpectralField oracle = analyze(direct, g, 4);
  CHECK((pr.resized(4).coeffs - oracle.coeffs).norm() < 1e-13);
  for (int l = 0; l <= 2; ++l)
    if (l != 2)
      for (int m = -l; m <= l; ++m) CHECK(std::abs(pr.clm(l, m)) < 1e-14);
}

TEST_CASE("coordinate_multiply agrees with grid multiply") {
  for (int n : {2, 3}) {
    int L = (n == 2) ? 10 : 8;
    SpectralField f = random_real_field(n, L, 21);
    for (int j = 1; j <= n; ++j) {
      SpectralField a = coordinate_multiply(f, j);
      SpectralField b = multiply(f, coordinate_field(n, j, 1));
      CHECK((a.coeffs - b.resized(L + 1).coeffs).norm() < 1e-12 * (1 + f.coeffs.norm()));
    }
  }
}

TEST_CASE("ambient_partial: stated examples") {
  // f = u1, r = 1: d/dy1 (y1) = 1
  SpectralField u1 = coordinate_field(2, 1, 1);
  SpectralField g = ambient_partial(u1, 1, 1);
  CHECK(std::abs(g.cm(0) - 1.0) < 1e-13);
  CHECK(g.coeffs.norm() - std::abs(g.cm(0)) < 1e-13);

  // f = 1, r = 0: 0
  SpectralField one = constant_field(3, 0, 1.0);
  CHECK(ambient_partial(one, 0, 2).coeffs.norm() < 1e-14);

  // f = u1, r = 0 in n=2: d/dy1 (y1/|y|) = (1 - u1^2)/|y|
  SpectralField h = ambient_partial(coordinate_field(2, 1, 1), 0, 1);
  SpectralField expect = constant_field(2, 2, 1.0) - multiply(coordinate_field(2, 1, 1), coordinate_field(2, 1, 1));
  CHECK((h.resized(2).coeffs - expect.coeffs).norm() < 1e-13);
}

TEST_CASE("ambient_partial against finite differences") {
  std::mt19937 rng(17);
  std::normal_distribution<double> d(0, 1);
  for (int n : {2, 3}) {
    SpectralField f = random_real_field(n, (n == 2) ? 8 : 6, 33);
    for (int r : {0, 1, -2}) {
      for (int j = 1; j <= n; ++j) {
        SpectralField g = ambient_partial(f, r, j);
        for (int trial = 0; trial < 4; ++trial) {
          Eigen::VectorXd y(n);
          for (int i = 0; i < n; ++i) y[i] = d(rng);
          if (y.norm() < 0.3) y *= 2.0;
          double rr = y.norm();
          double num = fd_partial(f, r, j, y);
          double ana = std::pow(rr, r - 1) * std::real(eval_at(g, (y / rr).eval()));
          CHECK(std::abs(num - ana) < 1e-6 * (1 + std::abs(ana)));
        }
      }
    }
  }
}

TEST_CASE("ambient partials commute") {
  for (int n : {2, 3}) {
    SpectralField f = random_real_field(n, (n == 2) ? 10 : 8, 2);
    int r = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        SpectralField a = ambient_partial(ambient_partial(f, r, i), r - 1, j);
        SpectralField b = ambient_partial(ambient_partial(f, r, j), r - 1, i);
        CHECK((a.coeffs - b.coeffs).norm() < 1e-10 * (1 + a.coeffs.norm()));
      }
  }
}

TEST_CASE("antipode, parity, mollify") {
  for (int n : {2, 3}) {
    SpectralField f = random_real_field(n, 8, 55);
    const SphereGrid& g = SphereGrid::get(n, 8);
    SpectralField af = antipode(f);
    for (int row = 0; row < g.node_count(); row += 23) {
      Eigen::VectorXd u = g.nodes.row(row).transpose();
      CHECK(std::abs(eval_at(af, u) - eval_at(f, (-u).eval())) < 1e-11);
    }
    SpectralField even = parity_project(f, +1), odd = parity_project(f, -1);
    CHECK((even.coeffs + odd.coeffs - f.coeffs).norm() < 1e-14);
    CHECK((antipode(even).coeffs - even.coeffs).norm() < 1e-14);
    CHECK((antipode(odd).coeffs + odd.coeffs).norm() < 1e-14);

    CHECK((mollify_field(f, 0.0).coeffs - f.coeffs).norm() == 0.0);
  }
}

TEST_CASE("n=2 analyze rejects band limit over capacity") {
  const SphereGrid& g = SphereGrid::get(2, 4);
  Eigen::VectorXcd smp = Eigen::VectorXcd::Zero(g.node_count());
  CHECK_THROWS(analyze(smp, g, 10));
}
