#include "valfour/multipliers.hpp"

#include <cmath>
#include <stdexcept>

#include "valfour/schwartz.hpp"
#include "valfour/sphere.hpp"

namespace valfour {

namespace {
constexpr double kPi = 3.14159265358979323846;

double radial_gauss_moment(double k) {
  if (k <= -1.0) throw std::invalid_argument("radial moment: divergent");
  return 0.5 * std::tgamma(0.5 * (k + 1)) / std::pow(kPi, 0.5 * (k + 1));
}

cplx ipow(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// the harmonic Y_m used by the oracle, matching the SpectralField basis
cplx harmonic_at(int n, int m, const Eigen::VectorXd& u) {
  if (n == 2) {
    double th = std::atan2(u[1], u[0]);
    return std::exp(cplx(0, m * th));
  }
  SpectralField f(3, m);
  f.clm(m, 0) = 1.0;  // zonal representative of degree m
  return eval_at(f, u);
}
}  // namespace

cplx bochner_multiplier(int n, double lambda, int m) {
  if (!(lambda > 0.0 && lambda < double(n)))
    throw std::invalid_argument("bochner_multiplier: lambda must lie in (0, n)");
  if (m < 0) throw std::invalid_argument("bochner_multiplier: negative harmonic degree");
  double g1 = std::lgamma(0.5 * (m + n - lambda));
  double g2 = std::lgamma(0.5 * (m + lambda));
  double mag = std::pow(kPi, lambda - 0.5 * n) * std::exp(g1 - g2);
  return ipow(m) * mag;
}

cplx bochner_multiplier_oracle(int n, double lambda, int m) {
  if (!(lambda > 0.0 && lambda < double(n)))
    throw std::invalid_argument("bochner_multiplier_oracle: lambda must lie in (0, n)");
  // test form eta = xi^alpha e^{-pi|xi|^2} with <Y_m, u^alpha> != 0:
  // n=2: alpha = (m, 0); n=3 (zonal Y_m): alpha = (0, 0, m)
  Poly mono = Poly::constant(1.0);
  for (int t = 0; t < m; ++t) mono = mono * Poly::variable(n == 2 ? 1 : 3);
  SchwartzForm eta(n, 0);
  eta.coeffs[MultiIndex(0, n)] = mono;

  // F eta as a polynomial-Gaussian: the 0-form transform places the result on
  // the full blade with unit shuffle sign; read the polynomial back off
  SchwartzForm feta = fourier(eta);
  const Poly& Q = feta.coeffs.at(MultiIndex(static_cast<std::uint8_t>((1u << n) - 1), n));

  const SphereGrid& grid = SphereGrid::get(n, 2 * m + 8);

  // denominator: <|xi|^{lambda-n} Y_m, eta> = Gamma-radial * sphere moment
  cplx ang_d = 0;
  for (int i = 0; i < grid.node_count(); ++i) {
    Eigen::VectorXd u = grid.nodes.row(i).transpose();
    double monoval = 1;
    for (int t = 0; t < m; ++t) monoval *= u[n == 2 ? 0 : 2];
    ang_d += grid.weights[i] * harmonic_at(n, m, u) * monoval;
  }
  // int_0^inf rho^{(n-1) + (lambda-n) + m} e^{-pi rho^2}
  cplx denom = ang_d * radial_gauss_moment(n - 1 + lambda - n + m);

  // numerator: <|y|^{-lambda} Y_m, F eta>
  cplx num = 0;
  for (auto& [e, c] : Q.terms) {
    int deg = e[0] + e[1] + e[2] + e[3];
    double radial = radial_gauss_moment(n - 1 - lambda + deg);
    cplx ang = 0;
    for (int i = 0; i < grid.node_count(); ++i) {
      Eigen::VectorXd u = grid.nodes.row(i).transpose();
      double monoval = 1;
      for (int j = 0; j < n; ++j)
        for (int t = 0; t < e[j]; ++t) monoval *= u[j];
      ang += grid.weights[i] * harmonic_at(n, m, u) * monoval;
    }
    num += c * radial * ang;
  }
  if (std::abs(denom) < 1e-12) throw std::logic_error("bochner_multiplier_oracle: degenerate test form");
  return num / denom;
}

MultiplierTable MultiplierTable::build(int n, int max_m) {
  MultiplierTable t;
  t.n = n;
  t.max_m = max_m;
  for (int lambda = 1; lambda < n; ++lambda)
    for (int m = 0; m <= max_m; ++m)
      t.entries.push_back({n, double(lambda), m, bochner_multiplier(n, lambda, m)});
  return t;
}

}  // namespace valfour
