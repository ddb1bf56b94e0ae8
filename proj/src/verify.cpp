#include "valfour/verify.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "valfour/crofton.hpp"
#include "valfour/multipliers.hpp"
#include "valfour/products.hpp"
#include "valfour/serialization.hpp"
#include "valfour/valuations.hpp"

namespace valfour {

namespace {
constexpr double kPi = 3.14159265358979323846;

double rel(double err, double scale) { return err / std::max(1.0, scale); }

double current_distance(const HomForm& a, const HomForm& b) {
  return (a - b).smooth_norm() + (a - b).atom_norm();
}

void add_check(VerificationReport& r, const std::string& id, const std::string& anchor, double measured,
               double tol) {
  r.checks.push_back({id, anchor, measured, tol, measured <= tol});
}

SpectralField real_mode_density(int L, std::initializer_list<std::pair<int, cplx>> modes) {
  SpectralField g(2, L);
  for (auto& [m, c] : modes) {
    g.cm(m) += c;
    g.cm(-m) += std::conj(c);
  }
  return g;
}

// the 12-current library of criterion 3/4
std::vector<ValCurrent> value_library(const VerifyConfig& cfg) {
  std::vector<ValCurrent> lib;
  lib.push_back(intrinsic_current(2, 1, 6));
  lib.push_back(intrinsic_current(3, 1, 6));
  lib.push_back(intrinsic_current(3, 2, 6));
  lib.push_back(plane_current(real_mode_density(8, {{0, 0.5}, {2, cplx(0.2, 0.1)}})));
  lib.push_back(plane_current(real_mode_density(8, {{2, 0.5}})));
  lib.push_back(plane_current(real_mode_density(8, {{3, 0.5}})));
  lib.push_back(plane_current(real_mode_density(8, {{4, cplx(0.25, 0)}, {6, cplx(0.1, 0)}})));
  lib.push_back(plane_current(real_mode_density(8, {{3, cplx(0.5, 0)}, {5, cplx(0, -0.2)}})));
  {
    SpectralField g = random_real_field(2, 16, cfg.seed + 1);
    g.cm(1) = g.cm(-1) = 0;
    g = parity_project(mollify_field(g, 0.02), +1);
    lib.push_back(plane_current(g));
  }
  {
    SpectralField g = random_real_field(2, 16, cfg.seed + 2);
    g.cm(1) = g.cm(-1) = 0;
    lib.push_back(plane_current(mollify_field(g, 0.02)));
  }
  {
    SpectralField m = real_mode_density(6, {{0, 1.0}, {2, cplx(0.2, 0)}});
    lib.push_back(crofton_current(CroftonData::smooth(2, 1, m)));
  }
  {
    SpectralField m = constant_field(3, 4, 1.0);
    m.clm(2, 0) += 0.4;
    lib.push_back(crofton_current(CroftonData::smooth(3, 1, m)));
  }
  return lib;
}

HomForm random_homform(int n, int q, int p, int L, unsigned seed) {
  HomForm w(n, q, p, 0);
  unsigned s = seed;
  for (std::uint8_t I = 0; I < (1u << n); ++I) {
    if (__builtin_popcount(I) != q) continue;
    for (std::uint8_t J = 0; J < (1u << n); ++J) {
      if (__builtin_popcount(J) != p) continue;
      w.coeffs[{I, J}] = random_real_field(n, L, s++);
    }
  }
  return w;
}

Polytope random_box(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(0.3, 2.0);
  std::vector<double> lo(n, 0.0), hi(n);
  for (int j = 0; j < n; ++j) hi[j] = d(rng);
  return Polytope::box(lo, hi);
}

// ---------------- multipliers ----------------

VerificationReport suite_multipliers(const VerifyConfig& cfg) {
  VerificationReport r{"multipliers", cfg, {}};
  // anchors B(n, n-k, 0) = vol(S^{n-k-1})/vol(S^{k-1})
  struct A {
    int n, k;
  };
  for (auto [n, k] : {A{2, 1}, A{3, 1}, A{3, 2}}) {
    double expect = sphere_area(n - k) / sphere_area(k);
    double err = std::abs(bochner_multiplier(n, n - k, 0) - cplx(expect));
    add_check(r, "multiplier.anchor.n" + std::to_string(n) + "k" + std::to_string(k),
              "B(n,n-k,0) = vol(S^{n-k-1})/vol(S^{k-1})", err, 1e-10);
  }
  for (int n : {2, 3}) {
    double worst = 0;
    for (int lambda = 1; lambda < n; ++lambda)
      for (int m = 0; m <= 16; ++m) {
        cplx c = bochner_multiplier(n, lambda, m);
        cplx o = bochner_multiplier_oracle(n, lambda, m);
        worst = std::max(worst, std::abs(c - o) / std::max(1.0, std::abs(c)));
      }
    add_check(r, "multiplier.oracle.n" + std::to_string(n),
              "table = Gaussian-regularized quadrature oracle, m <= 16", worst, 1e-8);
  }
  double worst = 0;
  for (int n : {2, 3})
    for (int lambda = 1; lambda < n; ++lambda)
      for (int m = 0; m <= 16; ++m) {
        cplx prod = bochner_multiplier(n, lambda, m) * bochner_multiplier(n, n - lambda, m);
        double expect = (m % 2 == 0) ? 1.0 : -1.0;
        worst = std::max(worst, std::abs(prod - cplx(expect)));
      }
  add_check(r, "multiplier.inversion_normalization", "B(n,l,m) B(n,n-l,m) = (-1)^m", worst, 1e-8);
  return r;
}

// ---------------- inversion ----------------

VerificationReport suite_inversion(const VerifyConfig& cfg) {
  VerificationReport r{"inversion", cfg, {}};
  // forms: 20 random band-limited r=0 HomForms
  {
    double worst2 = 0, worst3 = 0;
    for (int t = 0; t < 10; ++t) {
      HomForm w = random_homform(2, 1, 1, std::min(10, cfg.band_limit_2d), cfg.seed + 10 + t);
      HomForm ff = fourier_form(fourier_form(w));
      double sign = 1.0;  // (-1)^{qn} with q=1, n=2
      HomForm expect = cplx(sign) * antipodal_pullback_form(w);
      worst2 = std::max(worst2, rel(current_distance(ff, expect), w.smooth_norm()));
    }
    for (int t = 0; t < 10; ++t) {
      int q = 1 + (t % 2);
      HomForm w = random_homform(3, q, 1, std::min(8, cfg.band_limit_3d), cfg.seed + 30 + t);
      HomForm ff = fourier_form(fourier_form(w));
      double sign = ((q * 3) % 2 == 0) ? 1.0 : -1.0;
      HomForm expect = cplx(sign) * antipodal_pullback_form(w);
      worst3 = std::max(worst3, rel(current_distance(ff, expect), w.smooth_norm()));
    }
    add_check(r, "inversion.forms.n2", "F F = (-1)^{qn} (-id)^* on 0-homogeneous forms", worst2, 1e-8);
    add_check(r, "inversion.forms.n3", "F F = (-1)^{qn} (-id)^* on 0-homogeneous forms", worst3, 1e-8);
  }
  // valuation library: type preservation and inversion
  std::vector<ValCurrent> lib = value_library(cfg);
  for (std::size_t i = 0; i < lib.size(); ++i) {
    ValCurrent f = fourier_val(lib[i]);
    auto rep = is_valuation_type(f.cur, 1e-8);
    double measure = std::max({rep.iE_norm, rep.vertical_norm, rep.closed_norm}) / std::max(1.0, rep.scale);
    if (!rep.shape_ok || !rep.homogeneous) measure = 1.0;
    add_check(r, "valuation_type.F0." + std::to_string(i), "F0 tau is valuation-type", measure, 1e-8);
  }
  for (std::size_t i = 0; i < lib.size(); ++i) {
    ValCurrent ff = fourier_val(fourier_val(lib[i]));
    ValCurrent ex = antipodal_val(lib[i]);
    double err = rel(current_distance(ff.cur, ex.cur), lib[i].cur.smooth_norm() + lib[i].cur.atom_norm());
    add_check(r, "inversion.valuations." + std::to_string(i), "F F = (-id)^* on valuations", err, 1e-8);
  }
  // GL equivariance: F(A^* phi) = |det A| (A^{-T})^* F(phi)
  {
    std::mt19937_64 rng(cfg.seed + 77);
    std::uniform_real_distribution<double> d(-1, 1);
    double worst = 0;
    for (int t = 0; t < 10; ++t) {
      Eigen::MatrixXd A(2, 2);
      do {
        A << 1 + 0.5 * d(rng), 0.5 * d(rng), 0.5 * d(rng), 1 + 0.5 * d(rng);
      } while (std::abs(A.determinant()) < 0.3);
      ValCurrent v = plane_current(real_mode_density(10, {{0, 0.4}, {2, cplx(0.2, 0.1)}, {3, cplx(0.1, 0)}}));
      ValCurrent lhs = fourier_val(val_gl_pullback(A, v));
      ValCurrent rhs = val_gl_pullback(A.inverse().transpose(), fourier_val(v));
      rhs.cur = cplx(std::abs(A.determinant())) * rhs.cur;
      worst = std::max(worst, rel(current_distance(lhs.cur, rhs.cur), lhs.cur.smooth_norm()));
    }
    add_check(r, "inversion.gl_equivariance", "F(A^* phi) = |det A| (A^{-T})^* F(phi)", worst, 1e-6);
  }
  // parity preservation
  {
    double worst = 0;
    for (auto& v : lib) {
      if (v.parity == 0) continue;
      ValCurrent f = fourier_val(v);
      HomForm proj;
      double bad = 0;
      for (auto& [key, g] : f.cur.coeffs) bad += parity_project(g, -v.parity).norm_l2();
      worst = std::max(worst, rel(bad, f.cur.smooth_norm()));
    }
    add_check(r, "inversion.parity", "F preserves parity", worst, 1e-10);
  }
  return r;
}

// ---------------- intrinsic ----------------

VerificationReport suite_intrinsic(const VerifyConfig& cfg) {
  VerificationReport r{"intrinsic", cfg, {}};
  // F0 lambda_1 = lambda_2 in n=3
  {
    HomForm l1 = lambda_current(3, 1, 2);
    HomForm f = fourier0(l1);
    HomForm l2 = lambda_current(3, 2, 2);
    add_check(r, "intrinsic.lambda", "F0 lambda_k = lambda_{n-k}", rel(current_distance(f, l2), 1.0), 1e-8);
  }
  {
    ValCurrent f = fourier_val(intrinsic_current(3, 1, 6));
    ValCurrent v2 = intrinsic_current(3, 2, 6);
    add_check(r, "intrinsic.FV1", "F V_1 = V_2 in n=3",
              rel(current_distance(f.cur, v2.cur), v2.cur.smooth_norm()), 1e-8);
  }
  {
    ValCurrent f = fourier_val(intrinsic_current(2, 1, 6));
    ValCurrent v1 = intrinsic_current(2, 1, 6);
    add_check(r, "intrinsic.FV1.n2", "F V_1 = V_1 in n=2",
              rel(current_distance(f.cur, v1.cur), v1.cur.smooth_norm()), 1e-8);
  }
  // end-to-end: evaluate the Fourier image via a fitted Crofton density and
  // Monte Carlo projection volumes against the analytic V_2 of boxes
  {
    ValCurrent f = fourier_val(intrinsic_current(3, 1, 6));
    auto [density, resid] = fit_crofton_density(f, {{0, 0}});
    add_check(r, "intrinsic.crofton_fit", "Fourier image of V_1 is a uniform Crofton current", resid, 1e-6);
    CroftonData d = CroftonData::smooth(3, 1, density);
    std::mt19937_64 rng(cfg.seed + 5);
    double worst = 0;
    for (int t = 0; t < 10; ++t) {
      Polytope K = random_box(3, rng);
      auto edges = as_box_edges(K);
      double expect = box_intrinsic_volume(*edges, 2);
      cplx got = eval_crofton_mc(d, K, 100000, cfg.seed + 100 + t);
      worst = std::max(worst, std::abs(got - cplx(expect)) / expect);
    }
    add_check(r, "intrinsic.mc_eval", "MC Crofton evaluation of F V_1 matches V_2 on boxes", worst, 1e-2);
  }
  return r;
}

// ---------------- plane-example ----------------

VerificationReport suite_plane_example(const VerifyConfig& cfg) {
  VerificationReport r{"plane-example", cfg, {}};
  int L = 63;
  double eps = 1e-3;
  // three-delta odd combination: modes at multiples of 3, equal to 3/pi at
  // odd multiples m = 3n (n odd), zero otherwise
  SpectralField f(2, L);
  for (int m = -L; m <= L; ++m) {
    if (m % 3 != 0 || m == 0) continue;
    int n3 = m / 3;
    if (n3 % 2 == 0) continue;
    f.cm(m) = 3.0 / kPi;
  }
  SpectralField fm = mollify_field(f, eps);
  ValCurrent psi = plane_current(fm);
  ValCurrent fpsi = fourier_val(psi);
  SpectralField g = plane_density(fpsi);
  double worst = 0;
  for (int m = -L; m <= L; ++m) {
    cplx expect = std::pow(cplx(0, 1), std::abs(m)) * f.cm(m) * std::exp(-eps * double(m) * m);
    worst = std::max(worst, std::abs(g.cm(m) - expect));
  }
  add_check(r, "plane.mode_table", "density of F psi has modes i^{|m|} f^(m) e^{-eps m^2}", worst, 1e-8);
  // nonzero pattern: unmollified value (3/pi) i^{3|m|} on modes 3m, m odd
  double pat = 0;
  for (int m = -L; m <= L; ++m) {
    cplx unmoll = (std::abs(g.cm(m)) > 1e-14) ? g.cm(m) / std::exp(-eps * double(m) * m) : cplx(0);
    bool should = (m % 3 == 0) && (m != 0) && ((m / 3) % 2 != 0);
    if (should) {
      cplx expect = (3.0 / kPi) * std::pow(cplx(0, 1), std::abs(m));
      pat = std::max(pat, std::abs(unmoll - expect));
    } else {
      pat = std::max(pat, std::abs(unmoll));
    }
  }
  add_check(r, "plane.pattern", "nonzero modes 3m (m odd) with value (3/pi) i^{3|m|}", pat, 1e-8);
  // parity: psi odd, F psi odd
  add_check(r, "plane.parity", "odd input stays odd", parity_of(fpsi) == -1 ? 0.0 : 1.0, 0.5);
  return r;
}

// ---------------- even ----------------

VerificationReport suite_even(const VerifyConfig& cfg) {
  VerificationReport r{"even", cfg, {}};
  // smoothed families, n=2: F(crofton(m)) = crofton(perp m), perp = rotate 90
  for (double t : {0.2, 0.5, 0.9}) {
    SpectralField m = real_mode_density(8, {{0, 1.0}, {2, cplx(0.3 * t, 0.1 * t)}, {4, cplx(0.2 * t, 0)}});
    ValCurrent lhs = fourier_val(crofton_current(CroftonData::smooth(2, 1, m)));
    SpectralField mperp = m;
    for (int k = -m.L; k <= m.L; ++k) mperp.cm(k) = std::pow(cplx(0, 1), ((k % 4) + 4) % 4) * m.cm(k);
    ValCurrent rhs = crofton_current(CroftonData::smooth(2, 1, mperp));
    double err = rel(current_distance(lhs.cur, rhs.cur), rhs.cur.smooth_norm());
    add_check(r, "even.n2.t" + std::to_string(t), "F crofton(m) = crofton(perp_* m)", err, 1e-6);
  }
  // n=3: lines to planes with the same sphere density
  for (double t : {0.0, 0.4, 0.8}) {
    SpectralField m = constant_field(3, 4, 1.0);
    m.clm(2, 0) += 0.5 * t;
    if (t > 0) {
      m.clm(2, 2) += cplx(0.2 * t, 0.1 * t);
      m.clm(2, -2) += cplx(0.2 * t, -0.1 * t);
    }
    ValCurrent lhs = fourier_val(crofton_current(CroftonData::smooth(3, 1, m)));
    ValCurrent rhs = crofton_current(CroftonData::smooth(3, 2, m));
    double err = rel(current_distance(lhs.cur, rhs.cur), rhs.cur.smooth_norm());
    add_check(r, "even.n3.t" + std::to_string(t), "F crofton_1(m) = crofton_2(m)", err, 1e-6);
  }
  // atomic route vs mollified current route on random boxes; the atom
  // directions stay away from the coordinate circles where the shadow
  // functions of boxes have kinks, so the heat tail of the mollifier decays
  {
    std::vector<CroftonAtom> atoms;
    {
      Eigen::VectorXd u1(3), u2(3);
      u1 << 1.0, 1.2, 1.4;
      u2 << -1.1, 0.9, 1.3;
      u1.normalize();
      u2.normalize();
      CroftonAtom a1, a2;
      a1.frame = u1;
      a1.weight = 0.6;
      a2.frame = u2;
      a2.weight = 0.8;
      atoms.push_back(a1);
      atoms.push_back(a2);
    }
    CroftonData atomic = CroftonData::atomic_data(3, 1, atoms);
    CroftonData perp = klain_fourier_atoms(atomic);
    // mollified density representing the atoms on the double cover
    int L = 48;
    double eps = 0.004;
    SpectralField md(3, L);
    for (auto& a : atoms) {
      SpectralField delta(3, L);
      for (int l = 0; l <= L; l += 2) {
        double fac = 2.0 * std::exp(-eps * double(l) * (l + 1));
        SpectralField basis(3, l == 0 ? 1 : l);
        for (int mm = -l; mm <= l; ++mm) {
          cplx y = 0;
          {
            SpectralField e(3, l == 0 ? 1 : l);
            e.clm(l, mm) = 1.0;
            y = std::conj(eval_at(e, a.frame.col(0)));
          }
          delta.clm(l, mm) += fac * y;
        }
      }
      delta *= cplx(a.weight);
      md += delta;
    }
    ValCurrent cur = crofton_current(CroftonData::smooth(3, 1, md));
    ValCurrent fcur = fourier_val(cur);
    // extract the plane-density of the Fourier image pointwise
    const SphereGrid& grid = SphereGrid::get(3, fcur.cur.band() + 2);
    Eigen::VectorXcd mp(grid.node_count());
    for (int node = 0; node < grid.node_count(); ++node) {
      Eigen::VectorXd w = grid.nodes.row(node).transpose();
      cplx acc = 0;
      for (int a2 = 1; a2 <= 3; ++a2) {
        std::uint8_t am = static_cast<std::uint8_t>(1u << (a2 - 1));
        std::uint8_t Ic = static_cast<std::uint8_t>(7u & ~am);
        double s = shuffle_sign(am, Ic);
        for (int j = 1; j <= 3; ++j) {
          const SpectralField* gf = fcur.cur.field(Ic, static_cast<std::uint8_t>(1u << (j - 1)));
          if (gf) acc += s * w[a2 - 1] * w[j - 1] * eval_at(*gf, w);
        }
      }
      mp[node] = acc;
    }
    SpectralField mprime = analyze(mp, grid, fcur.cur.band() + 2);
    double worst = 0;
    std::mt19937_64 rng2(cfg.seed + 13);
    for (int t = 0; t < 20; ++t) {
      Polytope K = random_box(3, rng2);
      cplx route_a = eval_crofton(perp, K);
      // route b: phi(K) = int h_K(nu) m'(nu) d nu for the degree-1 image
      const SphereGrid& g2 = SphereGrid::get(3, 48);
      Eigen::VectorXcd ms = synthesize(mprime.resized(48), g2);
      // phi(K) = 1/2 int m'(nu) (h(nu) + h(-nu)) = int h m' for even m'
      cplx route_b = 0;
      for (int node = 0; node < g2.node_count(); ++node)
        route_b += g2.weights[node] * ms[node] * support(K, g2.nodes.row(node).transpose());
      worst = std::max(worst, std::abs(route_a - route_b) / std::max(1.0, std::abs(route_a)));
    }
    add_check(r, "even.atomic_vs_mollified", "perp atoms match the mollified current route on boxes",
              worst, 1e-2);
  }
  return r;
}

}  // namespace

// defined in verify_suites2.cpp
VerificationReport suite_selfadjoint_impl(const VerifyConfig& cfg);
VerificationReport suite_functoriality_impl(const VerifyConfig& cfg);
VerificationReport suite_product_convolution_impl(const VerifyConfig& cfg);
VerificationReport suite_signs_impl(const VerifyConfig& cfg);

std::vector<std::string> suite_names() {
  return {"inversion",     "intrinsic",          "plane-example", "even",  "selfadjoint",
          "functoriality", "product-convolution", "signs",         "multipliers"};
}

VerificationReport run_suite(const std::string& name, const VerifyConfig& cfg) {
  if (name == "multipliers") return suite_multipliers(cfg);
  if (name == "inversion") return suite_inversion(cfg);
  if (name == "intrinsic") return suite_intrinsic(cfg);
  if (name == "plane-example") return suite_plane_example(cfg);
  if (name == "even") return suite_even(cfg);
  if (name == "selfadjoint") return suite_selfadjoint_impl(cfg);
  if (name == "functoriality") return suite_functoriality_impl(cfg);
  if (name == "product-convolution") return suite_product_convolution_impl(cfg);
  if (name == "signs") return suite_signs_impl(cfg);
  throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

std::string format_table(const VerificationReport& r) {
  std::ostringstream os;
  os << "suite: " << r.suite << "\n";
  os << "config: L2=" << r.config.band_limit_2d << " L3=" << r.config.band_limit_3d
     << " seed=" << r.config.seed << "\n";
  os << std::string(100, '-') << "\n";
  for (auto& c : r.checks) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-34s %-42s %10.3e %9.1e  %s\n", c.id.c_str(),
                  c.anchor.substr(0, 42).c_str(), c.measured, c.tolerance, c.pass ? "pass" : "FAIL");
    os << buf;
  }
  os << std::string(100, '-') << "\n";
  os << (r.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << " (" << r.checks.size() << " checks)\n";
  return os.str();
}

std::string format_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "suite,id,anchor,measured,tolerance,pass\n";
  for (auto& c : r.checks)
    os << r.suite << "," << c.id << ",\"" << c.anchor << "\"," << c.measured << "," << c.tolerance << ","
       << (c.pass ? 1 : 0) << "\n";
  return os.str();
}

std::string format_json_report(const VerificationReport& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["config"] = {{"band_limit_2d", r.config.band_limit_2d},
                 {"band_limit_3d", r.config.band_limit_3d},
                 {"seed", r.config.seed}};
  nlohmann::json checks = nlohmann::json::array();
  for (auto& c : r.checks)
    checks.push_back({{"id", c.id},
                      {"anchor", c.anchor},
                      {"measured", c.measured},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  j["checks"] = checks;
  j["all_pass"] = r.all_pass();
  return j.dump(2);
}

std::string format_svg(const VerificationReport& r) {
  // bar chart of log10(measured/tolerance) per check; bars below 0 pass
  int n = static_cast<int>(r.checks.size());
  int w = 60, gap = 12, h = 360, base = 200;
  int width = 80 + n * (w + gap);
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << h + 80 << "'>\n";
  os << "<text x='10' y='20' font-size='16'>" << r.suite << ": error / tolerance (log10)</text>\n";
  os << "<line x1='40' y1='" << base << "' x2='" << width - 10 << "' y2='" << base
     << "' stroke='black'/>\n";
  for (int i = 0; i < n; ++i) {
    const Check& c = r.checks[i];
    double ratio = std::log10(std::max(c.measured, 1e-300) / c.tolerance);
    double hh = std::min(150.0, std::abs(ratio) * 20.0);
    int x = 50 + i * (w + gap);
    int y = ratio < 0 ? base : static_cast<int>(base - hh);
    os << "<rect x='" << x << "' y='" << (ratio < 0 ? base : y) << "' width='" << w << "' height='"
       << static_cast<int>(hh) << "' fill='" << (c.pass ? "#4a9" : "#c33") << "'";
    if (ratio < 0) os << " transform='translate(0,0)'";
    os << "/>\n";
    if (ratio < 0)
      os << "<rect x='" << x << "' y='" << base << "' width='" << w << "' height='" << static_cast<int>(hh)
         << "' fill='" << (c.pass ? "#4a9" : "#c33") << "'/>\n";
    os << "<text x='" << x << "' y='" << h + 60 << "' font-size='9' transform='rotate(-45 " << x << " "
       << h + 60 << ")'>" << c.id << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string dump_multiplier_csv(int max_m) {
  std::ostringstream os;
  os << "n,lambda,m,re,im\n";
  for (int n : {2, 3}) {
    MultiplierTable t = MultiplierTable::build(n, max_m);
    for (auto& e : t.entries)
      os << e.n << "," << e.lambda << "," << e.m << "," << e.value.real() << "," << e.value.imag() << "\n";
  }
  return os.str();
}

}  // namespace valfour
