#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "valfour/crofton.hpp"
#include "valfour/multipliers.hpp"
#include "valfour/products.hpp"
#include "valfour/rumin.hpp"
#include "valfour/valuations.hpp"
#include "valfour/verify.hpp"

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

// int_R t^k e^{-pi t^2} dt
double gauss_moment_pi(int k) {
  if (k % 2 == 1) return 0.0;
  double v = 1.0;
  for (int i = 1; i <= k / 2; ++i) v *= (2.0 * i - 1.0) / (2.0 * kPi);
  return v;
}

// <i_* T, mu> with the degree bookkeeping sign (-1)^{(m-n+k)(n-k)} for a
// Schwartz k-form T on R^n included into R^m along the first coordinates
cplx sing_pair(const SchwartzForm& T, const SchwartzForm& mu, int m) {
  int n = T.n, k = T.q;
  Eigen::MatrixXd e = Eigen::MatrixXd::Identity(m, n);
  SchwartzForm rmu = restrict_isometric(mu, e);
  double s = (((m - n) * (n - k)) % 2 == 0) ? 1.0 : -1.0;
  return s * pairing(T, rmu);
}

// <(proj^* G) ^ phi> over R^m for a Schwartz form G on R^n and test phi on
// R^m; proj drops the last m-n coordinates.  Exact through Gaussian moments
// (double Gaussian in the shared coordinates, single in the fiber).
cplx pair_pullback_with_test(const SchwartzForm& G, const SchwartzForm& phi, int m) {
  int n = G.n;
  cplx acc = 0;
  std::uint8_t fullm = static_cast<std::uint8_t>((1u << m) - 1);
  for (auto& [I, P] : G.coeffs) {
    for (auto& [K, Q] : phi.coeffs) {
      if (I.mask & K.mask) continue;
      if ((I.mask | K.mask) != fullm) continue;
      double sgn = shuffle_sign(I.mask, K.mask);
      // lift P to m variables (first n coordinates) and multiply
      Poly PL;
      for (auto& [e, c] : P.terms) PL.terms[e] += c;
      Poly prod = PL * Q;
      for (auto& [e, c] : prod.terms) {
        double mom = 1;
        for (int j = 0; j < m; ++j) {
          // shared coordinates carry both Gaussians, the fiber only phi's
          if (j < n) {
            int kk = e[j];
            if (kk % 2 == 1) { mom = 0; break; }
            double v = std::sqrt(0.5);
            for (int i = 1; i <= kk / 2; ++i) v *= (2.0 * i - 1.0) / (4.0 * kPi);
            mom *= v;
          } else {
            mom *= gauss_moment_pi(e[j]);
          }
        }
        acc += sgn * c * mom;
      }
    }
  }
  return acc;
}

// fiber integration of a Schwartz form over the last s coordinates: keeps
// blades containing the full fiber blade, moved to the end
SchwartzForm fiber_integrate(const SchwartzForm& mu, int s) {
  int m = mu.n, nw = m - s;
  SchwartzForm out(nw, mu.q - s);
  std::uint8_t zmask = static_cast<std::uint8_t>(((1u << m) - 1u) & ~((1u << nw) - 1u));
  for (auto& [K, P] : mu.coeffs) {
    if ((K.mask & zmask) != zmask) continue;
    std::uint8_t Kw = static_cast<std::uint8_t>(K.mask & ((1u << nw) - 1u));
    double sgn = shuffle_sign(Kw, zmask);
    Poly res;
    for (auto& [e, c] : P.terms) {
      double mom = 1;
      std::array<std::uint8_t, 4> ew{0, 0, 0, 0};
      for (int j = 0; j < nw; ++j) ew[j] = e[j];
      for (int j = nw; j < m; ++j) mom *= gauss_moment_pi(e[j]);
      if (mom != 0.0) res.terms[ew] += sgn * c * mom;
    }
    MultiIndex KI(Kw, nw);
    auto it = out.coeffs.find(KI);
    if (it == out.coeffs.end()) out.coeffs[KI] = res;
    else it->second = it->second + res;
  }
  return out;
}

// weak pairing of the current of a valuation against a Schwartz test form,
// selecting one value blade
std::map<std::uint8_t, cplx> current_pair(const HomForm& cur, const SchwartzForm& eta) {
  return pair_with_test(cur, eta);
}

// ---------------- selfadjoint ----------------

VerificationReport selfadjoint_impl(const VerifyConfig& cfg) {
  VerificationReport r{"selfadjoint", cfg, {}};
  std::vector<SpectralField> gs = {
      real_mode_density(8, {{0, 0.5}, {2, cplx(0.2, 0.1)}}),
      real_mode_density(8, {{3, cplx(0.4, 0)}}),
      real_mode_density(8, {{0, 0.3}, {4, cplx(-0.15, 0.1)}}),
  };
  std::vector<SpectralField> hs = {
      real_mode_density(8, {{0, 0.2}, {3, cplx(0.1, 0.05)}}),
      real_mode_density(8, {{2, cplx(0.3, -0.1)}}),
  };
  int idx = 0;
  for (auto& g : gs) {
    for (auto& h : hs) {
      ValCurrent u = plane_current(g);
      cplx lhs = poincare_pair(fourier_val(u), h);
      ValCurrent theta = plane_current(density_from_h(h));
      SpectralField fh = h_from_density(plane_density(fourier_val(theta)));
      cplx rhs = poincare_pair(u, fh);
      add_check(r, "selfadjoint.pair." + std::to_string(idx), "<F u, theta> = <u, F theta>",
                rel(std::abs(lhs - rhs), std::abs(lhs)), 1e-6);
      ++idx;
    }
  }
  // pairing lemma P1 = P2 on the same pairs
  idx = 0;
  for (auto& g : gs) {
    for (auto& h : hs) {
      ValCurrent phi = plane_current(g);
      ValCurrent psi = plane_current(density_from_h(h));
      ConvolutionResult conv = convolution_bottom(phi, psi);
      cplx prod = product_top(antipodal_val(phi), psi);
      add_check(r, "selfadjoint.P1P2." + std::to_string(idx),
                "chi-part of phi * psi = top of (-id)^* phi . psi",
                rel(std::abs(conv.value - prod), std::abs(prod)), 1e-6);
      ++idx;
    }
  }
  return r;
}

// ---------------- functoriality ----------------

VerificationReport functoriality_impl(const VerifyConfig& cfg) {
  VerificationReport r{"functoriality", cfg, {}};

  // primal: F(i^* phi) = (i^vee)_* F(phi)
  {
    Eigen::MatrixXd e(2, 1);
    e << 1, 0;
    LinMap inc(e, LinMap::Kind::mono);
    LinMap proj = inc.dual();
    std::vector<ValCurrent> cases = {
        plane_current(real_mode_density(8, {{0, 0.5}})),
        plane_current(real_mode_density(8, {{2, cplx(0.3, 0.1)}})),
        plane_current(real_mode_density(8, {{3, cplx(0.25, 0)}, {5, cplx(0, 0.1)}})),
    };
    int idx = 0;
    for (auto& phi : cases) {
      ValCurrent lhs = fourier_val(pullback_val(inc, phi));
      ValCurrent rhs = pushforward_val(proj, fourier_val(phi));
      double err = rel(current_distance(lhs.cur, rhs.cur), lhs.cur.smooth_norm() + lhs.cur.atom_norm());
      add_check(r, "functoriality.R1R2." + std::to_string(idx), "F i^* = (i^vee)_* F", err,
                cfg.tol_cross_engine);
      ++idx;
    }
  }
  {
    Eigen::MatrixXd e(3, 2);
    e << 1, 0, 0, 1, 0, 0;
    LinMap inc(e, LinMap::Kind::mono);
    LinMap proj = inc.dual();
    SpectralField m = constant_field(3, 4, 1.0);
    m.clm(2, 0) += 0.4;
    std::vector<ValCurrent> cases = {intrinsic_current(3, 1, 6), intrinsic_current(3, 2, 6),
                                     crofton_current(CroftonData::smooth(3, 1, m))};
    int idx = 0;
    for (auto& phi : cases) {
      ValCurrent lhs = fourier_val(pullback_val(inc, phi));
      ValCurrent rhs = pushforward_val(proj, fourier_val(phi));
      double err = rel(current_distance(lhs.cur, rhs.cur), lhs.cur.smooth_norm() + lhs.cur.atom_norm());
      add_check(r, "functoriality.R2R3." + std::to_string(idx), "F i^* = (i^vee)_* F", err,
                cfg.tol_cross_engine);
      ++idx;
    }
  }

  // dual identity for epimorphisms, tested weakly: F_V(p^* psi) = i_*(F_W psi)
  // for p the coordinate projection and i = p^vee the inclusion of the duals.
  // Both sides are paired against Schwartz tests with shared conventions.
  auto dual_check = [&](int nb, int ns, const ValCurrent& psi, unsigned seed) -> double {
    int k = psi.k;
    int s = nb - ns;
    const HomForm& S = psi.cur;               // tau(psi) on the small dual space
    HomForm FS = fourier_val(psi).cur;        // tau(F psi) on the small space
    // q of the singular current iota_*(tau psi): q_S + codim
    int qX = (ns - k) + s;
    double worst = 0;
    for (int t = 0; t < 2; ++t) {
      SchwartzForm eta = random_schwartz(nb, qX, 2, seed + t);
      // --- LHS: < F0 iota_*(tau psi), eta >
      // F adjoint: (-1)^{qX (nb - qX)} < value-star(iota_* tau psi), F eta >
      SchwartzForm feta = fourier(eta);
      Eigen::MatrixXd einc = Eigen::MatrixXd::Identity(nb, ns);
      SchwartzForm feta_r = restrict_isometric(feta, einc);
      auto base = current_pair(S, feta_r);  // per value blade of tau psi (small-world masks)
      double sF = ((qX * (nb - qX)) % 2 == 0) ? 1.0 : -1.0;
      // inclusion-pushforward pairing sign (-1)^{codim * codegree}
      int qS = ns - k;
      double sInc = ((s * (ns - qS)) % 2 == 0) ? 1.0 : -1.0;
      std::map<std::uint8_t, cplx> lhs;
      std::uint8_t fullb = static_cast<std::uint8_t>((1u << nb) - 1);
      for (auto& [J, val] : base) {
        // value star on the big space: J -> J^c with shuffle sign
        std::uint8_t Jc = static_cast<std::uint8_t>(fullb & ~J);
        lhs[Jc] += sF * sInc * double(shuffle_sign(J, Jc)) * val;
      }
      // --- RHS: < iota_*(F_W psi), eta > through the twisted chain:
      // tau(i_* phi') = star_inv_big( p^*-weak( star_small(tau phi') ) )
      HomForm A = value_star(FS);  // values in the small world
      SchwartzForm eta_f = fiber_integrate(eta, s);
      auto rbase = current_pair(A, eta_f);  // per small-world value blade
      std::map<std::uint8_t, cplx> rhs;
      for (auto& [J, val] : rbase) {
        // untwist on the big space
        std::uint8_t Jc = static_cast<std::uint8_t>(fullb & ~J);
        rhs[Jc] += double(shuffle_sign(Jc, J)) * val;
      }
      double scale = 0, err = 0;
      for (auto& [J, v] : lhs) scale = std::max(scale, std::abs(v));
      for (auto& [J, v] : rhs) scale = std::max(scale, std::abs(v));
      std::map<std::uint8_t, cplx> all = lhs;
      for (auto& [J, v] : rhs) all[J] += 0;
      for (auto& [J, v] : all) {
        cplx a = lhs.count(J) ? lhs[J] : 0, b = rhs.count(J) ? rhs[J] : 0;
        err = std::max(err, std::abs(a - b));
      }
      worst = std::max(worst, err / std::max(1.0, scale));
    }
    return worst;
  };

  {
    // anchored case: psi = vol_1, p: R^2 -> R^1
    double e1 = dual_check(2, 1, volume_current(1), cfg.seed + 400);
    add_check(r, "functoriality.dual.R2R1.vol", "F p^* = i_* F (weak, epimorphism)", e1, cfg.tol_cross_engine);
    double e2 = dual_check(2, 1, euler_current(1), cfg.seed + 410);
    add_check(r, "functoriality.dual.R2R1.euler", "F p^* = i_* F (weak, epimorphism)", e2,
              cfg.tol_cross_engine);
    std::vector<ValCurrent> cases = {
        plane_current(real_mode_density(8, {{0, 0.5}})),
        plane_current(real_mode_density(8, {{2, cplx(0.3, 0.1)}})),
        plane_current(real_mode_density(8, {{3, cplx(0.25, 0)}})),
        volume_current(2),
    };
    int idx = 0;
    for (auto& psi : cases) {
      double err = dual_check(3, 2, psi, cfg.seed + 420 + 7 * idx);
      add_check(r, "functoriality.dual.R3R2." + std::to_string(idx), "F p^* = i_* F (weak, epimorphism)",
                err, cfg.tol_cross_engine);
      ++idx;
    }
  }
  return r;
}

// ---------------- product-convolution ----------------

VerificationReport product_convolution_impl(const VerifyConfig& cfg) {
  VerificationReport r{"product-convolution", cfg, {}};
  auto delta_pair = [&](double a, int L, double eps) {
    SpectralField g(2, L);
    for (int m = -L; m <= L; ++m) {
      if (m % 2 != 0) continue;
      g.cm(m) = std::exp(cplx(0, -m * a)) * (2.0 / (2.0 * kPi)) * std::exp(-eps * double(m) * m);
    }
    return g;
  };
  // projection valuations with the analytic |sin| oracle
  {
    int idx = 0;
    for (auto [a, b] : {std::pair{0.3, 1.25}, std::pair{0.9, 2.4}}) {
      ValCurrent va = plane_current(delta_pair(a + kPi / 2, 48, 5e-4));
      ValCurrent vb = plane_current(delta_pair(b + kPi / 2, 48, 5e-4));
      cplx prod = product_top(va, vb);
      double analytic = std::abs(std::sin(b - a));
      add_check(r, "product.projection." + std::to_string(idx), "phi_E . phi_F = |sin angle(E,F)| vol",
                std::abs(prod - cplx(analytic)), 1e-3);
      ConvolutionResult conv = convolution_bottom(fourier_val(va), fourier_val(vb));
      add_check(r, "intertwine.projection." + std::to_string(idx), "top of phi.psi = chi-part of F phi * F psi",
                rel(std::abs(prod - conv.value), std::abs(prod)), 1e-3);
      ++idx;
    }
  }
  // smooth pairs
  {
    std::vector<std::pair<SpectralField, SpectralField>> pairs = {
        {real_mode_density(6, {{0, 0.5}}), real_mode_density(6, {{0, 0.5}})},
        {real_mode_density(6, {{0, 0.5}}), real_mode_density(6, {{2, cplx(0.3, 0.1)}})},
        {real_mode_density(6, {{2, cplx(0.3, 0)}}), real_mode_density(6, {{3, cplx(0.2, 0)}})},
        {real_mode_density(6, {{3, cplx(0.2, 0.1)}}), real_mode_density(6, {{5, cplx(0.15, 0)}})},
    };
    int idx = 0;
    for (auto& [g1, g2] : pairs) {
      ValCurrent p1 = plane_current(g1), p2 = plane_current(g2);
      cplx prod = product_top(p1, p2);
      ConvolutionResult conv = convolution_bottom(fourier_val(p1), fourier_val(p2));
      add_check(r, "intertwine.smooth." + std::to_string(idx), "top of phi.psi = chi-part of F phi * F psi",
                rel(std::abs(prod - conv.value), std::abs(prod)), 1e-3);
      // commutativity of both operations
      cplx prod2 = product_top(p2, p1);
      add_check(r, "product.commute." + std::to_string(idx), "phi . psi = psi . phi",
                rel(std::abs(prod - prod2), std::abs(prod)), 1e-8);
      ++idx;
    }
  }
  // V_1 . V_1 = (pi/2) vol, frozen from the support-density pairing
  {
    ValCurrent v1 = intrinsic_current(2, 1, 6);
    cplx prod = product_top(v1, v1);
    add_check(r, "product.V1V1", "V_1 . V_1 = (pi/2) vol", std::abs(prod - cplx(kPi / 2)), 1e-8);
  }
  return r;
}

// ---------------- signs ----------------

VerificationReport signs_impl(const VerifyConfig& cfg) {
  VerificationReport r{"signs", cfg, {}};

  // double Hodge star
  {
    double worst = 0;
    for (int n = 1; n <= 4; ++n) {
      for (std::uint8_t m = 0; m < (1u << n); ++m) {
        GradedCovector a(n);
        a.coeffs[MultiIndex(m, n)] = 1.0;
        int k = __builtin_popcount(m);
        GradedCovector ss = hodge_star(hodge_star(a, "V"), "V*");
        double sign = ((k * (n - k)) % 2 == 0) ? 1.0 : -1.0;
        worst = std::max(worst, std::abs(ss.coeff(MultiIndex(m, n)) - cplx(sign)));
      }
    }
    add_check(r, "sign.double_star", "star_dual . star = (-1)^{k(n-k)}", worst, 0.0);
  }
  // pairing symmetry
  {
    double worst = 0;
    for (int n : {2, 3})
      for (int q = 0; q <= n; ++q) {
        SchwartzForm w = random_schwartz(n, q, 2, cfg.seed + 11 * n + q);
        SchwartzForm eta = random_schwartz(n, q, 2, cfg.seed + 90 + n + q);
        cplx lhs = pairing(fourier(w), eta);
        cplx rhs = pairing(w, fourier(eta));
        double sign = ((q * (n - q)) % 2 == 0) ? 1.0 : -1.0;
        worst = std::max(worst, rel(std::abs(lhs - sign * rhs), std::abs(lhs)));
      }
    add_check(r, "sign.pairing_symmetry", "<F w, eta> = (-1)^{k(n-k)} <w, F eta>", worst, 1e-10);
  }
  // inclusion functoriality factor
  {
    double worst = 0;
    for (auto [n, m] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{1, 3}}) {
      for (int k = 0; k <= n; ++k) {
        SchwartzForm T = random_schwartz(n, k, 2, cfg.seed + 13 * n + m + k);
        SchwartzForm G = fourier(T);
        int kp = k + m - n;  // degree of the included current
        for (unsigned ts = 0; ts < 2; ++ts) {
          SchwartzForm phi = random_schwartz(m, m - (n - k), 2, cfg.seed + 500 + ts);
          // LHS: <F(i_* T), phi> via the adjoint and the inclusion pairing
          SchwartzForm fphi = fourier(phi);
          double sF = ((kp * (m - kp)) % 2 == 0) ? 1.0 : -1.0;
          cplx lhs = sF * sing_pair(T, fphi, m);
          // RHS: (-1)^{(m-n)(n-k)} <(i^vee)^* F T, phi>
          cplx rhs = pair_pullback_with_test(G, phi, m);
          double sfac = (((m - n) * (n - k)) % 2 == 0) ? 1.0 : -1.0;
          worst = std::max(worst, rel(std::abs(lhs - sfac * rhs), std::abs(lhs)));
        }
      }
    }
    add_check(r, "sign.inclusion_functoriality", "F i_* = (-1)^{(m-n)(n-k)} (i^vee)^* F", worst, 1e-10);
  }
  // tensor sign through the projection-product oracle
  {
    SpectralField ga(2, 48), gb(2, 48);
    double a = 0.4, b = 1.7, eps = 5e-4;
    for (int m = -48; m <= 48; ++m) {
      if (m % 2 != 0) continue;
      ga.cm(m) = std::exp(cplx(0, -m * (a + kPi / 2))) * (1.0 / kPi) * std::exp(-eps * double(m) * m);
      gb.cm(m) = std::exp(cplx(0, -m * (b + kPi / 2))) * (1.0 / kPi) * std::exp(-eps * double(m) * m);
    }
    cplx prod = product_top(plane_current(ga), plane_current(gb));
    add_check(r, "sign.tensor_product", "tensor factor (-1)^{(n-k)l} fixes phi_E . phi_F = +|sin|",
              std::abs(prod - cplx(std::abs(std::sin(b - a)))), 1e-3);
  }
  // d / i_E interchange factor on Schwartz forms
  {
    double worst = 0;
    for (int n : {2, 3})
      for (int q = 0; q < n; ++q) {
        SchwartzForm w = random_schwartz(n, q, 2, cfg.seed + 55 + n + q);
        SchwartzForm lhs = fourier(ext_derivative(w));
        SchwartzForm rhs = interior_euler(fourier(w));
        double sign = ((q + 1) % 2 == 0) ? 1.0 : -1.0;
        cplx factor = sign * cplx(0, 2 * kPi);
        for (auto& [I, P] : lhs.coeffs) {
          Poly diff = P - factor * (rhs.coeffs.count(I) ? rhs.coeffs.at(I) : Poly());
          for (auto& [e, c] : diff.terms) worst = std::max(worst, std::abs(c));
        }
      }
    add_check(r, "sign.d_iE_interchange", "F d = (-1)^{q+1} 2 pi i i_E F", worst, 1e-10);
  }
  // delta pullback: constancy and evenness for closed forms
  {
    // density sin(theta) against the angle form: exact value -2, even in v
    SpectralField f(2, 1);
    f.cm(1) = cplx(0, -0.5);
    f.cm(-1) = cplx(0, 0.5);
    HomForm w(2, 1, 0, 0);
    SpectralField u1 = coordinate_field(2, 1, 1), u2 = coordinate_field(2, 2, 1);
    w.coeffs[{1, 0}] = cplx(-1) * multiply(f, u2);
    w.coeffs[{2, 0}] = multiply(f, u1);
    Eigen::MatrixXd e(2, 1);
    e << 1, 0;
    DeltaPullback dp = pullback_mono_delta(LinMap(e, LinMap::Kind::mono), w, 1e-6, 8, cfg.seed);
    add_check(r, "sign.delta_constancy", "c(v) constant and even for closed forms (spread)", dp.spread, 1e-8);
    add_check(r, "sign.delta_value", "restriction of sin d theta carries c = -2",
              std::abs(dp.c.at(0) - cplx(-2.0)), 1e-8);
    // u3 times the solid-angle form on R^3: closed as a current (the
    // boundary atom vanishes), restricted to the horizontal plane: c = pi
    HomForm om(3, 2, 0, 0);
    SpectralField u3 = coordinate_field(3, 3, 1);
    for (int a2 = 1; a2 <= 3; ++a2) {
      std::uint8_t am = static_cast<std::uint8_t>(1u << (a2 - 1));
      std::uint8_t Ic = static_cast<std::uint8_t>(7u & ~am);
      SpectralField fa = multiply(u3, coordinate_field(3, a2, 1));
      fa *= cplx(double(shuffle_sign(am, Ic)));
      om.coeffs[{Ic, 0}] = fa;
    }
    Eigen::MatrixXd e32(3, 2);
    e32 << 1, 0, 0, 1, 0, 0;
    DeltaPullback dp3 = pullback_mono_delta(LinMap(e32, LinMap::Kind::mono), om, 1e-6, 8, cfg.seed + 1);
    add_check(r, "sign.delta_constancy.n3", "c(v) even for the weighted solid-angle form (spread)",
              dp3.spread, 1e-8);
    add_check(r, "sign.delta_value.n3", "c = pi for the u3-weighted solid-angle form",
              std::abs(dp3.c.at(0) - cplx(kPi)), 1e-8);
  }
  // Sym^2 of the twisted current
  {
    double worst = 0;
    for (auto v : {intrinsic_current(2, 1, 6), intrinsic_current(3, 1, 6), intrinsic_current(3, 2, 6),
                   plane_current(real_mode_density(8, {{3, cplx(0.5, 0)}}))}) {
      HomForm tw = value_star(v.cur);
      const SphereGrid& grid = SphereGrid::get(v.n, tw.band() + 1);
      for (int node = 0; node < grid.node_count(); node += 5) {
        Eigen::VectorXd u = grid.nodes.row(node).transpose();
        for (std::uint8_t A = 0; A < (1u << v.n); ++A) {
          if (__builtin_popcount(A) != tw.q) continue;
          for (std::uint8_t B = 0; B < (1u << v.n); ++B) {
            if (__builtin_popcount(B) != tw.p) continue;
            const SpectralField* ab = tw.field(A, B);
            const SpectralField* ba = tw.field(B, A);
            cplx vab = ab ? eval_at(*ab, u) : cplx(0);
            cplx vba = ba ? eval_at(*ba, u) : cplx(0);
            worst = std::max(worst, std::abs(vab - vba));
          }
        }
      }
    }
    add_check(r, "sign.sym2", "twisted current is a symmetric 2-tensor", worst, 1e-10);
  }
  // Rumin kernel tests
  {
    double worst = 0;
    for (int n : {2, 3}) {
      for (int k = 1; k <= n - 1; ++k) {
        GeneratingForm xi(n, k - 1, n - 1 - k);
        unsigned seed = cfg.seed + 7 * n + k;
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
        worst = std::max(worst, rel(rr.D.norm(), ax.norm()));
      }
    }
    GeneratingForm eta(3, 1, 0);
    eta.rep.coeffs[{0, 1}] = random_real_field(3, 3, cfg.seed + 99);
    eta.rep.coeffs[{0, 2}] = random_real_field(3, 3, cfg.seed + 98);
    GeneratingForm de = wedge_d(eta);
    RuminResult rr = rumin_D(de);
    worst = std::max(worst, rel(rr.D.norm(), de.norm()));
    add_check(r, "sign.rumin_kernel", "D(alpha ^ xi) = 0 and D(d eta) = 0", worst, 1e-10);
  }
  // pushforward fiber orientation anchor
  {
    Eigen::MatrixXd e(3, 2);
    e << 1, 0, 0, 1, 0, 0;
    ValCurrent rcur = pullback_val(LinMap(e, LinMap::Kind::mono), intrinsic_current(3, 1, 8));
    ValCurrent expect = intrinsic_current(2, 1, rcur.cur.band());
    add_check(r, "sign.pushforward_orientation", "restriction of V_1 to a plane is +V_1",
              rel(current_distance(rcur.cur, expect.cur), expect.cur.smooth_norm()), 1e-8);
  }
  return r;
}

}  // namespace

VerificationReport suite_selfadjoint_impl(const VerifyConfig& cfg) { return selfadjoint_impl(cfg); }
VerificationReport suite_functoriality_impl(const VerifyConfig& cfg) { return functoriality_impl(cfg); }
VerificationReport suite_product_convolution_impl(const VerifyConfig& cfg) {
  return product_convolution_impl(cfg);
}
VerificationReport suite_signs_impl(const VerifyConfig& cfg) { return signs_impl(cfg); }

}  // namespace valfour
