#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "valfour/homforms.hpp"
#include "valfour/quadrature.hpp"

namespace valfour {

namespace {
constexpr double kPi = 3.14159265358979323846;

double radial_gauss_moment(int k) {
  if (k <= -1) throw std::invalid_argument("radial moment: divergent");
  return 0.5 * std::tgamma(0.5 * (k + 1)) / std::pow(kPi, 0.5 * (k + 1));
}

// dy_I evaluated on one or two vectors (minor of the stacked columns).
double blade_on_vector(std::uint8_t I, const Eigen::VectorXd& v) {
  int a = 1 + __builtin_ctz(I);
  return v[a - 1];
}

// fiber-integration orientation: the degree-dependent sign making the
// current-level pushforward match the valuation-level anchors (restriction
// of intrinsic volumes, Fubini on boxes); see the sign ledger
double drop_orientation_sign(int n, int q) {
  return (((q - 1) * (n - q)) % 2 == 0) ? 1.0 : -1.0;
}

double blade_on_pair(std::uint8_t I, int n, const Eigen::VectorXd& v1, const Eigen::VectorXd& v2) {
  int idx[2], t = 0;
  for (int i = 1; i <= n; ++i)
    if (I >> (i - 1) & 1u) idx[t++] = i - 1;
  return v1[idx[0]] * v2[idx[1]] - v1[idx[1]] * v2[idx[0]];
}
}  // namespace

HomForm pullback_mono_smooth(const LinMap& e, const HomForm& w, int L_out) {
  if (e.kind == LinMap::Kind::epi) throw std::invalid_argument("pullback_mono_smooth: map must be injective");
  int j = e.source_dim(), nn = e.target_dim();
  if (nn != w.n) throw std::invalid_argument("pullback_mono_smooth: dimension mismatch");
  if (w.q >= j) throw std::invalid_argument("pullback_mono_smooth: q >= j, use pullback_mono_delta");
  const Eigen::MatrixXd& E = e.matrix;

  bool isometric = (E.transpose() * E - Eigen::MatrixXd::Identity(j, j)).norm() < 1e-12;
  int L = w.band();
  if (L_out < 0) L_out = isometric ? L : L + L / 2 + 8;

  HomForm out(j, w.q, w.p, w.r);
  out.space = w.space;
  out.unit = w.unit;
  if (w.coeffs.empty()) return out;

  const SphereGrid& grid = SphereGrid::get(j, L_out);
  int N = grid.node_count();

  std::vector<std::uint8_t> src_blades, dst_blades;
  for (std::uint8_t m = 0; m < (1u << nn); ++m)
    if (__builtin_popcount(m) == w.q) src_blades.push_back(m);
  for (std::uint8_t m = 0; m < (1u << j); ++m)
    if (__builtin_popcount(m) == w.q) dst_blades.push_back(m);
  auto minor = [&](std::uint8_t I, std::uint8_t Ip) {
    if (w.q == 0) return 1.0;
    std::vector<int> rows, cols;
    for (int i = 1; i <= nn; ++i)
      if (I >> (i - 1) & 1u) rows.push_back(i - 1);
    for (int i = 1; i <= j; ++i)
      if (Ip >> (i - 1) & 1u) cols.push_back(i - 1);
    Eigen::MatrixXd M(w.q, w.q);
    for (int a = 0; a < w.q; ++a)
      for (int b = 0; b < w.q; ++b) M(a, b) = E(rows[a], cols[b]);
    return M.determinant();
  };

  Eigen::VectorXd scale(N);
  Eigen::MatrixXd dirs(N, nn);
  for (int i = 0; i < N; ++i) {
    Eigen::VectorXd wv = E * grid.nodes.row(i).transpose();
    double s = wv.norm();
    scale[i] = std::pow(s, double(w.r - w.q));
    dirs.row(i) = wv.transpose() / s;
  }
  std::map<BladeKey, Eigen::VectorXcd> src_at;
  for (auto& [key, g] : w.coeffs) {
    Eigen::VectorXcd vals(N);
    for (int i = 0; i < N; ++i) vals[i] = eval_at(g, dirs.row(i).transpose());
    src_at[key] = vals;
  }

  for (auto Ip : dst_blades) {
    std::map<std::uint8_t, Eigen::VectorXcd> acc;
    for (auto& [key, g] : w.coeffs) {
      auto [I, J] = key;
      double mI = minor(I, Ip);
      if (mI == 0.0) continue;
      auto it = acc.find(J);
      if (it == acc.end()) acc[J] = mI * src_at[key];
      else it->second += mI * src_at[key];
    }
    for (auto& [J, vals] : acc) {
      Eigen::VectorXcd scaled = vals.cwiseProduct(scale.cast<cplx>());
      SpectralField f = analyze(scaled, grid, L_out);
      if (f.norm_l2() > 1e-300) out.coeffs[{Ip, J}] = f;
    }
  }
  return out;
}

DeltaPullback pullback_mono_delta(const LinMap& e, const HomForm& w, double precheck_tol, int probes,
                                  unsigned seed) {
  int k = e.source_dim(), nn = e.target_dim();
  if (nn != w.n) throw std::invalid_argument("pullback_mono_delta: dimension mismatch");
  if (w.q != k) throw std::invalid_argument("pullback_mono_delta: requires form degree q = source dim");
  if (k < 1 || k > 2) throw std::invalid_argument("pullback_mono_delta: supported for source dim 1 or 2");
  if (w.r != 0) throw std::invalid_argument("pullback_mono_delta: requires 0-homogeneous input");

  double scale = std::max(1.0, w.smooth_norm());
  HomForm ie = interior_euler(w);
  HomForm dw = ext_derivative(w);
  // the sphere-level (smooth) closedness is the precondition; a d-atom in
  // the codimension-one case shows up as probe dependence, reported in spread
  if (ie.smooth_norm() > precheck_tol * scale || dw.smooth_norm() > precheck_tol * scale)
    throw std::invalid_argument("pullback_mono_delta: input not i_E-closed/closed (norms " +
                                std::to_string(ie.smooth_norm()) + ", " + std::to_string(dw.smooth_norm()) + ")");

  // orthonormalize the image; the triangular factor contributes sign(det R)
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(e.matrix);
  Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(nn, k);
  Eigen::MatrixXd R = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  double sdet = 1.0;
  for (int i = 0; i < k; ++i) sdet *= (R(i, i) > 0 ? 1.0 : -1.0);

  int L = w.band();
  Quad1D zq = gauss_legendre(std::max(24, L + 16));
  Quad1D zeta = mapped(zq, 0.0, kPi / 2);
  int npsi = 4 * std::max(16, L + 16);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0, 1);
  std::vector<Eigen::VectorXd> vs;
  while (static_cast<int>(vs.size()) < probes) {
    Eigen::VectorXd v(nn);
    for (int i = 0; i < nn; ++i) v[i] = dist(rng);
    v -= Q * (Q.transpose() * v);
    if (v.norm() < 0.3) continue;
    v /= v.norm();
    vs.push_back(v);
    vs.push_back(-v);  // probe in +- pairs to expose the evenness diagnostic
    if (static_cast<int>(vs.size()) >= probes) break;
  }

  std::map<std::uint8_t, std::vector<cplx>> per_probe;
  for (const auto& v : vs) {
    std::map<std::uint8_t, cplx> cv;
    if (k == 1) {
      Eigen::VectorXd w1 = Q.col(0);
      for (int branch = 0; branch < 2; ++branch) {
        double bsign = branch == 0 ? 1.0 : -1.0;  // orientation of S^0
        Eigen::VectorXd sig = bsign * w1;
        for (std::size_t iz = 0; iz < zeta.x.size(); ++iz) {
          double z = zeta.x[iz], wq = zeta.w[iz];
          Eigen::VectorXd P = std::cos(z) * v + std::sin(z) * sig;
          Eigen::VectorXd dP = -std::sin(z) * v + std::cos(z) * sig;
          for (auto& [key, g] : w.coeffs) {
            auto [I, J] = key;
            cv[J] += bsign * wq * eval_at(g, P) * blade_on_vector(I, dP);
          }
        }
      }
    } else {
      Eigen::VectorXd w1 = Q.col(0), w2 = Q.col(1);
      for (int ip = 0; ip < npsi; ++ip) {
        double psi = 2.0 * kPi * ip / npsi;
        double wpsi = 2.0 * kPi / npsi;
        Eigen::VectorXd sig = std::cos(psi) * w1 + std::sin(psi) * w2;
        Eigen::VectorXd dsig = -std::sin(psi) * w1 + std::cos(psi) * w2;
        for (std::size_t iz = 0; iz < zeta.x.size(); ++iz) {
          double z = zeta.x[iz], wq = zeta.w[iz] * wpsi;
          Eigen::VectorXd P = std::cos(z) * v + std::sin(z) * sig;
          Eigen::VectorXd dPz = -std::sin(z) * v + std::cos(z) * sig;
          Eigen::VectorXd dPp = std::sin(z) * dsig;
          for (auto& [key, g] : w.coeffs) {
            auto [I, J] = key;
            cv[J] += wq * eval_at(g, P) * blade_on_pair(I, nn, dPz, dPp);
          }
        }
      }
    }
    for (auto& [J, c] : cv) per_probe[J].push_back(sdet * c);
  }

  DeltaPullback out;
  for (auto& [J, vals] : per_probe) {
    cplx mean = 0;
    for (auto c : vals) mean += c;
    mean /= double(vals.size());
    out.c[J] = mean;
    for (auto c : vals) out.spread = std::max(out.spread, std::abs(c - mean));
  }
  return out;
}

std::map<std::uint8_t, cplx> pushforward_weak(int s, const HomForm& w, const SchwartzForm& psi) {
  int nn = w.n, nw = nn - s;
  if (s < 1 || nw < 1) throw std::invalid_argument("pushforward_weak: bad codimension");
  if (psi.n != nw) throw std::invalid_argument("pushforward_weak: test form on wrong space");
  if (psi.q != nn - w.q) throw std::invalid_argument("pushforward_weak: test degree mismatch");
  if (w.r != 0) throw std::invalid_argument("pushforward_weak: requires 0-homogeneous input");

  std::map<std::uint8_t, cplx> out;
  // atoms (q = n): <psi, p_* c delta_0> = c psi(0)
  if (w.q == nn) {
    if (!w.coeffs.empty()) throw std::invalid_argument("pushforward_weak: smooth top-degree part not integrable");
    for (auto& [J, c] : w.atom) {
      auto it = psi.coeffs.find(MultiIndex(0, nw));
      double zero[4] = {0, 0, 0, 0};
      out[J] += (it == psi.coeffs.end()) ? cplx(0) : c * it->second.eval(zero, nw);
    }
    return out;
  }
  if (w.q < s) throw std::invalid_argument("pushforward_weak: divergent (q < s)");

  double scale = std::max(1.0, w.smooth_norm());
  if (interior_euler(w).smooth_norm() > 1e-7 * scale)
    throw std::invalid_argument("pushforward_weak: input is not i_E-closed");

  int L = w.band();
  int maxdeg = 0;
  for (auto& [K, P] : psi.coeffs) maxdeg = std::max(maxdeg, P.degree());

  const SphereGrid& tgrid = SphereGrid::get(nw, L + maxdeg + 6);
  int NT = tgrid.node_count();
  Quad1D zeta = mapped(gauss_legendre(std::max(32, 2 * L + 24)), 0.0, kPi / 2);

  std::uint8_t zmask = static_cast<std::uint8_t>(((1u << nn) - 1u) & ~((1u << nw) - 1u));

  double osign = 1.0;
  for (int j = 0; j < s; ++j) osign *= drop_orientation_sign(nn - j, w.q - j);

  for (auto& [key, g] : w.coeffs) {
    auto [I, J] = key;
    if ((I & zmask) != zmask) continue;  // fiber blade must be full
    std::uint8_t Iw = static_cast<std::uint8_t>(I & ((1u << nw) - 1u));
    std::uint8_t K = static_cast<std::uint8_t>(((1u << nw) - 1u) & ~Iw);
    auto itK = psi.coeffs.find(MultiIndex(K, nw));
    if (itK == psi.coeffs.end()) continue;
    double sgn = shuffle_sign(K, I);

    // fiber integral kappa_hat at the target sphere nodes
    Eigen::VectorXcd kap(NT);
    for (int node = 0; node < NT; ++node) {
      Eigen::VectorXd what = tgrid.nodes.row(node).transpose();
      cplx acc = 0;
      // sigma over S^{s-1}
      int nsig = (s == 1) ? 2 : 64;
      for (int is = 0; is < nsig; ++is) {
        Eigen::VectorXd sig = Eigen::VectorXd::Zero(nn);
        if (s == 1) {
          sig[nn - 1] = (is == 0) ? 1.0 : -1.0;
        } else {
          double a = 2.0 * kPi * is / nsig;
          sig[nw] = std::cos(a);
          sig[nw + 1] = std::sin(a);
        }
        double wsig = (s == 1) ? 1.0 : 2.0 * kPi / nsig;
        for (std::size_t iz = 0; iz < zeta.x.size(); ++iz) {
          double z = zeta.x[iz];
          Eigen::VectorXd u = Eigen::VectorXd::Zero(nn);
          u.head(nw) = std::cos(z) * what;
          u += std::sin(z) * sig;
          double wt = zeta.w[iz] * wsig * std::pow(std::sin(z), s - 1) * std::pow(std::cos(z), w.q - s - 1);
          acc += wt * eval_at(g, u);
        }
      }
      kap[node] = acc;
    }

    // outer integral against the test monomials, radial part exact
    for (auto& [eexp, ce] : itK->second.terms) {
      int deg = eexp[0] + eexp[1] + eexp[2] + eexp[3];
      int kexp = nw - 1 + s - w.q + deg;
      double radial = radial_gauss_moment(kexp);
      cplx ang = 0;
      for (int node = 0; node < NT; ++node) {
        double mono = 1;
        for (int j = 0; j < nw; ++j)
          for (int t = 0; t < eexp[j]; ++t) mono *= tgrid.nodes(node, j);
        ang += tgrid.weights[node] * kap[node] * mono;
      }
      out[J] += osign * sgn * ce * radial * ang;
    }
  }
  return out;
}

HomForm pushforward_spectral(const HomForm& w, double* residual) {
  int nn = w.n, nw = nn - 1;
  if (nn < 2) throw std::invalid_argument("pushforward_spectral: need n >= 2");
  if (w.r != 0) throw std::invalid_argument("pushforward_spectral: requires 0-homogeneous input");
  HomForm out(nw, std::max(0, w.q - 1), w.p, 0);
  out.space = w.space;
  out.unit = w.unit;
  out.unit.add_orient(w.space + "_ker", 1);
  if (residual) *residual = 0;

  // atoms pass through: p_*(c delta_0 (x) sigma) = c delta_0 (x) sigma' (x) sigma_ker
  if (w.q == nn) {
    if (!w.coeffs.empty()) throw std::invalid_argument("pushforward_spectral: smooth top-degree part unsupported");
    out.q = nw;
    for (auto& [J, c] : w.atom) out.atom[J] = c;
    return out;
  }
  if (w.q < 1) throw std::invalid_argument("pushforward_spectral: need q >= 1");
  double scale = std::max(1.0, w.smooth_norm());
  if (interior_euler(w).smooth_norm() > 1e-7 * scale)
    throw std::invalid_argument("pushforward_spectral: input is not i_E-closed");
  if (w.q - 1 > 1) throw std::invalid_argument("pushforward_spectral: output form degree > 1 unsupported");

  int L = w.band();
  int Lt = L + 8;
  const SphereGrid& tgrid = SphereGrid::get(nw, Lt);
  int NT = tgrid.node_count();
  Quad1D phi = mapped(gauss_legendre(std::max(32, 2 * L + 24)), -kPi / 2, kPi / 2);

  // collect per value blade: scalar samples (q-1 = 0) or tangential samples (q-1 = 1)
  std::map<std::uint8_t, Eigen::VectorXcd> samples;
  for (int node = 0; node < NT; ++node) {
    Eigen::VectorXd tw = tgrid.nodes.row(node).transpose();
    Eigen::VectorXd base = Eigen::VectorXd::Zero(nn);
    base.head(nw) = tw;
    Eigen::VectorXd pole = Eigen::VectorXd::Zero(nn);
    pole[nn - 1] = 1.0;
    Eigen::VectorXd lift = Eigen::VectorXd::Zero(nn);
    if (w.q - 1 == 1) {
      // target tangent J tw lifted
      lift[0] = -tw[1];
      lift[1] = tw[0];
    }
    std::map<std::uint8_t, cplx> acc;
    for (std::size_t ip = 0; ip < phi.x.size(); ++ip) {
      double ph = phi.x[ip], wq = phi.w[ip];
      Eigen::VectorXd u = std::cos(ph) * base + std::sin(ph) * pole;
      Eigen::VectorXd du = -std::sin(ph) * base + std::cos(ph) * pole;
      for (auto& [key, g] : w.coeffs) {
        auto [I, J] = key;
        double blade;
        if (w.q == 1) blade = blade_on_vector(I, du);
        else blade = blade_on_pair(I, nn, du, (std::cos(ph) * lift).eval());
        if (blade == 0.0) continue;
        acc[J] += wq * eval_at(g, u) * blade;
      }
    }
    for (auto& [J, v] : acc) {
      auto it = samples.find(J);
      if (it == samples.end()) samples[J] = Eigen::VectorXcd::Zero(NT);
      samples[J][node] = v;
    }
  }

  double osign = drop_orientation_sign(nn, w.q);
  for (auto& [J, smp] : samples) {
    if (w.q - 1 == 0) {
      SpectralField f = analyze(smp, tgrid, Lt);
      f *= cplx(osign);
      if (residual) {
        Eigen::VectorXcd back = synthesize(f, tgrid);
        Eigen::VectorXcd tgt = osign * smp;
        *residual = std::max(*residual, (back - tgt).cwiseAbs().maxCoeff());
      }
      if (f.norm_l2() > 1e-300) out.coeffs[{0, J}] = f;
    } else {
      // 1-form a(w) (that . dy): ambient components (-w2 a, w1 a)
      Eigen::VectorXcd c1(NT), c2(NT);
      for (int node = 0; node < NT; ++node) {
        c1[node] = -tgrid.nodes(node, 1) * smp[node];
        c2[node] = tgrid.nodes(node, 0) * smp[node];
      }
      SpectralField f1 = analyze(c1, tgrid, Lt), f2 = analyze(c2, tgrid, Lt);
      f1 *= cplx(osign);
      f2 *= cplx(osign);
      if (residual) {
        Eigen::VectorXcd b1 = synthesize(f1, tgrid), b2 = synthesize(f2, tgrid);
        *residual = std::max(*residual, (b1 - c1).cwiseAbs().maxCoeff());
        *residual = std::max(*residual, (b2 - c2).cwiseAbs().maxCoeff());
      }
      if (f1.norm_l2() > 1e-300) out.coeffs[{1, J}] = f1;
      if (f2.norm_l2() > 1e-300) out.coeffs[{2, J}] = f2;
    }
  }
  return out;
}

}  // namespace valfour
