#include "valfour/valuations.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace valfour {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

HomForm value_star(const HomForm& w) {
  HomForm out(w.n, w.q, w.n - w.p, w.r);
  out.space = w.space;
  out.unit = w.unit;
  out.unit.add_density(dual_space_label(w.space), 1);
  out.unit.add_orient(dual_space_label(w.space), 1);
  std::uint8_t full = static_cast<std::uint8_t>((1u << w.n) - 1);
  for (auto& [key, g] : w.coeffs) {
    auto [I, J] = key;
    std::uint8_t Jc = static_cast<std::uint8_t>(full & ~J);
    SpectralField t = g;
    t *= cplx(double(shuffle_sign(J, Jc)));
    auto it = out.coeffs.find({I, Jc});
    if (it == out.coeffs.end()) out.coeffs[{I, Jc}] = t;
    else it->second += t;
  }
  for (auto& [J, c] : w.atom) {
    std::uint8_t Jc = static_cast<std::uint8_t>(full & ~J);
    out.atom[Jc] += double(shuffle_sign(J, Jc)) * c;
  }
  return out;
}

HomForm value_star_inverse(const HomForm& w) {
  HomForm out(w.n, w.q, w.n - w.p, w.r);
  out.space = w.space;
  out.unit = w.unit;
  std::uint8_t full = static_cast<std::uint8_t>((1u << w.n) - 1);
  for (auto& [key, g] : w.coeffs) {
    auto [I, K] = key;
    std::uint8_t Kc = static_cast<std::uint8_t>(full & ~K);
    SpectralField t = g;
    t *= cplx(double(shuffle_sign(Kc, K)));
    auto it = out.coeffs.find({I, Kc});
    if (it == out.coeffs.end()) out.coeffs[{I, Kc}] = t;
    else it->second += t;
  }
  for (auto& [K, c] : w.atom) {
    std::uint8_t Kc = static_cast<std::uint8_t>(full & ~K);
    out.atom[Kc] += double(shuffle_sign(Kc, K)) * c;
  }
  return out;
}

HomForm map_value_slot(const HomForm& w, const Eigen::MatrixXd& M) {
  int nt = static_cast<int>(M.rows()), ns = static_cast<int>(M.cols());
  HomForm out(w.n, w.q, w.p, w.r);
  out.space = w.space;
  out.unit = w.unit;
  if (w.p > nt) return out;  // no target blades
  auto minor = [&](std::uint8_t Jp, std::uint8_t J) {
    if (w.p == 0) return (Jp == 0 && J == 0) ? 1.0 : 0.0;
    std::vector<int> rows, cols;
    for (int i = 1; i <= nt; ++i)
      if (Jp >> (i - 1) & 1u) rows.push_back(i - 1);
    for (int i = 1; i <= ns; ++i)
      if (J >> (i - 1) & 1u) cols.push_back(i - 1);
    if (static_cast<int>(rows.size()) != w.p || static_cast<int>(cols.size()) != w.p) return 0.0;
    Eigen::MatrixXd B(w.p, w.p);
    for (int r = 0; r < w.p; ++r)
      for (int c = 0; c < w.p; ++c) B(r, c) = M(rows[r], cols[c]);
    return B.determinant();
  };
  std::vector<std::uint8_t> targets;
  for (std::uint8_t m = 0; m < (1u << nt); ++m)
    if (__builtin_popcount(m) == w.p) targets.push_back(m);
  for (auto& [key, g] : w.coeffs) {
    auto [I, J] = key;
    for (auto Jp : targets) {
      double d = minor(Jp, J);
      if (d == 0.0) continue;
      SpectralField t = g;
      t *= cplx(d);
      auto it = out.coeffs.find({I, Jp});
      if (it == out.coeffs.end()) out.coeffs[{I, Jp}] = t;
      else it->second += t;
    }
  }
  for (auto& [J, c] : w.atom) {
    for (auto Jp : targets) {
      double d = minor(Jp, J);
      if (d != 0.0) out.atom[Jp] += d * c;
    }
  }
  out.prune(1e-300);
  return out;
}

ValCurrent euler_current(int n) {
  ValCurrent v;
  v.n = n;
  v.k = 0;
  v.cur = HomForm(n, n, 0, 0);
  v.cur.space = "V*";
  v.cur.atom[0] = 1.0;
  v.parity = +1;
  v.provenance = "euler";
  return v;
}

ValCurrent volume_current(int n) {
  ValCurrent v;
  v.n = n;
  v.k = n;
  v.cur = HomForm(n, 0, n, 0);
  v.cur.space = "V*";
  v.cur.unit.add_density("V", 1);
  std::uint8_t full = static_cast<std::uint8_t>((1u << n) - 1);
  v.cur.coeffs[{0, full}] = constant_field(n, 0, 1.0);
  v.parity = +1;
  v.provenance = "volume";
  return v;
}

HomForm lambda_current(int n, int k, int L) {
  HomForm w(n, n - k, k, 0);
  w.space = "V*";
  double c = 1.0 / sphere_area(n - k);
  std::uint8_t full = static_cast<std::uint8_t>((1u << n) - 1);
  for (std::uint8_t J = 0; J < (1u << n); ++J) {
    if (__builtin_popcount(J) != k) continue;
    std::uint8_t I = static_cast<std::uint8_t>(full & ~J);
    double s = shuffle_sign(J, I);
    w.coeffs[{I, J}] = constant_field(n, L, s * c);
  }
  return w;
}

ValCurrent intrinsic_current(int n, int k, int L) {
  if (k < 1 || k > n - 1 || (n != 2 && n != 3))
    throw std::invalid_argument("intrinsic_current: k out of range");
  ValCurrent v;
  v.n = n;
  v.k = k;
  v.cur = ext_derivative(interior_euler(lambda_current(n, k, L)));
  v.cur.space = "V*";
  v.parity = +1;
  v.provenance = "intrinsic:" + std::to_string(k);
  return v;
}

ValCurrent plane_current(const SpectralField& g, double tol) {
  if (g.n != 2) throw std::invalid_argument("plane_current: density must live on S^1");
  double scale = std::max(1.0, g.norm_l2());
  if (std::abs(g.cm(1)) > tol * scale || std::abs(g.cm(-1)) > tol * scale)
    throw std::invalid_argument("plane_current: density has first-harmonic content");
  SpectralField G = antipode(g);
  SpectralField u1 = coordinate_field(2, 1, 1), u2 = coordinate_field(2, 2, 1);
  SpectralField u11 = multiply(u1, u1), u12 = multiply(u1, u2), u22 = multiply(u2, u2);
  ValCurrent v;
  v.n = 2;
  v.k = 1;
  v.cur = HomForm(2, 1, 1, 0);
  v.cur.space = "V*";
  v.cur.coeffs[{1, 1}] = cplx(-1) * multiply(G, u12);
  v.cur.coeffs[{1, 2}] = cplx(-1) * multiply(G, u22);
  v.cur.coeffs[{2, 1}] = multiply(G, u11);
  v.cur.coeffs[{2, 2}] = multiply(G, u12);
  v.parity = parity_of(v);
  v.provenance = "plane";
  return v;
}

SpectralField plane_density_theta(const ValCurrent& v) {
  if (v.n != 2 || v.k != 1) throw std::invalid_argument("plane_density_theta: need a degree-1 current on R^2");
  const SpectralField* a = v.cur.field(2, 1);
  const SpectralField* b = v.cur.field(1, 2);
  SpectralField G(2, v.cur.band());
  if (a) G += *a;
  if (b) G -= *b;
  return G;
}

SpectralField plane_density(const ValCurrent& v) { return antipode(plane_density_theta(v)); }

GradedValuation current_from_generating(const GeneratingForm& w, double theta, cplx c0) {
  int n = w.n, k = w.a;
  if (w.a + w.b != n - 1) throw std::invalid_argument("current_from_generating: mixed bidegree");
  GradedValuation out;
  out.n = n;
  if (c0 != cplx(0)) {
    ValCurrent e = euler_current(n);
    e.cur = c0 * e.cur;
    out.parts[0] = e;
  }
  if (theta != 0.0) {
    ValCurrent vol = volume_current(n);
    vol.cur = cplx(theta) * vol.cur;
    out.parts[n] = vol;
  }
  if (w.norm() > 1e-14) {
    RuminResult rr = rumin_D(w);
    ValCurrent v;
    v.n = n;
    v.k = k;
    v.cur = HomForm(n, n - k, k, 0);
    v.cur.space = "V*";
    // tau_k = (-1)^{n-k} a^* D omega: the antipodal pullback contributes
    // (-1)^{n-k} on the dy blades, so the net effect is plain antipodal
    // resampling of the coefficients
    for (auto& [key, g] : rr.D.rep.coeffs) v.cur.coeffs[key] = antipode(g);
    v.parity = parity_of(v);
    v.provenance = "generating";
    out.parts[k] = v;
  }
  return out;
}

int parity_of(const ValCurrent& v, double tol) {
  double even = 0, odd = 0, scale = std::max(1.0, v.cur.smooth_norm());
  for (auto& [key, g] : v.cur.coeffs) {
    even += parity_project(g, -1).norm_l2();  // residual when claiming even
    odd += parity_project(g, +1).norm_l2();
  }
  bool is_even = even <= tol * scale;
  bool is_odd = odd <= tol * scale && v.cur.atom.empty();
  if (!v.cur.atom.empty()) is_odd = false;  // atoms are even
  if (is_even && !is_odd) return +1;
  if (is_odd && !is_even) return -1;
  if (is_even && is_odd) return +1;  // zero
  return 0;
}

ValCurrent fourier_val(const ValCurrent& v) {
  ValCurrent out;
  out.n = v.n;
  out.k = v.n - v.k;
  out.cur = fourier0(v.cur);
  out.parity = v.parity;
  out.provenance = "fourier(" + v.provenance + ")";
  return out;
}

ValCurrent antipodal_val(const ValCurrent& v) {
  // the full (-id)^* action: blade and orientation signs cancel, leaving the
  // antipodal resampling of the coefficient fields; atoms are fixed
  ValCurrent out = v;
  for (auto& [key, g] : out.cur.coeffs) g = antipode(g);
  out.provenance = "antipodal(" + v.provenance + ")";
  return out;
}

ValCurrent val_gl_pullback(const Eigen::MatrixXd& A, const ValCurrent& v) {
  int n = v.n;
  if (A.rows() != n || A.cols() != n) throw std::invalid_argument("val_gl_pullback: shape mismatch");
  double det = A.determinant();
  if (std::abs(det) < 1e-14) throw std::invalid_argument("val_gl_pullback: singular matrix");
  Eigen::MatrixXd AmT = A.inverse().transpose();
  ValCurrent out = v;
  out.cur = gl_pullback(AmT, v.cur);          // (A^vee)_* on the form slot
  out.cur = map_value_slot(out.cur, A.transpose());  // A^vee on the value slot
  if (det < 0) out.cur = cplx(-1) * out.cur;  // or(V) factor
  out.parity = 0;
  out.parity = parity_of(out);
  out.provenance = "gl_pullback(" + v.provenance + ")";
  return out;
}

HomForm pushforward_epi(const LinMap& p, const HomForm& w) {
  int ns = p.source_dim(), nt = p.target_dim();
  if (w.n != ns) throw std::invalid_argument("pushforward_epi: dimension mismatch");
  if (nt == ns) {
    // isomorphism: pushforward = pullback along the inverse
    return gl_pullback(p.matrix.inverse(), w);
  }
  // factor p = R^T o P_drop o Q^T with Q orthogonal
  Eigen::MatrixXd pt = p.matrix.transpose();  // ns x nt
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(pt);
  Eigen::MatrixXd Qfull = qr.householderQ();
  Eigen::MatrixXd R = qr.matrixQR().topRows(nt).triangularView<Eigen::Upper>();
  HomForm cur = gl_pullback(Qfull, w);  // (Q^T)_* = (Q)^* pullback
  for (int d = ns; d > nt; --d) cur = pushforward_spectral(cur);
  Eigen::MatrixXd Rt = R.transpose();
  if ((Rt - Eigen::MatrixXd::Identity(nt, nt)).norm() > 1e-13)
    cur = gl_pullback(Rt.inverse(), cur);  // (R^T)_*
  return cur;
}

ValCurrent pullback_val(const LinMap& f, const ValCurrent& v) {
  int nv = f.source_dim(), nw = f.target_dim();
  if (f.kind == LinMap::Kind::epi) throw std::invalid_argument("pullback_val: map must be injective");
  if (v.n != nw) throw std::invalid_argument("pullback_val: valuation lives on the wrong space");
  ValCurrent out;
  out.n = nv;
  out.k = v.k;
  out.provenance = "pullback(" + v.provenance + ")";
  if (v.k > nv) {
    out.cur = HomForm(nv, 0, 0, 0);
    out.parity = v.parity;
    return out;
  }
  HomForm vmapped = map_value_slot(v.cur, f.matrix.transpose());  // f^vee on values
  LinMap fvee(f.matrix.transpose(), nv == nw ? LinMap::Kind::iso : LinMap::Kind::epi);
  out.cur = pushforward_epi(fvee, vmapped);
  out.cur.space = "V*";
  out.parity = parity_of(out);
  return out;
}

ValCurrent pushforward_val(const LinMap& f, const ValCurrent& v) {
  int nv = f.source_dim(), nw = f.target_dim();
  if (f.kind == LinMap::Kind::mono && nv != nw)
    throw std::invalid_argument("pushforward_val: map must be surjective");
  if (v.n != nv) throw std::invalid_argument("pushforward_val: valuation lives on the wrong space");
  int kp = v.k + nw - nv;
  ValCurrent out;
  out.n = nw;
  out.k = std::max(kp, 0);
  out.provenance = "pushforward(" + v.provenance + ")";
  if (kp < 0) {
    out.cur = HomForm(nw, 0, 0, 0);
    out.parity = v.parity;
    return out;
  }
  int q = nv - v.k;  // form degree, preserved by the restriction
  HomForm twisted = value_star(v.cur);
  HomForm vmapped = map_value_slot(twisted, f.matrix);  // f on values
  LinMap fvee(f.matrix.transpose(), nv == nw ? LinMap::Kind::iso : LinMap::Kind::mono);
  HomForm restricted;
  if (nv == nw) {
    restricted = gl_pullback(f.matrix.transpose(), vmapped);
  } else if (q < nw) {
    restricted = pullback_mono_smooth(fvee, vmapped);
  } else {
    // q = nw: the bottom-degree delta case
    DeltaPullback dp = pullback_mono_delta(fvee, vmapped);
    restricted = HomForm(nw, nw, vmapped.p, 0);
    for (auto& [J, c] : dp.c) restricted.atom[J] = c;
  }
  out.cur = value_star_inverse(restricted);
  out.cur.space = "V*";
  out.parity = parity_of(out);
  return out;
}

cplx eval_on_body(const ValCurrent& v, const Polytope& K) {
  if (K.n != v.n) throw std::invalid_argument("eval_on_body: dimension mismatch");
  if (v.provenance.rfind("euler", 0) == 0 || (v.k == 0 && !v.cur.atom.empty())) {
    return v.cur.atom.count(0) ? v.cur.atom.at(0) : cplx(0);
  }
  if (v.k == v.n && v.cur.coeffs.size() == 1) {
    // constant current: multiple of the volume
    std::uint8_t full = static_cast<std::uint8_t>((1u << v.n) - 1);
    const SpectralField* f = v.cur.field(0, full);
    if (f) {
      cplx c = 0;
      if (v.n == 1) c = 0.5 * (f->pv(1) + f->pv(-1));
      else if (v.n == 2) c = f->cm(0);
      else c = f->clm(0, 0) / std::sqrt(4.0 * kPi);
      if (v.n == 1) {
        double len = K.vertices.col(0).maxCoeff() - K.vertices.col(0).minCoeff();
        return c * len;
      }
      if (v.n == 2) {
        std::vector<std::pair<double, double>> pts;
        for (int i = 0; i < K.vertices.rows(); ++i) pts.push_back({K.vertices(i, 0), K.vertices(i, 1)});
        return c * hull_area_2d(std::move(pts));
      }
      auto edges = as_box_edges(K);
      if (!edges) throw std::invalid_argument("eval_on_body: volume of general bodies in R^3 unsupported");
      return c * box_intrinsic_volume(*edges, 3);
    }
  }
  if (v.provenance.rfind("intrinsic:", 0) == 0) {
    auto edges = as_box_edges(K);
    if (!edges) throw std::invalid_argument("eval_on_body: intrinsic volumes need boxes");
    return box_intrinsic_volume(*edges, v.k);
  }
  if (v.n == 2 && v.k == 1) {
    // phi(K) = int h_K(theta) g(theta) d theta, integrated exactly over the
    // arcs on which a single hull vertex realizes the support function
    SpectralField g = plane_density(v);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < K.vertices.rows(); ++i) pts.push_back({K.vertices(i, 0), K.vertices(i, 1)});
    std::vector<std::pair<double, double>> hull = ordered_hull_2d(std::move(pts));
    int M = static_cast<int>(hull.size());
    auto arc_integral = [&](double a, double b, double v1, double v2) {
      // int_a^b (v1 cos + v2 sin)(theta) g(theta) d theta
      cplx acc = 0;
      cplx wp = 0.5 * cplx(v1, -v2), wm = 0.5 * cplx(v1, v2);
      for (int m = -g.L; m <= g.L; ++m) {
        cplx cm = g.cm(m);
        if (cm == cplx(0)) continue;
        for (auto [kk, wgt] : {std::pair{m + 1, wp}, std::pair{m - 1, wm}}) {
          if (kk == 0) acc += cm * wgt * (b - a);
          else acc += cm * wgt * (std::exp(cplx(0, kk * b)) - std::exp(cplx(0, kk * a))) / cplx(0, kk);
        }
      }
      return acc;
    };
    if (M == 1) return arc_integral(0, 2 * kPi, hull[0].first, hull[0].second);
    cplx acc = 0;
    auto normal_angle = [](const std::pair<double, double>& p, const std::pair<double, double>& q) {
      return std::atan2(q.second - p.second, q.first - p.first) - kPi / 2;
    };
    for (int i = 0; i < M; ++i) {
      auto& prev = hull[(i + M - 1) % M];
      auto& cur = hull[i];
      auto& next = hull[(i + 1) % M];
      double a = (M == 2 && i == 1) ? normal_angle(prev, cur) : normal_angle(prev, cur);
      double b = (M == 2) ? a + kPi : normal_angle(cur, next);
      while (b < a) b += 2 * kPi;
      acc += arc_integral(a, b, cur.first, cur.second);
    }
    return acc;
  }
  throw std::invalid_argument("eval_on_body: representation does not support evaluation");
}

}  // namespace valfour
