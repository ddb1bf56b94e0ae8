#include "valfour/rumin.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace valfour {

namespace {

// orthonormal tangent frame at a sphere node
void tangent_frame(const Eigen::VectorXd& u, std::vector<Eigen::VectorXd>& frame) {
  int n = static_cast<int>(u.size());
  frame.clear();
  if (n == 2) {
    Eigen::VectorXd t(2);
    t << -u[1], u[0];
    frame.push_back(t);
  } else {
    Eigen::Vector3d w(u[0], u[1], u[2]);
    Eigen::Vector3d a = std::abs(w[2]) < 0.9 ? Eigen::Vector3d(0, 0, 1).cross(w).normalized()
                                             : Eigen::Vector3d(1, 0, 0).cross(w).normalized();
    Eigen::Vector3d b = w.cross(a);
    Eigen::VectorXd av(3), bv(3);
    av << a[0], a[1], a[2];
    bv << b[0], b[1], b[2];
    frame.push_back(av);
    frame.push_back(bv);
  }
}

// minor det(T[rows(Jmask), cols(Mmask)]) where T[j][c] = frame_c[j]
double frame_minor(const std::vector<Eigen::VectorXd>& frame, int n, std::uint8_t Jmask, std::uint8_t Mmask) {
  std::vector<int> rows, cols;
  for (int j = 0; j < n; ++j)
    if (Jmask >> j & 1u) rows.push_back(j);
  for (int c = 0; c < n - 1; ++c)
    if (Mmask >> c & 1u) cols.push_back(c);
  if (rows.size() != cols.size()) return 0.0;
  int d = static_cast<int>(rows.size());
  if (d == 0) return 1.0;
  Eigen::MatrixXd M(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) M(r, c) = frame[cols[c]][rows[r]];
  return M.determinant();
}

}  // namespace

GeneratingForm::GeneratingForm(int dim, int dx_deg, int dy_deg) : n(dim), a(dx_deg), b(dy_deg) {
  rep = HomForm(dim, dy_deg, dx_deg, 0);
}

GeneratingForm make_generating(int n, int a, int b, const std::map<BladeKey, SpectralField>& dx_dy_coeffs) {
  GeneratingForm w(n, a, b);
  for (auto& [key, f] : dx_dy_coeffs) {
    auto [I, J] = key;  // caller keys by (dx mask, dy mask)
    if (__builtin_popcount(I) != a || __builtin_popcount(J) != b)
      throw std::invalid_argument("make_generating: blade degrees do not match the bidegree");
    auto it = w.rep.coeffs.find({J, I});
    if (it == w.rep.coeffs.end()) w.rep.coeffs[{J, I}] = f;
    else it->second += f;
  }
  w.rep = tangentialize(w.rep);
  return w;
}

GeneratingForm wedge_d(const GeneratingForm& w) {
  GeneratingForm out(w.n, w.a, w.b + 1);
  out.rep = ext_derivative(w.rep);
  if (w.a % 2 == 1) out.rep = cplx(-1) * out.rep;
  return out;
}

GeneratingForm wedge_alpha(const GeneratingForm& w) {
  GeneratingForm out(w.n, w.a + 1, w.b);
  out.rep = HomForm(w.n, w.b, w.a + 1, 0);
  for (auto& [key, g] : w.rep.coeffs) {
    auto [J, I] = key;
    for (int i = 1; i <= w.n; ++i) {
      std::uint8_t im = static_cast<std::uint8_t>(1u << (i - 1));
      if (I & im) continue;
      double s = shuffle_sign(im, I);
      SpectralField term = coordinate_multiply(g, i);
      term *= cplx(s);
      auto it = out.rep.coeffs.find({J, static_cast<std::uint8_t>(I | im)});
      if (it == out.rep.coeffs.end()) out.rep.coeffs[{J, static_cast<std::uint8_t>(I | im)}] = term;
      else it->second += term;
    }
  }
  return out;
}

GeneratingForm kappa_form(int n, int k, int L) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("kappa_form: k out of range");
  double omega_ball = (n - k == 1) ? 2.0 : (n - k == 2 ? M_PI : 4.0 * M_PI / 3.0);
  double c = 1.0;
  for (int i = 2; i <= k; ++i) c *= i;
  for (int i = 2; i <= n - k; ++i) c *= i;
  c = 1.0 / (c * omega_ball);  // c_{k,n} = 1/(k! (n-k)! omega_{n-k})
  // kappa_k = c_{k,n} k! (n-1-k)! sum over partitions {a} | I | J of sgn * y_a dx_I dy_J
  double fac = 1.0;
  for (int i = 2; i <= k; ++i) fac *= i;
  for (int i = 2; i <= n - 1 - k; ++i) fac *= i;
  std::map<BladeKey, SpectralField> coeffs;
  for (int a = 1; a <= n; ++a) {
    std::uint8_t am = static_cast<std::uint8_t>(1u << (a - 1));
    std::uint8_t rest = static_cast<std::uint8_t>(((1u << n) - 1u) & ~am);
    for (std::uint8_t I = 0; I < (1u << n); ++I) {
      if ((I & ~rest) || __builtin_popcount(I) != k) continue;
      std::uint8_t J = static_cast<std::uint8_t>(rest & ~I);
      double sgn = shuffle_sign(am, rest) * shuffle_sign(I, J);
      SpectralField f = coordinate_field(n, a, L);
      f *= cplx(sgn * c * fac);
      auto it = coeffs.find({I, J});
      if (it == coeffs.end()) coeffs[{I, J}] = f;
      else it->second += f;
    }
  }
  return make_generating(n, k, n - 1 - k, coeffs);
}

RuminResult rumin_D(const GeneratingForm& w) {
  int n = w.n;
  if (w.a + w.b != n - 1) throw std::invalid_argument("rumin_D: needs total degree n-1");
  int k = w.a;
  RuminResult res;
  GeneratingForm dw = wedge_d(w);

  // the correction xi has bidegree (k-1, n-1-k); for k = 0 there is nothing
  // to correct (alpha ^ xi would have negative dx-degree)
  if (k == 0) {
    res.D = dw;
    res.correction = GeneratingForm(n, 0, 0);
    GeneratingForm vert = wedge_alpha(res.D);
    res.vertical_norm = vert.norm();
    return res;
  }

  int L = std::max(w.rep.band(), dw.rep.band());
  int Lg = L + 6;
  const SphereGrid& grid = SphereGrid::get(n, Lg);
  int N = grid.node_count();

  // synthesize dw coefficients on the grid
  std::map<BladeKey, Eigen::VectorXcd> dw_smp;
  for (auto& [key, g] : dw.rep.coeffs) dw_smp[key] = synthesize(g, grid);

  // blade bases
  auto blades_of = [&](int bits, int deg, int space) {
    std::vector<std::uint8_t> v;
    for (std::uint8_t m = 0; m < (1u << bits); ++m)
      if (__builtin_popcount(m) == deg) v.push_back(m);
    (void)space;
    return v;
  };
  std::vector<std::uint8_t> xi_dx = blades_of(n, k - 1, 0);
  std::vector<std::uint8_t> xi_dyt = blades_of(n - 1, n - 1 - k, 1);
  std::vector<std::uint8_t> tgt_dx = blades_of(n, k + 1, 0);
  std::vector<std::uint8_t> tgt_dyt = blades_of(n - 1, n - k, 1);
  int ncol = static_cast<int>(xi_dx.size() * xi_dyt.size());
  int nrow = static_cast<int>(tgt_dx.size() * tgt_dyt.size());

  // per-node solve; collect ambient xi samples per (dy-blade, dx-blade)
  std::map<BladeKey, Eigen::VectorXcd> xi_samples;
  double scale = std::max(1.0, w.norm());

  std::vector<Eigen::VectorXd> frame;
  for (int node = 0; node < N; ++node) {
    Eigen::VectorXd u = grid.nodes.row(node).transpose();
    tangent_frame(u, frame);

    // localize alpha ^ d omega into the target bidegree (k+1, n-k)
    // first localize d omega at (k, n-k): dx blades stay, dy -> dyt minors
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(nrow);
    for (auto& [key, smp] : dw_smp) {
      auto [J, I] = key;
      cplx val = smp[node];
      if (val == cplx(0)) continue;
      // alpha ^ (dx_I ^ dy_J): sum_i u_i dx_i ^ dx_I ^ dy_J
      for (int i = 1; i <= n; ++i) {
        std::uint8_t im = static_cast<std::uint8_t>(1u << (i - 1));
        if (I & im) continue;
        double si = shuffle_sign(im, I) * u[i - 1];
        if (si == 0.0) continue;
        std::uint8_t Inew = static_cast<std::uint8_t>(I | im);
        // localize dy_J
        for (std::size_t tm = 0; tm < tgt_dyt.size(); ++tm) {
          double mj = frame_minor(frame, n, J, tgt_dyt[tm]);
          if (mj == 0.0) continue;
          // row index
          for (std::size_t ti = 0; ti < tgt_dx.size(); ++ti) {
            if (tgt_dx[ti] != Inew) continue;
            rhs[static_cast<int>(ti * tgt_dyt.size() + tm)] += -si * mj * val;
          }
        }
      }
    }

    // matrix of xi -> alpha ^ dalpha ^ xi in local coordinates
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(nrow, ncol);
    for (std::size_t ci = 0; ci < xi_dx.size(); ++ci) {
      for (std::size_t cm = 0; cm < xi_dyt.size(); ++cm) {
        int col = static_cast<int>(ci * xi_dyt.size() + cm);
        std::uint8_t I = xi_dx[ci], Mm = xi_dyt[cm];
        // dalpha ^ (dx_I ^ th_M) = sum_{i,c} (t_c)_i dx_i ^ th_c ^ dx_I ^ th_M
        for (int i = 1; i <= n; ++i) {
          std::uint8_t im = static_cast<std::uint8_t>(1u << (i - 1));
          if (I & im) continue;
          for (int c = 0; c < n - 1; ++c) {
            std::uint8_t cmk = static_cast<std::uint8_t>(1u << c);
            if (Mm & cmk) continue;
            double fac = frame[c][i - 1];
            if (fac == 0.0) continue;
            // th_c ^ dx_i ^ dx_I ^ th_M = (-1)^{|I|+1} sgn(i,I) sgn(c,M) dx_{iI} ^ th_{cM}
            double s = ((static_cast<int>(__builtin_popcount(I)) % 2 == 0) ? -1.0 : 1.0) *
                       shuffle_sign(im, I) * shuffle_sign(cmk, Mm) * fac;
            std::uint8_t I1 = static_cast<std::uint8_t>(I | im);
            std::uint8_t M1 = static_cast<std::uint8_t>(Mm | cmk);
            // then alpha ^ .
            for (int i2 = 1; i2 <= n; ++i2) {
              std::uint8_t im2 = static_cast<std::uint8_t>(1u << (i2 - 1));
              if (I1 & im2) continue;
              double s2 = shuffle_sign(im2, I1) * u[i2 - 1];
              if (s2 == 0.0) continue;
              std::uint8_t I2 = static_cast<std::uint8_t>(I1 | im2);
              for (std::size_t ti = 0; ti < tgt_dx.size(); ++ti) {
                if (tgt_dx[ti] != I2) continue;
                for (std::size_t tm = 0; tm < tgt_dyt.size(); ++tm) {
                  if (tgt_dyt[tm] != M1) continue;
                  M(static_cast<int>(ti * tgt_dyt.size() + tm), col) += s * s2;
                }
              }
            }
          }
        }
      }
    }

    Eigen::VectorXcd xi = M.completeOrthogonalDecomposition().solve(rhs);
    double resid = (M * xi - rhs).norm();
    res.solve_residual = std::max(res.solve_residual, resid / scale);
    if (resid > 1e-8 * scale)
      throw std::runtime_error("rumin_D: contact fiber solve left residual " + std::to_string(resid));

    // xi local -> ambient samples
    for (std::size_t ci = 0; ci < xi_dx.size(); ++ci) {
      for (std::size_t cm = 0; cm < xi_dyt.size(); ++cm) {
        cplx val = xi[static_cast<int>(ci * xi_dyt.size() + cm)];
        if (val == cplx(0)) continue;
        for (std::uint8_t J = 0; J < (1u << n); ++J) {
          if (__builtin_popcount(J) != n - 1 - k) continue;
          double mj = frame_minor(frame, n, J, xi_dyt[cm]);
          if (mj == 0.0) continue;
          auto it = xi_samples.find({J, xi_dx[ci]});
          if (it == xi_samples.end()) it = xi_samples.emplace(BladeKey{J, xi_dx[ci]}, Eigen::VectorXcd::Zero(N)).first;
          it->second[node] += mj * val;
        }
      }
    }
  }

  GeneratingForm xi(n, k - 1, n - 1 - k);
  for (auto& [key, smp] : xi_samples) {
    SpectralField f = analyze(smp, grid, Lg);
    if (f.norm_l2() > 1e-12 * scale) xi.rep.coeffs[key] = f;
  }
  res.correction = xi;
  GeneratingForm sum = w;
  GeneratingForm ax = wedge_alpha(xi);
  sum.rep = sum.rep + ax.rep;
  res.D = wedge_d(sum);
  GeneratingForm vert = wedge_alpha(res.D);
  res.vertical_norm = vert.norm();
  return res;
}

}  // namespace valfour
