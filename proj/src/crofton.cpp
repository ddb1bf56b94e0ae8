#include "valfour/crofton.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

namespace valfour {

namespace {
constexpr double kPi = 3.14159265358979323846;

Eigen::MatrixXd line_frame(const Eigen::VectorXd& u) {
  Eigen::MatrixXd f(u.size(), 1);
  f.col(0) = u.normalized();
  return f;
}

Eigen::MatrixXd plane_frame_from_normal(const Eigen::Vector3d& nu) {
  Eigen::Vector3d a = std::abs(nu[2]) < 0.9 ? Eigen::Vector3d(0, 0, 1).cross(nu).normalized()
                                            : Eigen::Vector3d(1, 0, 0).cross(nu).normalized();
  Eigen::Vector3d b = nu.cross(a).normalized();
  Eigen::MatrixXd f(3, 2);
  f.col(0) = a;
  f.col(1) = b;
  return f;
}

Eigen::MatrixXd subspace_frame(int n, int k_gr, const Eigen::VectorXd& u) {
  if (k_gr == 1) return line_frame(u);
  if (n == 3 && k_gr == 2) return plane_frame_from_normal(Eigen::Vector3d(u[0], u[1], u[2]).normalized());
  throw std::invalid_argument("crofton: unsupported Grassmannian");
}
}  // namespace

CroftonData CroftonData::smooth(int n, int k_gr, const SpectralField& density) {
  if (density.n != n) throw std::invalid_argument("CroftonData: density dimension mismatch");
  SpectralField odd = parity_project(density, -1);
  if (odd.norm_l2() > 1e-10 * std::max(1.0, density.norm_l2()))
    throw std::invalid_argument("CroftonData: density must be even");
  CroftonData d;
  d.n = n;
  d.k_gr = k_gr;
  d.atomic = false;
  d.density = density;
  return d;
}

CroftonData CroftonData::atomic_data(int n, int k_gr, const std::vector<CroftonAtom>& atoms) {
  CroftonData d;
  d.n = n;
  d.k_gr = k_gr;
  d.atomic = true;
  d.atoms = atoms;
  for (auto& a : d.atoms) {
    if (a.frame.rows() != n || a.frame.cols() != k_gr)
      throw std::invalid_argument("CroftonData: atom frame shape mismatch");
    Eigen::MatrixXd g = a.frame.transpose() * a.frame;
    if ((g - Eigen::MatrixXd::Identity(k_gr, k_gr)).norm() > 1e-10)
      throw std::invalid_argument("CroftonData: atom frames must be orthonormal");
  }
  return d;
}

cplx eval_crofton(const CroftonData& data, const Polytope& K) {
  if (data.atomic) {
    cplx acc = 0;
    for (auto& a : data.atoms) acc += a.weight * projection_volume(K, a.frame);
    return acc;
  }
  const SphereGrid& grid = SphereGrid::get(data.n, std::max(24, 2 * data.density.L));
  Eigen::VectorXcd m = synthesize(data.density, grid);
  cplx acc = 0;
  for (int i = 0; i < grid.node_count(); ++i) {
    Eigen::VectorXd u = grid.nodes.row(i).transpose();
    acc += 0.5 * grid.weights[i] * m[i] * projection_volume(K, subspace_frame(data.n, data.k_gr, u));
  }
  return acc;
}

cplx eval_crofton_mc(const CroftonData& data, const Polytope& K, int samples, unsigned seed) {
  if (data.atomic) return eval_crofton(data, K);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0, 1);
  cplx acc = 0;
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXd u(data.n);
    do {
      for (int j = 0; j < data.n; ++j) u[j] = dist(rng);
    } while (u.norm() < 1e-8);
    u.normalize();
    acc += eval_at(data.density, u) * projection_volume(K, subspace_frame(data.n, data.k_gr, u));
  }
  // (1/2) * area * mean
  return 0.5 * sphere_area(data.n) * acc / double(samples);
}

ValCurrent crofton_current(const CroftonData& data) {
  if (data.atomic)
    throw std::invalid_argument("crofton_current: atomic data is evaluation-level only");
  int n = data.n;
  const SpectralField& m = data.density;
  ValCurrent v;
  v.n = n;
  v.k = n - data.k_gr;
  v.provenance = "crofton:" + std::to_string(data.k_gr);

  if (n == 2) {
    // phi(K) = int h_K(v) m(J v) dv: a plane current with rotated density
    const SphereGrid& grid = SphereGrid::get(2, m.L + 2);
    Eigen::VectorXcd g(grid.node_count());
    for (int i = 0; i < grid.node_count(); ++i) {
      Eigen::VectorXd u = grid.nodes.row(i).transpose();
      Eigen::VectorXd Jinv(2);
      Jinv << u[1], -u[0];  // J^{-1} u
      g[i] = eval_at(m, Jinv);
    }
    ValCurrent pc = plane_current(analyze(g, grid, m.L));
    pc.provenance = v.provenance;
    return pc;
  }
  if (n != 3) throw std::invalid_argument("crofton_current: supported for n = 2, 3");

  if (data.k_gr == 2) {
    // tau = m(w) |y|^{-2} * (solid-angle 2-form) (x) (w . dx)
    int L = m.L + 3;
    HomForm cur(3, 2, 1, 0);
    cur.space = "V*";
    const SphereGrid& grid = SphereGrid::get(3, L + 2);
    std::map<BladeKey, Eigen::VectorXcd> smp;
    for (int node = 0; node < grid.node_count(); ++node) {
      Eigen::VectorXd w = grid.nodes.row(node).transpose();
      cplx mv = eval_at(m, w);
      for (int a = 1; a <= 3; ++a) {
        std::uint8_t am = static_cast<std::uint8_t>(1u << (a - 1));
        std::uint8_t Ic = static_cast<std::uint8_t>(7u & ~am);
        double s = shuffle_sign(am, Ic);
        for (int j = 1; j <= 3; ++j) {
          BladeKey key{Ic, static_cast<std::uint8_t>(1u << (j - 1))};
          auto it = smp.find(key);
          if (it == smp.end()) it = smp.emplace(key, Eigen::VectorXcd::Zero(grid.node_count())).first;
          it->second[node] += mv * s * w[a - 1] * w[j - 1];
        }
      }
    }
    for (auto& [key, vals] : smp) {
      SpectralField f = analyze(vals, grid, L + 2);
      if (f.norm_l2() > 1e-13) cur.coeffs[key] = f;
    }
    v.cur = cur;
    v.parity = parity_of(v);
    return v;
  }

  // k_gr = 1: great-circle smearing
  // g_{(i), J}(w) = 1/2 oint_{u perp w} m(u) u_i [*u^flat]_J dl(u)
  int L = m.L + 3;
  HomForm cur(3, 1, 2, 0);
  cur.space = "V*";
  const SphereGrid& grid = SphereGrid::get(3, L + 2);
  int ncirc = 2 * m.L + 24;
  std::map<BladeKey, Eigen::VectorXcd> smp;
  for (int node = 0; node < grid.node_count(); ++node) {
    Eigen::VectorXd w = grid.nodes.row(node).transpose();
    Eigen::Vector3d wv(w[0], w[1], w[2]);
    Eigen::Vector3d a = std::abs(wv[2]) < 0.9 ? Eigen::Vector3d(0, 0, 1).cross(wv).normalized()
                                              : Eigen::Vector3d(1, 0, 0).cross(wv).normalized();
    Eigen::Vector3d b = wv.cross(a);
    for (int t = 0; t < ncirc; ++t) {
      double th = 2.0 * kPi * t / ncirc;
      Eigen::Vector3d u = std::cos(th) * a + std::sin(th) * b;
      Eigen::VectorXd ue(3);
      ue << u[0], u[1], u[2];
      cplx mv = eval_at(m, ue) * (2.0 * kPi / ncirc) * 0.5;
      for (int i = 1; i <= 3; ++i) {
        for (int c = 1; c <= 3; ++c) {
          std::uint8_t cm = static_cast<std::uint8_t>(1u << (c - 1));
          std::uint8_t Jc = static_cast<std::uint8_t>(7u & ~cm);
          double s = shuffle_sign(cm, Jc);
          BladeKey key{static_cast<std::uint8_t>(1u << (i - 1)), Jc};
          auto it = smp.find(key);
          if (it == smp.end()) it = smp.emplace(key, Eigen::VectorXcd::Zero(grid.node_count())).first;
          it->second[node] += mv * u[i - 1] * s * u[c - 1];
        }
      }
    }
  }
  for (auto& [key, vals] : smp) {
    SpectralField f = analyze(vals, grid, L + 2);
    if (f.norm_l2() > 1e-13) cur.coeffs[key] = f;
  }
  v.cur = cur;
  v.parity = parity_of(v);
  return v;
}

CroftonData klain_fourier_atoms(const CroftonData& data) {
  if (!data.atomic) throw std::invalid_argument("klain_fourier_atoms: needs atomic data");
  CroftonData out;
  out.n = data.n;
  out.k_gr = data.n - data.k_gr;
  out.atomic = true;
  for (auto& a : data.atoms) {
    // orthonormal frame of E^perp via full QR
    Eigen::MatrixXd M(data.n, data.n);
    M.setZero();
    M.leftCols(data.k_gr) = a.frame;
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(M.leftCols(data.k_gr));
    Eigen::MatrixXd Q = qr.householderQ();
    CroftonAtom na;
    na.frame = Q.rightCols(data.n - data.k_gr);
    na.weight = a.weight;
    out.atoms.push_back(na);
  }
  return out;
}

std::pair<SpectralField, double> fit_crofton_density(const ValCurrent& v,
                                                     const std::vector<std::pair<int, int>>& modes) {
  if (v.n != 3 || v.k != 2) throw std::invalid_argument("fit_crofton_density: need a degree-2 current on R^3");
  // flatten the target current
  int L = v.cur.band();
  std::vector<BladeKey> keys;
  for (std::uint8_t I = 0; I < 8; ++I)
    if (__builtin_popcount(I) == 1)
      for (std::uint8_t J = 0; J < 8; ++J)
        if (__builtin_popcount(J) == 2) keys.push_back({I, J});
  int rows = static_cast<int>(keys.size()) * SpectralField::mode_count(3, L);
  Eigen::MatrixXcd A(rows, static_cast<int>(modes.size()));
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(rows);
  for (std::size_t c = 0; c < modes.size(); ++c) {
    SpectralField basis(3, std::max(modes[c].first, 1));
    basis.clm(modes[c].first, modes[c].second) = 1.0;
    SpectralField sym = basis;
    // keep the density even and real-symmetric handling to the caller; fit raw
    CroftonData d;
    d.n = 3;
    d.k_gr = 1;
    d.atomic = false;
    d.density = sym;
    ValCurrent resp = crofton_current(d);
    for (std::size_t kk = 0; kk < keys.size(); ++kk) {
      const SpectralField* f = resp.cur.field(keys[kk].first, keys[kk].second);
      for (int mm = 0; mm < SpectralField::mode_count(3, L); ++mm) {
        cplx val = 0;
        if (f) {
          SpectralField fr = f->resized(L);
          val = fr.coeffs[mm];
        }
        A(static_cast<int>(kk) * SpectralField::mode_count(3, L) + mm, static_cast<int>(c)) = val;
      }
    }
  }
  for (std::size_t kk = 0; kk < keys.size(); ++kk) {
    const SpectralField* f = v.cur.field(keys[kk].first, keys[kk].second);
    for (int mm = 0; mm < SpectralField::mode_count(3, L); ++mm) {
      cplx val = 0;
      if (f) val = f->coeffs[mm];
      rhs[static_cast<int>(kk) * SpectralField::mode_count(3, L) + mm] = val;
    }
  }
  Eigen::VectorXcd x = A.completeOrthogonalDecomposition().solve(rhs);
  double resid = (A * x - rhs).norm() / std::max(1e-300, rhs.norm());
  int Lout = 1;
  for (auto& [l, m] : modes) Lout = std::max(Lout, l);
  SpectralField dens(3, Lout);
  for (std::size_t c = 0; c < modes.size(); ++c) dens.clm(modes[c].first, modes[c].second) = x[static_cast<int>(c)];
  return {dens, resid};
}

}  // namespace valfour
