#include "valfour/sphere.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

#include "valfour/quadrature.hpp"

namespace valfour {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Normalized associated Legendre column: out[idx(l,m)] = Ptilde_lm(t) for
// 0 <= m <= l <= L, with int_{-1}^{1} Ptilde_lm^2 dt = 1/(2 pi) and
// Condon-Shortley phase.  idx(l,m) = l(l+1)/2 + m.
void plm_column(int L, double t, double* out) {
  double s = std::sqrt(std::max(0.0, 1.0 - t * t));
  auto idx = [](int l, int m) { return l * (l + 1) / 2 + m; };
  out[0] = std::sqrt(1.0 / (4.0 * kPi));
  for (int m = 1; m <= L; ++m)
    out[idx(m, m)] = -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s * out[idx(m - 1, m - 1)];
  for (int m = 0; m < L; ++m)
    out[idx(m + 1, m)] = std::sqrt(2.0 * m + 3.0) * t * out[idx(m, m)];
  for (int m = 0; m <= L; ++m) {
    for (int l = m + 2; l <= L; ++l) {
      double a = std::sqrt((4.0 * l * l - 1.0) / (double(l) * l - double(m) * m));
      double b = std::sqrt((double(l - 1) * (l - 1) - double(m) * m) / (4.0 * double(l - 1) * (l - 1) - 1.0));
      out[idx(l, m)] = a * (t * out[idx(l - 1, m)] - b * out[idx(l - 2, m)]);
    }
  }
}

int plm_size(int L) { return (L + 1) * (L + 2) / 2; }

std::unique_ptr<SphereGrid> build_grid(int n, int capacity) {
  auto g = std::make_unique<SphereGrid>();
  g->n = n;
  g->capacity = capacity;
  if (n == 1) {
    g->nodes.resize(2, 1);
    g->weights.resize(2);
    g->nodes(0, 0) = 1.0;
    g->nodes(1, 0) = -1.0;
    g->weights[0] = g->weights[1] = 1.0;
  } else if (n == 2) {
    int N = 4 * capacity + 4;
    g->nodes.resize(N, 2);
    g->weights.resize(N);
    for (int k = 0; k < N; ++k) {
      double th = 2.0 * kPi * k / N;
      g->nodes(k, 0) = std::cos(th);
      g->nodes(k, 1) = std::sin(th);
      g->weights[k] = 2.0 * kPi / N;
    }
  } else if (n == 3) {
    int Nt = capacity + 1;
    int Np = 2 * capacity + 2;
    Quad1D gl = gauss_legendre(Nt);
    g->n_theta = Nt;
    g->n_phi = Np;
    g->gl_x = Eigen::Map<Eigen::VectorXd>(gl.x.data(), Nt);
    g->gl_w = Eigen::Map<Eigen::VectorXd>(gl.w.data(), Nt);
    g->plm.resize(Nt, plm_size(capacity));
    std::vector<double> col(plm_size(capacity));
    for (int i = 0; i < Nt; ++i) {
      plm_column(capacity, gl.x[i], col.data());
      for (int k = 0; k < plm_size(capacity); ++k) g->plm(i, k) = col[k];
    }
    g->nodes.resize(Nt * Np, 3);
    g->weights.resize(Nt * Np);
    for (int i = 0; i < Nt; ++i) {
      double t = gl.x[i];
      double s = std::sqrt(std::max(0.0, 1.0 - t * t));
      for (int k = 0; k < Np; ++k) {
        double ph = 2.0 * kPi * k / Np;
        int row = i * Np + k;
        g->nodes(row, 0) = s * std::cos(ph);
        g->nodes(row, 1) = s * std::sin(ph);
        g->nodes(row, 2) = t;
        g->weights[row] = gl.w[i] * 2.0 * kPi / Np;
      }
    }
  } else {
    throw std::invalid_argument("SphereGrid: n must be 1, 2 or 3");
  }
  return g;
}

// Sparse coordinate-multiplication coupling for n=3, derived once per band
// limit by exact 1-D quadrature of Ptilde overlaps (convention-proof).
struct CoordCoupling {
  int L;
  // overlap_t[idx(l,m)]   = <Y_{l+1,m}, u3 Y_{lm}>          (real)
  // overlap_s_up[l][m]    = 2pi/2 * int s * Pt_{l+1,|m+1|}... stored generally:
  // We store, for each (l,m), the two nonzero targets of u3, and for
  // u1 = s cos(phi), u2 = s sin(phi) the four targets (l+-1, m+-1) overlaps
  //   Sp(l',l,m) = pi * int_{-1}^1 s(t) Pt_{l',m+1}(t) Pt_{l,m}(t) dt
  //   Sm(l',l,m) = pi * int_{-1}^1 s(t) Pt_{l',m-1}(t) Pt_{l,m}(t) dt
  // where Pt for negative order uses Pt_{l,-m} = (-1)^m Pt_{l,m}.
  std::vector<double> t_up, t_dn;       // per (l,m): to (l+1,m), (l-1,m)
  std::vector<double> sp_up, sp_dn;     // per (l,m): to (l+1,m+1), (l-1,m+1)
  std::vector<double> sm_up, sm_dn;     // per (l,m): to (l+1,m-1), (l-1,m-1)
};

const CoordCoupling& coord_coupling(int L) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CoordCoupling>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(L);
  if (it != cache.end()) return *it->second;

  auto cc = std::make_unique<CoordCoupling>();
  cc->L = L;
  int M = SpectralField::mode_count(3, L);
  cc->t_up.assign(M, 0.0);
  cc->t_dn.assign(M, 0.0);
  cc->sp_up.assign(M, 0.0);
  cc->sp_dn.assign(M, 0.0);
  cc->sm_up.assign(M, 0.0);
  cc->sm_dn.assign(M, 0.0);

  int Lq = L + 2;
  Quad1D gl = gauss_legendre(Lq + 1);
  int nq = static_cast<int>(gl.x.size());
  std::vector<std::vector<double>> P(nq, std::vector<double>(plm_size(Lq)));
  for (int i = 0; i < nq; ++i) plm_column(Lq, gl.x[i], P[i].data());
  auto idx = [](int l, int m) { return l * (l + 1) / 2 + m; };
  auto pt = [&](int i, int l, int m) -> double {
    int am = std::abs(m);
    if (am > l) return 0.0;
    double v = P[i][idx(l, am)];
    return (m < 0 && (am & 1)) ? -v : v;
  };

  for (int l = 0; l <= L; ++l) {
    for (int m = -l; m <= l; ++m) {
      int k = l * l + l + m;
      double tu = 0, td = 0, spu = 0, spd = 0, smu = 0, smd = 0;
      for (int i = 0; i < nq; ++i) {
        double t = gl.x[i], w = gl.w[i];
        double s = std::sqrt(std::max(0.0, 1.0 - t * t));
        double base = pt(i, l, m);
        tu += w * t * pt(i, l + 1, m) * base;
        if (l >= 1) td += w * t * pt(i, l - 1, m) * base;
        spu += w * s * pt(i, l + 1, m + 1) * base;
        if (l >= 1) spd += w * s * pt(i, l - 1, m + 1) * base;
        smu += w * s * pt(i, l + 1, m - 1) * base;
        if (l >= 1) smd += w * s * pt(i, l - 1, m - 1) * base;
      }
      cc->t_up[k] = 2.0 * kPi * tu;
      cc->t_dn[k] = 2.0 * kPi * td;
      cc->sp_up[k] = kPi * spu;
      cc->sp_dn[k] = kPi * spd;
      cc->sm_up[k] = kPi * smu;
      cc->sm_dn[k] = kPi * smd;
    }
  }
  auto& ref = *cc;
  cache[L] = std::move(cc);
  return ref;
}

}  // namespace

const SphereGrid& SphereGrid::get(int n, int capacity) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<SphereGrid>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, capacity);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_grid(n, capacity)).first;
  return *it->second;
}

SpectralField::SpectralField(int dim, int band) : n(dim), L(band) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("SpectralField: n must be 1, 2 or 3");
  if (band < 0) throw std::invalid_argument("SpectralField: negative band limit");
  coeffs = Eigen::VectorXcd::Zero(mode_count(dim, band));
}

SpectralField SpectralField::resized(int newL) const {
  SpectralField out(n, newL);
  if (n == 1) {
    out.coeffs = coeffs;
  } else if (n == 2) {
    for (int m = -std::min(L, newL); m <= std::min(L, newL); ++m) out.cm(m) = cm(m);
  } else {
    for (int l = 0; l <= std::min(L, newL); ++l)
      for (int m = -l; m <= l; ++m) out.clm(l, m) = clm(l, m);
  }
  return out;
}

double SpectralField::norm_l2() const {
  double s2 = coeffs.squaredNorm();
  if (n == 2) return std::sqrt(2.0 * kPi * s2);
  return std::sqrt(s2);
}

bool SpectralField::is_real(double tol) const {
  if (n == 1) return std::abs(coeffs[0].imag()) <= tol && std::abs(coeffs[1].imag()) <= tol;
  if (n == 2) {
    for (int m = 0; m <= L; ++m)
      if (std::abs(cm(-m) - std::conj(cm(m))) > tol) return false;
  } else {
    for (int l = 0; l <= L; ++l)
      for (int m = 0; m <= l; ++m) {
        double ph = (m & 1) ? -1.0 : 1.0;
        if (std::abs(clm(l, -m) - ph * std::conj(clm(l, m))) > tol) return false;
      }
  }
  return true;
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  if (n != o.n) throw std::invalid_argument("SpectralField: dimension mismatch");
  if (o.L > L) *this = resized(o.L);
  if (n == 1) {
    coeffs += o.coeffs;
    return *this;
  }
  if (n == 2) {
    for (int m = -o.L; m <= o.L; ++m) cm(m) += o.cm(m);
  } else {
    for (int l = 0; l <= o.L; ++l)
      for (int m = -l; m <= l; ++m) clm(l, m) += o.clm(l, m);
  }
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  SpectralField neg = cplx(-1) * o;
  return *this += neg;
}

SpectralField& SpectralField::operator*=(cplx s) {
  coeffs *= s;
  return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { a += b; return a; }
SpectralField operator-(SpectralField a, const SpectralField& b) { a -= b; return a; }
SpectralField operator*(cplx s, SpectralField a) { a *= s; return a; }

SpectralField analyze(const Eigen::VectorXcd& samples, const SphereGrid& grid, int L) {
  if (L > grid.capacity) throw std::invalid_argument("analyze: band limit exceeds grid capacity");
  if (samples.size() != grid.node_count()) throw std::invalid_argument("analyze: sample count mismatch");
  SpectralField f(grid.n, L);
  if (grid.n == 1) {
    f.coeffs[0] = samples[0];
    f.coeffs[1] = samples[1];
    return f;
  }
  if (grid.n == 2) {
    int N = grid.node_count();
    for (int m = -L; m <= L; ++m) {
      cplx acc = 0;
      for (int k = 0; k < N; ++k) {
        double th = 2.0 * kPi * k / N;
        acc += samples[k] * std::exp(cplx(0, -m * th));
      }
      f.cm(m) = acc / double(N);
    }
  } else {
    int Nt = grid.n_theta, Np = grid.n_phi;
    // phi transform per latitude ring, then Legendre quadrature in t
    Eigen::MatrixXcd B(Nt, 2 * L + 1);
    for (int i = 0; i < Nt; ++i) {
      for (int m = -L; m <= L; ++m) {
        cplx acc = 0;
        for (int k = 0; k < Np; ++k) {
          double ph = 2.0 * kPi * k / Np;
          acc += samples[i * Np + k] * std::exp(cplx(0, -m * ph));
        }
        B(i, m + L) = acc * (2.0 * kPi / Np);
      }
    }
    auto idx = [](int l, int m) { return l * (l + 1) / 2 + m; };
    for (int l = 0; l <= L; ++l) {
      for (int m = -l; m <= l; ++m) {
        int am = std::abs(m);
        double ph = (m < 0 && (am & 1)) ? -1.0 : 1.0;
        cplx acc = 0;
        for (int i = 0; i < Nt; ++i) acc += grid.gl_w[i] * ph * grid.plm(i, idx(l, am)) * B(i, m + L);
        f.clm(l, m) = acc;
      }
    }
  }
  return f;
}

Eigen::VectorXcd synthesize(const SpectralField& f, const SphereGrid& grid) {
  if (grid.n != f.n) throw std::invalid_argument("synthesize: dimension mismatch");
  if (f.L > grid.capacity) throw std::invalid_argument("synthesize: band limit exceeds grid capacity");
  Eigen::VectorXcd out(grid.node_count());
  if (f.n == 1) {
    out[0] = f.coeffs[0];
    out[1] = f.coeffs[1];
    return out;
  }
  if (f.n == 2) {
    int N = grid.node_count();
    for (int k = 0; k < N; ++k) {
      double th = 2.0 * kPi * k / N;
      cplx acc = 0;
      for (int m = -f.L; m <= f.L; ++m) acc += f.cm(m) * std::exp(cplx(0, m * th));
      out[k] = acc;
    }
  } else {
    int Nt = grid.n_theta, Np = grid.n_phi, L = f.L;
    auto idx = [](int l, int m) { return l * (l + 1) / 2 + m; };
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(Nt, 2 * L + 1);
    for (int i = 0; i < Nt; ++i)
      for (int m = -L; m <= L; ++m) {
        int am = std::abs(m);
        double ph = (m < 0 && (am & 1)) ? -1.0 : 1.0;
        cplx acc = 0;
        for (int l = am; l <= L; ++l) acc += f.clm(l, m) * ph * grid.plm(i, idx(l, am));
        A(i, m + L) = acc;
      }
    for (int i = 0; i < Nt; ++i)
      for (int k = 0; k < Np; ++k) {
        double phi = 2.0 * kPi * k / Np;
        cplx acc = 0;
        for (int m = -L; m <= L; ++m) acc += A(i, m + L) * std::exp(cplx(0, m * phi));
        out[i * Np + k] = acc;
      }
  }
  return out;
}

cplx eval_at(const SpectralField& f, const Eigen::VectorXd& u) {
  if (u.size() != f.n) throw std::invalid_argument("eval_at: dimension mismatch");
  if (f.n == 1) return u[0] > 0 ? f.coeffs[0] : f.coeffs[1];
  if (f.n == 2) {
    double th = std::atan2(u[1], u[0]);
    cplx acc = 0;
    for (int m = -f.L; m <= f.L; ++m) acc += f.cm(m) * std::exp(cplx(0, m * th));
    return acc;
  }
  double t = u[2];
  double phi = std::atan2(u[1], u[0]);
  std::vector<double> col(plm_size(f.L));
  plm_column(f.L, t, col.data());
  auto idx = [](int l, int m) { return l * (l + 1) / 2 + m; };
  cplx acc = 0;
  for (int l = 0; l <= f.L; ++l)
    for (int m = -l; m <= l; ++m) {
      int am = std::abs(m);
      double ph = (m < 0 && (am & 1)) ? -1.0 : 1.0;
      acc += f.clm(l, m) * ph * col[idx(l, am)] * std::exp(cplx(0, m * phi));
    }
  return acc;
}

SpectralField multiply(const SpectralField& f, const SpectralField& g) {
  if (f.n != g.n) throw std::invalid_argument("multiply: dimension mismatch");
  if (f.n == 1) {
    SpectralField out(1, 0);
    out.coeffs = f.coeffs.cwiseProduct(g.coeffs);
    return out;
  }
  int Lout = f.L + g.L;
  const SphereGrid& grid = SphereGrid::get(f.n, Lout);
  Eigen::VectorXcd a = synthesize(f, grid), b = synthesize(g, grid);
  Eigen::VectorXcd prod = a.cwiseProduct(b);
  return analyze(prod, grid, Lout);
}

SpectralField coordinate_multiply(const SpectralField& f, int j) {
  if (j < 1 || j > f.n) throw std::invalid_argument("coordinate_multiply: bad coordinate");
  if (f.n == 1) {
    SpectralField out(1, 0);
    out.coeffs[0] = f.coeffs[0];
    out.coeffs[1] = -f.coeffs[1];
    return out;
  }
  SpectralField out(f.n, f.L + 1);
  if (f.n == 2) {
    for (int m = -f.L; m <= f.L; ++m) {
      cplx c = f.cm(m);
      if (c == cplx(0)) continue;
      if (j == 1) {  // cos
        out.cm(m + 1) += 0.5 * c;
        out.cm(m - 1) += 0.5 * c;
      } else {  // sin
        out.cm(m + 1) += c / cplx(0, 2);
        out.cm(m - 1) -= c / cplx(0, 2);
      }
    }
    return out;
  }
  const CoordCoupling& cc = coord_coupling(f.L);
  for (int l = 0; l <= f.L; ++l) {
    for (int m = -l; m <= l; ++m) {
      cplx c = f.clm(l, m);
      if (c == cplx(0)) continue;
      int k = l * l + l + m;
      if (j == 3) {
        out.clm(l + 1, m) += cc.t_up[k] * c;
        if (l >= 1 && std::abs(m) <= l - 1) out.clm(l - 1, m) += cc.t_dn[k] * c;
      } else {
        cplx wp = (j == 1) ? cplx(1) : cplx(0, -1);   // e^{+i phi} weight
        cplx wm = (j == 1) ? cplx(1) : cplx(0, 1);    // e^{-i phi} weight
        out.clm(l + 1, m + 1) += wp * cc.sp_up[k] * c;
        if (l >= 1 && std::abs(m + 1) <= l - 1) out.clm(l - 1, m + 1) += wp * cc.sp_dn[k] * c;
        out.clm(l + 1, m - 1) += wm * cc.sm_up[k] * c;
        if (l >= 1 && std::abs(m - 1) <= l - 1) out.clm(l - 1, m - 1) += wm * cc.sm_dn[k] * c;
      }
    }
  }
  return out;
}

SpectralField ambient_partial(const SpectralField& f, int r, int j) {
  if (f.n == 1) {
    SpectralField g = coordinate_multiply(f, j);
    g *= cplx(r);
    return g;
  }
  if (f.n == 2) {
    // g = r u_j f + t_j f' with t = (-sin, cos)
    SpectralField fp(f.n, f.L);
    for (int m = -f.L; m <= f.L; ++m) fp.cm(m) = cplx(0, m) * f.cm(m);
    SpectralField tpart(f.n, f.L + 1);
    if (j == 1) {
      for (int m = -f.L; m <= f.L; ++m) {
        cplx c = fp.cm(m);  // multiply by -sin
        tpart.cm(m + 1) -= c / cplx(0, 2);
        tpart.cm(m - 1) += c / cplx(0, 2);
      }
    } else {
      for (int m = -f.L; m <= f.L; ++m) {
        cplx c = fp.cm(m);  // multiply by cos
        tpart.cm(m + 1) += 0.5 * c;
        tpart.cm(m - 1) += 0.5 * c;
      }
    }
    SpectralField rad = coordinate_multiply(f, j);
    rad *= cplx(r);
    return rad + tpart;
  }
  // n=3: per harmonic degree l,
  //   g_l = (r - l) * Pi_{l+1}(u_j f_l) + (r + l + 1) * Pi_{l-1}(u_j f_l)
  SpectralField out(f.n, f.L + 1);
  const CoordCoupling& cc = coord_coupling(f.L);
  for (int l = 0; l <= f.L; ++l) {
    double up = double(r - l), dn = double(r + l + 1);
    for (int m = -l; m <= l; ++m) {
      cplx c = f.clm(l, m);
      if (c == cplx(0)) continue;
      int k = l * l + l + m;
      if (j == 3) {
        out.clm(l + 1, m) += up * cc.t_up[k] * c;
        if (l >= 1 && std::abs(m) <= l - 1) out.clm(l - 1, m) += dn * cc.t_dn[k] * c;
      } else {
        cplx wp = (j == 1) ? cplx(1) : cplx(0, -1);
        cplx wm = (j == 1) ? cplx(1) : cplx(0, 1);
        out.clm(l + 1, m + 1) += up * wp * cc.sp_up[k] * c;
        if (l >= 1 && std::abs(m + 1) <= l - 1) out.clm(l - 1, m + 1) += dn * wp * cc.sp_dn[k] * c;
        out.clm(l + 1, m - 1) += up * wm * cc.sm_up[k] * c;
        if (l >= 1 && std::abs(m - 1) <= l - 1) out.clm(l - 1, m - 1) += dn * wm * cc.sm_dn[k] * c;
      }
    }
  }
  return out;
}

SpectralField antipode(const SpectralField& f) {
  SpectralField out = f;
  if (f.n == 1) {
    std::swap(out.coeffs[0], out.coeffs[1]);
    return out;
  }
  if (f.n == 2) {
    for (int m = -f.L; m <= f.L; ++m)
      if (m & 1) out.cm(m) = -out.cm(m);
  } else {
    for (int l = 0; l <= f.L; ++l)
      if (l & 1)
        for (int m = -l; m <= l; ++m) out.clm(l, m) = -out.clm(l, m);
  }
  return out;
}

SpectralField mollify_field(const SpectralField& f, double eps) {
  SpectralField out = f;
  if (f.n == 1) return out;
  if (f.n == 2) {
    for (int m = -f.L; m <= f.L; ++m) out.cm(m) *= std::exp(-eps * double(m) * m);
  } else {
    for (int l = 0; l <= f.L; ++l) {
      double fac = std::exp(-eps * double(l) * (l + 1));
      for (int m = -l; m <= l; ++m) out.clm(l, m) *= fac;
    }
  }
  return out;
}

SpectralField parity_project(const SpectralField& f, int parity) {
  if (parity != 1 && parity != -1) throw std::invalid_argument("parity_project: parity must be +-1");
  SpectralField out = f;
  if (f.n == 1) {
    cplx e = 0.5 * (f.coeffs[0] + f.coeffs[1]);
    cplx o = 0.5 * (f.coeffs[0] - f.coeffs[1]);
    out.coeffs[0] = (parity == 1) ? e : o;
    out.coeffs[1] = (parity == 1) ? e : -o;
    return out;
  }
  if (f.n == 2) {
    for (int m = -f.L; m <= f.L; ++m) {
      int p = (m & 1) ? -1 : 1;
      if (p != parity) out.cm(m) = 0;
    }
  } else {
    for (int l = 0; l <= f.L; ++l) {
      int p = (l & 1) ? -1 : 1;
      if (p != parity)
        for (int m = -l; m <= l; ++m) out.clm(l, m) = 0;
    }
  }
  return out;
}

cplx inner(const SpectralField& f, const SpectralField& g) {
  if (f.n != g.n) throw std::invalid_argument("inner: dimension mismatch");
  int L = std::min(f.L, g.L);
  cplx acc = 0;
  if (f.n == 1) return std::conj(f.coeffs[0]) * g.coeffs[0] + std::conj(f.coeffs[1]) * g.coeffs[1];
  if (f.n == 2) {
    for (int m = -L; m <= L; ++m) acc += std::conj(f.cm(m)) * g.cm(m);
    acc *= 2.0 * kPi;
  } else {
    for (int l = 0; l <= L; ++l)
      for (int m = -l; m <= l; ++m) acc += std::conj(f.clm(l, m)) * g.clm(l, m);
  }
  return acc;
}

cplx integral(const SpectralField& f) {
  if (f.n == 1) return f.coeffs[0] + f.coeffs[1];
  if (f.n == 2) return 2.0 * kPi * f.cm(0);
  return std::sqrt(4.0 * kPi) * f.clm(0, 0);
}

SpectralField constant_field(int n, int L, cplx value) {
  SpectralField f(n, L);
  if (n == 1) f.coeffs[0] = f.coeffs[1] = value;
  else if (n == 2) f.cm(0) = value;                       // e^{i 0 theta} = 1
  else f.clm(0, 0) = value * std::sqrt(4.0 * kPi);        // Y_00 = 1/sqrt(4 pi)
  return f;
}

SpectralField coordinate_field(int n, int j, int L) {
  if (n > 1 && L < 1) throw std::invalid_argument("coordinate_field: need L >= 1");
  SpectralField one = constant_field(n, 0, 1.0);
  SpectralField u = coordinate_multiply(one, j);
  return u.resized(L);
}

SpectralField random_real_field(int n, int L, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  SpectralField f(n, L);
  if (n == 1) {
    f.coeffs[0] = dist(rng);
    f.coeffs[1] = dist(rng);
    return f;
  }
  if (n == 2) {
    f.cm(0) = dist(rng);
    for (int m = 1; m <= L; ++m) {
      cplx c(dist(rng), dist(rng));
      f.cm(m) = c;
      f.cm(-m) = std::conj(c);
    }
  } else {
    for (int l = 0; l <= L; ++l) {
      f.clm(l, 0) = dist(rng);
      for (int m = 1; m <= l; ++m) {
        cplx c(dist(rng), dist(rng));
        f.clm(l, m) = c;
        f.clm(l, -m) = ((m & 1) ? -1.0 : 1.0) * std::conj(c);
      }
    }
  }
  return f;
}

double sphere_area(int n) {
  // area of S^{n-1}
  switch (n) {
    case 1: return 2.0;
    case 2: return 2.0 * kPi;
    case 3: return 4.0 * kPi;
    case 4: return 2.0 * kPi * kPi;
    default: throw std::invalid_argument("sphere_area: unsupported dimension");
  }
}

}  // namespace valfour
