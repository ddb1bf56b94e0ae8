#include "valfour/schwartz.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>

namespace valfour {

namespace {
constexpr double kPi = 3.14159265358979323846;

// int_R t^k e^{-2 pi t^2} dt
double gauss_moment_2pi(int k) {
  if (k % 2 == 1) return 0.0;
  int s = k / 2;
  double v = std::sqrt(0.5);  // 1/sqrt(2) = int e^{-2 pi t^2}
  for (int i = 1; i <= s; ++i) v *= (2.0 * i - 1.0) / (8.0 * kPi / 2.0);
  return v;
}
}  // namespace

Poly Poly::constant(cplx c) {
  Poly p;
  if (c != cplx(0)) p.terms[{0, 0, 0, 0}] = c;
  return p;
}

Poly Poly::variable(int j) {
  Poly p;
  std::array<std::uint8_t, 4> e{0, 0, 0, 0};
  e[j - 1] = 1;
  p.terms[e] = 1.0;
  return p;
}

Poly& Poly::prune(double tol) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (std::abs(it->second) <= tol) it = terms.erase(it);
    else ++it;
  }
  return *this;
}

cplx Poly::eval(const double* x, int n) const {
  cplx acc = 0;
  for (auto& [e, c] : terms) {
    double m = 1;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < e[j]; ++k) m *= x[j];
    acc += c * m;
  }
  return acc;
}

int Poly::degree() const {
  int d = 0;
  for (auto& [e, c] : terms) d = std::max(d, int(e[0]) + e[1] + e[2] + e[3]);
  return d;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out = a;
  for (auto& [e, c] : b.terms) out.terms[e] += c;
  return out.prune();
}

Poly operator-(const Poly& a, const Poly& b) { return a + (cplx(-1) * b); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (auto& [ea, ca] : a.terms)
    for (auto& [eb, cb] : b.terms) {
      std::array<std::uint8_t, 4> e;
      for (int j = 0; j < 4; ++j) e[j] = static_cast<std::uint8_t>(ea[j] + eb[j]);
      out.terms[e] += ca * cb;
    }
  return out.prune();
}

Poly operator*(cplx s, const Poly& a) {
  Poly out = a;
  for (auto& [e, c] : out.terms) c *= s;
  return out.prune();
}

Poly derivative(const Poly& a, int j) {
  Poly out;
  for (auto& [e, c] : a.terms) {
    if (e[j - 1] == 0) continue;
    std::array<std::uint8_t, 4> d = e;
    d[j - 1] -= 1;
    out.terms[d] += double(e[j - 1]) * c;
  }
  return out.prune();
}

Poly compose_linear(const Poly& a, int n_src, int n_dst, const double* A) {
  // x_i -> sum_j A[i*n_dst + j] y_j
  Poly out;
  for (auto& [e, c] : a.terms) {
    Poly term = Poly::constant(c);
    for (int i = 0; i < n_src; ++i) {
      if (e[i] == 0) continue;
      Poly lin;
      for (int j = 0; j < n_dst; ++j) {
        double w = A[i * n_dst + j];
        if (w != 0.0) {
          std::array<std::uint8_t, 4> ee{0, 0, 0, 0};
          ee[j] = 1;
          lin.terms[ee] += w;
        }
      }
      for (int k = 0; k < e[i]; ++k) term = term * lin;
    }
    out = out + term;
  }
  return out.prune();
}

SchwartzForm SchwartzForm::gaussian(int n) {
  SchwartzForm w(n, 0);
  w.coeffs[MultiIndex(0, n)] = Poly::constant(1.0);
  return w;
}

SchwartzForm& SchwartzForm::add_term(const std::vector<int>& blade, const Poly& P) {
  MultiIndex I = MultiIndex::from_indices(blade, n);
  if (static_cast<int>(blade.size()) != q) throw std::invalid_argument("SchwartzForm: blade degree mismatch");
  auto it = coeffs.find(I);
  if (it == coeffs.end()) coeffs[I] = P;
  else it->second = it->second + P;
  return *this;
}

SchwartzForm operator+(const SchwartzForm& a, const SchwartzForm& b) {
  if (a.n != b.n || a.q != b.q) throw std::invalid_argument("SchwartzForm: shape mismatch in sum");
  SchwartzForm out = a;
  for (auto& [I, P] : b.coeffs) {
    auto it = out.coeffs.find(I);
    if (it == out.coeffs.end()) out.coeffs[I] = P;
    else it->second = it->second + P;
  }
  return out;
}

SchwartzForm operator*(cplx s, const SchwartzForm& a) {
  SchwartzForm out = a;
  for (auto& [I, P] : out.coeffs) P = s * P;
  return out;
}

namespace {
// F(P(x) e^{-pi|x|^2})(xi) = Q(xi) e^{-pi|xi|^2} via
// F(x_j f) = (1/(2 pi i)) d/dxi_j F(f) acting on the poly-Gaussian pair:
// multiply-by-x_j  ==>  Q -> (1/(2 pi i)) (dQ/dxi_j - 2 pi xi_j Q).
Poly fourier_poly(const Poly& P, int n) {
  Poly out;
  for (auto& [e, c] : P.terms) {
    Poly Q = Poly::constant(c);
    for (int j = 1; j <= n; ++j) {
      for (int k = 0; k < e[j - 1]; ++k) {
        Poly t = derivative(Q, j) - (2.0 * kPi) * (Poly::variable(j) * Q);
        Q = cplx(0, -1.0 / (2.0 * kPi)) * t;
      }
    }
    out = out + Q;
  }
  return out.prune(0.0);
}
}  // namespace

SchwartzForm fourier(const SchwartzForm& w, const std::string& space_label) {
  SchwartzForm out(w.n, w.n - w.q);
  out.unit = w.unit;
  out.unit.add_orient(space_label, 1);
  for (auto& [I, P] : w.coeffs) {
    MultiIndex Ic = I.complement();
    double s = shuffle_sign(I.mask, Ic.mask);
    Poly Q = s * fourier_poly(P, w.n);
    auto it = out.coeffs.find(Ic);
    if (it == out.coeffs.end()) out.coeffs[Ic] = Q;
    else it->second = it->second + Q;
  }
  return out;
}

SchwartzForm antipodal_pullback(const SchwartzForm& w) {
  SchwartzForm out(w.n, w.q);
  out.unit = w.unit;
  std::vector<double> minusI(static_cast<std::size_t>(w.n) * w.n, 0.0);
  for (int i = 0; i < w.n; ++i) minusI[static_cast<std::size_t>(i) * w.n + i] = -1.0;
  for (auto& [I, P] : w.coeffs) {
    double s = (I.degree() % 2 == 0) ? 1.0 : -1.0;
    out.coeffs[I] = s * compose_linear(P, w.n, w.n, minusI.data());
  }
  return out;
}

cplx pairing(const SchwartzForm& a, const SchwartzForm& b) {
  if (a.n != b.n) throw std::invalid_argument("pairing: dimension mismatch");
  if (a.q + b.q != a.n) throw std::invalid_argument("pairing: degrees are not complementary");
  cplx acc = 0;
  for (auto& [I, P] : a.coeffs) {
    MultiIndex Ic = I.complement();
    auto it = b.coeffs.find(Ic);
    if (it == b.coeffs.end()) continue;
    double s = shuffle_sign(I.mask, Ic.mask);
    Poly prod = P * it->second;
    // int x^e e^{-2 pi |x|^2} dx, coordinatewise moments
    for (auto& [e, c] : prod.terms) {
      double m = 1;
      for (int j = 0; j < a.n; ++j) m *= gauss_moment_2pi(e[j]);
      acc += s * c * m;
    }
  }
  return acc;
}

SchwartzForm boxtimes(const SchwartzForm& a, const SchwartzForm& b) {
  int n = a.n + b.n;
  if (n > kMaxDim) throw std::invalid_argument("boxtimes: combined dimension exceeds 4");
  SchwartzForm out(n, a.q + b.q);
  out.unit = a.unit.compose(b.unit);
  for (auto& [I, P] : a.coeffs) {
    for (auto& [J, Q] : b.coeffs) {
      std::uint8_t jm = static_cast<std::uint8_t>(J.mask << a.n);
      MultiIndex K(static_cast<std::uint8_t>(I.mask | jm), n);
      // lift polynomials to the product variables
      Poly Pl, Ql;
      for (auto& [e, c] : P.terms) Pl.terms[e] += c;
      for (auto& [e, c] : Q.terms) {
        std::array<std::uint8_t, 4> f{0, 0, 0, 0};
        for (int j = 0; j < b.n; ++j) f[a.n + j] = e[j];
        Ql.terms[f] += c;
      }
      Poly prod = Pl * Ql;
      auto it = out.coeffs.find(K);
      if (it == out.coeffs.end()) out.coeffs[K] = prod;
      else it->second = it->second + prod;
    }
  }
  return out;
}

SchwartzForm restrict_isometric(const SchwartzForm& w, const Eigen::MatrixXd& e) {
  int nn = static_cast<int>(e.rows()), j = static_cast<int>(e.cols());
  if (nn != w.n) throw std::invalid_argument("restrict_isometric: shape mismatch");
  Eigen::MatrixXd gram = e.transpose() * e;
  if ((gram - Eigen::MatrixXd::Identity(j, j)).norm() > 1e-12)
    throw std::invalid_argument("restrict_isometric: columns must be orthonormal");
  // row-major matrix of the substitution x_i = sum_b e(i,b) y_b
  std::vector<double> A(static_cast<std::size_t>(nn) * j);
  for (int i = 0; i < nn; ++i)
    for (int b = 0; b < j; ++b) A[static_cast<std::size_t>(i) * j + b] = e(i, b);

  SchwartzForm out(j, w.q);
  out.unit = w.unit;
  if (w.q > j) return out;
  for (auto& [I, P] : w.coeffs) {
    // e^*(dx_I): wedge of pulled-back 1-forms
    std::vector<int> rows = I.indices();
    // iterate over target blades of size q
    for (std::uint8_t mask = 0; mask < (1u << j); ++mask) {
      if (__builtin_popcount(mask) != w.q) continue;
      MultiIndex Jt(mask, j);
      std::vector<int> cols = Jt.indices();
      // minor det e[rows, cols]
      int qq = w.q;
      Eigen::MatrixXd M(qq, qq);
      for (int r = 0; r < qq; ++r)
        for (int c = 0; c < qq; ++c) M(r, c) = e(rows[r] - 1, cols[c] - 1);
      double det = qq == 0 ? 1.0 : M.determinant();
      if (std::abs(det) < 1e-300) continue;
      Poly comp = det * compose_linear(P, nn, j, A.data());
      auto it = out.coeffs.find(Jt);
      if (it == out.coeffs.end()) out.coeffs[Jt] = comp;
      else it->second = it->second + comp;
    }
  }
  return out;
}

SchwartzForm ext_derivative(const SchwartzForm& w) {
  SchwartzForm out(w.n, w.q + 1);
  out.unit = w.unit;
  for (auto& [I, P] : w.coeffs) {
    for (int a = 1; a <= w.n; ++a) {
      if (I.contains(a)) continue;
      // d/dx_a (P e^{-pi|x|^2}) = (dP/dx_a - 2 pi x_a P) e^{-pi|x|^2}
      Poly dP = derivative(P, a) - (2.0 * kPi) * (Poly::variable(a) * P);
      std::uint8_t am = static_cast<std::uint8_t>(1u << (a - 1));
      double s = shuffle_sign(am, I.mask);
      MultiIndex J(static_cast<std::uint8_t>(I.mask | am), w.n);
      Poly add = s * dP;
      auto it = out.coeffs.find(J);
      if (it == out.coeffs.end()) out.coeffs[J] = add;
      else it->second = it->second + add;
    }
  }
  return out;
}

SchwartzForm interior_euler(const SchwartzForm& w) {
  SchwartzForm out(w.n, std::max(0, w.q - 1));
  out.unit = w.unit;
  if (w.q == 0) return out;
  for (auto& [I, P] : w.coeffs) {
    int pos = 0;
    for (int a = 1; a <= w.n; ++a) {
      if (!I.contains(a)) continue;
      double s = (pos % 2 == 0) ? 1.0 : -1.0;
      MultiIndex J(static_cast<std::uint8_t>(I.mask & ~(1u << (a - 1))), w.n);
      Poly add = s * (Poly::variable(a) * P);
      auto it = out.coeffs.find(J);
      if (it == out.coeffs.end()) out.coeffs[J] = add;
      else it->second = it->second + add;
      ++pos;
    }
  }
  return out;
}

cplx eval_form_coeff(const SchwartzForm& w, const MultiIndex& I, const double* x) {
  auto it = w.coeffs.find(I);
  if (it == w.coeffs.end()) return 0;
  double r2 = 0;
  for (int j = 0; j < w.n; ++j) r2 += x[j] * x[j];
  return it->second.eval(x, w.n) * std::exp(-kPi * r2);
}

SchwartzForm random_schwartz(int n, int q, int deg, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-1, 1);
  SchwartzForm w(n, q);
  for (std::uint8_t m = 0; m < (1u << n); ++m) {
    if (__builtin_popcount(m) != q) continue;
    Poly P;
    std::array<std::uint8_t, 4> e{0, 0, 0, 0};
    // a few random monomials up to total degree deg
    for (int t = 0; t < 3; ++t) {
      int rem = deg;
      e = {0, 0, 0, 0};
      for (int j = 0; j < n; ++j) {
        int k = static_cast<int>((d(rng) * 0.5 + 0.5) * (rem + 1));
        k = std::min(k, rem);
        e[j] = static_cast<std::uint8_t>(k);
        rem -= k;
      }
      P.terms[e] += cplx(d(rng), d(rng));
    }
    w.coeffs[MultiIndex(m, n)] = P;
  }
  return w;
}

}  // namespace valfour
