#include "valfour/homforms.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "valfour/quadrature.hpp"

namespace valfour {

namespace {
constexpr double kPi = 3.14159265358979323846;

// int_0^infty rho^k e^{-pi rho^2} d rho
double radial_gauss_moment(int k) {
  if (k <= -1) throw std::invalid_argument("radial_gauss_moment: divergent");
  return 0.5 * std::tgamma(0.5 * (k + 1)) / std::pow(kPi, 0.5 * (k + 1));
}
}  // namespace

LinMap::LinMap(Eigen::MatrixXd m, Kind k) : matrix(std::move(m)), kind(k) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(matrix);
  int rank = static_cast<int>(lu.rank());
  bool ok = false;
  switch (kind) {
    case Kind::mono: ok = rank == source_dim() && source_dim() <= target_dim(); break;
    case Kind::epi: ok = rank == target_dim() && target_dim() <= source_dim(); break;
    case Kind::iso: ok = rank == source_dim() && source_dim() == target_dim(); break;
  }
  if (!ok) throw std::invalid_argument("LinMap: declared kind does not match rank");
}

LinMap LinMap::dual() const {
  Kind k = kind == Kind::mono ? Kind::epi : (kind == Kind::epi ? Kind::mono : Kind::iso);
  return LinMap(matrix.transpose(), k);
}

HomForm::HomForm(int dim, int form_deg, int value_deg, int hom)
    : n(dim), q(form_deg), p(value_deg), r(hom) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("HomForm: dimension out of range");
  if (form_deg < 0 || form_deg > dim) throw std::invalid_argument("HomForm: bad form degree");
  if (value_deg < 0 || value_deg > dim) throw std::invalid_argument("HomForm: bad value degree");
}

int HomForm::band() const {
  int L = 0;
  for (auto& [k, f] : coeffs) L = std::max(L, f.L);
  return L;
}

const SpectralField* HomForm::field(std::uint8_t I, std::uint8_t J) const {
  auto it = coeffs.find({I, J});
  return it == coeffs.end() ? nullptr : &it->second;
}

SpectralField& HomForm::field_ref(std::uint8_t I, std::uint8_t J, int L) {
  auto it = coeffs.find({I, J});
  if (it == coeffs.end()) it = coeffs.emplace(BladeKey{I, J}, SpectralField(n, L)).first;
  return it->second;
}

double HomForm::smooth_norm() const {
  double s = 0;
  for (auto& [k, f] : coeffs) {
    double v = f.norm_l2();
    s += v * v;
  }
  return std::sqrt(s);
}

double HomForm::atom_norm() const {
  double s = 0;
  for (auto& [J, c] : atom) s += std::norm(c);
  return std::sqrt(s);
}

HomForm& HomForm::prune(double tol) {
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    if (it->second.norm_l2() <= tol) it = coeffs.erase(it);
    else ++it;
  }
  for (auto it = atom.begin(); it != atom.end();) {
    if (std::abs(it->second) <= tol) it = atom.erase(it);
    else ++it;
  }
  return *this;
}

HomForm& HomForm::check_consistent() const {
  for (auto& [k, f] : coeffs) {
    if (f.n != n) throw std::logic_error("HomForm: field dimension mismatch");
    if (__builtin_popcount(k.first) != q || __builtin_popcount(k.second) != p)
      throw std::logic_error("HomForm: blade degree mismatch");
  }
  if (!atom.empty() && q != n) throw std::logic_error("HomForm: atom outside top form degree");
  return const_cast<HomForm&>(*this);
}

HomForm operator+(const HomForm& a, const HomForm& b) {
  if (a.n != b.n || a.q != b.q || a.p != b.p || a.r != b.r)
    throw std::invalid_argument("HomForm: shape mismatch in sum");
  HomForm out = a;
  for (auto& [k, f] : b.coeffs) {
    auto it = out.coeffs.find(k);
    if (it == out.coeffs.end()) out.coeffs[k] = f;
    else it->second += f;
  }
  for (auto& [J, c] : b.atom) out.atom[J] += c;
  return out;
}

HomForm operator-(const HomForm& a, const HomForm& b) { return a + (cplx(-1) * b); }

HomForm operator*(cplx s, HomForm a) {
  for (auto& [k, f] : a.coeffs) f *= s;
  for (auto& [J, c] : a.atom) c *= s;
  return a;
}

HomForm from_sphere_data(int n, int q, int p, int r, const std::map<BladeKey, SpectralField>& coeffs) {
  HomForm w(n, q, p, r);
  int L = 0;
  for (auto& [k, f] : coeffs) L = std::max(L, f.L);
  for (auto& [k, f] : coeffs) {
    if (f.L != L) throw std::invalid_argument("from_sphere_data: inconsistent band limits");
    w.coeffs[k] = f;
  }
  w.check_consistent();
  return w;
}

HomForm interior_euler(const HomForm& w) {
  if (w.q == 0) return HomForm(w.n, 0, w.p, w.r);  // zero output, not an error
  HomForm out(w.n, w.q - 1, w.p, w.r);
  out.space = w.space;
  out.unit = w.unit;
  for (auto& [key, g] : w.coeffs) {
    auto [I, J] = key;
    int pos = 0;
    for (int a = 1; a <= w.n; ++a) {
      if (!(I >> (a - 1) & 1u)) continue;
      double s = (pos % 2 == 0) ? 1.0 : -1.0;
      ++pos;
      SpectralField term = coordinate_multiply(g, a);
      term *= cplx(s);
      std::uint8_t Inew = static_cast<std::uint8_t>(I & ~(1u << (a - 1)));
      auto it = out.coeffs.find({Inew, J});
      if (it == out.coeffs.end()) out.coeffs[{Inew, J}] = term;
      else it->second += term;
    }
  }
  return out;
}

std::pair<HomForm, double> vertical_defect(const HomForm& w) {
  HomForm out(w.n, w.q, w.p + 1 > w.n ? w.n : w.p + 1, w.r);
  out.space = w.space;
  out.unit = w.unit;
  if (w.p >= w.n) return {out, 0.0};
  for (auto& [key, g] : w.coeffs) {
    auto [I, J] = key;
    for (int b = 1; b <= w.n; ++b) {
      std::uint8_t bm = static_cast<std::uint8_t>(1u << (b - 1));
      if (J & bm) continue;
      double s = shuffle_sign(J, bm);
      SpectralField term = coordinate_multiply(g, b);
      term *= cplx(s);
      std::uint8_t Jnew = static_cast<std::uint8_t>(J | bm);
      auto it = out.coeffs.find({I, Jnew});
      if (it == out.coeffs.end()) out.coeffs[{I, Jnew}] = term;
      else it->second += term;
    }
  }
  return {out, out.smooth_norm()};
}

HomForm ext_derivative(const HomForm& w) {
  if (w.q >= w.n) {
    HomForm out(w.n, w.n, w.p, w.r);  // d of a top form vanishes
    out.space = w.space;
    out.unit = w.unit;
    return out;
  }
  HomForm out(w.n, w.q + 1, w.p, w.r);
  out.space = w.space;
  out.unit = w.unit;
  for (auto& [key, g] : w.coeffs) {
    auto [I, J] = key;
    for (int a = 1; a <= w.n; ++a) {
      std::uint8_t am = static_cast<std::uint8_t>(1u << (a - 1));
      if (I & am) continue;
      double s = shuffle_sign(am, I);
      SpectralField term = ambient_partial(g, w.r - w.q, a);
      term *= cplx(s);
      std::uint8_t Inew = static_cast<std::uint8_t>(I | am);
      auto it = out.coeffs.find({Inew, J});
      if (it == out.coeffs.end()) out.coeffs[{Inew, J}] = term;
      else it->second += term;
    }
  }
  // boundary atom of d for (n-1)-forms: atom_J = int_{S^{n-1}} iota^* omega_J
  if (w.q + 1 == w.n && w.r == 0) {
    for (auto& [key, g] : w.coeffs) {
      auto [I, J] = key;
      std::uint8_t full = static_cast<std::uint8_t>((1u << w.n) - 1);
      std::uint8_t am = static_cast<std::uint8_t>(full & ~I);
      int a = 1 + __builtin_ctz(am);
      double s = ((a - 1) % 2 == 0) ? 1.0 : -1.0;
      cplx v = s * integral(coordinate_multiply(g, a));
      out.atom[J] += v;
    }
    for (auto it = out.atom.begin(); it != out.atom.end();) {
      if (std::abs(it->second) < 1e-300) it = out.atom.erase(it);
      else ++it;
    }
  }
  return out;
}

ValuationTypeReport is_valuation_type(const HomForm& w, double tol) {
  ValuationTypeReport rep;
  rep.shape_ok = (w.p == w.n - w.q);
  rep.homogeneous = (w.r == 0);
  rep.scale = w.smooth_norm() + w.atom_norm();

  bool atoms_ok = w.atom.empty() || (w.q == w.n && w.p == 0);

  HomForm ie = interior_euler(w);
  rep.iE_norm = ie.smooth_norm();
  auto [vd, vnorm] = vertical_defect(w);
  rep.vertical_norm = vnorm;
  HomForm d = ext_derivative(w);
  rep.closed_norm = d.smooth_norm() + d.atom_norm();

  double thresh = tol * std::max(1.0, rep.scale);
  rep.pass = rep.shape_ok && rep.homogeneous && atoms_ok && rep.iE_norm <= thresh &&
             rep.vertical_norm <= thresh && rep.closed_norm <= thresh;
  return rep;
}

HomForm mollify(const HomForm& w, double eps) {
  HomForm out = w;
  for (auto& [k, f] : out.coeffs) f = mollify_field(f, eps);
  return out;
}

double local_integrability_mass(const HomForm& w) {
  if (w.q - w.r >= w.n)
    throw std::invalid_argument("local_integrability_mass: coefficients are not locally integrable");
  // int_{|y|<1} |y|^{r-q} dy = area(S^{n-1}) / (n + r - q), times mean |g|
  double mass = 0;
  const SphereGrid& grid = SphereGrid::get(w.n, std::max(8, w.band()));
  for (auto& [k, f] : w.coeffs) {
    Eigen::VectorXcd smp = synthesize(f, grid);
    double m = 0;
    for (int i = 0; i < grid.node_count(); ++i) m += grid.weights[i] * std::abs(smp[i]);
    mass += m / (w.n + w.r - w.q);
  }
  return mass;
}

std::map<std::uint8_t, cplx> pair_with_test(const HomForm& w, const SchwartzForm& psi) {
  if (psi.n != w.n) throw std::invalid_argument("pair_with_test: dimension mismatch");
  if (psi.q != w.n - w.q) throw std::invalid_argument("pair_with_test: degrees not complementary");
  std::map<std::uint8_t, cplx> out;
  // atoms: int c delta_0 dy_full ^ psi(0-form part)
  for (auto& [J, c] : w.atom) {
    auto it = psi.coeffs.find(MultiIndex(0, w.n));
    if (it != psi.coeffs.end()) {
      double zero[4] = {0, 0, 0, 0};
      out[J] += c * it->second.eval(zero, w.n);
    }
  }
  if (w.coeffs.empty()) return out;
  int L = w.band();
  int maxdeg = 0;
  for (auto& [K, P] : psi.coeffs) maxdeg = std::max(maxdeg, P.degree());
  const SphereGrid& grid = SphereGrid::get(w.n, L + maxdeg + 2);
  // cache synthesized coefficient samples
  std::map<BladeKey, Eigen::VectorXcd> smp;
  for (auto& [key, g] : w.coeffs) smp[key] = synthesize(g, grid);

  for (auto& [key, g] : w.coeffs) {
    auto [I, J] = key;
    std::uint8_t full = static_cast<std::uint8_t>((1u << w.n) - 1);
    std::uint8_t K = static_cast<std::uint8_t>(full & ~I);
    auto it = psi.coeffs.find(MultiIndex(K, w.n));
    if (it == psi.coeffs.end()) continue;
    double sgn = shuffle_sign(I, K);
    // sum over monomials of the test coefficient
    for (auto& [e, ce] : it->second.terms) {
      int deg = e[0] + e[1] + e[2] + e[3];
      int kexp = w.n - 1 + w.r - w.q + deg;
      double radial = radial_gauss_moment(kexp);
      cplx ang = 0;
      const Eigen::VectorXcd& gs = smp[key];
      for (int node = 0; node < grid.node_count(); ++node) {
        double mono = 1;
        for (int j = 0; j < w.n; ++j)
          for (int t = 0; t < e[j]; ++t) mono *= grid.nodes(node, j);
        ang += grid.weights[node] * gs[node] * mono;
      }
      out[J] += sgn * ce * radial * ang;
    }
  }
  return out;
}

HomForm antipodal_pullback_form(const HomForm& w) {
  HomForm out = w;
  double s = (w.q % 2 == 0) ? 1.0 : -1.0;
  for (auto& [k, f] : out.coeffs) {
    f = antipode(f);
    f *= cplx(s);
  }
  double sa = (w.n % 2 == 0) ? 1.0 : -1.0;
  for (auto& [J, c] : out.atom) c *= sa;
  return out;
}

HomForm wedge_euler_covector(const HomForm& w) {
  if (w.q >= w.n) throw std::invalid_argument("wedge_euler_covector: form degree already top");
  HomForm out(w.n, w.q + 1, w.p, w.r);
  out.space = w.space;
  out.unit = w.unit;
  for (auto& [key, g] : w.coeffs) {
    auto [I, J] = key;
    for (int b = 1; b <= w.n; ++b) {
      std::uint8_t bm = static_cast<std::uint8_t>(1u << (b - 1));
      if (I & bm) continue;
      double s = shuffle_sign(bm, I);
      SpectralField term = coordinate_multiply(g, b);
      term *= cplx(s);
      auto it = out.coeffs.find({static_cast<std::uint8_t>(I | bm), J});
      if (it == out.coeffs.end()) out.coeffs[{static_cast<std::uint8_t>(I | bm), J}] = term;
      else it->second += term;
    }
  }
  return out;
}

HomForm tangentialize(const HomForm& w) {
  if (w.q == 0) return w;
  HomForm corr = wedge_euler_covector(interior_euler(w));
  HomForm out = w;
  // align band limits before subtracting
  int L = std::max(out.band(), corr.band());
  for (auto& [k, f] : out.coeffs) f = f.resized(L);
  for (auto& [k, f] : corr.coeffs) {
    SpectralField t = cplx(-1) * f.resized(L);
    auto it = out.coeffs.find(k);
    if (it == out.coeffs.end()) out.coeffs[k] = t;
    else it->second += t;
  }
  return out;
}

HomForm gl_pullback(const Eigen::MatrixXd& A, const HomForm& w, int L_out) {
  if (A.rows() != w.n || A.cols() != w.n) throw std::invalid_argument("gl_pullback: shape mismatch");
  double det = A.determinant();
  if (std::abs(det) < 1e-14) throw std::invalid_argument("gl_pullback: singular matrix");

  bool orth = (A.transpose() * A - Eigen::MatrixXd::Identity(w.n, w.n)).norm() < 1e-12;
  int L = w.band();
  if (L_out < 0) L_out = orth ? L : L + L / 2 + 8;

  HomForm out(w.n, w.q, w.p, w.r);
  out.space = w.space;
  out.unit = w.unit;
  // atoms: A^*(delta_0 dy_full) = sign(det A) delta_0 dy_full
  double atom_sign = det > 0 ? 1.0 : -1.0;
  for (auto& [J, c] : w.atom) out.atom[J] = atom_sign * c;
  if (w.coeffs.empty()) return out;

  const SphereGrid& grid = SphereGrid::get(w.n, L_out);
  int N = grid.node_count();

  // blade minors det(A[I rows, I' cols]) for |I| = |I'| = q
  std::vector<std::uint8_t> blades;
  for (std::uint8_t m = 0; m < (1u << w.n); ++m)
    if (__builtin_popcount(m) == w.q) blades.push_back(m);
  auto minor = [&](std::uint8_t I, std::uint8_t Ip) {
    if (w.q == 0) return 1.0;
    std::vector<int> rows, cols;
    for (int i = 1; i <= w.n; ++i) {
      if (I >> (i - 1) & 1u) rows.push_back(i - 1);
      if (Ip >> (i - 1) & 1u) cols.push_back(i - 1);
    }
    Eigen::MatrixXd M(w.q, w.q);
    for (int a = 0; a < w.q; ++a)
      for (int b = 0; b < w.q; ++b) M(a, b) = A(rows[a], cols[b]);
    return M.determinant();
  };
  std::map<std::pair<std::uint8_t, std::uint8_t>, double> minors;
  for (auto I : blades)
    for (auto Ip : blades) minors[{I, Ip}] = minor(I, Ip);

  // resample source fields at mapped directions
  std::map<BladeKey, Eigen::VectorXcd> src_at;
  Eigen::VectorXd scale(N);
  Eigen::MatrixXd dirs(N, w.n);
  for (int i = 0; i < N; ++i) {
    Eigen::VectorXd v = A * grid.nodes.row(i).transpose();
    double s = v.norm();
    scale[i] = std::pow(s, double(w.r - w.q));
    dirs.row(i) = v.transpose() / s;
  }
  for (auto& [key, g] : w.coeffs) {
    Eigen::VectorXcd vals(N);
    for (int i = 0; i < N; ++i) vals[i] = eval_at(g, dirs.row(i).transpose());
    src_at[key] = vals;
  }

  for (auto Ip : blades) {
    std::map<std::uint8_t, Eigen::VectorXcd> acc;  // value blade -> samples
    for (auto& [key, g] : w.coeffs) {
      auto [I, J] = key;
      double mI = minors[{I, Ip}];
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

}  // namespace valfour
