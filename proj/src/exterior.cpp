#include "valfour/exterior.hpp"

#include <cmath>

namespace valfour {

bool GradedCovector::is_homogeneous(int* degree_out) const {
  int deg = -1;
  for (auto& [I, c] : coeffs) {
    if (c == cplx(0)) continue;
    if (deg < 0) deg = I.degree();
    else if (deg != I.degree()) return false;
  }
  if (degree_out) *degree_out = std::max(deg, 0);
  return true;
}

double GradedCovector::norm() const {
  double s = 0;
  for (auto& [I, c] : coeffs) s += std::norm(c);
  return std::sqrt(s);
}

GradedCovector operator+(const GradedCovector& a, const GradedCovector& b) {
  if (a.n != b.n) throw std::invalid_argument("GradedCovector: dimension mismatch");
  if (!(a.unit == b.unit)) throw std::invalid_argument("GradedCovector: unit tag mismatch in sum");
  GradedCovector out = a;
  for (auto& [I, c] : b.coeffs) out.coeffs[I] += c;
  return out.prune();
}

GradedCovector operator-(const GradedCovector& a, const GradedCovector& b) {
  return a + (cplx(-1) * b);
}

GradedCovector operator*(cplx s, const GradedCovector& a) {
  GradedCovector out = a;
  for (auto& [I, c] : out.coeffs) c *= s;
  return out.prune();
}

GradedCovector wedge(const GradedCovector& a, const GradedCovector& b) {
  if (a.n != b.n) throw std::invalid_argument("wedge: dimension mismatch");
  GradedCovector out(a.n);
  out.unit = a.unit.compose(b.unit);
  for (auto& [I, ca] : a.coeffs) {
    for (auto& [J, cb] : b.coeffs) {
      if (I.mask & J.mask) continue;  // alternation
      int s = shuffle_sign(I.mask, J.mask);
      out.coeffs[MultiIndex(static_cast<std::uint8_t>(I.mask | J.mask), a.n)] += double(s) * ca * cb;
    }
  }
  return out.prune();
}

GradedCovector hodge_star(const GradedCovector& a, const std::string& space_label) {
  GradedCovector out(a.n);
  out.unit = a.unit;
  out.unit.add_density(space_label, 1);
  out.unit.add_orient(space_label, 1);
  for (auto& [I, c] : a.coeffs) {
    MultiIndex Ic = I.complement();
    int s = shuffle_sign(I.mask, Ic.mask);
    out.coeffs[Ic] += double(s) * c;
  }
  return out.prune();
}

GradedCovector interior_product(const std::vector<double>& v, const GradedCovector& a) {
  if (static_cast<int>(v.size()) != a.n) throw std::invalid_argument("interior_product: dimension mismatch");
  GradedCovector out(a.n);
  out.unit = a.unit;
  for (auto& [I, c] : a.coeffs) {
    int pos = 0;
    for (int i = 1; i <= a.n; ++i) {
      if (!I.contains(i)) continue;
      if (v[i - 1] != 0.0) {
        double s = (pos % 2 == 0) ? 1.0 : -1.0;
        out.coeffs[MultiIndex(static_cast<std::uint8_t>(I.mask & ~(1u << (i - 1))), a.n)] += s * v[i - 1] * c;
      }
      ++pos;
    }
  }
  return out.prune();
}

cplx blade_pairing(const GradedCovector& a, const GradedCovector& b) {
  cplx s = 0;
  for (auto& [I, ca] : a.coeffs) s += ca * b.coeff(I);
  return s;
}

}  // namespace valfour
