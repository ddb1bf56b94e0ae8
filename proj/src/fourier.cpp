#include "valfour/fourier.hpp"

#include <cmath>

#include "valfour/multipliers.hpp"

namespace valfour {

std::string dual_space_label(const std::string& label) {
  if (label.size() >= 1 && label.back() == '*') return label.substr(0, label.size() - 1);
  return label + "*";
}

namespace {

SpectralField apply_multiplier(const SpectralField& g, int q) {
  SpectralField out = g;
  if (g.n == 2) {
    for (int m = -g.L; m <= g.L; ++m) out.cm(m) = bochner_multiplier(2, q, std::abs(m)) * g.cm(m);
  } else if (g.n == 3) {
    for (int l = 0; l <= g.L; ++l) {
      cplx B = bochner_multiplier(3, q, l);
      for (int m = -l; m <= l; ++m) out.clm(l, m) = B * g.clm(l, m);
    }
  } else {
    throw std::invalid_argument("fourier_form: no spectral backend for this dimension");
  }
  return out;
}

bool is_constant(const SpectralField& g, double tol) {
  SpectralField rest = g;
  if (g.n == 1) return std::abs(g.pv(+1) - g.pv(-1)) <= tol;
  if (g.n == 2) rest.cm(0) = 0;
  else rest.clm(0, 0) = 0;
  return rest.norm_l2() <= tol;
}

cplx constant_value(const SpectralField& g) {
  if (g.n == 1) return 0.5 * (g.pv(+1) + g.pv(-1));
  if (g.n == 2) return g.cm(0);
  return g.clm(0, 0) / std::sqrt(4.0 * 3.14159265358979323846);
}

}  // namespace

HomForm fourier_form(const HomForm& w) {
  if (w.r != 0) throw std::invalid_argument("fourier_form: unsupported homogeneity (need r = 0)");
  HomForm out(w.n, w.n - w.q, w.p, 0);
  out.space = dual_space_label(w.space);
  out.unit = w.unit;
  out.unit.add_orient(w.space, 1);

  if (w.q == w.n) {
    // pure atoms transform to constants; a smooth |y|^{-n} part is not tempered-transformable here
    if (w.smooth_norm() > 1e-10 * std::max(1.0, w.atom_norm()))
      throw std::invalid_argument("fourier_form: smooth top-degree part unsupported");
    for (auto& [J, c] : w.atom) out.coeffs[{0, J}] = constant_field(w.n, 0, c);
    return out;
  }
  if (!w.atom.empty()) throw std::invalid_argument("fourier_form: atom in non-top degree");

  if (w.q == 0) {
    // constants transform to atoms
    double scale = std::max(1.0, w.smooth_norm());
    for (auto& [key, g] : w.coeffs) {
      if (!is_constant(g, 1e-10 * scale))
        throw std::invalid_argument("fourier_form: unsupported homogeneity (nonconstant 0-form)");
      std::uint8_t full = static_cast<std::uint8_t>((1u << w.n) - 1);
      out.atom[key.second] += constant_value(g);
      (void)full;
    }
    return out;
  }

  for (auto& [key, g] : w.coeffs) {
    auto [I, J] = key;
    std::uint8_t full = static_cast<std::uint8_t>((1u << w.n) - 1);
    std::uint8_t Ic = static_cast<std::uint8_t>(full & ~I);
    double s = shuffle_sign(I, Ic);
    SpectralField t = apply_multiplier(g, w.q);
    t *= cplx(s);
    auto it = out.coeffs.find({Ic, J});
    if (it == out.coeffs.end()) out.coeffs[{Ic, J}] = t;
    else it->second += t;
  }
  return out;
}

HomForm fourier0(const HomForm& w) {
  if (w.p != w.n - w.q)
    throw std::invalid_argument("fourier0: shape mismatch (value degree must complement form degree)");
  // value-slot Hodge star first
  HomForm starred(w.n, w.q, w.n - w.p, w.r);
  starred.space = w.space;
  starred.unit = w.unit;
  starred.unit.add_density(dual_space_label(w.space), 1);
  starred.unit.add_orient(dual_space_label(w.space), 1);
  std::uint8_t full = static_cast<std::uint8_t>((1u << w.n) - 1);
  for (auto& [key, g] : w.coeffs) {
    auto [I, J] = key;
    std::uint8_t Jc = static_cast<std::uint8_t>(full & ~J);
    double s = shuffle_sign(J, Jc);
    SpectralField t = g;
    t *= cplx(s);
    auto it = starred.coeffs.find({I, Jc});
    if (it == starred.coeffs.end()) starred.coeffs[{I, Jc}] = t;
    else it->second += t;
  }
  for (auto& [J, c] : w.atom) {
    std::uint8_t Jc = static_cast<std::uint8_t>(full & ~J);
    starred.atom[Jc] += double(shuffle_sign(J, Jc)) * c;
  }
  return fourier_form(starred);
}

}  // namespace valfour
