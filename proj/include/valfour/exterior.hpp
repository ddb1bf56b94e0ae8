#pragma once

// Exact exterior-algebra kernel over R^n, n <= 4, with Hodge star and
// contraction, plus formal orientation/density unit tags per labelled space.
// Basis blades are encoded as bitmasks over coordinate indices 1..n, so all
// sign bookkeeping is exact integer arithmetic.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace valfour {

using cplx = std::complex<double>;

inline constexpr int kMaxDim = 4;

// Strictly increasing index tuple in 1..n, stored as a bitmask (bit i-1 = index i).
struct MultiIndex {
  std::uint8_t mask = 0;
  int n = 0;

  MultiIndex() = default;
  MultiIndex(std::uint8_t m, int dim) : mask(m), n(dim) {
    if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("MultiIndex: dimension out of range");
    if (m >= (1u << dim)) throw std::invalid_argument("MultiIndex: index out of range");
  }
  static MultiIndex from_indices(const std::vector<int>& idx, int dim) {
    std::uint8_t m = 0;
    int prev = 0;
    for (int i : idx) {
      if (i <= prev || i > dim) throw std::invalid_argument("MultiIndex: indices must be strictly increasing in 1..n");
      m |= static_cast<std::uint8_t>(1u << (i - 1));
      prev = i;
    }
    return MultiIndex(m, dim);
  }
  int degree() const { return __builtin_popcount(mask); }
  bool contains(int i) const { return (mask >> (i - 1)) & 1u; }
  MultiIndex complement() const { return MultiIndex(static_cast<std::uint8_t>(~mask & ((1u << n) - 1u)), n); }
  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }
  auto operator<=>(const MultiIndex&) const = default;
};

// Sign of the shuffle sorting the concatenation (I, J); zero overlap required
// by callers (checked). Counts inversions between the two increasing blocks.
inline int shuffle_sign(std::uint8_t a, std::uint8_t b) {
  int sign = 1;
  for (int i = 0; i < 8; ++i) {
    if ((b >> i) & 1u) {
      // indices of a strictly above position i each hop past b's index i+1
      int above = __builtin_popcount(a >> (i + 1));
      if (above & 1) sign = -sign;
    }
  }
  return sign;
}

// Per-labelled-space orientation (mod 2) and density (integer) weights.
// Canonical isomorphisms of the form Dens(V) (x) or(V) ~ wedge^n V* etc. are
// applied as explicit tag rewrites by callers, never implicitly.
struct UnitTag {
  std::map<std::string, int> orient;   // values kept in {0,1}
  std::map<std::string, int> density;  // integer weights

  UnitTag& add_orient(const std::string& label, int w = 1) {
    int& v = orient[label];
    v = (v + w) % 2;
    if (v < 0) v += 2;
    if (v == 0) orient.erase(label);
    return *this;
  }
  UnitTag& add_density(const std::string& label, int w = 1) {
    int& v = density[label];
    v += w;
    if (v == 0) density.erase(label);
    return *this;
  }
  UnitTag compose(const UnitTag& other) const {
    UnitTag out = *this;
    for (auto& [k, v] : other.orient) out.add_orient(k, v);
    for (auto& [k, v] : other.density) out.add_density(k, v);
    return out;
  }
  // Tag rewrites for the canonical isomorphisms: or(V) ~ or(V*) and
  // Dens(V) (x) Dens(V*) ~ C under a fixed Euclidean structure.
  UnitTag& identify_orient(const std::string& a, const std::string& b) {
    auto it = orient.find(b);
    if (it != orient.end()) {
      int w = it->second;
      orient.erase(it);
      add_orient(a, w);
    }
    return *this;
  }
  UnitTag& cancel_density_pair(const std::string& a, const std::string& b) {
    int wa = density.count(a) ? density[a] : 0;
    int wb = density.count(b) ? density[b] : 0;
    int c = std::min(std::abs(wa), std::abs(wb));
    if (wa > 0 && wb < 0) { add_density(a, -c); add_density(b, c); }
    else if (wa < 0 && wb > 0) { add_density(a, c); add_density(b, -c); }
    return *this;
  }
  bool operator==(const UnitTag&) const = default;
};

// Element of the full exterior algebra of a fixed R^n (covectors on the
// space carrying the given label), complex coefficients keyed by blade.
struct GradedCovector {
  int n = 0;
  std::map<MultiIndex, cplx> coeffs;
  UnitTag unit;

  GradedCovector() = default;
  explicit GradedCovector(int dim) : n(dim) {
    if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("GradedCovector: dimension out of range");
  }
  static GradedCovector scalar(int dim, cplx v) {
    GradedCovector g(dim);
    if (v != cplx(0)) g.coeffs[MultiIndex(0, dim)] = v;
    return g;
  }
  static GradedCovector blade(int dim, const std::vector<int>& idx, cplx v = 1.0) {
    GradedCovector g(dim);
    if (v != cplx(0)) g.coeffs[MultiIndex::from_indices(idx, dim)] = v;
    return g;
  }
  cplx coeff(const MultiIndex& I) const {
    auto it = coeffs.find(I);
    return it == coeffs.end() ? cplx(0) : it->second;
  }
  GradedCovector& prune(double tol = 0.0) {
    for (auto it = coeffs.begin(); it != coeffs.end();) {
      if (std::abs(it->second) <= tol) it = coeffs.erase(it);
      else ++it;
    }
    return *this;
  }
  bool is_homogeneous(int* degree_out = nullptr) const;
  double norm() const;
};

GradedCovector operator+(const GradedCovector& a, const GradedCovector& b);
GradedCovector operator-(const GradedCovector& a, const GradedCovector& b);
GradedCovector operator*(cplx s, const GradedCovector& a);

// Exterior product; unit tags add.
GradedCovector wedge(const GradedCovector& a, const GradedCovector& b);

// Hodge star for the fixed Euclidean structure and orientation of the
// labelled space: *(dx_I) = sgn(I, I^c) dx_{I^c}; output picks up the
// Dens (x) or factor of that space as a tag.
GradedCovector hodge_star(const GradedCovector& a, const std::string& space_label);

// Contraction i_v, an antiderivation of degree -1.
GradedCovector interior_product(const std::vector<double>& v, const GradedCovector& a);

// Duality pairing of a pure-degree element against a pure-degree element of
// complementary support; used by tests for the <*zeta, theta> identity.
cplx blade_pairing(const GradedCovector& a, const GradedCovector& b);

}  // namespace valfour
