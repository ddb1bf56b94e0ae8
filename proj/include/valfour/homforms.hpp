#pragma once

// r-homogeneous generalized differential forms on R^n \ {0} with values in an
// exterior power of the paired space, in the spectral normal form
//
//   omega = sum_{I,J} |y|^{r-q} g_{IJ}(y/|y|) dy_I (x) e_J   (+ origin atoms),
//
// where I runs over form blades of size q, J over value blades of size p, and
// the g_{IJ} are band-limited fields on S^{n-1}.  Atoms are delta n-forms at
// the origin (per value blade) and can appear only when q = n.
//
// The calculus (d, i_E, verticality), pullback under monomorphisms (smooth
// and delta cases), and pushforward under epimorphisms (weak and spectral)
// follow the conventions fixed in the sign ledger; d of an (n-1)-form picks
// up the boundary atom  atom_J = int_{S^{n-1}} iota^* omega_J.

#include <Eigen/Core>
#include <map>
#include <optional>
#include <string>

#include "valfour/exterior.hpp"
#include "valfour/schwartz.hpp"
#include "valfour/sphere.hpp"

namespace valfour {

using BladeKey = std::pair<std::uint8_t, std::uint8_t>;  // (form mask, value mask)

struct LinMap {
  enum class Kind { mono, epi, iso };
  Eigen::MatrixXd matrix;  // n_target x n_source
  Kind kind;

  LinMap(Eigen::MatrixXd m, Kind k);
  int source_dim() const { return static_cast<int>(matrix.cols()); }
  int target_dim() const { return static_cast<int>(matrix.rows()); }
  LinMap dual() const;  // transpose: (target)* -> (source)*
};

struct HomForm {
  int n = 0;  // base dimension
  int q = 0;  // form degree
  int p = 0;  // value degree
  int r = 0;  // homogeneity
  std::string space = "V";
  UnitTag unit;
  std::map<BladeKey, SpectralField> coeffs;
  std::map<std::uint8_t, cplx> atom;  // value mask -> delta coefficient (q == n only)

  HomForm() = default;
  HomForm(int dim, int form_deg, int value_deg, int hom = 0);

  int band() const;  // common band limit (0 if no coefficients)
  const SpectralField* field(std::uint8_t I, std::uint8_t J) const;
  SpectralField& field_ref(std::uint8_t I, std::uint8_t J, int L);
  double smooth_norm() const;  // sqrt(sum of L2 norms^2) of coefficient fields
  double atom_norm() const;
  HomForm& prune(double tol = 0.0);
  HomForm& check_consistent() const;
};

HomForm operator+(const HomForm& a, const HomForm& b);
HomForm operator-(const HomForm& a, const HomForm& b);
HomForm operator*(cplx s, HomForm a);

// Homogeneous extension of sphere data (identity on the stored normal form).
HomForm from_sphere_data(int n, int q, int p, int r, const std::map<BladeKey, SpectralField>& coeffs);

// i_E: contraction of the form slot with the position vector.
HomForm interior_euler(const HomForm& w);

// omega ^ E: value slot wedged with the base covector; returns the defect
// form (value degree p+1) and its L2 norm.
std::pair<HomForm, double> vertical_defect(const HomForm& w);

// Exterior derivative; includes the boundary atom when q+1 = n and r = 0.
HomForm ext_derivative(const HomForm& w);

struct ValuationTypeReport {
  bool shape_ok = false;
  bool homogeneous = false;
  double iE_norm = 0;
  double vertical_norm = 0;
  double closed_norm = 0;
  double scale = 0;  // magnitude of the input, for relative thresholds
  bool pass = false;
};

// Valuation-type test for a candidate current of degree k = n - q
// (value degree must equal n - q; atoms only in the q = n, p = 0 slot).
ValuationTypeReport is_valuation_type(const HomForm& w, double tol);

// Exact pullback under an isomorphism A acting on the base space: coefficient
// resampling along u -> A u / |A u| with |.|^{r-q} rescaling and blade
// minors; the value slot is untouched.  L_out < 0 selects automatically.
HomForm gl_pullback(const Eigen::MatrixXd& A, const HomForm& w, int L_out = -1);

// Restriction along a monomorphism e: R^j -> R^n for q < j; the value slot is
// carried along unchanged.
HomForm pullback_mono_smooth(const LinMap& e, const HomForm& w, int L_out = -1);

struct DeltaPullback {
  std::map<std::uint8_t, cplx> c;  // value mask -> delta coefficient
  double spread = 0;               // max deviation across probe directions
  cplx scalar() const { return c.empty() ? cplx(0) : c.begin()->second; }
};

// Delta-case restriction along e: R^k -> R^n of a closed, i_E-closed q-form
// with q = k: the limit is c delta_0, computed as hemisphere integrals over
// probe directions.  Throws if the closedness/verticality preconditions fail
// beyond `precheck_tol`.
DeltaPullback pullback_mono_delta(const LinMap& e, const HomForm& w, double precheck_tol = 1e-6,
                                  int probes = 8, unsigned seed = 2024);

// Weak pushforward along the coordinate projection dropping the last s
// coordinates, paired against a Schwartz test form on the target:
// <psi, p_* omega> per value blade of omega.
std::map<std::uint8_t, cplx> pushforward_weak(int s, const HomForm& w, const SchwartzForm& psi);

// Spectral pushforward along the coordinate projection dropping the last
// coordinate: fiber integration over closed half-great-circle arcs
// u(phi) = cos(phi) (w,0) + sin(phi) e_n.  Output carries or(ker p).
// `residual` (optional) reports the band-limit residual of the re-analysis.
HomForm pushforward_spectral(const HomForm& w, double* residual = nullptr);

// Heat-kernel mollification of all coefficient fields; atoms unchanged.
HomForm mollify(const HomForm& w, double eps);

// Local integrability guard: checks q - r < n and returns the radial L1 mass
// of the coefficients over the unit ball.
double local_integrability_mass(const HomForm& w);

// Pairing <omega, psi> = int omega ^ psi for a Schwartz test form psi of
// complementary degree; exact radial Gamma integrals times sphere quadrature.
// Returns the value per value blade of omega.
std::map<std::uint8_t, cplx> pair_with_test(const HomForm& w, const SchwartzForm& psi);

// Form-slot pullback by -id composed with nothing else (coefficients
// resampled antipodally, blades signed by (-1)^q); the value slot and tags
// are untouched.  This is the (-id)^* of the form-inversion identity.
HomForm antipodal_pullback_form(const HomForm& w);

// Form-slot wedge with the unit Euler covector u^flat = (y/|y|) . dy.
HomForm wedge_euler_covector(const HomForm& w);

// Projection onto the i_E-kernel: w - u^flat ^ (i_E w); identity on
// homogeneous extensions of sphere forms.
HomForm tangentialize(const HomForm& w);

}  // namespace valfour
