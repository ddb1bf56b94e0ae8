#pragma once

// Translation-invariant valuations as 0-homogeneous currents: constructors
// for the standard examples, the Fourier transform of valuations, and the
// functorial operations (GL action, pullback along monomorphisms,
// pushforward along epimorphisms).
//
// A ValCurrent of degree k on R^n holds the current tau in the shape
// Omega^{n-k}(V^*, wedge^k V^*) with r = 0: form blades dy, value blades dx.

#include <map>
#include <string>

#include "valfour/bodies.hpp"
#include "valfour/fourier.hpp"
#include "valfour/homforms.hpp"
#include "valfour/rumin.hpp"

namespace valfour {

struct ValCurrent {
  int n = 0;
  int k = 0;
  HomForm cur;
  int parity = 0;  // +1 even, -1 odd, 0 mixed/unknown
  std::string provenance;

  bool is_zero(double tol = 1e-14) const { return cur.smooth_norm() + cur.atom_norm() <= tol; }
};

// mixed-degree valuations are graded tuples, operations act degreewise
struct GradedValuation {
  int n = 0;
  std::map<int, ValCurrent> parts;
};

// value-slot Hodge star e_J -> sgn(J, J^c) e_{J^c} and its inverse
HomForm value_star(const HomForm& w);
HomForm value_star_inverse(const HomForm& w);

// value-slot blade map along M (rows = target dim, cols = source dim):
// e_J -> sum_{J'} det(M[J', J]) e_{J'}
HomForm map_value_slot(const HomForm& w, const Eigen::MatrixXd& M);

// ---- constructors ----

ValCurrent euler_current(int n);
ValCurrent volume_current(int n);

// lambda_k and tau(V_k) = d i_E lambda_k
HomForm lambda_current(int n, int k, int L);
ValCurrent intrinsic_current(int n, int k, int L = 6);

// degree-1 current on R^2 of phi(K) = int h_K(e^{i th}) g(th) dth; rejects
// densities with first-harmonic content (not translation-invariant)
ValCurrent plane_current(const SpectralField& g, double tol = 1e-10);

// extract the density as a function of direction: G(th) = g(th + pi)
SpectralField plane_density_theta(const ValCurrent& v);
// and the original density g itself
SpectralField plane_density(const ValCurrent& v);

// tau = c0 delta_0 + r0((-1)^{n-k} a^* D omega + theta vol-part)
GradedValuation current_from_generating(const GeneratingForm& w, double theta = 0.0, cplx c0 = 0.0);

// ---- operations ----

int parity_of(const ValCurrent& v, double tol = 1e-10);

ValCurrent fourier_val(const ValCurrent& v);

// full (-id)^* on valuations (acts on forms, values, and orientation)
ValCurrent antipodal_val(const ValCurrent& v);

// GL action by pullback: tau(A^* phi) for an isomorphism A of the base space
ValCurrent val_gl_pullback(const Eigen::MatrixXd& A, const ValCurrent& v);

// pullback along a monomorphism f: V -> W of phi on W (degree preserved)
ValCurrent pullback_val(const LinMap& f, const ValCurrent& v);

// pushforward along an epimorphism f: V -> W (degree drops by dim V - dim W)
ValCurrent pushforward_val(const LinMap& f, const ValCurrent& v);

// pushforward of a 0-homogeneous current along an arbitrary epimorphism,
// factored into an isometry change of variables and coordinate drops
HomForm pushforward_epi(const LinMap& p, const HomForm& w);

// evaluation of the representable constructors on polytopes
cplx eval_on_body(const ValCurrent& v, const Polytope& K);

}  // namespace valfour
