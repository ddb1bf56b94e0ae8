#pragma once

// Translation-invariant forms on V x S^{n-1} in (dx, dy)-bidegree, the
// contact form alpha = sum y_i dx_i, and the Rumin differential
// D omega = d(omega + alpha ^ xi), with xi the unique correction making the
// result vanish against the contact hyperplanes.
//
// Storage: the internal HomForm rep holds the coefficient of dx_I ^ dy_J at
// rep.coeffs[{J, I}] (dy is the HomForm form slot, tangential / i_E-closed);
// the wedge ordering "all dx before dy" fixes every Koszul sign.

#include "valfour/homforms.hpp"

namespace valfour {

struct GeneratingForm {
  int n = 0;
  int a = 0;  // dx-degree
  int b = 0;  // dy-degree
  HomForm rep;

  GeneratingForm() = default;
  GeneratingForm(int dim, int dx_deg, int dy_deg);
  double norm() const { return rep.smooth_norm(); }
};

// builds the form and projects the dy slot to the sphere (tangentializes)
GeneratingForm make_generating(int n, int a, int b, const std::map<BladeKey, SpectralField>& dx_dy_coeffs);

// d in the wedge ordering (Koszul sign (-1)^a over the HomForm derivative)
GeneratingForm wedge_d(const GeneratingForm& w);

// alpha ^ . (left wedge with the contact form)
GeneratingForm wedge_alpha(const GeneratingForm& w);

// the intrinsic-volume integrand kappa_k
GeneratingForm kappa_form(int n, int k, int L);

struct RuminResult {
  GeneratingForm D;          // bidegree (k, n-k), vertical and closed
  GeneratingForm correction; // xi, bidegree (k-1, n-1-k)
  double solve_residual = 0; // max least-squares residual across nodes
  double vertical_norm = 0;  // norm of alpha ^ D (diagnostic)
};

RuminResult rumin_D(const GeneratingForm& w);

}  // namespace valfour
