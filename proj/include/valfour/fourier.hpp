#pragma once

// Fourier transform of 0-homogeneous forms via harmonic multipliers, and the
// twisted transform F0 on valuation-shaped currents.
//
// fourier_form: (i) Hodge-dualize the form slot (I -> I^c with shuffle sign),
// (ii) multiply each harmonic mode of the coefficients by B(n, q, degree),
// (iii) atoms map to constants and constants to atoms (unit-normalized
// kernel).  fourier0 first rewrites the value slot by the dual Hodge star
// (J -> J^c with shuffle sign), then applies fourier_form; on a current of
// degree k it produces the candidate current of degree n-k on the dual side.

#include "valfour/homforms.hpp"

namespace valfour {

std::string dual_space_label(const std::string& label);

// Fourier transform of a HomForm with r = 0 (smooth multiplier path for
// 0 < q < n, atom <-> constant duality at the ends).
HomForm fourier_form(const HomForm& w);

// The twisted transform F0 = fourier_form after the value-slot Hodge star.
HomForm fourier0(const HomForm& w);

}  // namespace valfour
