#pragma once

// Product and convolution of degree-1 valuations on R^2 through the current
// machinery on the 4-dimensional product space, plus the Poincare-type
// pairing against generating data.

#include "valfour/valuations.hpp"

namespace valfour {

// coefficient of the volume valuation in phi . psi (Alesker product):
// pushforward of the product current along the addition map of the duals,
// evaluated weakly against a unit Gaussian test
cplx product_top(const ValCurrent& phi, const ValCurrent& psi);

// coefficient of the Euler characteristic in phi * psi (convolution):
// delta-case restriction of the Hodge-twisted product current along the
// diagonal of the duals (hemisphere integrals on S^3)
struct ConvolutionResult {
  cplx value;
  double spread;  // probe-direction spread diagnostic
};
ConvolutionResult convolution_bottom(const ValCurrent& phi, const ValCurrent& psi,
                                     double spread_tol = 1e-2);

// <phi, psi-as-valuation> for a degree-1 current phi on R^2 and psi given by
// its support-function data psi(K) = 2 V(K, h): the signed sphere integral
// int h(th) g_phi(-th) dth
cplx poincare_pair(const ValCurrent& phi, const SpectralField& h);

// the generating 1-form omega = f1 dx1 + f2 dx2 on R^2 x S^1 whose valuation
// is psi(K) = 2 V(K, h) with h = -f1 y2 + f2 y1
GeneratingForm generating_from_h(const SpectralField& h);

// plane-current density of psi(K) = 2 V(K, h): g = h'' + h
SpectralField density_from_h(const SpectralField& h);
SpectralField h_from_density(const SpectralField& g);  // inverse on m != +-1 modes

}  // namespace valfour
