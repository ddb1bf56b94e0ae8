#pragma once

// Radial Fourier multipliers: with kernel e^{2 pi i <x,xi>},
//
//   F( |y|^{-lambda} Y_m(y/|y|) ) = B(n, lambda, m) |xi|^{lambda-n} Y_m(xi/|xi|)
//
// for 0 < lambda < n and harmonic degree m.  The closed form
//
//   B(n, lambda, m) = i^m pi^{lambda - n/2} Gamma((m+n-lambda)/2) / Gamma((m+lambda)/2)
//
// is the runtime source of truth; the quadrature oracle below validates it
// (Gaussian-regularized pairing evaluated by exact radial moments and sphere
// quadrature, independent of the closed form).

#include <map>
#include <vector>

#include "valfour/exterior.hpp"

namespace valfour {

cplx bochner_multiplier(int n, double lambda, int m);

// Independent oracle: B computed from the weak pairing
//   <F f, eta> = <f, F eta>,  f = |y|^{-lambda} Y_m,  eta = monomial Gaussian,
// with F eta evaluated by the exact polynomial-Gaussian calculus.
cplx bochner_multiplier_oracle(int n, double lambda, int m);

struct MultiplierEntry {
  int n;
  double lambda;
  int m;
  cplx value;
};

struct MultiplierTable {
  int n;
  int max_m;
  std::vector<MultiplierEntry> entries;  // lambda = 1..n-1, m = 0..max_m

  static MultiplierTable build(int n, int max_m);
};

}  // namespace valfour
