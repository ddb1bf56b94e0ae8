#pragma once

// Crofton representations of even valuations: atoms (weighted subspaces,
// evaluation-level) and smooth densities on the Grassmannian (double-cover
// densities on the sphere), with the current-level smearing constructors and
// the orthogonal-complement action.

#include <vector>

#include "valfour/valuations.hpp"

namespace valfour {

struct CroftonAtom {
  Eigen::MatrixXd frame;  // n x dim(E), orthonormal columns spanning E
  double weight = 1.0;
};

struct CroftonData {
  int n = 0;
  int k_gr = 0;  // dimension of the subspaces E; the valuation has degree n - k_gr
  bool atomic = false;
  std::vector<CroftonAtom> atoms;
  SpectralField density;  // even field on S^{n-1}; E(u) = span(u) for k_gr = 1,
                          // E(u) = u^perp for k_gr = n-1

  static CroftonData smooth(int n, int k_gr, const SpectralField& density);
  static CroftonData atomic_data(int n, int k_gr, const std::vector<CroftonAtom>& atoms);
};

// phi(K) = 1/2 int_{S^{n-1}} m(u) vol(P_{E(u)^perp} K) dsigma(u)  (smooth)
//        = sum_i w_i vol(P_{E_i^perp} K)                           (atomic)
cplx eval_crofton(const CroftonData& data, const Polytope& K);

// Monte Carlo evaluation of the smooth representation (fixed seed)
cplx eval_crofton_mc(const CroftonData& data, const Polytope& K, int samples, unsigned seed);

// the smeared current of the smooth representation; degree n - k_gr
ValCurrent crofton_current(const CroftonData& data);

// orthogonal-complement action on atoms: E -> E^perp, weights unchanged
CroftonData klain_fourier_atoms(const CroftonData& data);

// least-squares fit of a Gr_1 density (n = 3) whose crofton_current matches
// the given degree-2 current on the span of the provided (l, m) modes;
// returns the density and the relative fit residual
std::pair<SpectralField, double> fit_crofton_density(const ValCurrent& v,
                                                     const std::vector<std::pair<int, int>>& modes);

}  // namespace valfour
