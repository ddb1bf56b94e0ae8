#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace valfour {

struct Quad1D {
  std::vector<double> x;
  std::vector<double> w;
};

// Gauss-Legendre nodes/weights on [-1,1], Newton iteration on P_n.
inline Quad1D gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
  Quad1D q;
  q.x.resize(n);
  q.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int l = 2; l <= n; ++l) {
        double p2 = ((2 * l - 1) * x * p1 - (l - 1) * p0) / l;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    q.x[i] = -x;
    q.x[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    q.w[i] = w;
    q.w[n - 1 - i] = w;
  }
  return q;
}

// Affine map of a [-1,1] rule to [a,b].
inline Quad1D mapped(const Quad1D& q, double a, double b) {
  Quad1D out = q;
  double h = 0.5 * (b - a), c = 0.5 * (b + a);
  for (std::size_t i = 0; i < q.x.size(); ++i) {
    out.x[i] = c + h * q.x[i];
    out.w[i] = h * q.w[i];
  }
  return out;
}

// Composite Gauss-Legendre over [a,b] split into `panels` equal panels.
inline Quad1D paneled_gl(int nodes_per_panel, double a, double b, int panels) {
  Quad1D base = gauss_legendre(nodes_per_panel);
  Quad1D out;
  for (int p = 0; p < panels; ++p) {
    double pa = a + (b - a) * p / panels;
    double pb = a + (b - a) * (p + 1) / panels;
    Quad1D m = mapped(base, pa, pb);
    out.x.insert(out.x.end(), m.x.begin(), m.x.end());
    out.w.insert(out.w.end(), m.w.begin(), m.w.end());
  }
  return out;
}

}  // namespace valfour
