#include <doctest.h>

#include "valfour/serialization.hpp"

using namespace valfour;

TEST_CASE("spectral field round trip") {
  for (int n : {1, 2, 3}) {
    SpectralField f = random_real_field(n, 6, 17 + n);
    SpectralField g = spectral_field_from_json(to_json(f));
    CHECK((f.coeffs - g.coeffs).norm() == 0.0);
    CHECK(g.n == n);
  }
}

TEST_CASE("valuation current round trip") {
  SpectralField g(2, 8);
  g.cm(0) = 0.5;
  g.cm(3) = cplx(0.2, 0.1);
  g.cm(-3) = cplx(0.2, -0.1);
  ValCurrent v = plane_current(g);
  ValCurrent w = valcurrent_from_json(to_json(v));
  CHECK(w.k == v.k);
  CHECK(w.parity == v.parity);
  CHECK(((w.cur - v.cur).smooth_norm()) == 0.0);

  // atoms
  ValCurrent e = euler_current(3);
  ValCurrent e2 = valcurrent_from_json(to_json(e));
  CHECK(std::abs(e2.cur.atom.at(0) - cplx(1.0)) == 0.0);
}

TEST_CASE("polytope and crofton round trip") {
  Polytope K = Polytope::box({0, 0, 0}, {1, 2, 0.5});
  Polytope K2 = polytope_from_json(to_json(K));
  CHECK((K.vertices - K2.vertices).norm() == 0.0);

  SpectralField m = constant_field(3, 4, 1.0);
  m.clm(2, 0) += 0.3;
  CroftonData d = CroftonData::smooth(3, 1, m);
  CroftonData d2 = crofton_from_json(to_json(d));
  CHECK((d.density.coeffs - d2.density.coeffs).norm() == 0.0);

  CroftonAtom a;
  a.frame = Eigen::MatrixXd::Zero(2, 1);
  a.frame(0, 0) = 1.0;
  CroftonData da = CroftonData::atomic_data(2, 1, {a});
  CroftonData da2 = crofton_from_json(to_json(da));
  CHECK(da2.atomic);
  CHECK((da2.atoms[0].frame - a.frame).norm() == 0.0);
}

TEST_CASE("degree/shape mismatch is rejected") {
  ValCurrent v = intrinsic_current(2, 1);
  nlohmann::json j = to_json(v);
  j["degree"] = 2;
  CHECK_THROWS(valcurrent_from_json(j));
}
