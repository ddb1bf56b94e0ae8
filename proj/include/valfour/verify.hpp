#pragma once

// Identity verification suites: each check measures one identity of the
// transform at a pinned tolerance and cites its anchor in the identity
// registry (the same keys index the sign ledger).

#include <string>
#include <vector>

namespace valfour {

struct Check {
  std::string id;      // registry key, e.g. "multiplier.anchor.n2k1"
  std::string anchor;  // the identity being checked, in formula form
  double measured = 0;
  double tolerance = 0;
  bool pass = false;
};

struct VerifyConfig {
  int band_limit_2d = 64;
  int band_limit_3d = 32;
  double tol_spectral = 1e-8;
  double tol_quadrature = 1e-6;
  double tol_cross_engine = 1e-4;
  unsigned seed = 2024;
};

struct VerificationReport {
  std::string suite;
  VerifyConfig config;
  std::vector<Check> checks;
  bool all_pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// suites: inversion, intrinsic, plane-example, even, selfadjoint,
// functoriality, product-convolution, signs, multipliers
std::vector<std::string> suite_names();
VerificationReport run_suite(const std::string& name, const VerifyConfig& cfg);

std::string format_table(const VerificationReport& r);
std::string format_csv(const VerificationReport& r);
std::string format_json_report(const VerificationReport& r);
std::string format_svg(const VerificationReport& r);

// multiplier table dump as CSV rows (n, lambda, m, re, im)
std::string dump_multiplier_csv(int max_m = 16);

}  // namespace valfour
