#include <doctest.h>

#include "valfour/verify.hpp"

using namespace valfour;

TEST_CASE("reports are deterministic for a fixed seed and config") {
  VerifyConfig cfg;
  auto a = run_suite("multipliers", cfg);
  auto b = run_suite("multipliers", cfg);
  CHECK(format_csv(a) == format_csv(b));
  CHECK(a.all_pass());
}

TEST_CASE("unknown suite is a usage error") { CHECK_THROWS(run_suite("nonsense", VerifyConfig{})); }
