#include <doctest.h>

#include "toto/dlw.hpp"

using namespace toto;

TEST_CASE("support period") {
  CHECK(support_period({1, 0, 1, 0, 1}) == 2);
  CHECK(support_period({0, 1, 1}) == 1);
  CHECK(support_period({0, 0, 0, 1, 0, 0, 1}) == 3);
  CHECK(support_period({1, 0, 0}) == 0);
  CHECK(support_period({}) == 0);
}

TEST_CASE("DLW hypotheses hold for k = 1 and k = 2") {
  for (std::size_t k : {1, 2}) {
    const auto ts = build_type_system(k);
    const auto s = compute_scaled_coefficients(ts, 1000);
    const auto report = check_dlw_conditions(ts, s);
    REQUIRE(report.checks.size() == 6);
    for (const auto& c : report.checks) CHECK_MESSAGE(c.pass, "k=" << k << " (" << c.condition << ") " << c.detail);
    CHECK(report.all_pass());
  }
}

TEST_CASE("a tight determinant tolerance is reported as a failure of (v)") {
  const auto ts = build_type_system(1);
  const auto s = compute_scaled_coefficients(ts, 50);
  DlwOptions tight;
  tight.det_tolerance = 1e-12;
  const auto report = check_dlw_conditions(ts, s, tight);
  CHECK_FALSE(report.checks[4].pass);
  CHECK(report.checks[4].residual > 1e-12);
}
