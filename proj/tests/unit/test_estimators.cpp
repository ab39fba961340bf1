#include <doctest.h>

#include <cmath>
#include <functional>

#include "toto/estimators.hpp"

using namespace toto;

namespace {

ScaledCoeffTable synthetic(std::size_t N, const std::function<long double(std::size_t)>& s) {
  ScaledCoeffTable t;
  t.N = N;
  t.s.assign(1, std::vector<long double>(N + 1));
  for (std::size_t n = 0; n <= N; ++n) t.s[0][n] = s(n);
  return t;
}

}  // namespace

TEST_CASE("growth rate of a geometric series") {
  const auto t = synthetic(500, [](std::size_t n) { return std::pow(0.5L, static_cast<long double>(n)); });
  CHECK(estimate_kappa(t, 0) == doctest::Approx(2.0).epsilon(1e-9));
  const auto z = synthetic(500, [](std::size_t) { return 0.0L; });
  CHECK(estimate_kappa(z, 0) == 0.0);
  const auto sparse = synthetic(500, [](std::size_t n) { return n % 100 == 0 ? 1.0L : 0.0L; });
  CHECK_THROWS_AS(estimate_kappa(sparse, 0), InsufficientSupport);
}

TEST_CASE("tail of n^{-3/2}") {
  // zeta(3/2) minus partial sums
  const long double zeta = 2.612375348685488343348567567924071630571L;
  for (std::size_t N : {100, 1000, 4000}) {
    long double partial = 0;
    for (std::size_t n = 1; n <= N; ++n) partial += std::pow(static_cast<long double>(n), -1.5L);
    CHECK(static_cast<double>(tail_three_halves(N)) == doctest::Approx(static_cast<double>(zeta - partial)).epsilon(1e-9));
  }
}

TEST_CASE("k = 1 estimates") {
  const auto ts = build_type_system(1);
  const auto s = compute_scaled_coefficients(ts, 2000);
  const auto e = estimate_all(ts, s);
  CHECK(e.lambda[1].value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.lambda[0].value == 0.0);
  CHECK(e.kappa[0] == 0.0);
  CHECK(std::isnan(e.kappa[1]));
  CHECK(e.A[1] == doctest::Approx(1 / std::sqrt(M_PI)).epsilon(1e-5));
  const auto diffs = cauchy_differences(s, 1, 4);
  REQUIRE(diffs.size() == 4);
  for (std::size_t i = 1; i < diffs.size(); ++i) CHECK(diffs[i - 1] < diffs[i]);
  const auto values = tail_corrected_values_at_quarter(ts, s, e);
  // next term of a_n is -9A/(8n), leaving about (3/4) A N^{-3/2}
  CHECK(std::abs(static_cast<double>(values[0] + values[1]) - 2.0) < 1e-5);
}

TEST_CASE("normalized coefficient") {
  const auto t = synthetic(10, [](std::size_t n) { return 1.0L / static_cast<long double>(n + 1); });
  CHECK(normalized_coefficient(t, 0, 4) == doctest::Approx(8.0 / 5.0));
}
