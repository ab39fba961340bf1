#include <doctest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <map>

#include "toto/permutation.hpp"
#include "toto/sampler.hpp"

using namespace toto;

TEST_CASE("samples avoid 231 and have the requested size") {
  Av231Sampler sampler(300);
  std::mt19937_64 rng(11);
  for (std::size_t n : {0, 1, 2, 17, 300}) {
    const auto p = sampler(n, rng);
    CHECK(p.size() == n);
    CHECK(avoids_231(p));
  }
  CHECK_THROWS(sampler(301, rng));
}

TEST_CASE("draws are reproducible") {
  CHECK(sample_uniform_av231(50, 7) == sample_uniform_av231(50, 7));
  CHECK(sample_uniform_av231(50, 7) != sample_uniform_av231(50, 8));
}

TEST_CASE("unit_uniform is in [0, 1)") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const double u = unit_uniform(rng);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("chi-square over Av_4(231)") {
  Av231Sampler sampler(4);
  std::mt19937_64 rng(2024);
  const auto cells = enumerate_av231(4);
  std::map<Permutation, std::size_t> counts;
  const std::size_t samples = 28000;
  for (std::size_t i = 0; i < samples; ++i) ++counts[sampler(4, rng)];
  REQUIRE(counts.size() == cells.size());
  const double expected = static_cast<double>(samples) / static_cast<double>(cells.size());
  double stat = 0;
  for (const auto& c : cells) stat += (counts[c] - expected) * (counts[c] - expected) / expected;
  const boost::math::chi_squared dist(static_cast<double>(cells.size() - 1));
  CHECK(boost::math::cdf(boost::math::complement(dist, stat)) > 1e-3);
}

TEST_CASE("small sizes") {
  Av231Sampler sampler(2);
  std::mt19937_64 rng(8);
  CHECK(sampler(1, rng) == Permutation{1});
  std::size_t ascending = 0;
  const std::size_t samples = 10000;
  for (std::size_t i = 0; i < samples; ++i) ascending += sampler(2, rng) == Permutation{1, 2};
  const double sigma = std::sqrt(0.25 / samples);
  CHECK(std::abs(static_cast<double>(ascending) / samples - 0.5) <= 3 * sigma);
}
