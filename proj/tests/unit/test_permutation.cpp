#include <doctest.h>

#include "toto/catalan.hpp"
#include "toto/error.hpp"
#include "toto/permutation.hpp"

using namespace toto;

TEST_CASE("construction validates") {
  CHECK_NOTHROW(Permutation{2, 1, 3});
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK(Permutation::identity(3) == Permutation{1, 2, 3});
  CHECK(Permutation().empty());
}

TEST_CASE("one-line text round trip") {
  const Permutation p{3, 1, 2};
  CHECK(p.to_string() == "3,1,2");
  CHECK(Permutation::parse("3, 1,2") == p);
  CHECK(Permutation::parse("").empty());
  CHECK_THROWS(Permutation::parse("1,,2"));
}

TEST_CASE("ordering is by size then lexicographic") {
  CHECK(Permutation{1} < Permutation{1, 2});
  CHECK(Permutation{2, 1} < Permutation{1, 2, 3});
  CHECK(Permutation{1, 3, 2} < Permutation{2, 1, 3});
}

TEST_CASE("pattern containment") {
  CHECK(contains_pattern({1, 3, 4, 2}, {2, 3, 1}));
  CHECK_FALSE(contains_pattern({1, 2, 3, 4}, {2, 1}));
  CHECK(contains_pattern({4, 3, 2, 1}, {3, 2, 1}));
  CHECK(contains_pattern({3, 1, 2}, {}));
  CHECK_FALSE(avoids_231({2, 3, 1}));
  CHECK(avoids_231({3, 1, 2, 5, 4}));
  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto& p : enumerate_all(n)) CHECK(avoids_231(p) == !contains_pattern(p, {2, 3, 1}));
}

TEST_CASE("sums") {
  CHECK(direct_sum({2, 1}, {1}) == Permutation{2, 1, 3});
  CHECK(skew_sum({1}, {1, 2}) == Permutation{3, 1, 2});
  CHECK(compose_at_max({3, 1, 2}, {1}) == Permutation{3, 1, 2, 5, 4});
  CHECK(compose_at_max({}, {}) == Permutation{1});
}

TEST_CASE("decompose inverts compose_at_max") {
  const auto d = decompose({3, 1, 2, 5, 4});
  CHECK(d.tau == Permutation{3, 1, 2});
  CHECK(d.pi == Permutation{1});
  CHECK_THROWS(decompose({}));
  CHECK_THROWS(decompose({2, 3, 1}));
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& p : enumerate_av231(n)) {
      const auto parts = decompose(p);
      CHECK(parts.tau.size() + parts.pi.size() + 1 == n);
      CHECK(compose_at_max(parts.tau, parts.pi) == p);
    }
}

TEST_CASE("enumeration counts are Catalan") {
  for (std::size_t n = 0; n <= 10; ++n) CHECK(enumerate_av231(n).size() == catalan(n).get_ui());
  CHECK(enumerate_av231(3) == std::vector<Permutation>{{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {3, 1, 2}, {3, 2, 1}});
  CHECK_THROWS_AS(enumerate_av231(13), CapExceeded);
  CHECK(enumerate_all(4).size() == 24);
}

TEST_CASE("first_av231 is a lexicographic prefix") {
  const auto all = enumerate_av231(7);
  for (std::size_t count : {0, 1, 5, 100, 429, 1000}) {
    const auto first = first_av231(7, count);
    REQUIRE(first.size() == std::min<std::size_t>(count, all.size()));
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == all[i]);
  }
  CHECK(first_av231(0, 3) == std::vector<Permutation>{Permutation{}});
  const auto big = first_av231(40, 3);
  REQUIRE(big.size() == 3);
  CHECK(big[0] == Permutation::identity(40));
  for (const auto& p : big) CHECK(avoids_231(p));
}

TEST_CASE("reference sums and decompositions") {
  CHECK(contains_pattern({2, 4, 1, 3}, {2, 3, 1}));
  CHECK_FALSE(contains_pattern({1, 2, 3}, {2, 1}));
  CHECK(direct_sum({1, 2}, {2, 3, 1}) == Permutation{1, 2, 4, 5, 3});
  CHECK(skew_sum({1, 2}, {2, 3, 1}) == Permutation{4, 5, 2, 3, 1});
  CHECK(direct_sum({}, {2, 1}) == Permutation{2, 1});
  const auto one = decompose({1});
  CHECK(one.tau.empty());
  CHECK(one.pi.empty());
  const auto d = decompose({3, 1, 2});
  CHECK(d.tau.empty());
  CHECK(d.pi == Permutation{1, 2});
  for (const auto& p : enumerate_av231(8)) {
    const auto parts = decompose(p);
    CHECK(direct_sum(parts.tau, skew_sum({1}, parts.pi)) == p);
    CHECK(avoids_231(parts.tau));
    CHECK(avoids_231(parts.pi));
  }
}
