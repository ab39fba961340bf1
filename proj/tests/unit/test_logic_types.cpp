#include <doctest.h>

#include "toto/error.hpp"
#include "toto/logic_types.hpp"

using namespace toto;

namespace {

std::vector<Permutation> all_up_to(std::size_t n) {
  std::vector<Permutation> out;
  for (std::size_t s = 0; s <= n; ++s)
    for (auto& p : enumerate_all(s)) out.push_back(std::move(p));
  return out;
}

}  // namespace

TEST_CASE("rank 0 identifies everything, rank 1 splits off the empty permutation") {
  const auto perms = all_up_to(3);
  for (const auto& a : perms)
    for (const auto& b : perms) {
      CHECK(k_equivalent(a, b, 0));
      CHECK(k_equivalent(a, b, 1) == (a.empty() == b.empty()));
    }
}

TEST_CASE("small rank-2 distinctions") {
  CHECK_FALSE(k_equivalent({1, 2}, {2, 1}, 2));
  CHECK_FALSE(k_equivalent({1}, {1, 2}, 2));
  CHECK(k_equivalent({1, 2, 3}, {1, 2, 3, 4}, 2));
  CHECK_FALSE(k_equivalent({1, 2, 3}, {1, 2, 3, 4}, 3));
  CHECK(ef_winner({1, 2, 3}, {1, 2, 3, 4}, 2) == EfWinner::Duplicator);
  CHECK(ef_winner({1, 2, 3}, {1, 2, 3, 4}, 3) == EfWinner::Spoiler);
}

TEST_CASE("fingerprints agree with the EF game on sizes up to 4") {
  const auto perms = all_up_to(4);
  std::size_t disagreements = 0;
  for (std::size_t k = 1; k <= 2; ++k)
    for (std::size_t i = 0; i < perms.size(); ++i)
      for (std::size_t j = i; j < perms.size(); ++j) {
        const bool fp = k_equivalent(perms[i], perms[j], k);
        const bool ef = ef_winner(perms[i], perms[j], k) == EfWinner::Duplicator;
        if (fp != ef) ++disagreements;
      }
  CHECK(disagreements == 0);
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(fingerprint(Permutation::identity(41), 1), CapExceeded);
  CHECK_THROWS_AS(fingerprint({1}, 4), CapExceeded);
  CHECK_THROWS_AS(ef_winner(Permutation::identity(8), {1}, 1), CapExceeded);
}

TEST_CASE("interner hands out dense ids") {
  FingerprintInterner in;
  const auto a = fingerprint({1, 2}, 2), b = fingerprint({2, 1}, 2);
  CHECK(in.intern(a) == 0);
  CHECK(in.intern(b) == 1);
  CHECK(in.intern(a) == 0);
  CHECK(in.size() == 2);
  CHECK(in.find(fingerprint({1}, 2)) == 2);
  CHECK(in.at(1) == b);
}

TEST_CASE("reference EF outcomes") {
  CHECK(ef_winner({1, 2}, {2, 1}, 1) == EfWinner::Duplicator);
  CHECK(ef_winner({1, 2}, {2, 1}, 2) == EfWinner::Spoiler);
  for (std::size_t k = 1; k <= 3; ++k) CHECK(ef_winner({2, 4, 1, 3}, {2, 4, 1, 3}, k) == EfWinner::Duplicator);
  const Permutation five{1, 2, 3, 4, 5}, six{1, 2, 3, 4, 5, 6};
  CHECK(k_equivalent(five, six, 2) == (ef_winner(five, six, 2) == EfWinner::Duplicator));
}

TEST_CASE("increasing permutations stabilize by size 2^k") {
  auto increasing = [](std::size_t m) {
    std::vector<int> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = static_cast<int>(i + 1);
    return Permutation(v);
  };
  for (std::size_t k = 1; k <= 3; ++k) {
    const std::size_t K = std::size_t{1} << k;
    const auto base = fingerprint(increasing(K), k);
    for (std::size_t m = K + 1; m <= K + 4; ++m) CHECK(fingerprint(increasing(m), k) == base);
  }
}
