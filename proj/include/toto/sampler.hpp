#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "toto/permutation.hpp"

namespace toto {

/// Uniform sampler over Av_n(231).
///
/// Draws a uniform binary tree with n nodes by Catalan-weighted splitting:
/// a subtree of size s puts m nodes on the left with probability
/// Cat_m Cat_{s-1-m} / Cat_s. The tree maps to a permutation through
/// (left, root, right) -> left ⊕ (1 ⊖ right), the inverse of `decompose`.
/// Split sizes are scanned alternately from both ends, where the mass
/// concentrates, so a draw costs O(n log n) on average.
class Av231Sampler {
 public:
  explicit Av231Sampler(std::size_t max_size);

  std::size_t max_size() const noexcept { return log_cat_.size() - 1; }
  Permutation operator()(std::size_t n, std::mt19937_64& rng) const;

 private:
  std::size_t draw_left_size(std::size_t s, std::mt19937_64& rng) const;

  std::vector<long double> log_cat_;
  std::vector<long double> ratio_;  // Cat_j / Cat_{j-1}
};

/// One reproducible draw: same (n, seed) gives the same permutation.
Permutation sample_uniform_av231(std::size_t n, std::uint64_t seed);

/// Uniform double in [0, 1) built from the top 53 bits; identical across
/// standard libraries, unlike std::uniform_real_distribution.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace toto
