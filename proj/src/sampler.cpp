#include "toto/sampler.hpp"

#include <cmath>

#include "toto/catalan.hpp"

namespace toto {

Av231Sampler::Av231Sampler(std::size_t max_size) : log_cat_(max_size + 1), ratio_(max_size + 1, 1) {
  for (std::size_t n = 0; n <= max_size; ++n) log_cat_[n] = log_catalan(n);
  for (std::size_t j = 1; j <= max_size; ++j)
    ratio_[j] = 2.0L * (2.0L * static_cast<long double>(j) - 1) / (static_cast<long double>(j) + 1);
}

std::size_t Av231Sampler::draw_left_size(std::size_t s, std::mt19937_64& rng) const {
  const long double u = unit_uniform(rng);
  // P(m) = Cat_m Cat_{s-1-m} / Cat_s, stepped from both ends through the
  // ratios Cat_j / Cat_{j-1}.
  long double p_lo = std::exp(log_cat_[s - 1] - log_cat_[s]);
  long double p_hi = p_lo;
  long double cumulative = 0;
  std::size_t lo = 0, hi = s - 1;
  std::size_t last = 0;
  // Alternate m = 0, s-1, 1, s-2, ...; any fixed visiting order is a valid
  // inverse-CDF walk.
  while (lo <= hi) {
    last = lo;
    cumulative += p_lo;
    if (u < cumulative) return lo;
    if (lo == hi) break;
    last = hi;
    cumulative += p_hi;
    if (u < cumulative) return hi;
    ++lo;
    if (hi == 0) break;
    --hi;
    p_lo *= ratio_[lo] / ratio_[s - lo];
    p_hi *= ratio_[s - 1 - hi] / ratio_[hi + 1];
  }
  return last;  // rounding left u above the accumulated mass
}

Permutation Av231Sampler::operator()(std::size_t n, std::mt19937_64& rng) const {
  if (n > max_size()) throw std::invalid_argument("Av231Sampler: size above configured maximum");
  std::vector<int> values(n);
  struct Block {
    std::size_t position, size;
    int low_value;
  };
  std::vector<Block> pending;
  if (n > 0) pending.push_back({0, n, 1});
  while (!pending.empty()) {
    const Block b = pending.back();
    pending.pop_back();
    const std::size_t left = draw_left_size(b.size, rng);
    const std::size_t right = b.size - 1 - left;
    values[b.position + left] = b.low_value + static_cast<int>(b.size) - 1;
    if (left > 0) pending.push_back({b.position, left, b.low_value});
    if (right > 0) pending.push_back({b.position + left + 1, right, b.low_value + static_cast<int>(left)});
  }
  return from_trusted(std::move(values));
}

Permutation sample_uniform_av231(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return Av231Sampler(n)(n, rng);
}

}  // namespace toto
