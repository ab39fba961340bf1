#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toto {

/// A permutation in one-line notation: entry i is the value (1-based) at
/// position i. The empty permutation is a valid value of size 0.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `values` is a permutation of 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  int operator[](std::size_t position) const noexcept { return values_[position]; }
  std::span<const int> values() const noexcept { return values_; }

  /// Comma-separated one-line notation; the empty permutation is "".
  std::string to_string() const;
  static Permutation parse(std::string_view text);

  /// Shorter permutations order first, then lexicographic one-line order.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.values_ <=> b.values_;
  }
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}
  friend Permutation from_trusted(std::vector<int> values);

  std::vector<int> values_;
};

/// Wraps values already known to form a permutation (internal fast path).
Permutation from_trusted(std::vector<int> values);

/// Order-isomorphic subsequence search with pruning.
bool contains_pattern(const Permutation& sigma, const Permutation& pattern);

/// Linear-time stack check for the pattern 231.
bool avoids_231(const Permutation& sigma);

Permutation direct_sum(const Permutation& tau, const Permutation& pi);
Permutation skew_sum(const Permutation& tau, const Permutation& pi);

/// tau ⊕ (1 ⊖ pi): the maximum sits between the two blocks.
Permutation compose_at_max(const Permutation& tau, const Permutation& pi);

struct Decomposition {
  Permutation tau;  // prefix before the maximum
  Permutation pi;   // suffix after the maximum
};

/// Unique split sigma = tau ⊕ (1 ⊖ pi). Throws on empty or 231-containing input.
Decomposition decompose(const Permutation& sigma);

/// Split at the maximum without checking 231-avoidance (sigma nonempty).
Decomposition split_at_max(const Permutation& sigma);

inline constexpr std::size_t kDefaultEnumerationCap = 12;

/// All of Av_n(231) in lexicographic order. Throws CapExceeded when n > cap.
std::vector<Permutation> enumerate_av231(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

/// The first `count` elements of Av_n(231) in lexicographic order, without
/// enumerating the whole class.
std::vector<Permutation> first_av231(std::size_t n, std::size_t count);

/// Every permutation of size n (n! of them), lexicographic.
std::vector<Permutation> enumerate_all(std::size_t n);

}  // namespace toto
