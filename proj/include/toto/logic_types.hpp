#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "toto/permutation.hpp"

namespace toto {

struct EfLimits {
  std::size_t max_size = 7;
  std::size_t max_rounds = 3;
};

enum class EfWinner { Duplicator, Spoiler };

/// Exact minimax value of the k-round Ehrenfeucht-Fraisse game on (alpha,
/// beta). Players may re-pick elements. Throws CapExceeded past `limits`.
EfWinner ef_winner(const Permutation& alpha, const Permutation& beta, std::size_t rounds,
                   const EfLimits& limits = {});

struct FingerprintLimits {
  std::size_t max_size = 40;
  std::size_t max_depth = 3;
};

/// Canonical byte encoding of the rank-k logical type of a permutation.
///
/// Rank 0 of a marked tuple is its atomic diagram: for each pair of marks,
/// equality or the pair (position order, value order). Rank r > 0 appends
/// the sorted, deduplicated set of rank r-1 encodings obtained by marking
/// one more element. Equal encodings iff k-equivalent.
class TypeFingerprint {
 public:
  TypeFingerprint() = default;
  explicit TypeFingerprint(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  friend auto operator<=>(const TypeFingerprint&, const TypeFingerprint&) = default;

 private:
  std::string bytes_;
};

/// Throws CapExceeded if sigma.size() or k exceed `limits`.
TypeFingerprint fingerprint(const Permutation& sigma, std::size_t k, const FingerprintLimits& limits = {});

bool k_equivalent(const Permutation& alpha, const Permutation& beta, std::size_t k,
                  const FingerprintLimits& limits = {});

/// Thread-safe insert-or-get map from fingerprints to dense ids. Ids depend
/// on insertion order; fingerprints do not.
class FingerprintInterner {
 public:
  std::size_t intern(const TypeFingerprint& fp);
  /// Returns size() if absent.
  std::size_t find(const TypeFingerprint& fp) const;
  std::size_t size() const;
  TypeFingerprint at(std::size_t id) const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, std::size_t> ids_;
  std::vector<TypeFingerprint> entries_;
};

}  // namespace toto

template <>
struct std::hash<toto::TypeFingerprint> {
  std::size_t operator()(const toto::TypeFingerprint& fp) const noexcept {
    return std::hash<std::string>{}(fp.bytes());
  }
};
