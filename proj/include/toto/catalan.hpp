#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <mutex>
#include <vector>

namespace toto {

/// Growable table of exact Catalan numbers, filled by the convolution
/// recurrence Cat_{n+1} = sum_i Cat_i Cat_{n-i}. Thread-safe.
class CatalanCache {
 public:
  CatalanCache() : table_{1} {}

  /// Cat_n (exact).
  mpz_class operator()(std::size_t n);
  /// Ensures entries 0..n exist and returns a copy of the table.
  std::vector<mpz_class> table(std::size_t n);

 private:
  void extend_to(std::size_t n);

  std::mutex mutex_;
  std::vector<mpz_class> table_;
};

/// Cat_n from a process-wide cache.
mpz_class catalan(std::size_t n);

/// Cat_n = binom(2n, n) / (n + 1), independent of the recurrence.
mpz_class catalan_binomial(std::size_t n);

/// log(Cat_n) in extended precision, for samplers and estimators.
long double log_catalan(std::size_t n);

}  // namespace toto
