#include "toto/catalan.hpp"

#include <cmath>

namespace toto {

void CatalanCache::extend_to(std::size_t n) {
  while (table_.size() <= n) {
    const std::size_t m = table_.size() - 1;
    mpz_class next = 0;
    for (std::size_t i = 0; i <= m; ++i)
      mpz_addmul(next.get_mpz_t(), table_[i].get_mpz_t(), table_[m - i].get_mpz_t());
    table_.push_back(std::move(next));
  }
}

mpz_class CatalanCache::operator()(std::size_t n) {
  std::lock_guard lock(mutex_);
  extend_to(n);
  return table_[n];
}

std::vector<mpz_class> CatalanCache::table(std::size_t n) {
  std::lock_guard lock(mutex_);
  extend_to(n);
  return {table_.begin(), table_.begin() + static_cast<std::ptrdiff_t>(n + 1)};
}

mpz_class catalan(std::size_t n) {
  static CatalanCache cache;
  return cache(n);
}

mpz_class catalan_binomial(std::size_t n) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
  return b / static_cast<unsigned long>(n + 1);
}

long double log_catalan(std::size_t n) {
  const long double x = static_cast<long double>(n);
  return std::lgamma(2 * x + 1) - 2 * std::lgamma(x + 1) - std::log(x + 1);
}

}  // namespace toto
