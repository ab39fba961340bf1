#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toto/estimators.hpp"
#include "toto/formula.hpp"
#include "toto/series.hpp"
#include "toto/type_system.hpp"

namespace toto {

enum class Classification { PositiveLimit, ExponentialDecay };

std::string to_string(Classification c);

struct MonteCarloResult {
  std::size_t n = 0;
  std::size_t samples = 0;
  double empirical = 0;
  double standard_error = 0;
};

struct LimitReport {
  std::string sentence;
  std::size_t k = 0;
  std::vector<TypeId> t_psi;
  double limit = 0;
  double error = 0;      // summed estimator error over star types in t_psi
  double tolerance = 0;  // error + 1e-3
  Classification classification = Classification::PositiveLimit;
  std::optional<double> kappa_bound;  // decaying sentences only
  std::optional<MonteCarloResult> monte_carlo;
};

/// {t : rep(t) satisfies psi}. Throws Error if qdepth(psi) > ts.k or psi
/// has free variables.
std::vector<TypeId> types_of_sentence(const TypeSystem& ts, const Formula& psi);

LimitReport limiting_probability(const TypeSystem& ts, const TypeEstimates& estimates, const Formula& psi);
LimitReport limiting_probability(const TypeSystem& ts, const ScaledCoeffTable& coeffs, const Formula& psi);

/// Number of deterministic shards used by the Monte-Carlo routines.
inline constexpr std::size_t kMonteCarloShards = 16;

/// Fraction of `samples` uniform draws from Av_n(231) satisfying psi, with
/// binomial standard error. Shard seeds derive from `seed` only, so the
/// result does not depend on the worker count.
MonteCarloResult monte_carlo_check(const Formula& psi, std::size_t n, std::size_t samples, std::uint64_t seed);

/// Same, evaluating every sentence on one shared sample set.
std::vector<MonteCarloResult> monte_carlo_check_many(const std::vector<Formula>& sentences, std::size_t n,
                                                     std::size_t samples, std::uint64_t seed);

struct TauPiReport {
  Permutation rho;
  std::size_t n = 0;
  std::size_t samples = 0;
  double tau_frequency = 0;
  double pi_frequency = 0;
  double standard_error = 0;  // of either frequency, at the exact probability
  double exact = 0;           // Cat_{n-|rho|-1} / Cat_n
  double limit = 0;           // 4^{-|rho|-1}
};

/// Empirical P(tau = rho) and P(pi = rho) at size n. Throws Error if rho
/// contains 231.
TauPiReport tau_pi_distribution_check(const Permutation& rho, std::size_t n, std::size_t samples,
                                      std::uint64_t seed);

}  // namespace toto
