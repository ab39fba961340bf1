#include "toto/inference.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "toto/catalan.hpp"
#include "toto/model_check.hpp"
#include "toto/parallel.hpp"
#include "toto/sampler.hpp"

namespace toto {

std::string to_string(Classification c) {
  return c == Classification::PositiveLimit ? "positive-limit" : "exponential-decay";
}

std::vector<TypeId> types_of_sentence(const TypeSystem& ts, const Formula& psi) {
  if (!is_sentence(psi)) throw Error("types_of_sentence: formula has free variables");
  if (qdepth(psi) > ts.k)
    throw Error("types_of_sentence: quantifier depth " + std::to_string(qdepth(psi)) + " exceeds k = " +
                std::to_string(ts.k));
  const CompiledFormula compiled(psi);
  std::vector<TypeId> out;
  for (TypeId t = 0; t < ts.size(); ++t)
    if (compiled.evaluate(ts.reps[t])) out.push_back(t);
  return out;
}

LimitReport limiting_probability(const TypeSystem& ts, const TypeEstimates& estimates, const Formula& psi) {
  LimitReport r;
  r.sentence = psi.to_string();
  r.k = ts.k;
  r.t_psi = types_of_sentence(ts, psi);
  bool hits_star = false;
  double kappa = 0;
  for (TypeId t : r.t_psi) {
    if (ts.star[t]) {
      hits_star = true;
      r.limit += estimates.lambda[t].value;
      r.error += estimates.lambda[t].error;
    } else {
      kappa = std::max(kappa, estimates.kappa[t]);
    }
  }
  r.tolerance = r.error + 1e-3;
  if (hits_star) {
    r.classification = Classification::PositiveLimit;
  } else {
    r.classification = Classification::ExponentialDecay;
    r.limit = 0;
    r.kappa_bound = kappa;
  }
  return r;
}

LimitReport limiting_probability(const TypeSystem& ts, const ScaledCoeffTable& coeffs, const Formula& psi) {
  return limiting_probability(ts, estimate_all(ts, coeffs), psi);
}

namespace {

std::uint64_t shard_seed(std::uint64_t seed, std::size_t shard) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(shard)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::size_t shard_size(std::size_t samples, std::size_t shard) {
  return samples / kMonteCarloShards + (shard < samples % kMonteCarloShards ? 1 : 0);
}

// Runs fn(sigma) on every sample of every shard; fn returns a bitmask-like
// vector of hits which is summed per shard.
template <class Fn>
std::vector<std::size_t> sharded_counts(std::size_t n, std::size_t samples, std::uint64_t seed, std::size_t width,
                                        Fn&& fn) {
  const Av231Sampler sampler(n);
  std::vector<std::vector<std::size_t>> per_shard(kMonteCarloShards, std::vector<std::size_t>(width, 0));
  parallel_for(kMonteCarloShards, [&](std::size_t shard) {
    std::mt19937_64 rng(shard_seed(seed, shard));
    const std::size_t m = shard_size(samples, shard);
    for (std::size_t i = 0; i < m; ++i) fn(sampler(n, rng), per_shard[shard]);
  });
  std::vector<std::size_t> total(width, 0);
  for (const auto& s : per_shard)
    for (std::size_t j = 0; j < width; ++j) total[j] += s[j];
  return total;
}

MonteCarloResult summarize(std::size_t n, std::size_t samples, std::size_t hits) {
  MonteCarloResult r;
  r.n = n;
  r.samples = samples;
  if (samples == 0) return r;
  r.empirical = static_cast<double>(hits) / static_cast<double>(samples);
  r.standard_error = std::sqrt(r.empirical * (1 - r.empirical) / static_cast<double>(samples));
  return r;
}

}  // namespace

std::vector<MonteCarloResult> monte_carlo_check_many(const std::vector<Formula>& sentences, std::size_t n,
                                                     std::size_t samples, std::uint64_t seed) {
  std::vector<CompiledFormula> compiled;
  compiled.reserve(sentences.size());
  for (const auto& s : sentences) compiled.emplace_back(s);
  const auto hits = sharded_counts(n, samples, seed, compiled.size(),
                                   [&](const Permutation& sigma, std::vector<std::size_t>& acc) {
                                     for (std::size_t j = 0; j < compiled.size(); ++j)
                                       if (compiled[j].evaluate(sigma)) ++acc[j];
                                   });
  std::vector<MonteCarloResult> out;
  for (std::size_t h : hits) out.push_back(summarize(n, samples, h));
  return out;
}

MonteCarloResult monte_carlo_check(const Formula& psi, std::size_t n, std::size_t samples, std::uint64_t seed) {
  return monte_carlo_check_many({psi}, n, samples, seed).front();
}

TauPiReport tau_pi_distribution_check(const Permutation& rho, std::size_t n, std::size_t samples,
                                      std::uint64_t seed) {
  if (!avoids_231(rho)) throw Error("tau_pi_distribution_check: " + rho.to_string() + " contains 231");
  TauPiReport r;
  r.rho = rho;
  r.n = n;
  r.samples = samples;
  r.limit = std::pow(0.25, static_cast<double>(rho.size() + 1));
  if (n >= rho.size() + 1) {
    const mpq_class q(catalan(n - rho.size() - 1), catalan(n));
    r.exact = q.get_d();
  }
  if (n == 0) return r;
  const auto hits = sharded_counts(n, samples, seed, 2, [&](const Permutation& sigma, std::vector<std::size_t>& acc) {
    const Decomposition d = decompose(sigma);
    if (d.tau == rho) ++acc[0];
    if (d.pi == rho) ++acc[1];
  });
  if (samples > 0) {
    r.tau_frequency = static_cast<double>(hits[0]) / static_cast<double>(samples);
    r.pi_frequency = static_cast<double>(hits[1]) / static_cast<double>(samples);
    r.standard_error = std::sqrt(r.exact * (1 - r.exact) / static_cast<double>(samples));
  }
  return r;
}

}  // namespace toto
