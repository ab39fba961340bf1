#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toto/formula.hpp"
#include "toto/inference.hpp"
#include "toto/permutation.hpp"

namespace toto {

/// The event (tau in F) or (pi in F'), or its complement, where
/// sigma = tau ⊕ (1 ⊖ pi).
struct EventSpec {
  std::vector<Permutation> F;
  std::vector<Permutation> Fprime;
  bool complement = false;

  /// sum over F and F' of 4^{-|rho|-1}.
  mpq_class subsum() const;
  /// Limiting probability of the event: subsum, or 1 - subsum when complemented.
  mpq_class limit() const;
  std::size_t max_rep_size() const;
};

/// Greedy subsum of the weights 4^{-k-1}, each with multiplicity 2 Cat_k.
///
/// Targets above 1/2 are handled through the complement: the greedy runs
/// on 1 - target and the spec is flagged. The result satisfies
/// limit() <= target and target - limit() < epsilon (reversed for
/// complements). Throws Error if epsilon <= 0, target lies outside [0, 1],
/// or the defect is still >= epsilon after `max_levels` sizes.
EventSpec greedy_subsum(const mpq_class& target, const mpq_class& epsilon, std::size_t max_levels = 64);

/// Sentence equivalent to the event on every 231-avoider.
Formula emit_event_sentence(const EventSpec& spec);

/// Direct membership through decompose. The empty permutation has no
/// decomposition and never lies in the (uncomplemented) event.
bool event_holds(const EventSpec& spec, const Permutation& sigma);

/// Number of sigma in Av_n(231), n <= max_n, where the sentence disagrees
/// with event_holds.
std::size_t event_sentence_mismatches(const EventSpec& spec, const Formula& sentence, std::size_t max_n = 9);

/// 1 - sum_{j <= k} 2 Cat_j 4^{-j-1}, the total weight beyond level k.
mpq_class weight_tail_after(std::size_t k);

/// p_i <= sum_{j > i} p_j for every weight up to level `levels`. Only the
/// last copy of each level needs checking.
bool kakeya_condition_holds(std::size_t levels = 30);

struct DensityGridRow {
  mpq_class target;
  EventSpec spec;
  mpq_class achieved;
  bool within_epsilon = false;
  std::size_t oracle_mismatches = 0;
  std::optional<MonteCarloResult> monte_carlo;
};

/// For each target: greedy spec, exact limit, small-size oracle and, when
/// samples > 0, a Monte-Carlo run of the emitted sentence at size n.
std::vector<DensityGridRow> verify_density_grid(const std::vector<mpq_class>& targets, const mpq_class& epsilon,
                                                std::size_t n, std::size_t samples, std::uint64_t seed,
                                                std::size_t oracle_max_n = 9);

/// "a/b", decimals ("0.25") and scientific notation ("1e-4"), exactly.
mpq_class parse_rational(std::string_view text);

/// Always "a/b", including "0/1" and "1/1".
std::string fraction_string(const mpq_class& q);

}  // namespace toto
