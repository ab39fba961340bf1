#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "toto/formula.hpp"
#include "toto/permutation.hpp"

namespace toto {

/// Variable name -> element, where an element is identified by its
/// 0-based position in the permutation.
using Assignment = std::map<std::string, std::size_t>;

/// A formula lowered to slot-addressed nodes for repeated evaluation.
///
/// Quantifiers only visit positions compatible with the position atoms that
/// any witness (for E) or counterexample (for A) must satisfy; skipped
/// positions cannot change the result.
class CompiledFormula {
 public:
  /// `free_names` fixes the order of the values passed to `evaluate`.
  /// Throws UnboundVariable if some free variable is not listed.
  explicit CompiledFormula(const Formula& f, std::vector<std::string> free_names = {});

  bool evaluate(const Permutation& sigma, std::span<const std::size_t> free_values = {}) const;

  const std::vector<std::string>& free_names() const noexcept { return free_names_; }

 private:
  struct Guard {
    int other_slot;
    enum Shape { Before, After, NotAfter, NotBefore, Same } shape;  // relative to the bound variable
  };
  struct Node {
    Formula::Kind kind;
    Relation relation = Relation::Equal;
    int a = -1, b = -1;  // atom slots, or the bound slot in a[] for quantifiers
    std::vector<int> children;
    std::vector<Guard> guards;
  };

  int lower(const Formula& f, std::vector<std::pair<std::string, int>>& scope);
  bool eval(int node, const Permutation& sigma, std::vector<std::size_t>& slots) const;

  std::vector<Node> nodes_;
  std::vector<std::string> free_names_;
  int root_ = -1;
  int slot_count_ = 0;
};

/// Tarskian satisfaction: <p compares positions, <v compares values.
/// Throws UnboundVariable if a free variable of `psi` is missing from `env`.
bool models(const Permutation& sigma, const Formula& psi, const Assignment& env = {});

}  // namespace toto
