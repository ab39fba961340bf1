#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toto {

/// The three binary symbols of the signature: equality, position order and
/// value order.
enum class Relation { Equal, LessPosition, LessValue };

/// First-order formula over {=, <p, <v}. Immutable value tree.
class Formula {
 public:
  enum class Kind { Atom, Not, And, Or, Implies, Iff, Exists, Forall };

  static Formula atom(Relation relation, std::string lhs, std::string rhs);
  static Formula negation(Formula body);
  static Formula conjunction(std::vector<Formula> operands);
  static Formula disjunction(std::vector<Formula> operands);
  static Formula implies(Formula premise, Formula conclusion);
  static Formula iff(Formula lhs, Formula rhs);
  static Formula exists(std::string variable, Formula body);
  static Formula forall(std::string variable, Formula body);

  Kind kind() const noexcept { return kind_; }
  /// Atoms only.
  Relation relation() const noexcept { return relation_; }
  const std::string& lhs() const noexcept { return names_[0]; }
  const std::string& rhs() const noexcept { return names_[1]; }
  /// Quantifiers only.
  const std::string& variable() const noexcept { return names_[0]; }
  std::span<const Formula> children() const noexcept { return children_; }
  const Formula& child(std::size_t i = 0) const { return children_.at(i); }

  bool is_quantifier() const noexcept { return kind_ == Kind::Exists || kind_ == Kind::Forall; }

  /// S-expression in the sentence grammar; parse(to_string()) round-trips.
  std::string to_string() const;

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  Formula(Kind kind, std::vector<Formula> children) : kind_(kind), children_(std::move(children)) {}

  Kind kind_ = Kind::Atom;
  Relation relation_ = Relation::Equal;
  std::string names_[2];
  std::vector<Formula> children_;
};

/// Maximal nesting of quantifiers. Atoms are 0, negation preserves depth,
/// every binary or n-ary connective takes the max of its operands.
std::size_t qdepth(const Formula& f);

std::set<std::string> free_variables(const Formula& f);
inline bool is_sentence(const Formula& f) { return free_variables(f).empty(); }

/// Parses the s-expression grammar:
///   (= a b) (<p a b) (<v a b) (not f) (and f...) (or f...) (imp f g)
///   (iff f g) (E x f) (A x f), variables [a-z][a-z0-9]*.
/// Throws ParseError with a byte offset.
Formula parse_formula(std::string_view text);

/// As parse_formula, and additionally throws UnboundVariable if any
/// variable is free.
Formula parse_sentence(std::string_view text);

}  // namespace toto
