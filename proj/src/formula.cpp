#include "toto/formula.hpp"

#include <algorithm>

#include "toto/error.hpp"

namespace toto {

Formula Formula::atom(Relation relation, std::string lhs, std::string rhs) {
  Formula f(Kind::Atom, {});
  f.relation_ = relation;
  f.names_[0] = std::move(lhs);
  f.names_[1] = std::move(rhs);
  return f;
}

Formula Formula::negation(Formula body) { return Formula(Kind::Not, {std::move(body)}); }

Formula Formula::conjunction(std::vector<Formula> operands) {
  if (operands.empty()) throw std::invalid_argument("conjunction needs at least one operand");
  return Formula(Kind::And, std::move(operands));
}

Formula Formula::disjunction(std::vector<Formula> operands) {
  if (operands.empty()) throw std::invalid_argument("disjunction needs at least one operand");
  return Formula(Kind::Or, std::move(operands));
}

Formula Formula::implies(Formula premise, Formula conclusion) {
  return Formula(Kind::Implies, {std::move(premise), std::move(conclusion)});
}

Formula Formula::iff(Formula lhs, Formula rhs) { return Formula(Kind::Iff, {std::move(lhs), std::move(rhs)}); }

Formula Formula::exists(std::string variable, Formula body) {
  Formula f(Kind::Exists, {std::move(body)});
  f.names_[0] = std::move(variable);
  return f;
}

Formula Formula::forall(std::string variable, Formula body) {
  Formula f(Kind::Forall, {std::move(body)});
  f.names_[0] = std::move(variable);
  return f;
}

namespace {

void print(const Formula& f, std::string& out) {
  using K = Formula::Kind;
  out += '(';
  switch (f.kind()) {
    case K::Atom:
      out += f.relation() == Relation::Equal ? "=" : f.relation() == Relation::LessPosition ? "<p" : "<v";
      out += ' ' + f.lhs() + ' ' + f.rhs() + ')';
      return;
    case K::Exists:
    case K::Forall:
      out += f.kind() == K::Exists ? "E " : "A ";
      out += f.variable();
      break;
    case K::Not: out += "not"; break;
    case K::And: out += "and"; break;
    case K::Or: out += "or"; break;
    case K::Implies: out += "imp"; break;
    case K::Iff: out += "iff"; break;
  }
  for (const auto& c : f.children()) {
    out += ' ';
    print(c, out);
  }
  out += ')';
}

void collect_free(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
  if (f.kind() == Formula::Kind::Atom) {
    for (const auto* name : {&f.lhs(), &f.rhs()})
      if (std::find(bound.begin(), bound.end(), *name) == bound.end()) out.insert(*name);
    return;
  }
  if (f.is_quantifier()) bound.push_back(f.variable());
  for (const auto& c : f.children()) collect_free(c, bound, out);
  if (f.is_quantifier()) bound.pop_back();
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

std::size_t qdepth(const Formula& f) {
  std::size_t depth = 0;
  for (const auto& c : f.children()) depth = std::max(depth, qdepth(c));
  return f.is_quantifier() ? depth + 1 : depth;
}

std::set<std::string> free_variables(const Formula& f) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

}  // namespace toto
