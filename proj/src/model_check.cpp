#include "toto/model_check.hpp"

#include <algorithm>

#include "toto/error.hpp"

namespace toto {
namespace {

using Kind = Formula::Kind;

// A x (and f g) -> (and (A x f) (A x g)), E x (or f g) -> (or (E x f) (E x g)),
// also through a negated or/and. Each part then gets its own guards.
Formula distribute(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom: return f;
    case Kind::Not: return Formula::negation(distribute(f.child()));
    case Kind::Implies: return Formula::implies(distribute(f.child(0)), distribute(f.child(1)));
    case Kind::Iff: return Formula::iff(distribute(f.child(0)), distribute(f.child(1)));
    case Kind::And:
    case Kind::Or: {
      std::vector<Formula> parts;
      for (const auto& c : f.children()) parts.push_back(distribute(c));
      return f.kind() == Kind::And ? Formula::conjunction(std::move(parts)) : Formula::disjunction(std::move(parts));
    }
    case Kind::Exists:
    case Kind::Forall: break;
  }
  const bool universal = f.kind() == Kind::Forall;
  const Kind splits = universal ? Kind::And : Kind::Or;
  const Kind negated_splits = universal ? Kind::Or : Kind::And;
  const Formula& body = f.child();
  std::vector<Formula> parts;
  if (body.kind() == splits) {
    for (const auto& c : body.children()) parts.push_back(c);
  } else if (body.kind() == Kind::Not && body.child().kind() == negated_splits) {
    for (const auto& c : body.child().children()) parts.push_back(Formula::negation(c));
  }
  auto bind = [&](Formula b) {
    return universal ? Formula::forall(f.variable(), std::move(b)) : Formula::exists(f.variable(), std::move(b));
  };
  if (parts.size() < 2) return bind(distribute(body));
  std::vector<Formula> quantified;
  for (auto& p : parts) quantified.push_back(distribute(bind(std::move(p))));
  return universal ? Formula::conjunction(std::move(quantified)) : Formula::disjunction(std::move(quantified));
}

}  // namespace

CompiledFormula::CompiledFormula(const Formula& f, std::vector<std::string> free_names)
    : free_names_(std::move(free_names)) {
  std::vector<std::pair<std::string, int>> scope;
  for (const auto& name : free_names_) scope.emplace_back(name, slot_count_++);
  root_ = lower(distribute(f), scope);
}

int CompiledFormula::lower(const Formula& f, std::vector<std::pair<std::string, int>>& scope) {
  auto resolve = [&](const std::string& name) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == name) return it->second;
    throw UnboundVariable(name);
  };

  Node node;
  node.kind = f.kind();
  if (f.kind() == Kind::Atom) {
    node.relation = f.relation();
    node.a = resolve(f.lhs());
    node.b = resolve(f.rhs());
  } else if (f.is_quantifier()) {
    node.a = slot_count_++;
    scope.emplace_back(f.variable(), node.a);
    node.children.push_back(lower(f.child(), scope));
    scope.pop_back();
  } else {
    for (const auto& c : f.children()) node.children.push_back(lower(c, scope));
  }
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(std::move(node));

  if (f.is_quantifier()) {
    // Position atoms forced by the body being true (E) or false (A).
    const int bound = nodes_[id].a;
    std::vector<Guard> guards;
    auto visit = [&](auto&& self, int n, bool want) -> void {
      const Node& cur = nodes_[n];
      switch (cur.kind) {
        case Kind::Atom: {
          if (cur.relation == Relation::LessValue || cur.a == cur.b) return;
          if (cur.a != bound && cur.b != bound) return;
          const bool bound_left = cur.a == bound;
          const int other = bound_left ? cur.b : cur.a;
          if (cur.relation == Relation::Equal) {
            if (want) guards.push_back({other, Guard::Same});
            return;
          }
          // cur is (bound <p other) or (other <p bound)
          if (want)
            guards.push_back({other, bound_left ? Guard::Before : Guard::After});
          else
            guards.push_back({other, bound_left ? Guard::NotBefore : Guard::NotAfter});
          return;
        }
        case Kind::Not: self(self, cur.children[0], !want); return;
        case Kind::And:
          if (want)
            for (int c : cur.children) self(self, c, true);
          return;
        case Kind::Or:
          if (!want)
            for (int c : cur.children) self(self, c, false);
          return;
        case Kind::Implies:
          if (!want) {
            self(self, cur.children[0], true);
            self(self, cur.children[1], false);
          }
          return;
        default: return;
      }
    };
    visit(visit, nodes_[id].children[0], f.kind() == Kind::Exists);
    nodes_[id].guards = std::move(guards);
  }
  return id;
}

bool CompiledFormula::eval(int id, const Permutation& sigma, std::vector<std::size_t>& slots) const {
  const Node& node = nodes_[id];
  switch (node.kind) {
    case Kind::Atom: {
      const std::size_t x = slots[node.a], y = slots[node.b];
      switch (node.relation) {
        case Relation::Equal: return x == y;
        case Relation::LessPosition: return x < y;
        case Relation::LessValue: return sigma[x] < sigma[y];
      }
      return false;
    }
    case Kind::Not: return !eval(node.children[0], sigma, slots);
    case Kind::And:
      for (int c : node.children)
        if (!eval(c, sigma, slots)) return false;
      return true;
    case Kind::Or:
      for (int c : node.children)
        if (eval(c, sigma, slots)) return true;
      return false;
    case Kind::Implies: return !eval(node.children[0], sigma, slots) || eval(node.children[1], sigma, slots);
    case Kind::Iff: return eval(node.children[0], sigma, slots) == eval(node.children[1], sigma, slots);
    case Kind::Exists:
    case Kind::Forall: {
      std::size_t lo = 0, hi = sigma.size();  // half-open
      for (const Guard& g : node.guards) {
        const std::size_t p = slots[g.other_slot];
        switch (g.shape) {
          case Guard::Before: hi = std::min(hi, p); break;
          case Guard::After: lo = std::max(lo, p + 1); break;
          case Guard::NotBefore: lo = std::max(lo, p); break;
          case Guard::NotAfter: hi = std::min(hi, p + 1); break;
          case Guard::Same:
            lo = std::max(lo, p);
            hi = std::min(hi, p + 1);
            break;
        }
      }
      const bool want = node.kind == Kind::Exists;
      std::size_t& slot = slots[node.a];
      const std::size_t saved = slot;
      bool result = !want;
      for (std::size_t x = lo; x < hi; ++x) {
        slot = x;
        if (eval(node.children[0], sigma, slots) == want) {
          result = want;
          break;
        }
      }
      slot = saved;
      return result;
    }
  }
  return false;
}

bool CompiledFormula::evaluate(const Permutation& sigma, std::span<const std::size_t> free_values) const {
  if (free_values.size() != free_names_.size())
    throw std::invalid_argument("CompiledFormula::evaluate: wrong number of free values");
  std::vector<std::size_t> slots(slot_count_, 0);
  for (std::size_t i = 0; i < free_values.size(); ++i) {
    if (free_values[i] >= sigma.size()) throw std::out_of_range("assigned element outside the permutation");
    slots[i] = free_values[i];
  }
  return eval(root_, sigma, slots);
}

bool models(const Permutation& sigma, const Formula& psi, const Assignment& env) {
  std::vector<std::string> names;
  std::vector<std::size_t> values;
  for (const auto& name : free_variables(psi)) {
    auto it = env.find(name);
    if (it == env.end()) throw UnboundVariable(name);
    names.push_back(name);
    values.push_back(it->second);
  }
  return CompiledFormula(psi, std::move(names)).evaluate(sigma, values);
}

}  // namespace toto
