#include "toto/type_system.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "toto/error.hpp"
#include "toto/parallel.hpp"
#include "toto/sampler.hpp"

namespace toto {

SccPartition strongly_connected_components(std::size_t n,
                                           std::span<const std::pair<std::size_t, std::size_t>> edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [u, v] : edges) adj[u].push_back(v);

  // Iterative Tarjan.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0, components = 0;
  struct Frame {
    std::size_t v, next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < adj[f.v].size()) {
        const std::size_t w = adj[f.v][f.next++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      if (low[v] == index[v]) {
        while (true) {
          const std::size_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
          if (w == v) break;
        }
        ++components;
      }
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
    }
  }

  SccPartition out;
  out.component = comp;
  out.members.assign(components, {});
  for (std::size_t v = 0; v < n; ++v) out.members[comp[v]].push_back(v);
  std::set<std::pair<std::size_t, std::size_t>> dag;
  for (auto [u, v] : edges)
    if (comp[u] != comp[v]) dag.emplace(comp[u], comp[v]);
  out.dag_edges.assign(dag.begin(), dag.end());
  std::vector<bool> has_out(components, false);
  for (auto [a, b] : out.dag_edges) has_out[a] = true;
  for (std::size_t c = 0; c < components; ++c)
    if (!has_out[c]) out.terminal.push_back(c);
  return out;
}

std::vector<TypeId> TypeSystem::star_types() const {
  std::vector<TypeId> out;
  for (TypeId t = 0; t < size(); ++t)
    if (star[t]) out.push_back(t);
  return out;
}

std::vector<TypeId> TypeSystem::bullet_types() const {
  std::vector<TypeId> out;
  for (TypeId t = 0; t < size(); ++t)
    if (!star[t]) out.push_back(t);
  return out;
}

void TypeSystem::reindex() {
  index_.clear();
  for (TypeId t = 0; t < fingerprints.size(); ++t) index_.emplace(fingerprints[t].bytes(), t);
}

std::optional<TypeId> TypeSystem::find(const TypeFingerprint& fp) const {
  auto it = index_.find(fp.bytes());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TypeId TypeSystem::type_of(const Permutation& sigma) const {
  if (auto t = find(fingerprint(sigma, k, limits))) return *t;
  throw Error("type_of: " + sigma.to_string() + " has a type outside the system");
}

std::vector<std::pair<TypeId, TypeId>> dependency_edges(const std::vector<std::vector<TypeId>>& H) {
  std::set<std::pair<TypeId, TypeId>> edges;
  for (TypeId u = 0; u < H.size(); ++u)
    for (TypeId v = 0; v < H.size(); ++v) {
      edges.emplace(u, H[u][v]);
      edges.emplace(v, H[u][v]);
    }
  return {edges.begin(), edges.end()};
}

StarBulletSplit scc_partition(const TypeSystem& ts) {
  StarBulletSplit out;
  out.scc = strongly_connected_components(ts.size(), ts.edges);
  if (out.scc.terminal.size() != 1)
    throw Error("dependency graph has " + std::to_string(out.scc.terminal.size()) +
                " terminal strongly connected components, expected exactly one");
  const std::size_t terminal = out.scc.terminal.front();
  for (TypeId t = 0; t < ts.size(); ++t)
    (out.scc.component[t] == terminal ? out.star : out.bullet).push_back(t);
  return out;
}

namespace {

using Fp = TypeFingerprint;

struct Saturation {
  std::map<Fp, Permutation> reps;
  std::map<std::pair<Fp, Fp>, Fp> composition;
};

void saturate(Saturation& s, std::size_t k, const TypeSystemOptions& options) {
  for (std::size_t round = 0;; ++round) {
    if (round >= options.iteration_cap)
      throw Error("build_type_system: saturation did not reach a fixpoint within " +
                  std::to_string(options.iteration_cap) + " rounds");
    std::vector<std::pair<Fp, Permutation>> known(s.reps.begin(), s.reps.end());
    std::vector<std::pair<std::size_t, std::size_t>> todo;
    for (std::size_t i = 0; i < known.size(); ++i)
      for (std::size_t j = 0; j < known.size(); ++j)
        if (!s.composition.count({known[i].first, known[j].first})) todo.emplace_back(i, j);

    std::vector<Fp> results(todo.size());
    parallel_for(
        todo.size(),
        [&](std::size_t q) {
          auto [i, j] = todo[q];
          results[q] = fingerprint(compose_at_max(known[i].second, known[j].second), k, options.limits);
        },
        64);

    bool changed = false;
    for (std::size_t q = 0; q < todo.size(); ++q)
      s.composition.emplace(std::make_pair(known[todo[q].first].first, known[todo[q].second].first), results[q]);

    // New types, and smaller representatives for known ones.
    for (std::size_t i = 0; i < known.size(); ++i)
      for (std::size_t j = 0; j < known.size(); ++j) {
        const Fp& target = s.composition.at({known[i].first, known[j].first});
        auto it = s.reps.find(target);
        const std::size_t size = known[i].second.size() + known[j].second.size() + 1;
        if (it != s.reps.end() && it->second.size() < size) continue;
        Permutation candidate = compose_at_max(known[i].second, known[j].second);
        if (it == s.reps.end()) {
          s.reps.emplace(target, std::move(candidate));
          changed = true;
        } else if (candidate < it->second) {
          it->second = std::move(candidate);
          changed = true;
        }
      }
    if (!changed) return;
  }
}

TypeSystem build_once(std::size_t k, std::size_t seed_size, const TypeSystemOptions& options) {
  Saturation s;
  for (std::size_t n = 0; n <= seed_size; ++n) {
    auto perms = enumerate_av231(n, std::max(seed_size, kDefaultEnumerationCap));
    std::vector<Fp> fps(perms.size());
    parallel_for(perms.size(), [&](std::size_t i) { fps[i] = fingerprint(perms[i], k, options.limits); }, 64);
    for (std::size_t i = 0; i < perms.size(); ++i) s.reps.try_emplace(fps[i], perms[i]);  // lex order: first is minimal
  }
  saturate(s, k, options);

  std::vector<std::pair<Permutation, Fp>> ordered;
  for (auto& [fp, rep] : s.reps) ordered.emplace_back(rep, fp);
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  TypeSystem ts;
  ts.k = k;
  ts.limits = options.limits;
  for (auto& [rep, fp] : ordered) {
    ts.reps.push_back(rep);
    ts.fingerprints.push_back(fp);
  }
  ts.reindex();
  const std::size_t n = ts.size();
  ts.H.assign(n, std::vector<TypeId>(n));
  for (TypeId a = 0; a < n; ++a)
    for (TypeId b = 0; b < n; ++b) {
      auto it = s.composition.find({ts.fingerprints[a], ts.fingerprints[b]});
      auto target = it == s.composition.end() ? std::nullopt : ts.find(it->second);
      if (!target) throw Error("build_type_system: composition table not closed");
      ts.H[a][b] = *target;
    }
  ts.empty_type = *ts.find(fingerprint(Permutation{}, k, options.limits));
  ts.edges = dependency_edges(ts.H);
  auto split = scc_partition(ts);
  ts.scc = std::move(split.scc);
  ts.star.assign(n, false);
  for (TypeId t : split.star) ts.star[t] = true;
  return ts;
}

}  // namespace

TypeSystem build_type_system(std::size_t k, const TypeSystemOptions& options) {
  if (k < 1) throw std::invalid_argument("build_type_system: k must be at least 1");
  for (std::size_t seed = options.seed_size;; seed += 2) {
    try {
      return build_once(k, seed, options);
    } catch (const CapExceeded& e) {
      if (seed + 2 > options.max_seed_size)
        throw CapExceeded(std::string("build_type_system: representatives outgrow the fingerprint cap even with seed size ") +
                          std::to_string(seed) + ": " + e.what());
    }
  }
}

CompositionReport verify_composition_lemma(const TypeSystem& ts, std::size_t trials, std::uint64_t seed,
                                           std::size_t max_component_size) {
  CompositionReport report;
  std::mt19937_64 rng(seed);
  Av231Sampler sampler(max_component_size);
  std::uniform_int_distribution<std::size_t> size_dist(0, max_component_size);
  for (std::size_t i = 0; i < trials; ++i) {
    const Permutation tau = sampler(size_dist(rng), rng);
    const Permutation pi = sampler(size_dist(rng), rng);
    const TypeId expected = ts.H[ts.type_of(tau)][ts.type_of(pi)];
    const auto actual = ts.find(fingerprint(compose_at_max(tau, pi), ts.k, ts.limits));
    ++report.checked;
    if (!actual || *actual != expected) {
      ++report.violations;
      if (report.examples.size() < 5) report.examples.push_back("(" + tau.to_string() + ")x(" + pi.to_string() + ")");
    }
  }
  return report;
}

CompositionReport verify_composition_lemma_exhaustive(std::size_t k, std::span<const Permutation> components) {
  std::map<Fp, std::vector<const Permutation*>> classes;
  for (const auto& p : components) classes[fingerprint(p, k)].push_back(&p);
  CompositionReport report;
  for (const auto& [fa, taus] : classes)
    for (const auto& [fb, pis] : classes) {
      std::optional<Fp> first;
      for (const Permutation* tau : taus)
        for (const Permutation* pi : pis) {
          Fp f = fingerprint(compose_at_max(*tau, *pi), k);
          ++report.checked;
          if (!first) {
            first = std::move(f);
          } else if (f != *first) {
            ++report.violations;
            if (report.examples.size() < 5)
              report.examples.push_back("(" + tau->to_string() + ")x(" + pi->to_string() + ")");
          }
        }
    }
  return report;
}

}  // namespace toto
