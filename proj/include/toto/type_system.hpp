#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "toto/logic_types.hpp"
#include "toto/permutation.hpp"

namespace toto {

using TypeId = std::size_t;

/// Strongly connected components of a directed graph on 0..n-1.
struct SccPartition {
  std::vector<std::size_t> component;               // vertex -> component id
  std::vector<std::vector<std::size_t>> members;    // component id -> sorted vertices
  std::vector<std::pair<std::size_t, std::size_t>> dag_edges;  // condensation, deduplicated
  std::vector<std::size_t> terminal;                // components with no outgoing DAG edge
};

SccPartition strongly_connected_components(std::size_t vertex_count,
                                           std::span<const std::pair<std::size_t, std::size_t>> edges);

/// The finite set of rank-k types realized in Av(231) together with the
/// composition table H(t1, t2) = type(rep(t1) ⊕ (1 ⊖ rep(t2))), the
/// dependency graph and its star (terminal component) / bullet split.
struct TypeSystem {
  std::size_t k = 0;
  FingerprintLimits limits;
  std::vector<Permutation> reps;
  std::vector<TypeFingerprint> fingerprints;
  std::vector<std::vector<TypeId>> H;
  TypeId empty_type = 0;
  std::vector<std::pair<TypeId, TypeId>> edges;  // u -> t, sorted
  SccPartition scc;
  std::vector<bool> star;

  std::size_t size() const noexcept { return reps.size(); }
  std::vector<TypeId> star_types() const;
  std::vector<TypeId> bullet_types() const;

  std::optional<TypeId> find(const TypeFingerprint& fp) const;
  /// Type of a 231-avoider; throws if its fingerprint is not in the system.
  TypeId type_of(const Permutation& sigma) const;

  /// Called by the builder once fingerprints are final.
  void reindex();

 private:
  std::unordered_map<std::string, TypeId> index_;
};

struct TypeSystemOptions {
  std::size_t seed_size = 8;
  std::size_t max_seed_size = 12;  // retries grow seed_size by 2 up to this
  std::size_t iteration_cap = 64;
  FingerprintLimits limits;
};

/// Fingerprints Av_n(231) for n <= seed_size, then closes the type set
/// under composition. Ids are canonical: types sorted by minimal
/// representative (size, then lexicographic), so the empty type is 0.
/// Throws Error if the dependency graph has several terminal components.
TypeSystem build_type_system(std::size_t k, const TypeSystemOptions& options = {});

/// Dependency edges u -> t whenever H(u, v) = t or H(v, u) = t.
std::vector<std::pair<TypeId, TypeId>> dependency_edges(const std::vector<std::vector<TypeId>>& H);

struct StarBulletSplit {
  std::vector<TypeId> star;
  std::vector<TypeId> bullet;
  SccPartition scc;
};

/// Star = vertices of the unique terminal component. Throws Error if the
/// terminal component is not unique.
StarBulletSplit scc_partition(const TypeSystem& ts);

struct CompositionReport {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<std::string> examples;  // first few offending (tau, pi) pairs
  bool ok() const noexcept { return violations == 0; }
};

/// Random check: draws tau, pi uniformly from Av_s(231), s <= max_component_size,
/// and compares type(tau ⊕ (1 ⊖ pi)) with H(type tau, type pi).
CompositionReport verify_composition_lemma(const TypeSystem& ts, std::size_t trials, std::uint64_t seed,
                                           std::size_t max_component_size = 6);

/// Exhaustive check over `components`: whenever tau1 ≡k tau2 and pi1 ≡k pi2,
/// the compositions must be k-equivalent.
CompositionReport verify_composition_lemma_exhaustive(std::size_t k, std::span<const Permutation> components);

}  // namespace toto
