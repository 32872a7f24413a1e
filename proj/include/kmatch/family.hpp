#pragma once

#include "kmatch/canon.hpp"
#include "kmatch/matching.hpp"
#include "kmatch/multigraph.hpp"
#include "kmatch/reduction.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kmatch {

/// Bounds for isomorph-free multigraph generation on a fixed vertex count.
struct GenerationLimits {
  std::size_t vertex_count = 0;
  std::size_t max_multiplicity = 1;
  std::size_t max_degree = static_cast<std::size_t>(-1);
};

/// Enumerates every multigraph on limits.vertex_count vertices within the
/// multiplicity and degree caps exactly once up to isomorphism, by canonical
/// augmentation: a child G + e is kept iff deleting the last edge of its
/// canonical form yields a graph isomorphic to G. `visit` returns whether to
/// extend the graph further; declining is only sound for properties inherited
/// by every supergraph.
void generate_multigraphs(const GenerationLimits& limits,
                          const std::function<bool(const Multigraph&)>& visit);

struct SearchConfig {
  unsigned k = 1;
  std::size_t max_vertices = 6;
  /// Defaults to k.
  std::optional<std::size_t> max_multiplicity;
  unsigned worker_count = 1;
  /// Abort once this many graphs have been generated.
  std::uint64_t node_limit = 50'000'000;
};

/// Default max_vertices: 6 for k <= 3, 10 for k = 4, 8 otherwise.
std::size_t default_max_vertices(unsigned k);

struct SearchStats {
  std::uint64_t generated = 0;
  /// Children whose canonical parent is a different graph.
  std::uint64_t rejected_noncanonical = 0;
  /// Augmentations skipped by the degree cap Delta <= k.
  std::uint64_t pruned_degree = 0;
  /// Augmentations skipped by the multiplicity cap.
  std::uint64_t pruned_multiplicity = 0;
  /// Graphs with at least k matchings: not extended, since no proper
  /// supergraph can be minimally k-matchable.
  std::uint64_t k_matchable_leaves = 0;
  /// Leaves with more than 2k-2 matchings and minimum degree >= 2.
  std::uint64_t rejected_lemma1 = 0;
  std::uint64_t rejected_k2_component = 0;
  std::uint64_t rejected_reducible = 0;
  std::uint64_t rejected_not_minimal = 0;

  SearchStats& operator+=(const SearchStats& other);
  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct FamilyMember {
  CanonicalForm form;
  Multigraph graph;  // canonical representative
  std::string hash;
  std::uint64_t matching_count = 0;
  MinimalityVerdict certificate;
};

struct FamilyReport {
  unsigned k = 1;
  std::size_t max_vertices = 0;
  std::size_t max_multiplicity = 0;
  std::vector<FamilyMember> members;  // sorted by canonical text
  SearchStats stats;
};

class ResourceGuardError : public std::runtime_error {
 public:
  ResourceGuardError(const std::string& what, SearchStats partial)
      : std::runtime_error(what), partial_(partial) {}
  const SearchStats& partial_stats() const noexcept { return partial_; }

 private:
  SearchStats partial_;
};

/// Irreducible, K2-component-free, minimally k-matchable multigraphs with at
/// most cfg.max_vertices vertices, up to isomorphism. The empty graph is not
/// a member.
FamilyReport search_family(const SearchConfig& cfg);

/// Every minimally k-matchable multigraph with at most max_vertices vertices,
/// up to isomorphism, as canonical representatives sorted by canonical text.
/// Built from the fact that such a graph is the union of any k of its perfect
/// matchings: candidates are unions of k perfect matchings of the complete
/// graph (the first fixed, the second up to the first's stabilizer) with
/// every admissible edge multiplicity, filtered by the minimality test.
std::vector<Multigraph> minimally_k_matchable_graphs(unsigned k, std::size_t max_vertices);

struct BoundResult {
  /// Ceiling of the bound; absent when not applicable.
  std::optional<std::uint64_t> value;
  double exact = 0.0;
  std::string note;
};

/// max over members H' of |V(H')| + (6 log2(k-1) + 12) |E(H')| + 2 log2(k) + 2.
/// Not applicable for k < 2 or an empty family.
BoundResult theorem1_bound(unsigned k, const std::vector<Multigraph>& family);
BoundResult theorem1_bound(unsigned k, const FamilyReport& family);

struct NamedGraph {
  std::string name;
  Multigraph graph;
};

/// Known base families for small k: k = 2 gives C2; k = 3 gives the two
/// 2-cycles, theta and K4. Empty for other k.
std::vector<NamedGraph> known_family(unsigned k);

struct Classification {
  unsigned k = 1;
  MinimalityVerdict verdict;
  /// Present when the graph is minimally k-matchable.
  std::optional<ReductionTrace> trace;
  std::optional<CanonicalForm> base_form;
  std::size_t stripped_k2 = 0;
  /// Name of the known family member the base is isomorphic to.
  std::optional<std::string> member_name;
};

/// `family` supplies names for k without a built-in table (members are
/// named "member-<hash>").
Classification classify(const Multigraph& g, unsigned k, const FamilyReport* family = nullptr);

}  // namespace kmatch
