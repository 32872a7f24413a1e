#pragma once

#include "kmatch/multigraph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace kmatch {

/// A perfect matching, stored as sorted edge ids.
struct PerfectMatching {
  std::vector<EdgeId> edges;

  bool contains(EdgeId e) const;

  friend auto operator<=>(const PerfectMatching&, const PerfectMatching&) = default;
};

/// True iff `m` consists of edges of g covering every vertex exactly once.
bool is_perfect_matching(const Multigraph& g, const PerfectMatching& m);

struct MatchingSet {
  std::vector<PerfectMatching> matchings;
  /// False when the enumeration stopped at the requested limit.
  bool exhaustive = true;
};

/// Calls `visit` for each perfect matching in the deterministic search order
/// (branch on the lowest unmatched vertex, incident edges in id order). The
/// visitor receives edge ids in the order they were chosen and returns false
/// to stop. Graphs with an odd component are rejected without search.
void for_each_matching(const Multigraph& g,
                       const std::function<bool(const std::vector<EdgeId>&)>& visit);

MatchingSet enumerate_matchings(const Multigraph& g,
                                std::optional<std::size_t> limit = std::nullopt);

/// |M(g)|, or min(|M(g)|, cap) when a cap is given.
std::uint64_t count_matchings(const Multigraph& g,
                              std::optional<std::uint64_t> cap = std::nullopt);

/// Largest edge count accepted by brute_force_count.
inline constexpr std::size_t kBruteForceMaxEdges = 24;

/// Counts edge subsets that are perfect matchings by direct enumeration.
/// Shares no code with the backtracking search; used as its oracle.
std::uint64_t brute_force_count(const Multigraph& g);

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MinimalityVerdict {
  bool is_k_matchable = false;
  bool is_minimal = false;
  /// Lowest-id edge whose deletion keeps the graph k-matchable.
  std::optional<EdgeId> witness_edge;
  /// |M(g)| capped at 2k-1.
  std::uint64_t count = 0;
  bool count_capped = false;
};

MinimalityVerdict is_minimally_k_matchable(const Multigraph& g, unsigned k);

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Lemma1Report {
  bool holds = true;
  std::optional<Vertex> violating_vertex;
  /// Empty when the bounds hold.
  std::string reason;
  std::uint64_t count = 0;
  std::size_t max_degree = 0;
};

/// Checks the per-vertex bound |M| <= d/(d-1) (k-1), the degree bound
/// Delta <= k and |M| <= 2k-2 on a graph already known to be minimally
/// k-matchable. Throws PreconditionError if it is not.
Lemma1Report lemma1_bound_check(const Multigraph& g, unsigned k);

}  // namespace kmatch
