#include "kmatch/matching.hpp"

#include <algorithm>
#include <bit>

namespace kmatch {

bool PerfectMatching::contains(EdgeId e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

bool is_perfect_matching(const Multigraph& g, const PerfectMatching& m) {
  std::vector<char> covered(g.vertex_count(), 0);
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    if (i > 0 && m.edges[i] == m.edges[i - 1]) return false;
    if (!g.has_edge(m.edges[i])) return false;
    const Edge& e = g.edge(m.edges[i]);
    if (covered[e.u] || covered[e.v]) return false;
    covered[e.u] = covered[e.v] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

namespace {

bool has_odd_component(const Multigraph& g) {
  const auto comp = component_index(g);
  std::vector<std::size_t> size(g.vertex_count(), 0);
  for (auto c : comp) ++size[c];
  return std::any_of(size.begin(), size.end(), [](std::size_t s) { return s % 2 == 1; });
}

// Vertex-ordered backtracking. `visit` returns false to abort the search.
template <class Visit>
class MatchingSearch {
 public:
  MatchingSearch(const Multigraph& g, Visit& visit)
      : g_(g), visit_(visit), matched_(g.vertex_count(), 0) {
    chosen_.reserve(g.vertex_count() / 2);
  }

  void run() {
    if (has_odd_component(g_)) return;
    descend(0);
  }

 private:
  bool descend(Vertex from) {
    Vertex v = from;
    const auto n = static_cast<Vertex>(g_.vertex_count());
    while (v < n && matched_[v]) ++v;
    if (v == n) return visit_(static_cast<const std::vector<EdgeId>&>(chosen_));
    matched_[v] = 1;
    for (auto pos : g_.incident(v)) {
      const Edge& e = g_.edges()[pos];
      const Vertex w = e.other(v);
      if (matched_[w]) continue;
      matched_[w] = 1;
      chosen_.push_back(e.id);
      const bool go_on = descend(v + 1);
      chosen_.pop_back();
      matched_[w] = 0;
      if (!go_on) {
        matched_[v] = 0;
        return false;
      }
    }
    matched_[v] = 0;
    return true;
  }

  const Multigraph& g_;
  Visit& visit_;
  std::vector<char> matched_;
  std::vector<EdgeId> chosen_;
};

template <class Visit>
void search_matchings(const Multigraph& g, Visit&& visit) {
  MatchingSearch<std::remove_reference_t<Visit>> search(g, visit);
  search.run();
}

}  // namespace

void for_each_matching(const Multigraph& g,
                       const std::function<bool(const std::vector<EdgeId>&)>& visit) {
  search_matchings(g, [&](const std::vector<EdgeId>& ids) { return visit(ids); });
}

MatchingSet enumerate_matchings(const Multigraph& g, std::optional<std::size_t> limit) {
  MatchingSet out;
  search_matchings(g, [&](const std::vector<EdgeId>& ids) {
    if (limit && out.matchings.size() == *limit) {
      out.exhaustive = false;
      return false;
    }
    PerfectMatching m{ids};
    std::sort(m.edges.begin(), m.edges.end());
    out.matchings.push_back(std::move(m));
    return true;
  });
  return out;
}

std::uint64_t count_matchings(const Multigraph& g, std::optional<std::uint64_t> cap) {
  if (cap && *cap == 0) return 0;
  std::uint64_t count = 0;
  search_matchings(g, [&](const std::vector<EdgeId>&) {
    ++count;
    return !(cap && count >= *cap);
  });
  return count;
}

std::uint64_t brute_force_count(const Multigraph& g) {
  const auto m = g.edge_count();
  const auto n = g.vertex_count();
  if (m > kBruteForceMaxEdges) {
    throw DomainError("brute_force_count: " + std::to_string(m) + " edges exceeds the limit of " +
                      std::to_string(kBruteForceMaxEdges));
  }
  if (n > 64) throw DomainError("brute_force_count: more than 64 vertices");
  // A perfect matching has exactly n/2 edges, so only subsets of that size
  // can qualify; an odd vertex count admits none.
  if (n % 2 == 1) return 0;
  const auto size = n / 2;
  if (size > m) return 0;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> mask(m);
  for (std::size_t i = 0; i < m; ++i) {
    mask[i] = (std::uint64_t{1} << g.edges()[i].u) | (std::uint64_t{1} << g.edges()[i].v);
  }
  if (size == 0) return 1;

  std::uint64_t count = 0;
  // Gosper's hack over all m-bit subsets with `size` bits set.
  std::uint64_t subset = (std::uint64_t{1} << size) - 1;
  const std::uint64_t end = std::uint64_t{1} << m;
  while (subset < end) {
    std::uint64_t covered = 0;
    bool disjoint = true;
    for (std::uint64_t bits = subset; bits != 0; bits &= bits - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(bits));
      if (covered & mask[i]) {
        disjoint = false;
        break;
      }
      covered |= mask[i];
    }
    if (disjoint && covered == all) ++count;
    const std::uint64_t low = subset & (~subset + 1);
    const std::uint64_t ripple = subset + low;
    subset = (((ripple ^ subset) >> 2) / low) | ripple;
  }
  return count;
}

MinimalityVerdict is_minimally_k_matchable(const Multigraph& g, unsigned k) {
  if (k == 0) throw DomainError("k must be positive");
  MinimalityVerdict verdict;
  const std::uint64_t cap = 2 * std::uint64_t{k} - 1;
  verdict.count = count_matchings(g, cap);
  verdict.count_capped = verdict.count >= cap;
  verdict.is_k_matchable = verdict.count >= k;
  if (!verdict.is_k_matchable) return verdict;
  for (const Edge& e : g.edges()) {
    if (count_matchings(delete_edge(g, e.id), k) >= k) {
      verdict.witness_edge = e.id;
      return verdict;
    }
  }
  verdict.is_minimal = true;
  return verdict;
}

Lemma1Report lemma1_bound_check(const Multigraph& g, unsigned k) {
  const auto verdict = is_minimally_k_matchable(g, k);
  if (!verdict.is_minimal) {
    throw PreconditionError("lemma1_bound_check: graph is not minimally " + std::to_string(k) +
                            "-matchable");
  }
  Lemma1Report report;
  report.count = count_matchings(g);
  report.max_degree = g.max_degree();
  const std::uint64_t s = report.count;
  bool has_degree_two = false;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    const std::uint64_t d = g.degree(x);
    if (d > k) {
      report.holds = false;
      report.violating_vertex = x;
      report.reason = "degree " + std::to_string(d) + " exceeds k=" + std::to_string(k);
      return report;
    }
    if (d < 2) continue;
    has_degree_two = true;
    // |M| <= d/(d-1) (k-1), cleared of denominators.
    if (s * (d - 1) > d * (k - 1)) {
      report.holds = false;
      report.violating_vertex = x;
      report.reason = "|M|=" + std::to_string(s) + " exceeds d/(d-1)(k-1) at degree " +
                      std::to_string(d);
      return report;
    }
  }
  if (has_degree_two && s > 2 * std::uint64_t{k} - 2) {
    report.holds = false;
    report.reason = "|M|=" + std::to_string(s) + " exceeds 2k-2";
  }
  return report;
}

}  // namespace kmatch
