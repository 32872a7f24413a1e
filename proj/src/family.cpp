#include "kmatch/family.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

namespace kmatch {

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  generated += o.generated;
  rejected_noncanonical += o.rejected_noncanonical;
  pruned_degree += o.pruned_degree;
  pruned_multiplicity += o.pruned_multiplicity;
  k_matchable_leaves += o.k_matchable_leaves;
  rejected_lemma1 += o.rejected_lemma1;
  rejected_k2_component += o.rejected_k2_component;
  rejected_reducible += o.rejected_reducible;
  rejected_not_minimal += o.rejected_not_minimal;
  return *this;
}

std::size_t default_max_vertices(unsigned k) {
  if (k <= 3) return 6;
  if (k == 4) return 10;
  return 8;
}

namespace {

struct Node {
  Multigraph graph;
  std::string text;  // canonical text
};

// Shared abort state for one generation run.
struct RunControl {
  std::atomic<std::uint64_t> generated{0};
  std::uint64_t limit = static_cast<std::uint64_t>(-1);
  std::atomic<bool> stop{false};
};

class Augmenter {
 public:
  using Visit = std::function<bool(const Multigraph&)>;

  Augmenter(const GenerationLimits& limits, const Visit& visit, SearchStats& stats,
            RunControl& control)
      : limits_(limits), visit_(visit), stats_(stats), control_(control) {}

  // Visits `node` and, if the visitor asks for it, its subtree. With a split
  // depth, descendants with that many edges are collected instead of visited.
  void explore(const Node& node, std::optional<std::size_t> split = std::nullopt,
               std::vector<Node>* frontier = nullptr) {
    if (visit_(node.graph)) expand(node, split, frontier);
  }

  void expand(const Node& node, std::optional<std::size_t> split, std::vector<Node>* frontier) {
    for (auto& child : children(node)) {
      if (control_.stop.load(std::memory_order_relaxed)) return;
      if (split && child.graph.edge_count() == *split) {
        frontier->push_back(std::move(child));
      } else {
        explore(child, split, frontier);
      }
    }
  }

 private:
  std::vector<Node> children(const Node& node) {
    const Multigraph& g = node.graph;
    const auto n = static_cast<Vertex>(g.vertex_count());
    std::vector<Node> out;
    std::unordered_set<std::string> seen;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (g.multiplicity(a, b) >= limits_.max_multiplicity) {
          ++stats_.pruned_multiplicity;
          continue;
        }
        if (g.degree(a) >= limits_.max_degree || g.degree(b) >= limits_.max_degree) {
          ++stats_.pruned_degree;
          continue;
        }
        Multigraph child = g.with_edge(a, b);
        auto labeling = canonical_labeling(child);
        if (!seen.insert(labeling.form.text).second) {
          ++stats_.rejected_noncanonical;
          continue;
        }
        if (!has_canonical_parent(child, labeling, a, b, node.text)) {
          ++stats_.rejected_noncanonical;
          continue;
        }
        ++stats_.generated;
        if (control_.generated.fetch_add(1, std::memory_order_relaxed) + 1 > control_.limit) {
          control_.stop = true;
          throw ResourceGuardError("generated-graph limit of " + std::to_string(control_.limit) +
                                       " exceeded",
                                   stats_);
        }
        out.push_back(Node{std::move(child), std::move(labeling.form.text)});
      }
    }
    return out;
  }

  // The canonical deletion edge is the last edge of the canonical form.
  static bool has_canonical_parent(const Multigraph& child, const CanonicalLabeling& labeling,
                                   Vertex a, Vertex b, const std::string& parent_text) {
    const auto n = child.vertex_count();
    std::vector<Vertex> vertex_of(n);
    for (Vertex v = 0; v < n; ++v) vertex_of[labeling.label[v]] = v;
    // Last line of the canonical text holds the largest pair.
    Vertex p = 0, q = 0;
    for (const Edge& e : child.edges()) {
      const Vertex lu = std::min(labeling.label[e.u], labeling.label[e.v]);
      const Vertex lv = std::max(labeling.label[e.u], labeling.label[e.v]);
      if (std::tie(lu, lv) > std::tie(p, q)) std::tie(p, q) = std::tie(lu, lv);
    }
    const Vertex x = std::min(vertex_of[p], vertex_of[q]);
    const Vertex y = std::max(vertex_of[p], vertex_of[q]);
    if (x == a && y == b) return true;
    EdgeId last = 0;
    for (const Edge& e : child.edges()) {
      if (e.u == x && e.v == y) last = e.id;
    }
    return canonical_form(delete_edge(child, last)).text == parent_text;
  }

  const GenerationLimits& limits_;
  const Visit& visit_;
  SearchStats& stats_;
  RunControl& control_;
};

Node root_node(std::size_t n) {
  Multigraph g(n);
  auto text = canonical_form(g).text;
  return Node{std::move(g), std::move(text)};
}

}  // namespace

void generate_multigraphs(const GenerationLimits& limits,
                          const std::function<bool(const Multigraph&)>& visit) {
  SearchStats stats;
  RunControl control;
  Augmenter augmenter(limits, visit, stats, control);
  augmenter.explore(root_node(limits.vertex_count));
}

namespace {

struct WorkerResult {
  SearchStats stats;
  std::vector<FamilyMember> members;
};

// Per-graph filter for the family search; returns whether to extend.
bool family_visit(const Multigraph& g, unsigned k, WorkerResult& out) {
  const std::uint64_t cap = 2 * std::uint64_t{k} - 1;
  const auto count = count_matchings(g, cap);
  if (count < k) return true;
  auto& stats = out.stats;
  ++stats.k_matchable_leaves;
  if (count > 2 * std::uint64_t{k} - 2 && g.min_degree() >= 2) {
    ++stats.rejected_lemma1;
    return false;
  }
  if (!k2_components(g).empty()) {
    ++stats.rejected_k2_component;
    return false;
  }
  if (!is_irreducible(g)) {
    ++stats.rejected_reducible;
    return false;
  }
  auto verdict = is_minimally_k_matchable(g, k);
  if (!verdict.is_minimal) {
    ++stats.rejected_not_minimal;
    return false;
  }
  FamilyMember member;
  member.form = canonical_form(g);
  member.graph = parse_graph(member.form.text);
  member.hash = short_hash(member.form);
  member.matching_count = count_matchings(g);
  member.certificate = verdict;
  out.members.push_back(std::move(member));
  return false;
}

void search_vertex_count(const SearchConfig& cfg, std::size_t n, std::size_t max_mult,
                         RunControl& control, FamilyReport& report) {
  GenerationLimits limits{n, max_mult, cfg.k};
  const unsigned workers = std::max(1u, cfg.worker_count);

  if (workers == 1) {
    WorkerResult result;
    std::function<bool(const Multigraph&)> visit = [&](const Multigraph& g) {
      return family_visit(g, cfg.k, result);
    };
    Augmenter augmenter(limits, visit, result.stats, control);
    augmenter.explore(root_node(n));
    report.stats += result.stats;
    for (auto& m : result.members) report.members.push_back(std::move(m));
    return;
  }

  // Split the augmentation tree at a fixed edge depth; subtrees below it are
  // independent.
  const std::size_t split_depth = 3;
  WorkerResult head;
  std::vector<Node> frontier;
  {
    std::function<bool(const Multigraph&)> visit = [&](const Multigraph& g) {
      return family_visit(g, cfg.k, head);
    };
    Augmenter augmenter(limits, visit, head.stats, control);
    augmenter.explore(root_node(n), split_depth, &frontier);
  }

  std::vector<WorkerResult> results(workers);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      auto& result = results[w];
      std::function<bool(const Multigraph&)> visit = [&](const Multigraph& g) {
        return family_visit(g, cfg.k, result);
      };
      Augmenter augmenter(limits, visit, result.stats, control);
      try {
        for (std::size_t i = next++; i < frontier.size(); i = next++) {
          if (control.stop) break;
          augmenter.explore(frontier[i]);
        }
      } catch (...) {
        control.stop = true;
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  report.stats += head.stats;
  for (auto& m : head.members) report.members.push_back(std::move(m));
  for (auto& r : results) {
    report.stats += r.stats;
    for (auto& m : r.members) report.members.push_back(std::move(m));
  }
}

}  // namespace

FamilyReport search_family(const SearchConfig& cfg) {
  if (cfg.k == 0) throw DomainError("k must be positive");
  if (cfg.max_vertices % 2 != 0 || cfg.max_vertices == 0) {
    throw DomainError("max_vertices must be a positive even number");
  }
  if (cfg.max_vertices > kCanonMaxVertices) {
    throw DomainError("max_vertices exceeds the canonical labeling limit");
  }
  const std::size_t max_mult = cfg.max_multiplicity.value_or(cfg.k);
  if (max_mult == 0 || max_mult > cfg.k) {
    throw DomainError("max_multiplicity must lie in 1..k");
  }

  FamilyReport report;
  report.k = cfg.k;
  report.max_vertices = cfg.max_vertices;
  report.max_multiplicity = max_mult;
  RunControl control;
  control.limit = cfg.node_limit;
  SearchStats so_far;
  for (std::size_t n = 2; n <= cfg.max_vertices; n += 2) {
    try {
      search_vertex_count(cfg, n, max_mult, control, report);
    } catch (const ResourceGuardError& e) {
      SearchStats partial = report.stats;
      partial += e.partial_stats();
      throw ResourceGuardError(e.what(), partial);
    }
  }
  std::sort(report.members.begin(), report.members.end(),
            [](const FamilyMember& a, const FamilyMember& b) { return a.form.text < b.form.text; });
  return report;
}

namespace {

using Pair = std::pair<Vertex, Vertex>;
using PairMatching = std::vector<Pair>;

void all_pair_matchings(std::vector<Vertex>& free, PairMatching& current,
                        std::vector<PairMatching>& out) {
  if (free.empty()) {
    PairMatching sorted = current;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
    return;
  }
  const Vertex first = free.front();
  for (std::size_t i = 1; i < free.size(); ++i) {
    const Vertex partner = free[i];
    std::vector<Vertex> rest;
    for (std::size_t j = 1; j < free.size(); ++j) {
      if (j != i) rest.push_back(free[j]);
    }
    current.emplace_back(first, partner);
    all_pair_matchings(rest, current, out);
    current.pop_back();
  }
}

void partitions(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& current,
                std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

// One representative per orbit of perfect matchings under the stabilizer of
// {01, 23, ...}: the union with it is a disjoint union of double edges and
// alternating cycles, determined by a partition of n/2.
std::vector<PairMatching> second_matching_representatives(std::size_t n) {
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> current;
  partitions(n / 2, n / 2, current, parts);
  std::vector<PairMatching> out;
  for (const auto& partition : parts) {
    PairMatching m;
    Vertex offset = 0;
    for (auto part : partition) {
      const auto len = static_cast<Vertex>(2 * part);
      if (part == 1) {
        m.emplace_back(offset, offset + 1);
      } else {
        for (Vertex i = 1; i + 1 < len; i += 2) m.emplace_back(offset + i, offset + i + 1);
        m.emplace_back(offset, offset + len - 1);
      }
      offset += len;
    }
    std::sort(m.begin(), m.end());
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::vector<Multigraph> minimally_k_matchable_graphs(unsigned k, std::size_t max_vertices) {
  if (k == 0) throw DomainError("k must be positive");
  std::map<std::string, Multigraph> found;
  for (std::size_t n = 2; n <= max_vertices; n += 2) {
    std::vector<Vertex> free(n);
    for (Vertex v = 0; v < n; ++v) free[v] = v;
    std::vector<PairMatching> all;
    PairMatching scratch;
    all_pair_matchings(free, scratch, all);
    PairMatching first;
    for (Vertex v = 0; v < n; v += 2) first.emplace_back(v, v + 1);

    auto consider = [&](const std::vector<const PairMatching*>& chosen) {
      std::map<Pair, std::size_t> uses;
      for (const auto* m : chosen) {
        for (const auto& p : *m) ++uses[p];
      }
      std::vector<std::pair<Pair, std::size_t>> pairs(uses.begin(), uses.end());
      std::vector<std::size_t> mult(pairs.size(), 1);
      // Every multiplicity vector with 1 <= mult[i] <= uses[i].
      while (true) {
        std::vector<Pair> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          edges.insert(edges.end(), mult[i], pairs[i].first);
        }
        Multigraph g(n, edges);
        if (is_minimally_k_matchable(g, k).is_minimal) {
          auto form = canonical_form(g);
          if (!found.count(form.text)) found.emplace(form.text, parse_graph(form.text));
        }
        std::size_t i = 0;
        while (i < pairs.size() && mult[i] == pairs[i].second) mult[i++] = 1;
        if (i == pairs.size()) break;
        ++mult[i];
      }
    };

    if (k == 1) {
      consider({&first});
      continue;
    }
    for (const auto& second : second_matching_representatives(n)) {
      // The remaining k-2 matchings as a nondecreasing index sequence.
      std::vector<std::size_t> idx(k - 2, 0);
      while (true) {
        std::vector<const PairMatching*> chosen{&first, &second};
        for (auto i : idx) chosen.push_back(&all[i]);
        consider(chosen);
        if (idx.empty()) break;
        std::size_t pos = idx.size();
        while (pos > 0 && idx[pos - 1] == all.size() - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < idx.size(); ++j) idx[j] = idx[pos - 1];
      }
    }
  }
  std::vector<Multigraph> out;
  out.reserve(found.size());
  for (auto& [text, g] : found) out.push_back(std::move(g));
  return out;
}

BoundResult theorem1_bound(unsigned k, const std::vector<Multigraph>& family) {
  BoundResult result;
  if (k < 2) {
    result.note = "not applicable: log2(k-1) is undefined for k < 2";
    return result;
  }
  if (family.empty()) {
    result.note = "not applicable: empty family";
    return result;
  }
  const double per_edge = 6.0 * std::log2(static_cast<double>(k - 1)) + 12.0;
  const double tail = 2.0 * std::log2(static_cast<double>(k)) + 2.0;
  double best = 0.0;
  for (const auto& h : family) {
    const double value = static_cast<double>(h.vertex_count()) +
                         per_edge * static_cast<double>(h.edge_count()) + tail;
    best = std::max(best, value);
  }
  result.exact = best;
  result.value = static_cast<std::uint64_t>(std::ceil(best));
  return result;
}

BoundResult theorem1_bound(unsigned k, const FamilyReport& family) {
  std::vector<Multigraph> graphs;
  for (const auto& m : family.members) graphs.push_back(m.graph);
  return theorem1_bound(k, graphs);
}

std::vector<NamedGraph> known_family(unsigned k) {
  if (k == 2) return {{"C2", graphs::bundle(2)}};
  if (k == 3) {
    return {{"two-2-cycles", disjoint_union(graphs::bundle(2), graphs::bundle(2))},
            {"theta", graphs::theta()},
            {"K4", graphs::complete(4)}};
  }
  return {};
}

Classification classify(const Multigraph& g, unsigned k, const FamilyReport* family) {
  Classification out;
  out.k = k;
  out.verdict = is_minimally_k_matchable(g, k);
  if (!out.verdict.is_minimal) return out;
  out.trace = reduce(g);
  out.stripped_k2 = out.trace->stripped_k2;
  const Multigraph& base = out.trace->base;
  if (base.vertex_count() > kCanonMaxVertices) return out;
  out.base_form = canonical_form(base);
  for (const auto& named : known_family(k)) {
    if (canonical_form(named.graph).text == out.base_form->text) {
      out.member_name = named.name;
      return out;
    }
  }
  if (family != nullptr && family->k == k) {
    for (const auto& m : family->members) {
      if (m.form.text == out.base_form->text) {
        out.member_name = "member-" + m.hash;
        break;
      }
    }
  }
  return out;
}

}  // namespace kmatch
