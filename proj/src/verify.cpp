#include "kmatch/verify.hpp"

#include "kmatch/alternating.hpp"
#include "kmatch/canon.hpp"
#include "kmatch/family.hpp"
#include "kmatch/matching.hpp"
#include "kmatch/reduction.hpp"

#include <algorithm>
#include <set>

namespace kmatch::verify {

void CheckResult::record(bool ok, const std::string& detail) {
  if (ok) {
    ++passed;
    return;
  }
  if (failed == 0) first_failure = detail;
  ++failed;
}

bool SuiteReport::ok() const { return failures() == 0; }

std::uint64_t SuiteReport::failures() const {
  std::uint64_t total = 0;
  for (const auto& c : checks) total += c.failed;
  return total;
}

Multigraph random_multigraph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  if (n < 2 && m > 0) throw GraphError("random_multigraph: edges need two vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n == 0 ? 0 : n - 1));
  while (edges.size() < m) {
    const Vertex a = pick(rng), b = pick(rng);
    if (a != b) edges.emplace_back(a, b);
  }
  return Multigraph(n, edges);
}

Multigraph random_matchable(std::mt19937_64& rng, std::size_t n, std::size_t layers,
                            std::size_t extra) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> order(n);
  for (std::size_t layer = 0; layer < layers; ++layer) {
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i + 1 < n; i += 2) edges.emplace_back(order[i], order[i + 1]);
  }
  auto noise = random_multigraph(rng, n, n >= 2 ? extra : 0);
  for (const Edge& e : noise.edges()) edges.emplace_back(e.u, e.v);
  return Multigraph(n, edges);
}

namespace {

CheckResult named_check(std::string name) {
  CheckResult c;
  c.name = std::move(name);
  return c;
}

std::vector<EdgeId> subdividable_edges(const Multigraph& g) {
  std::vector<EdgeId> out;
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) != 1 || g.degree(e.v) != 1) out.push_back(e.id);
  }
  return out;
}

std::string describe(const Multigraph& g) {
  std::string text = to_mg(g);
  std::replace(text.begin(), text.end(), '\n', ';');
  return text;
}

}  // namespace

SuiteReport lemma1_suite(const SuiteOptions& opt) {
  SuiteReport report;
  report.suite = "lemma1";
  report.k = opt.k;
  report.max_vertices = opt.max_vertices;
  CheckResult bounds = named_check("lemma1-bounds");
  CheckResult degree = named_check("max-degree-at-most-k");
  CheckResult edges_used = named_check("every-edge-in-a-matching");
  for (const auto& g : minimally_k_matchable_graphs(opt.k, opt.max_vertices)) {
    ++report.instances;
    const auto lemma = lemma1_bound_check(g, opt.k);
    bounds.record(lemma.holds, describe(g) + " " + lemma.reason);
    degree.record(g.max_degree() <= opt.k, describe(g));
    const auto total = count_matchings(g);
    bool all_used = true;
    for (const Edge& e : g.edges()) {
      if (count_matchings(delete_edge(g, e.id)) >= total) all_used = false;
    }
    edges_used.record(all_used, describe(g));
  }
  report.checks = {bounds, degree, edges_used};
  return report;
}

SuiteReport lemma2_suite(const SuiteOptions& opt) {
  SuiteReport report;
  report.suite = "lemma2";
  report.k = opt.k;
  report.max_vertices = opt.max_vertices;
  CheckResult counts = named_check("count-invariance");
  CheckResult minimal = named_check("augmented-minimally-k-matchable");
  CheckResult base = named_check("classify-recovers-base");
  CheckResult stripped = named_check("classify-counts-k2");

  // Start graphs: the base family, or a single K2 when it is empty (k = 1).
  std::vector<NamedGraph> starts = known_family(opt.k);
  const bool named = !starts.empty();
  std::size_t start_k2 = 0;
  if (starts.empty() && opt.k >= 2) {
    SearchConfig cfg;
    cfg.k = opt.k;
    cfg.max_vertices = std::min(opt.max_vertices, default_max_vertices(opt.k));
    cfg.max_vertices -= cfg.max_vertices % 2;
    for (const auto& m : search_family(cfg).members) {
      starts.push_back({"member-" + m.hash, m.graph});
    }
  }
  if (starts.empty()) {
    starts.push_back({"", graphs::k2()});
    start_k2 = 1;
  }

  std::mt19937_64 rng(opt.seed);
  for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
    ++report.instances;
    const auto& start = starts[std::uniform_int_distribution<std::size_t>(0, starts.size() - 1)(rng)];
    Multigraph g = start.graph;
    const auto expected = count_matchings(g);
    std::size_t added = 0;
    const auto ops = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int op = 0; op < ops; ++op) {
      // Subdividing the edge of a K2 component keeps the count but not
      // minimality, so only edges of the subdivided base are candidates.
      const auto candidates = subdividable_edges(g);
      if (std::uniform_int_distribution<int>(0, 2)(rng) == 0 || candidates.empty()) {
        g = add_k2(g);
        ++added;
      } else {
        const EdgeId e =
            candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
        const std::size_t extra = 2 * std::uniform_int_distribution<std::size_t>(1, 2)(rng);
        g = subdivide_edge(g, {e, extra});
      }
      counts.record(count_matchings(g) == expected, describe(g));
    }
    const auto cls = classify(g, opt.k);
    minimal.record(cls.verdict.is_minimal, describe(g));
    if (!cls.verdict.is_minimal) continue;
    const auto expected_form = canonical_form(start_k2 ? Multigraph() : start.graph);
    // Only the built-in families carry names classify can report.
    const bool name_ok = !named || cls.member_name == start.name;
    base.record(cls.base_form && cls.base_form->text == expected_form.text && name_ok,
                describe(g));
    stripped.record(cls.stripped_k2 == added + start_k2, describe(g));
  }
  report.checks = {counts, minimal, base, stripped};
  return report;
}

SuiteReport oracle_suite(const SuiteOptions& opt) {
  SuiteReport report;
  report.suite = "oracle";
  report.k = opt.k;
  report.max_vertices = opt.max_vertices;
  CheckResult exhaustive = named_check("all-multigraphs-n<=5-mult<=2");
  CheckResult random = named_check("random-multigraphs-m<=24");

  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    }
    std::vector<int> mult(pairs.size(), 0);
    while (true) {
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i) edges.insert(edges.end(), mult[i], pairs[i]);
      const Multigraph g(n, edges);
      ++report.instances;
      exhaustive.record(count_matchings(g) == brute_force_count(g), describe(g));
      std::size_t i = 0;
      while (i < mult.size() && mult[i] == 2) mult[i++] = 0;
      if (i == mult.size()) break;
      ++mult[i];
    }
  }

  std::mt19937_64 rng(opt.seed);
  for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
    ++report.instances;
    const auto n = std::uniform_int_distribution<std::size_t>(2, 10)(rng);
    const auto m = std::uniform_int_distribution<std::size_t>(0, kBruteForceMaxEdges)(rng);
    const auto g = random_multigraph(rng, n, m);
    random.record(count_matchings(g) == brute_force_count(g), describe(g));
  }
  report.checks = {exhaustive, random};
  return report;
}

namespace {

// Random (graph, m, n) with at least two perfect matchings when possible.
struct MatchingInstance {
  Multigraph g;
  std::vector<PerfectMatching> matchings;
};

MatchingInstance random_instance(std::mt19937_64& rng) {
  const auto n = 2 * std::uniform_int_distribution<std::size_t>(1, 6)(rng);
  const auto layers = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  const auto extra = std::uniform_int_distribution<std::size_t>(0, n)(rng);
  MatchingInstance inst{random_matchable(rng, n, layers, extra), {}};
  inst.matchings = enumerate_matchings(inst.g, 256).matchings;
  return inst;
}

bool vertex_disjoint(const std::vector<OrientedCycle>& cycles) {
  std::set<Vertex> seen;
  for (const auto& c : cycles) {
    for (auto v : c.vertices()) {
      if (!seen.insert(v).second) return false;
    }
  }
  return true;
}

// Checks a chord against its definition: odd n,m-alternating path meeting
// the cycle only at its ends.
bool chord_well_formed(const Multigraph& g, const OrientedCycle& c, const PerfectMatching& m,
                       const PerfectMatching& n, const Chord& chord) {
  if (chord.edges.size() % 2 != 1) return false;
  if (chord.vertices.size() != chord.edges.size() + 1) return false;
  if (chord.vertices.front() != chord.a || chord.vertices.back() != chord.b) return false;
  for (std::size_t i = 0; i < chord.edges.size(); ++i) {
    const bool want_n = i % 2 == 0;
    if (want_n ? !n.contains(chord.edges[i]) : !m.contains(chord.edges[i])) return false;
    const Edge& e = g.edge(chord.edges[i]);
    if (!e.touches(chord.vertices[i]) || e.other(chord.vertices[i]) != chord.vertices[i + 1]) {
      return false;
    }
    if (c.contains_edge(chord.edges[i])) return false;
  }
  for (std::size_t i = 1; i + 1 < chord.vertices.size(); ++i) {
    if (c.position(chord.vertices[i])) return false;
  }
  return c.position(chord.a) && c.position(chord.b);
}

ChordKind flipped(ChordKind kind) {
  if (kind == ChordKind::In) return ChordKind::Out;
  if (kind == ChordKind::Out) return ChordKind::In;
  return ChordKind::Odd;
}

// Spanning minimally k-matchable subgraph by repeatedly deleting the first
// deletable edge, scanning edge ids cyclically from `start`.
Multigraph greedy_minimal_subgraph(const Multigraph& g, unsigned k, EdgeId start) {
  Multigraph h = g;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<EdgeId> order;
    for (const Edge& e : h.edges()) order.push_back(e.id);
    std::rotate(order.begin(),
                std::lower_bound(order.begin(), order.end(), start), order.end());
    for (EdgeId id : order) {
      auto smaller = delete_edge(h, id);
      if (count_matchings(smaller, k) >= k) {
        h = std::move(smaller);
        changed = true;
        break;
      }
    }
  }
  return h;
}

}  // namespace

SuiteReport claims_suite(const SuiteOptions& opt) {
  SuiteReport report;
  report.suite = "claims";
  report.k = opt.k;
  report.max_vertices = opt.max_vertices;
  CheckResult involution = named_check("exchange-involution");
  CheckResult exchanged_perfect = named_check("exchange-yields-perfect-matching");
  CheckResult decomposition = named_check("symdiff-disjoint-even-alternating");
  CheckResult connects = named_check("symdiff-exchanges-map-m-to-n");
  CheckResult chord_shape = named_check("chords-well-formed");
  CheckResult chord_cover = named_check("chord-per-leaving-n-edge");
  CheckResult chord_flip = named_check("reversal-swaps-in-and-out");
  CheckResult chord_cross = named_check("crossing-symmetric");
  CheckResult claim1 = named_check("claim1-F-in-every-new-matching");
  CheckResult claim1_matching = named_check("claim1-F-is-a-matching");
  CheckResult subgraph_minimal = named_check("greedy-subgraph-minimal");

  std::mt19937_64 rng(opt.seed);
  for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
    ++report.instances;
    auto inst = random_instance(rng);
    const auto& ms = inst.matchings;
    if (ms.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
    const auto& m = ms[pick(rng)];
    const auto& n = ms[pick(rng)];
    const auto cycles = symdiff_decompose(inst.g, m, n);
    const std::string where = describe(inst.g);

    bool shape_ok = vertex_disjoint(cycles) && (cycles.empty() == (m == n));
    PerfectMatching walked = m;
    for (const auto& c : cycles) {
      shape_ok = shape_ok && c.length() % 2 == 0 && is_alternating_cycle(inst.g, m, c) &&
                 is_alternating_cycle(inst.g, n, c);
      if (!is_alternating_cycle(inst.g, m, c)) continue;
      const auto once = exchange(inst.g, m, c);
      exchanged_perfect.record(is_perfect_matching(inst.g, once) && once != m, where);
      involution.record(exchange(inst.g, once, c) == m, where);
      walked = exchange(inst.g, walked, c);
    }
    decomposition.record(shape_ok, where);
    connects.record(walked == n, where);

    // Chords of the first cycle with respect to a third matching.
    if (cycles.empty()) continue;
    const auto& c = cycles.front();
    const auto& third = ms[pick(rng)];
    std::vector<EdgeId> f;
    for (const Edge& e : inst.g.edges()) {
      if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) f.push_back(e.id);
    }
    const auto chords = find_chords(inst.g, c, m, third, f);
    std::size_t leaving = 0;
    for (std::size_t i = 0; i < c.length(); ++i) {
      const Vertex v = c.vertex(i);
      for (EdgeId id : third.edges) {
        if (inst.g.edge(id).touches(v) && !c.contains_edge(id)) ++leaving;
      }
    }
    chord_cover.record(2 * chords.size() == leaving, where);
    for (const auto& chord : chords) {
      const bool external =
          std::any_of(chord.edges.begin(), chord.edges.end(),
                      [&](EdgeId id) { return std::find(f.begin(), f.end(), id) != f.end(); });
      chord_shape.record(chord_well_formed(inst.g, c, m, third, chord) && external == chord.external,
                         where);
    }
    const auto reversed = find_chords(inst.g, c.reversed(), m, third, f);
    bool flip_ok = reversed.size() == chords.size();
    for (const auto& chord : chords) {
      auto match = std::find_if(reversed.begin(), reversed.end(), [&](const Chord& r) {
        return std::minmax(r.a, r.b) == std::minmax(chord.a, chord.b) && r.edges.size() == chord.edges.size();
      });
      flip_ok = flip_ok && match != reversed.end() && match->kind == flipped(chord.kind);
    }
    chord_flip.record(flip_ok, where);
    for (const auto& p : chords) {
      for (const auto& q : chords) {
        chord_cross.record(chords_cross(c, p, q) == chords_cross(c, q, p) &&
                               chords_cross(c, p, q) == chords_cross(c.reversed(), p, q),
                           where);
      }
    }
  }

  if (opt.k >= 2) {
    const unsigned smaller = opt.k - 1;
    for (const auto& g : minimally_k_matchable_graphs(opt.k, opt.max_vertices)) {
      ++report.instances;
      // One greedy run per starting edge; distinct results are all checked.
      std::set<std::vector<EdgeId>> seen;
      for (const Edge& first : g.edges()) {
        const auto h = greedy_minimal_subgraph(g, smaller, first.id);
        std::vector<EdgeId> f;
        for (const Edge& e : g.edges()) {
          if (!h.has_edge(e.id)) f.push_back(e.id);
        }
        if (!seen.insert(f).second) continue;
        subgraph_minimal.record(is_minimally_k_matchable(h, smaller).is_minimal, describe(g));
        std::set<Vertex> ends;
        bool is_matching = true;
        for (EdgeId id : f) {
          const Edge& e = g.edge(id);
          is_matching = is_matching && ends.insert(e.u).second && ends.insert(e.v).second;
        }
        claim1_matching.record(is_matching, describe(g));
        for (const auto& nm : enumerate_matchings(g).matchings) {
          const bool outside_h =
              std::any_of(f.begin(), f.end(), [&](EdgeId id) { return nm.contains(id); });
          if (!outside_h) continue;
          const bool all_f =
              std::all_of(f.begin(), f.end(), [&](EdgeId id) { return nm.contains(id); });
          claim1.record(all_f, describe(g));
        }
      }
    }
  }
  report.checks = {involution, exchanged_perfect, decomposition, connects, chord_shape, chord_cover,
                   chord_flip, chord_cross, claim1, claim1_matching, subgraph_minimal};
  return report;
}

}  // namespace kmatch::verify
