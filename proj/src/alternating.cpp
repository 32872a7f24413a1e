#include "kmatch/alternating.hpp"

#include <algorithm>
#include <iterator>

namespace kmatch {

OrientedCycle::OrientedCycle(std::vector<Vertex> vertices, std::vector<EdgeId> edges) {
  if (vertices.size() != edges.size()) {
    throw GraphError("cycle needs as many edges as vertices");
  }
  if (vertices.size() < 2) throw GraphError("cycle needs length >= 2");
  auto data = std::make_shared<Data>();
  data->vertices = std::move(vertices);
  data->edges = std::move(edges);
  for (std::size_t i = 0; i < data->vertices.size(); ++i) {
    data->position.emplace_back(data->vertices[i], i);
  }
  std::sort(data->position.begin(), data->position.end());
  data->sorted_edges = data->edges;
  std::sort(data->sorted_edges.begin(), data->sorted_edges.end());
  data_ = std::move(data);
}

Vertex OrientedCycle::vertex(std::size_t i) const {
  const auto len = length();
  i %= len;
  return reversed_ ? data_->vertices[(len - i) % len] : data_->vertices[i];
}

EdgeId OrientedCycle::edge(std::size_t i) const {
  const auto len = length();
  i %= len;
  return reversed_ ? data_->edges[len - 1 - i] : data_->edges[i];
}

std::vector<Vertex> OrientedCycle::vertices() const {
  std::vector<Vertex> out(length());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = vertex(i);
  return out;
}

std::vector<EdgeId> OrientedCycle::edges() const {
  std::vector<EdgeId> out(length());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = edge(i);
  return out;
}

std::optional<std::size_t> OrientedCycle::position(Vertex v) const {
  const auto& pos = data_->position;
  auto it = std::lower_bound(pos.begin(), pos.end(), std::make_pair(v, std::size_t{0}));
  if (it == pos.end() || it->first != v) return std::nullopt;
  const auto len = length();
  return reversed_ ? (len - it->second) % len : it->second;
}

bool OrientedCycle::contains_edge(EdgeId e) const {
  return std::binary_search(data_->sorted_edges.begin(), data_->sorted_edges.end(), e);
}

OrientedCycle OrientedCycle::reversed() const { return OrientedCycle(data_, !reversed_); }

std::vector<Vertex> OrientedCycle::segment(Vertex a, Vertex b) const {
  const auto pa = position(a), pb = position(b);
  if (!pa || !pb) throw GraphError("segment endpoint not on cycle");
  std::vector<Vertex> out;
  for (std::size_t i = *pa;; ++i) {
    out.push_back(vertex(i));
    if (i % length() == *pb) break;
  }
  return out;
}

void OrientedCycle::validate(const Multigraph& g) const {
  const auto& pos = data_->position;
  for (std::size_t i = 1; i < pos.size(); ++i) {
    if (pos[i].first == pos[i - 1].first) throw GraphError("cycle repeats a vertex");
  }
  const auto& ids = data_->sorted_edges;
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw GraphError("cycle repeats an edge");
  }
  for (std::size_t i = 0; i < length(); ++i) {
    if (vertex(i) >= g.vertex_count()) throw GraphError("cycle vertex out of range");
    if (!g.has_edge(edge(i))) {
      throw GraphError("cycle edge " + std::to_string(edge(i)) + " not in graph");
    }
    const Edge& e = g.edge(edge(i));
    if (!e.touches(vertex(i)) || e.other(vertex(i)) != vertex(i + 1)) {
      throw GraphError("cycle edge " + std::to_string(edge(i)) + " does not join " +
                       std::to_string(vertex(i)) + " and " + std::to_string(vertex(i + 1)));
    }
  }
}

bool is_alternating_cycle(const Multigraph& g, const PerfectMatching& m, const OrientedCycle& c) {
  c.validate(g);
  if (c.length() % 2 != 0) return false;
  // Every other edge in m, the rest outside m, starting either way.
  for (std::size_t start = 0; start < 2; ++start) {
    bool ok = true;
    for (std::size_t i = 0; i < c.length() && ok; ++i) {
      ok = m.contains(c.edge(i)) == ((i % 2) == start);
    }
    if (ok) return true;
  }
  return false;
}

PerfectMatching exchange(const Multigraph& g, const PerfectMatching& m, const OrientedCycle& c) {
  if (!is_alternating_cycle(g, m, c)) throw PreconditionError("exchange: cycle is not m-alternating");
  auto cycle_edges = c.edges();
  std::sort(cycle_edges.begin(), cycle_edges.end());
  PerfectMatching out;
  std::set_symmetric_difference(m.edges.begin(), m.edges.end(), cycle_edges.begin(),
                                cycle_edges.end(), std::back_inserter(out.edges));
  return out;
}

namespace {

// mate_edge[v] = id of the matching edge at v.
std::vector<EdgeId> matching_edge_at(const Multigraph& g, const PerfectMatching& m) {
  std::vector<EdgeId> at(g.vertex_count());
  for (EdgeId id : m.edges) {
    const Edge& e = g.edge(id);
    at[e.u] = id;
    at[e.v] = id;
  }
  return at;
}

void require_perfect(const Multigraph& g, const PerfectMatching& m, const char* what) {
  if (!is_perfect_matching(g, m)) {
    throw PreconditionError(std::string(what) + " is not a perfect matching of the graph");
  }
}

}  // namespace

std::vector<OrientedCycle> symdiff_decompose(const Multigraph& g, const PerfectMatching& m,
                                             const PerfectMatching& n) {
  require_perfect(g, m, "m");
  require_perfect(g, n, "n");
  const auto at_m = matching_edge_at(g, m);
  const auto at_n = matching_edge_at(g, n);
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<OrientedCycle> out;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s] || at_m[s] == at_n[s]) continue;
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;
    Vertex v = s;
    bool use_m = true;
    do {
      seen[v] = 1;
      vertices.push_back(v);
      const EdgeId id = use_m ? at_m[v] : at_n[v];
      edges.push_back(id);
      v = g.edge(id).other(v);
      use_m = !use_m;
    } while (v != s);
    out.emplace_back(std::move(vertices), std::move(edges));
  }
  return out;
}

const char* to_string(ChordKind kind) {
  switch (kind) {
    case ChordKind::In:
      return "in";
    case ChordKind::Out:
      return "out";
    case ChordKind::Odd:
      return "odd";
  }
  return "?";
}

std::vector<Chord> find_chords(const Multigraph& g, const OrientedCycle& c, const PerfectMatching& m,
                               const PerfectMatching& n, std::span<const EdgeId> f) {
  require_perfect(g, m, "m");
  require_perfect(g, n, "n");
  if (!is_alternating_cycle(g, m, c)) {
    throw PreconditionError("find_chords: cycle is not m-alternating");
  }
  std::vector<EdgeId> external(f.begin(), f.end());
  std::sort(external.begin(), external.end());
  for (EdgeId id : external) {
    if (!g.has_edge(id)) throw PreconditionError("F contains unknown edge " + std::to_string(id));
  }
  const auto at_m = matching_edge_at(g, m);
  const auto at_n = matching_edge_at(g, n);

  // Vertex at position p is the initial vertex of its m-edge iff edge(p) is
  // that m-edge.
  auto initial = [&](std::size_t p) { return m.contains(c.edge(p)); };

  std::vector<Chord> out;
  for (std::size_t i = 0; i < c.length(); ++i) {
    const Vertex a = c.vertex(i);
    if (c.contains_edge(at_n[a])) continue;
    Chord chord;
    chord.a = a;
    chord.vertices.push_back(a);
    Vertex v = a;
    bool use_n = true;
    // Inner vertices carry their m-edge off the cycle, so the walk only
    // returns to the cycle through an n-edge.
    while (true) {
      const EdgeId id = use_n ? at_n[v] : at_m[v];
      chord.edges.push_back(id);
      v = g.edge(id).other(v);
      chord.vertices.push_back(v);
      if (use_n && c.position(v)) break;
      use_n = !use_n;
    }
    chord.b = v;
    const auto j = *c.position(chord.b);
    if (j < i) continue;  // already reported from the other end
    const bool ia = initial(i), ib = initial(j);
    chord.kind = (ia && ib) ? ChordKind::Out : (!ia && !ib) ? ChordKind::In : ChordKind::Odd;
    chord.external = std::any_of(chord.edges.begin(), chord.edges.end(), [&](EdgeId id) {
      return std::binary_search(external.begin(), external.end(), id);
    });
    out.push_back(std::move(chord));
  }
  return out;
}

bool chords_cross(const OrientedCycle& c, const Chord& p, const Chord& q) {
  const auto pa = c.position(p.a), pb = c.position(p.b);
  const auto qa = c.position(q.a), qb = c.position(q.b);
  if (!pa || !pb || !qa || !qb) throw GraphError("chords_cross: endpoint not on cycle");
  if (*pa == *qa || *pa == *qb || *pb == *qa || *pb == *qb) return false;
  const auto lo = std::min(*pa, *pb), hi = std::max(*pa, *pb);
  auto inside = [&](std::size_t x) { return lo < x && x < hi; };
  return inside(*qa) != inside(*qb);
}

std::vector<std::vector<Vertex>> chambers(const Multigraph& g) {
  const auto n = g.vertex_count();
  std::vector<Edge> allowed;
  for (const Edge& e : g.edges()) {
    // e lies in a perfect matching iff g - {u, v} has one.
    std::vector<std::optional<Vertex>> map(n);
    Vertex next = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (v != e.u && v != e.v) map[v] = next++;
    }
    std::vector<Edge> rest;
    for (const Edge& f : g.edges()) {
      if (f.touches(e.u) || f.touches(e.v)) continue;
      rest.push_back(Edge{*map[f.u], *map[f.v], f.id});
    }
    if (count_matchings(Multigraph::from_edges(n - 2, std::move(rest)), 1) > 0) {
      allowed.push_back(e);
    }
  }
  return components(Multigraph::from_edges(n, std::move(allowed)));
}

}  // namespace kmatch
