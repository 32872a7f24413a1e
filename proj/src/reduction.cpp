#include "kmatch/reduction.hpp"

#include "kmatch/canon.hpp"

#include <algorithm>
#include <tuple>

namespace kmatch {

Multigraph subdivide_edge(const Multigraph& g, const SubdivisionSpec& spec) {
  const Edge e = g.edge(spec.edge);
  if (spec.extra_path_length % 2 != 0) {
    throw GraphError("subdivide_edge: extra path length must be even, got " +
                     std::to_string(spec.extra_path_length));
  }
  if (spec.extra_path_length == 0) return g;
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + spec.extra_path_length);
  for (const Edge& f : g.edges()) {
    if (f.id != e.id) edges.push_back(f);
  }
  EdgeId id = g.next_edge_id();
  Vertex prev = e.u;
  for (std::size_t i = 0; i < spec.extra_path_length; ++i) {
    const auto next = static_cast<Vertex>(n + i);
    edges.push_back(Edge{prev, next, id++});
    prev = next;
  }
  edges.push_back(Edge{prev, e.v, id++});
  return Multigraph::from_edges(n + spec.extra_path_length, std::move(edges));
}

Multigraph add_k2(const Multigraph& g) { return disjoint_union(g, graphs::k2()); }

std::vector<std::pair<Vertex, Vertex>> k2_components(const Multigraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) == 1 && g.degree(e.v) == 1) out.emplace_back(e.u, e.v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Candidate {
  Vertex w, x, y, z;
  EdgeId wx, xy, yz;
};

std::vector<Candidate> smoothing_candidates(const Multigraph& g) {
  std::vector<Candidate> out;
  for (const Edge& mid : g.edges()) {
    const Vertex x = mid.u, y = mid.v;
    if (g.degree(x) != 2 || g.degree(y) != 2) continue;
    auto other_edge = [&](Vertex v) -> const Edge& {
      for (auto pos : g.incident(v)) {
        if (g.edges()[pos].id != mid.id) return g.edges()[pos];
      }
      return mid;  // unreachable for degree 2
    };
    const Edge& ex = other_edge(x);
    const Edge& ey = other_edge(y);
    const Vertex w = ex.other(x), z = ey.other(y);
    // Parallel x-y edges or a closing triangle (w == z) do not qualify.
    if (w == y || z == x || w == z) continue;
    out.push_back(Candidate{w, x, y, z, ex.id, mid.id, ey.id});
  }
  return out;
}

}  // namespace

bool is_irreducible(const Multigraph& g) { return smoothing_candidates(g).empty(); }

std::optional<SmoothResult> smooth_once(const Multigraph& g) {
  const auto candidates = smoothing_candidates(g);
  if (candidates.empty()) return std::nullopt;

  const Candidate* chosen = &candidates.front();
  if (g.vertex_count() <= kCanonMaxVertices) {
    const auto label = canonical_labeling(g).label;
    auto key = [&](const Candidate& c) {
      return std::make_tuple(std::min(label[c.x], label[c.y]), std::max(label[c.x], label[c.y]),
                             c.x, c.y);
    };
    for (const auto& c : candidates) {
      if (key(c) < key(*chosen)) chosen = &c;
    }
  } else {
    for (const auto& c : candidates) {
      if (std::tie(c.x, c.y) < std::tie(chosen->x, chosen->y)) chosen = &c;
    }
  }

  const Candidate c = *chosen;
  const auto n = g.vertex_count();
  VertexMap map(n);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (v == c.x || v == c.y) continue;
    map[v] = next++;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 2);
  for (const Edge& e : g.edges()) {
    if (e.id == c.wx || e.id == c.xy || e.id == c.yz) continue;
    edges.push_back(Edge{*map[e.u], *map[e.v], e.id});
  }
  const EdgeId new_id = g.next_edge_id();
  edges.push_back(Edge{*map[c.w], *map[c.z], new_id});

  SmoothResult result{Multigraph::from_edges(n - 2, std::move(edges)),
                      SmoothStep{c.w, c.x, c.y, c.z, c.wx, c.xy, c.yz, new_id}, std::move(map)};
  return result;
}

namespace {

std::pair<Multigraph, VertexMap> strip(const Multigraph& g, Vertex a, Vertex b) {
  const auto n = g.vertex_count();
  VertexMap map(n);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (v == a || v == b) continue;
    map[v] = next++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.touches(a)) continue;
    edges.push_back(Edge{*map[e.u], *map[e.v], e.id});
  }
  return {Multigraph::from_edges(n - 2, std::move(edges)), std::move(map)};
}

}  // namespace

ReductionTrace reduce(const Multigraph& g) {
  ReductionTrace trace;
  Multigraph current = g;
  while (true) {
    while (auto smoothed = smooth_once(current)) {
      trace.steps.emplace_back(smoothed->step);
      trace.vertex_maps.push_back(std::move(smoothed->vertex_map));
      current = std::move(smoothed->graph);
    }
    const auto k2s = k2_components(current);
    if (k2s.empty()) break;
    // Strip one at a time so each step has its own vertex map.
    const auto [a, b] = k2s.front();
    const EdgeId edge = current.edges()[current.incident(a).front()].id;
    auto [next, map] = strip(current, a, b);
    trace.steps.emplace_back(StripStep{a, b, edge});
    trace.vertex_maps.push_back(std::move(map));
    current = std::move(next);
    ++trace.stripped_k2;
  }
  trace.base = std::move(current);
  return trace;
}

std::vector<ReductionStep> ReductionTrace::steps_in_original_names() const {
  std::vector<ReductionStep> out;
  out.reserve(steps.size());
  if (vertex_maps.empty()) return out;
  // origin[v] = original index of current vertex v
  std::vector<Vertex> origin(vertex_maps.front().size());
  for (Vertex v = 0; v < origin.size(); ++v) origin[v] = v;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (const auto* s = std::get_if<StripStep>(&steps[i])) {
      out.emplace_back(StripStep{origin[s->a], origin[s->b], s->edge});
    } else {
      const auto& sm = std::get<SmoothStep>(steps[i]);
      out.emplace_back(SmoothStep{origin[sm.w], origin[sm.x], origin[sm.y], origin[sm.z], sm.wx,
                                  sm.xy, sm.yz, sm.new_edge});
    }
    std::vector<Vertex> next;
    const auto& map = vertex_maps[i];
    for (Vertex v = 0; v < map.size(); ++v) {
      if (!map[v]) continue;
      if (next.size() <= *map[v]) next.resize(*map[v] + 1);
      next[*map[v]] = origin[v];
    }
    origin = std::move(next);
  }
  return out;
}

Multigraph replay_inverse(const ReductionTrace& trace) {
  std::vector<Edge> edges(trace.base.edges().begin(), trace.base.edges().end());
  auto n = static_cast<Vertex>(trace.base.vertex_count());
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    if (const auto* s = std::get_if<StripStep>(&*it)) {
      edges.push_back(Edge{n, n + 1, s->edge});
      n += 2;
      continue;
    }
    const auto& sm = std::get<SmoothStep>(*it);
    auto pos = std::find_if(edges.begin(), edges.end(),
                            [&](const Edge& e) { return e.id == sm.new_edge; });
    if (pos == edges.end()) throw GraphError("replay_inverse: trace references missing edge");
    const Edge wz = *pos;
    edges.erase(pos);
    const Vertex x = n, y = n + 1;
    n += 2;
    edges.push_back(Edge{wz.u, x, sm.wx});
    edges.push_back(Edge{x, y, sm.xy});
    edges.push_back(Edge{y, wz.v, sm.yz});
  }
  return Multigraph::from_edges(n, std::move(edges));
}

}  // namespace kmatch
