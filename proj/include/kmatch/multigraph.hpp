#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kmatch {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// Raised for malformed graphs and invalid graph operations (dangling edge
/// ids, loops, out-of-range vertices).
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// mg-v1 syntax error with a 1-based position.
class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An edge record. Endpoints are stored normalized (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  EdgeId id = 0;

  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
  bool touches(Vertex x) const noexcept { return x == u || x == v; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Loopless undirected multigraph on vertices 0..n-1.
///
/// Edges carry ids so that parallel edges stay distinguishable; ids are kept
/// in increasing order and survive the deletion of other edges. Values are
/// immutable once built: every "modifying" operation returns a new graph.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t vertex_count);

  /// Edges get ids 0..m-1 in the given order.
  Multigraph(std::size_t vertex_count,
             std::span<const std::pair<Vertex, Vertex>> edges);
  Multigraph(std::size_t vertex_count,
             std::initializer_list<std::pair<Vertex, Vertex>> edges);

  /// Builds a graph from explicit edge records. Ids must be unique; records
  /// are sorted by id.
  static Multigraph from_edges(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return incidence_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Edges in increasing id order.
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool has_edge(EdgeId id) const noexcept;
  const Edge& edge(EdgeId id) const;
  /// Position of the edge in edges(), if present.
  std::optional<std::size_t> position(EdgeId id) const noexcept;

  /// Positions (into edges()) of the edges incident with v, in id order.
  std::span<const std::uint32_t> incident(Vertex v) const;

  std::size_t degree(Vertex v) const;
  std::size_t max_degree() const noexcept;
  std::size_t min_degree() const noexcept;
  std::size_t multiplicity(Vertex a, Vertex b) const;

  /// One larger than the largest id in use (0 for an edgeless graph).
  EdgeId next_edge_id() const noexcept;

  /// Copy of this graph with one more edge a-b carrying id next_edge_id().
  Multigraph with_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(Vertex v) const;
  void index();

  std::vector<Edge> edges_;
  std::vector<std::vector<std::uint32_t>> incidence_;
};

std::size_t degree(const Multigraph& g, Vertex v);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Multigraph& g);

/// Component index per vertex, numbered as in components().
std::vector<std::size_t> component_index(const Multigraph& g);

Multigraph delete_edge(const Multigraph& g, EdgeId e);

/// Vertices of b are shifted by a.vertex_count(), edge ids of b by
/// a.next_edge_id().
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

/// Relabels vertex v as perm[v]; edge ids are kept.
Multigraph permute(const Multigraph& g, std::span<const Vertex> perm);

/// Parses mg-v1 text. Edge ids are 0..m-1 in file order.
Multigraph parse_graph(std::string_view text);

/// mg-v1 serialization, edges in id order, "min max" per line, LF-terminated.
std::string to_mg(const Multigraph& g);

// Named small graphs used across the tool and its tests.
namespace graphs {
Multigraph k2();
Multigraph complete(std::size_t n);
/// Cycle on n vertices; n == 2 gives the double edge C2.
Multigraph cycle(std::size_t n);
Multigraph path(std::size_t n);
/// Two vertices joined by `edges` parallel edges (3 gives the theta graph).
Multigraph bundle(std::size_t edges);
Multigraph theta();
}  // namespace graphs

}  // namespace kmatch
