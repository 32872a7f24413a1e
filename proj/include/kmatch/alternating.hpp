#pragma once

#include "kmatch/matching.hpp"
#include "kmatch/multigraph.hpp"

#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace kmatch {

/// A cycle with a fixed direction: edge(i) joins vertex(i) and
/// vertex((i + 1) % length). A 2-cycle uses two parallel edges.
/// reversed() shares storage with the original and only flips the direction.
class OrientedCycle {
 public:
  OrientedCycle(std::vector<Vertex> vertices, std::vector<EdgeId> edges);

  std::size_t length() const noexcept { return data_->vertices.size(); }
  Vertex vertex(std::size_t i) const;
  EdgeId edge(std::size_t i) const;
  std::vector<Vertex> vertices() const;
  std::vector<EdgeId> edges() const;

  /// Position of v along the cycle, if it lies on it.
  std::optional<std::size_t> position(Vertex v) const;
  bool contains_edge(EdgeId e) const;

  OrientedCycle reversed() const;

  /// Vertices of the segment from a to b following the orientation, both
  /// ends included.
  std::vector<Vertex> segment(Vertex a, Vertex b) const;

  /// Throws GraphError unless this is a cycle of g: distinct vertices,
  /// distinct edges, each edge joining its two neighbors on the cycle.
  void validate(const Multigraph& g) const;

 private:
  struct Data {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;
    std::vector<std::pair<Vertex, std::size_t>> position;  // sorted by vertex
    std::vector<EdgeId> sorted_edges;
  };
  OrientedCycle(std::shared_ptr<const Data> data, bool reversed)
      : data_(std::move(data)), reversed_(reversed) {}

  std::shared_ptr<const Data> data_;
  bool reversed_ = false;
};

/// Does m restricted to the cycle form a perfect matching of the cycle?
/// Throws GraphError if c is not a cycle of g.
bool is_alternating_cycle(const Multigraph& g, const PerfectMatching& m, const OrientedCycle& c);

/// (m \ E(c)) u (E(c) \ m). Throws PreconditionError unless c is
/// m-alternating in g.
PerfectMatching exchange(const Multigraph& g, const PerfectMatching& m, const OrientedCycle& c);

/// Components of m (+) n as alternating cycles, each starting at its
/// smallest vertex with an m-edge; ordered by that vertex.
std::vector<OrientedCycle> symdiff_decompose(const Multigraph& g, const PerfectMatching& m,
                                             const PerfectMatching& n);

enum class ChordKind { In, Out, Odd };

const char* to_string(ChordKind kind);

/// An n,m-alternating odd path leaving the cycle at an n-edge and returning
/// to it, with no inner vertex on the cycle.
struct Chord {
  std::vector<Vertex> vertices;  // from a to b
  std::vector<EdgeId> edges;
  Vertex a = 0;
  Vertex b = 0;
  ChordKind kind = ChordKind::Odd;
  /// Contains an edge of the designated set F.
  bool external = false;
};

/// All chords of c, one per pair of leaving n-edges, ordered by the cycle
/// position of the endpoint met first. Kinds follow the direction of the
/// m-edge at each endpoint: both initial gives Out, both terminal gives In.
/// Throws PreconditionError when c is not m-alternating or n is not perfect.
std::vector<Chord> find_chords(const Multigraph& g, const OrientedCycle& c, const PerfectMatching& m,
                               const PerfectMatching& n, std::span<const EdgeId> f = {});

/// True iff the endpoints of p and q interleave around c. Chords sharing an
/// endpoint never cross.
bool chords_cross(const OrientedCycle& c, const Chord& p, const Chord& q);

/// Components of the spanning subgraph formed by every edge that lies in
/// some perfect matching.
std::vector<std::vector<Vertex>> chambers(const Multigraph& g);

}  // namespace kmatch
