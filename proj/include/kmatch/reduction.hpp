#pragma once

#include "kmatch/multigraph.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace kmatch {

/// Replace `edge` by a path of length 1 + extra_path_length (extra must be
/// even, so the replacing path has odd length).
struct SubdivisionSpec {
  EdgeId edge = 0;
  std::size_t extra_path_length = 0;
};

/// New internal vertices are appended at indices n, n+1, ... in path order
/// from the edge's smaller endpoint. The path's edges get fresh ids.
Multigraph subdivide_edge(const Multigraph& g, const SubdivisionSpec& spec);

/// g with one more K2 component.
Multigraph add_k2(const Multigraph& g);

/// Removal of a K2 component {a, b} (pre-step indices) and its edge.
struct StripStep {
  Vertex a = 0;
  Vertex b = 0;
  EdgeId edge = 0;
};

/// Path w-x-y-z with deg(x) = deg(y) = 2 replaced by a new edge w-z
/// (pre-step indices; removed edge ids and the new edge's id).
struct SmoothStep {
  Vertex w = 0, x = 0, y = 0, z = 0;
  EdgeId wx = 0, xy = 0, yz = 0;
  EdgeId new_edge = 0;
};

using ReductionStep = std::variant<StripStep, SmoothStep>;

/// Pre-step vertex index -> post-step index (nullopt for removed vertices).
using VertexMap = std::vector<std::optional<Vertex>>;

struct SmoothResult {
  Multigraph graph;
  SmoothStep step;
  VertexMap vertex_map;
};

/// Finds a smoothable pair x, y and applies it: both of degree 2, joined by
/// exactly one edge, with outer neighbors w != z. Among candidates the pair
/// with the smallest canonical labels is chosen (ties and graphs beyond the
/// canonical labeling limit fall back to the smallest (x, y)). Returns
/// nullopt when g is irreducible.
std::optional<SmoothResult> smooth_once(const Multigraph& g);

/// True iff smooth_once(g) would return nullopt (no canonical labeling
/// needed).
bool is_irreducible(const Multigraph& g);

/// Vertex pairs of the K2 components (2 vertices, exactly one edge).
std::vector<std::pair<Vertex, Vertex>> k2_components(const Multigraph& g);

struct ReductionTrace {
  Multigraph base;
  std::size_t stripped_k2 = 0;
  std::vector<ReductionStep> steps;
  std::vector<VertexMap> vertex_maps;

  /// For each step, the original-graph names of the vertices it mentions,
  /// obtained by composing the vertex maps.
  std::vector<ReductionStep> steps_in_original_names() const;
};

/// Smooths to a fixpoint and strips K2 components until neither applies.
ReductionTrace reduce(const Multigraph& g);

/// Inverse of a trace: subdivide each smoothed edge and re-add each stripped
/// K2, in reverse order, starting from the base. The result is isomorphic to
/// the graph the trace was computed from.
Multigraph replay_inverse(const ReductionTrace& trace);

}  // namespace kmatch
