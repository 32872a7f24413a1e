#pragma once

#include "kmatch/multigraph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace kmatch {

/// Largest vertex count accepted by the canonical labeling.
inline constexpr std::size_t kCanonMaxVertices = 32;

struct CanonicalForm {
  /// mg-v1 text of the canonically relabeled graph, edges sorted.
  std::string text;
  /// Number of vertex permutations preserving every edge multiplicity.
  boost::multiprecision::cpp_int automorphisms = 1;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.text == b.text;
  }
};

struct CanonicalLabeling {
  /// label[v] is the canonical index of vertex v.
  std::vector<Vertex> label;
  CanonicalForm form;
};

/// Canonical labeling by color refinement (degree, incident multiplicities,
/// neighbor colors) and exhaustive individualization. Each connected
/// component is labeled on its own; components are then laid out in
/// increasing canonical order. Throws GraphError above kCanonMaxVertices.
CanonicalLabeling canonical_labeling(const Multigraph& g);

CanonicalForm canonical_form(const Multigraph& g);

/// The canonical representative itself (edges sorted, ids 0..m-1).
Multigraph canonical_graph(const Multigraph& g);

bool is_isomorphic(const Multigraph& a, const Multigraph& b);

/// Stable 64-bit FNV-1a of the canonical text, as 12 hex digits.
std::string short_hash(const CanonicalForm& form);

}  // namespace kmatch
