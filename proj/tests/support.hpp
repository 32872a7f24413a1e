#pragma once

// Test-only oracles. None of these share code with the library routines they
// check: isomorphism and canonical forms are decided by trying every vertex
// permutation.

#include "kmatch/multigraph.hpp"
#include "kmatch/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace kmatch::testing {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

inline EdgeList sorted_edges(const Multigraph& g, const std::vector<Vertex>* perm = nullptr) {
  EdgeList out;
  for (const Edge& e : g.edges()) {
    Vertex a = perm ? (*perm)[e.u] : e.u;
    Vertex b = perm ? (*perm)[e.v] : e.v;
    if (a > b) std::swap(a, b);
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Smallest sorted edge list over all relabelings (n! work).
inline EdgeList brute_canonical(const Multigraph& g) {
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best = sorted_edges(g, &perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    best = std::min(best, sorted_edges(g, &perm));
  }
  return best;
}

inline bool brute_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return brute_canonical(a) == brute_canonical(b);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Odd subdivision of every edge of g into a path with `length` edges.
inline Multigraph subdivide_all(const Multigraph& g, std::size_t length) {
  Multigraph out = g;
  for (const Edge& e : g.edges()) out = subdivide_edge(out, {e.id, length - 1});
  return out;
}

}  // namespace kmatch::testing
