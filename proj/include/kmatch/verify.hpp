#pragma once

#include "kmatch/multigraph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace kmatch::verify {

struct CheckResult {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  /// Description of the first failure, if any.
  std::string first_failure;

  void record(bool ok, const std::string& detail = {});
};

struct SuiteReport {
  std::string suite;
  unsigned k = 0;
  std::size_t max_vertices = 0;
  /// Number of graphs or random instances the suite examined.
  std::uint64_t instances = 0;
  std::vector<CheckResult> checks;

  bool ok() const;
  std::uint64_t failures() const;
};

struct SuiteOptions {
  unsigned k = 3;
  std::size_t max_vertices = 8;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
};

/// Lemma 1 bounds on every minimally k-matchable graph with at most
/// max_vertices vertices.
SuiteReport lemma1_suite(const SuiteOptions& opt);

/// Random odd subdivisions and K2 additions of base family members: the
/// matching count is unchanged and classification recovers the member.
SuiteReport lemma2_suite(const SuiteOptions& opt);

/// Backtracking count against brute force: every labeled multigraph with at
/// most 5 vertices and multiplicity at most 2, then `trials` random
/// multigraphs with at most 24 edges.
SuiteReport oracle_suite(const SuiteOptions& opt);

/// Exchange and symmetric-difference properties on random instances, chord
/// taxonomy properties, and the a-posteriori check that for every minimally
/// k-matchable G (k >= 2) with a greedily found spanning minimally
/// (k-1)-matchable H, every matching of G outside M(H) contains all of
/// E(G) \ E(H), which is itself a matching.
SuiteReport claims_suite(const SuiteOptions& opt);

/// Random loopless multigraph with n vertices and m edges.
Multigraph random_multigraph(std::mt19937_64& rng, std::size_t n, std::size_t m);

/// Random graph with at least one perfect matching: the union of `layers`
/// random perfect matchings on an even n, plus `extra` random edges.
Multigraph random_matchable(std::mt19937_64& rng, std::size_t n, std::size_t layers,
                            std::size_t extra);

}  // namespace kmatch::verify
