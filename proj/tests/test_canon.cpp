#include "kmatch/canon.hpp"

#include "kmatch/verify.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace kmatch;

TEST_CASE("relabelings of K4 share one canonical string") {
  std::mt19937_64 rng(31);
  const auto k4 = graphs::complete(4);
  const auto form = canonical_form(k4);
  CHECK(form.automorphisms == 24);
  for (int i = 0; i < 10; ++i) {
    CHECK(canonical_form(permute(k4, testing::random_permutation(rng, 4))).text == form.text);
  }
}

TEST_CASE("two 2-cycles have one canonical string") {
  const auto a = disjoint_union(graphs::cycle(2), graphs::cycle(2));
  const Multigraph b(4, {{0, 3}, {1, 2}, {3, 0}, {2, 1}});
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(canonical_form(a).automorphisms == 8);
}

TEST_CASE("theta and C2 plus a pendant K2 differ") {
  const auto pendant = disjoint_union(graphs::cycle(2), graphs::k2());
  CHECK_FALSE(canonical_form(graphs::theta()) == canonical_form(pendant));
}

TEST_CASE("is_isomorphic examples") {
  const Multigraph c4b(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  CHECK(is_isomorphic(graphs::cycle(4), c4b));
  CHECK_FALSE(is_isomorphic(graphs::cycle(4), graphs::cycle(2)));
  CHECK_FALSE(is_isomorphic(graphs::complete(4), graphs::theta()));
}

TEST_CASE("collapsing parallel edges changes the form") {
  CHECK_FALSE(canonical_form(graphs::theta()) == canonical_form(graphs::k2()));
  CHECK_FALSE(canonical_form(graphs::cycle(2)) == canonical_form(graphs::k2()));
  const auto doubled = graphs::cycle(4).with_edge(0, 1);
  CHECK_FALSE(canonical_form(doubled) == canonical_form(graphs::cycle(4)));
}

TEST_CASE("canonical graph serializes to the canonical text") {
  const auto g = Multigraph(5, {{4, 1}, {1, 2}, {2, 4}, {0, 3}, {0, 3}});
  CHECK(to_mg(canonical_graph(g)) == canonical_form(g).text);
  CHECK(is_isomorphic(canonical_graph(g), g));
}

TEST_CASE("size limit") {
  CHECK_NOTHROW(canonical_form(graphs::cycle(32)));
  CHECK_THROWS_AS(canonical_form(graphs::cycle(34)), GraphError);
}

TEST_CASE("short hash is 12 hex digits and stable") {
  const auto h = short_hash(canonical_form(graphs::complete(4)));
  CHECK(h.size() == 12);
  CHECK(h.find_first_not_of("0123456789abcdef") == std::string::npos);
  CHECK(h == short_hash(canonical_form(permute(graphs::complete(4), std::vector<Vertex>{3, 1, 0, 2}))));
}

TEST_CASE("property: canonical form is invariant under random relabeling") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto g = verify::random_multigraph(rng, n, n >= 2 ? rng() % 20 : 0);
    const auto form = canonical_form(g);
    const auto p = permute(g, testing::random_permutation(rng, n));
    const auto other = canonical_form(p);
    CHECK(other.text == form.text);
    CHECK(other.automorphisms == form.automorphisms);
  }
}

TEST_CASE("property: canonical equality agrees with brute-force isomorphism") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const std::size_t m = rng() % 9;
    const auto a = verify::random_multigraph(rng, n, m);
    const auto b = verify::random_multigraph(rng, n, m);
    CHECK(is_isomorphic(a, b) == testing::brute_isomorphic(a, b));
  }
}

TEST_CASE("property: automorphism count matches permutation search") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto g = verify::random_multigraph(rng, n, n >= 2 ? rng() % 10 : 0);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const auto base = testing::sorted_edges(g);
    std::uint64_t autos = 0;
    do {
      if (testing::sorted_edges(g, &perm) == base) ++autos;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(canonical_form(g).automorphisms == autos);
  }
}

TEST_CASE("property: canonical classes match brute force on all small labeled graphs") {
  // All multigraphs on 4 vertices with multiplicity <= 2 and at most 5 edges.
  const std::vector<std::pair<Vertex, Vertex>> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::map<std::string, std::set<testing::EdgeList>> by_form;
  std::map<testing::EdgeList, std::set<std::string>> by_oracle;
  std::vector<int> mult(pairs.size(), 0);
  while (true) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (int c = 0; c < mult[i]; ++c) edges.push_back(pairs[i]);
    }
    if (edges.size() <= 5) {
      const Multigraph g(4, edges);
      const auto text = canonical_form(g).text;
      const auto oracle = testing::brute_canonical(g);
      by_form[text].insert(oracle);
      by_oracle[oracle].insert(text);
    }
    std::size_t i = 0;
    while (i < mult.size() && mult[i] == 2) mult[i++] = 0;
    if (i == mult.size()) break;
    ++mult[i];
  }
  CHECK(by_form.size() == by_oracle.size());
  for (const auto& [text, classes] : by_form) CHECK(classes.size() == 1);
  for (const auto& [oracle, texts] : by_oracle) CHECK(texts.size() == 1);
}
