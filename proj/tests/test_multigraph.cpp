#include "kmatch/multigraph.hpp"

#include "support.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace kmatch;

TEST_CASE("parse reads C2 and K4") {
  const auto c2 = parse_graph("mg 2 2\n0 1\n0 1");
  CHECK(c2.vertex_count() == 2);
  CHECK(c2.edge_count() == 2);
  CHECK(c2.multiplicity(0, 1) == 2);

  const auto k4 = parse_graph("mg 4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3");
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  for (Vertex v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
}

TEST_CASE("parse skips comment lines and accepts a trailing newline") {
  const auto g = parse_graph("# a comment\nmg 3 1\n# another\n2 0\n");
  CHECK(g.vertex_count() == 3);
  REQUIRE(g.edge_count() == 1);
  CHECK(g.edges()[0].id == 0);
  CHECK(g.edges()[0].touches(2));
  CHECK(g.edges()[0].touches(0));
}

TEST_CASE("parse errors carry line and column") {
  SUBCASE("loop") {
    try {
      parse_graph("mg 2 1\n0 0");
      FAIL("loop accepted");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("vertex out of range") { CHECK_THROWS_AS(parse_graph("mg 2 1\n0 2"), ParseError); }
  SUBCASE("too few edges") { CHECK_THROWS_AS(parse_graph("mg 2 2\n0 1\n"), ParseError); }
  SUBCASE("too many edges") { CHECK_THROWS_AS(parse_graph("mg 2 1\n0 1\n0 1\n"), ParseError); }
  SUBCASE("double space") { CHECK_THROWS_AS(parse_graph("mg 2 1\n0  1\n"), ParseError); }
  SUBCASE("leading zero") { CHECK_THROWS_AS(parse_graph("mg 2 1\n00 1\n"), ParseError); }
  SUBCASE("bad header") { CHECK_THROWS_AS(parse_graph("graph 2 1\n0 1\n"), ParseError); }
  SUBCASE("carriage return") { CHECK_THROWS_AS(parse_graph("mg 2 1\r\n0 1\r\n"), ParseError); }
  SUBCASE("trailing token") { CHECK_THROWS_AS(parse_graph("mg 2 1\n0 1 7\n"), ParseError); }
  SUBCASE("empty input") { CHECK_THROWS_AS(parse_graph(""), ParseError); }
}

TEST_CASE("constructors reject loops and out-of-range vertices") {
  CHECK_THROWS_AS(Multigraph(2, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(Multigraph(2, {{0, 2}}), GraphError);
  CHECK_THROWS_AS(Multigraph::from_edges(2, {Edge{0, 1, 3}, Edge{1, 0, 3}}), GraphError);
}

TEST_CASE("degree counts parallel edges") {
  CHECK(degree(graphs::cycle(2), 0) == 2);
  CHECK(degree(graphs::theta(), 0) == 3);
  const auto k4 = graphs::complete(4);
  for (Vertex v = 0; v < 4; ++v) CHECK(degree(k4, v) == 3);
  CHECK_THROWS_AS(degree(k4, 4), GraphError);
}

TEST_CASE("components") {
  const auto g = disjoint_union(graphs::complete(4), graphs::k2());
  CHECK(components(g) == std::vector<std::vector<Vertex>>{{0, 1, 2, 3}, {4, 5}});
  CHECK(components(Multigraph(0)).empty());
  const auto cc = disjoint_union(graphs::cycle(2), graphs::cycle(2));
  CHECK(components(cc) == std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}});
  CHECK(components(Multigraph(3)).size() == 3);
}

TEST_CASE("delete_edge keeps the other ids") {
  const auto theta = graphs::theta();
  const auto c2 = delete_edge(theta, 1);
  CHECK(c2.edge_count() == 2);
  CHECK(c2.has_edge(0));
  CHECK(c2.has_edge(2));
  CHECK_FALSE(c2.has_edge(1));
  CHECK(testing::brute_isomorphic(c2, graphs::cycle(2)));

  const auto empty = delete_edge(graphs::k2(), 0);
  CHECK(empty.vertex_count() == 2);
  CHECK(empty.edge_count() == 0);

  for (EdgeId e = 0; e < 4; ++e) {
    CHECK(testing::brute_isomorphic(delete_edge(graphs::cycle(4), e), graphs::path(4)));
  }
  CHECK_THROWS_AS(delete_edge(theta, 3), GraphError);
}

TEST_CASE("disjoint_union shifts vertices and ids") {
  const auto cc = disjoint_union(graphs::cycle(2), graphs::cycle(2));
  CHECK(cc.vertex_count() == 4);
  CHECK(cc.edge_count() == 4);
  CHECK(cc.edge(2).touches(2));
  CHECK(cc.edge(3).touches(3));

  const auto k4 = graphs::complete(4);
  CHECK(to_mg(disjoint_union(k4, Multigraph(0))) == to_mg(k4));
  CHECK(components(disjoint_union(graphs::k2(), graphs::k2())).size() == 2);

  // ids after a deletion leave a gap; the union continues past the largest
  const auto holed = delete_edge(k4, 2);
  const auto u = disjoint_union(holed, graphs::k2());
  CHECK(u.has_edge(6));
}

TEST_CASE("to_mg writes min max per edge in id order") {
  const Multigraph g(3, {{2, 0}, {1, 0}});
  CHECK(to_mg(g) == "mg 3 2\n0 2\n0 1\n");
  CHECK(to_mg(Multigraph(0)) == "mg 0 0\n");
}

TEST_CASE("with_edge appends a fresh id") {
  const auto g = graphs::k2().with_edge(0, 1);
  CHECK(g.edge_count() == 2);
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.edge(1).touches(1));
}

TEST_CASE("property: degree sum is twice the edge count") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const std::size_t m = n >= 2 ? rng() % 20 : 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < m; ++i) {
      const auto a = static_cast<Vertex>(rng() % n);
      auto b = static_cast<Vertex>(rng() % (n - 1));
      if (b >= a) ++b;
      edges.emplace_back(a, b);
    }
    const Multigraph g(n, edges);
    std::size_t sum = 0;
    for (Vertex v = 0; v < n; ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.edge_count());
  }
}

TEST_CASE("property: parse after serialize is the identity on the edge multiset") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    std::vector<std::pair<Vertex, Vertex>> edges;
    const std::size_t m = rng() % 16;
    for (std::size_t i = 0; i < m; ++i) {
      const auto a = static_cast<Vertex>(rng() % n);
      auto b = static_cast<Vertex>(rng() % (n - 1));
      if (b >= a) ++b;
      edges.emplace_back(a, b);
    }
    const Multigraph g(n, edges);
    const auto text = to_mg(g);
    const auto back = parse_graph(text);
    CHECK(testing::sorted_edges(back) == testing::sorted_edges(g));
    CHECK(to_mg(back) == text);
  }
}

TEST_CASE("property: deleting an edge and re-adding its ends restores the graph") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    std::vector<std::pair<Vertex, Vertex>> edges;
    const std::size_t m = 1 + rng() % 8;
    for (std::size_t i = 0; i < m; ++i) {
      const auto a = static_cast<Vertex>(rng() % n);
      auto b = static_cast<Vertex>(rng() % (n - 1));
      if (b >= a) ++b;
      edges.emplace_back(a, b);
    }
    const Multigraph g(n, edges);
    const Edge e = g.edges()[rng() % g.edge_count()];
    const auto again = delete_edge(g, e.id).with_edge(e.u, e.v);
    CHECK(testing::brute_isomorphic(again, g));
  }
}

TEST_CASE("permute relabels and keeps ids") {
  const Multigraph g(3, {{0, 1}, {1, 2}});
  const std::vector<Vertex> perm{2, 0, 1};
  const auto p = permute(g, perm);
  CHECK(p.edge(0).touches(2));
  CHECK(p.edge(0).touches(0));
  CHECK(p.edge(1).touches(0));
  CHECK(p.edge(1).touches(1));
  const std::vector<Vertex> bad{0, 0, 1};
  CHECK_THROWS_AS(permute(g, bad), GraphError);
}
