#include "kmatch/alternating.hpp"

#include "kmatch/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace kmatch;

namespace {

PerfectMatching pm(std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  return PerfectMatching{std::move(ids)};
}

// Cycle 0..7 (edges 0..7, M-edges even), with four chords:
//   P: 0-8-9-2 (out), S: 1-6 (odd), Q: 3-10-11-5 (in), R: 4-12-13-7 (odd).
// Q and R cross, P crosses neither, S crosses P only.
struct ChordFigure {
  Multigraph g{14,
               {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0},
                {0, 8}, {8, 9}, {9, 2},
                {3, 10}, {10, 11}, {11, 5},
                {4, 12}, {12, 13}, {13, 7},
                {1, 6}}};
  OrientedCycle cycle{{0, 1, 2, 3, 4, 5, 6, 7}, {0, 1, 2, 3, 4, 5, 6, 7}};
  PerfectMatching m = pm({0, 2, 4, 6, 9, 12, 15});
  PerfectMatching n = pm({8, 10, 11, 13, 14, 16, 17});
};

}  // namespace

TEST_CASE("is_alternating_cycle") {
  const auto c2 = graphs::cycle(2);
  const OrientedCycle two({0, 1}, {0, 1});
  CHECK(is_alternating_cycle(c2, pm({0}), two));

  const auto c4 = graphs::cycle(4);
  const OrientedCycle four({0, 1, 2, 3}, {0, 1, 2, 3});
  CHECK(is_alternating_cycle(c4, pm({0, 2}), four));

  // one cycle edge only: the other vertices are matched by a chord
  const auto k4 = graphs::complete(4);
  const OrientedCycle square({0, 1, 2, 3}, {0, 3, 5, 2});
  CHECK(is_alternating_cycle(k4, pm({0, 5}), square));
  CHECK_FALSE(is_alternating_cycle(k4, pm({1, 4}), square));

  const OrientedCycle triangle({0, 1, 2}, {0, 3, 1});
  for (const auto& m : enumerate_matchings(k4).matchings) {
    CHECK_FALSE(is_alternating_cycle(k4, m, triangle));
  }
}

TEST_CASE("cycle validation") {
  const auto k4 = graphs::complete(4);
  CHECK_THROWS_AS(OrientedCycle({0, 1, 2}, {0, 3}), GraphError);
  CHECK_THROWS_AS(OrientedCycle({0, 1, 2}, {0, 4, 1}).validate(k4), GraphError);
  CHECK_THROWS_AS(OrientedCycle({0, 1, 1, 2}, {0, 3, 3, 1}).validate(k4), GraphError);
  CHECK_THROWS_AS(OrientedCycle({0, 1}, {0, 0}).validate(graphs::cycle(2)), GraphError);
}

TEST_CASE("exchange") {
  const auto c4 = graphs::cycle(4);
  const OrientedCycle four({0, 1, 2, 3}, {0, 1, 2, 3});
  const auto m = pm({0, 2});
  const auto other = exchange(c4, m, four);
  CHECK(other.edges == std::vector<EdgeId>{1, 3});
  CHECK(exchange(c4, other, four) == m);
  CHECK_THROWS_AS(exchange(graphs::complete(4), pm({1, 4}),
                           OrientedCycle({0, 1, 2, 3}, {0, 3, 5, 2})),
                  PreconditionError);
}

TEST_CASE("exchanging one component of C4 + C6 flips only that component") {
  const auto g = disjoint_union(graphs::cycle(4), graphs::cycle(6));
  const OrientedCycle c4({0, 1, 2, 3}, {0, 1, 2, 3});
  const OrientedCycle c6({4, 5, 6, 7, 8, 9}, {4, 5, 6, 7, 8, 9});
  const auto all = enumerate_matchings(g).matchings;
  REQUIRE(all.size() == 4);
  std::set<PerfectMatching> reached{all.front()};
  auto current = all.front();
  for (int i = 0; i < 4; ++i) {
    const auto& c = i % 2 == 0 ? c4 : c6;
    const auto next = exchange(g, current, c);
    // the untouched component keeps its edges
    for (EdgeId e : current.edges) {
      if (!c.contains_edge(e)) CHECK(next.contains(e));
    }
    reached.insert(next);
    current = next;
  }
  CHECK(reached == std::set<PerfectMatching>(all.begin(), all.end()));
}

TEST_CASE("symdiff_decompose") {
  const auto c2 = graphs::cycle(2);
  CHECK(symdiff_decompose(c2, pm({0}), pm({0})).empty());
  const auto two = symdiff_decompose(c2, pm({0}), pm({1}));
  REQUIRE(two.size() == 1);
  CHECK(two[0].length() == 2);

  const auto k4 = graphs::complete(4);
  const auto all = enumerate_matchings(k4).matchings;
  for (const auto& m : all) {
    for (const auto& n : all) {
      const auto cycles = symdiff_decompose(k4, m, n);
      if (m == n) {
        CHECK(cycles.empty());
        continue;
      }
      REQUIRE(cycles.size() == 1);
      CHECK(cycles[0].length() == 4);
      CHECK(exchange(k4, m, cycles[0]) == n);
    }
  }
}

TEST_CASE("chords of K4: two diagonals, one in and one out, crossing") {
  const auto k4 = graphs::complete(4);
  const OrientedCycle square({0, 1, 2, 3}, {0, 3, 5, 2});
  SUBCASE("m = {01, 23}: even positions are initial") {
    const auto chords = find_chords(k4, square, pm({0, 5}), pm({1, 4}));
    REQUIRE(chords.size() == 2);
    CHECK(chords[0].a == 0);
    CHECK(chords[0].b == 2);
    CHECK(chords[0].kind == ChordKind::Out);
    CHECK(chords[1].kind == ChordKind::In);
    CHECK(chords_cross(square, chords[0], chords[1]));
  }
  SUBCASE("m = {12, 30}: odd positions are initial") {
    const auto chords = find_chords(k4, square, pm({2, 3}), pm({1, 4}));
    REQUIRE(chords.size() == 2);
    CHECK(chords[0].a == 0);
    CHECK(chords[0].kind == ChordKind::In);
    CHECK(chords[1].a == 1);
    CHECK(chords[1].kind == ChordKind::Out);
  }
}

TEST_CASE("no leaving n-edges gives no chords") {
  const auto c4 = graphs::cycle(4);
  const OrientedCycle four({0, 1, 2, 3}, {0, 1, 2, 3});
  CHECK(find_chords(c4, four, pm({0, 2}), pm({1, 3})).empty());
  CHECK(find_chords(c4, four, pm({0, 2}), pm({0, 2})).empty());
}

TEST_CASE("four-chord instance: out, in and odd chords") {
  const ChordFigure fig;
  REQUIRE(is_perfect_matching(fig.g, fig.m));
  REQUIRE(is_perfect_matching(fig.g, fig.n));
  const auto chords = find_chords(fig.g, fig.cycle, fig.m, fig.n, std::vector<EdgeId>{15});
  REQUIRE(chords.size() == 4);
  const auto& p = chords[0];
  const auto& s = chords[1];
  const auto& q = chords[2];
  const auto& r = chords[3];
  CHECK(p.vertices == std::vector<Vertex>{0, 8, 9, 2});
  CHECK(p.edges == std::vector<EdgeId>{8, 9, 10});
  CHECK(s.vertices == std::vector<Vertex>{1, 6});
  CHECK(q.vertices == std::vector<Vertex>{3, 10, 11, 5});
  CHECK(r.vertices == std::vector<Vertex>{4, 12, 13, 7});

  CHECK(p.kind == ChordKind::Out);
  CHECK(q.kind == ChordKind::In);
  CHECK(r.kind == ChordKind::Odd);
  CHECK(s.kind == ChordKind::Odd);

  CHECK(r.external);
  CHECK_FALSE(p.external);
  CHECK_FALSE(q.external);
  CHECK_FALSE(s.external);

  CHECK(chords_cross(fig.cycle, q, r));
  CHECK_FALSE(chords_cross(fig.cycle, p, q));
  CHECK_FALSE(chords_cross(fig.cycle, p, r));
  CHECK(chords_cross(fig.cycle, p, s));
  CHECK_FALSE(chords_cross(fig.cycle, q, s));

  const auto back = find_chords(fig.g, fig.cycle.reversed(), fig.m, fig.n);
  REQUIRE(back.size() == 4);
  std::size_t in = 0, out = 0, odd = 0;
  for (const auto& c : back) {
    in += c.kind == ChordKind::In;
    out += c.kind == ChordKind::Out;
    odd += c.kind == ChordKind::Odd;
  }
  CHECK(in == 1);
  CHECK(out == 1);
  CHECK(odd == 2);
}

TEST_CASE("segments follow the orientation") {
  const OrientedCycle c({0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5});
  CHECK(c.segment(4, 1) == std::vector<Vertex>{4, 5, 0, 1});
  CHECK(c.reversed().segment(4, 1) == std::vector<Vertex>{4, 3, 2, 1});
  CHECK(c.reversed().vertex(0) == 0);
  CHECK(c.reversed().vertex(1) == 5);
  CHECK(c.reversed().edge(0) == 5);
}

TEST_CASE("chords_cross by endpoint order") {
  const OrientedCycle c({0, 1, 2, 3}, {0, 1, 2, 3});
  Chord p, q;
  p.a = 0;
  p.b = 2;
  q.a = 1;
  q.b = 3;
  CHECK(chords_cross(c, p, q));
  CHECK(chords_cross(c, q, p));
  q.a = 2;
  CHECK_FALSE(chords_cross(c, p, q));
  p.b = 1;
  q.a = 2;
  q.b = 3;
  CHECK_FALSE(chords_cross(c, p, q));
}

TEST_CASE("chambers") {
  const auto k4k2 = disjoint_union(graphs::complete(4), graphs::k2());
  CHECK(chambers(k4k2) == std::vector<std::vector<Vertex>>{{0, 1, 2, 3}, {4, 5}});
  CHECK(chambers(graphs::cycle(5)).size() == 5);
  const auto c6 = graphs::cycle(6).with_edge(0, 2);
  CHECK(brute_force_count(delete_edge(c6, 6)) == brute_force_count(c6));
  CHECK(chambers(c6) == std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4, 5}});
  // an edge in no matching splits two otherwise matched blocks
  const Multigraph bridge(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(chambers(bridge) == std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}});
}

TEST_CASE("property: exchange and decomposition on random instances") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = verify::random_matchable(rng, 2 * (1 + rng() % 5), 2 + rng() % 2, rng() % 3);
    const auto all = enumerate_matchings(g, 40).matchings;
    const auto& m = all[rng() % all.size()];
    const auto& n = all[rng() % all.size()];
    const auto cycles = symdiff_decompose(g, m, n);
    auto current = m;
    std::set<Vertex> seen;
    for (const auto& c : cycles) {
      CHECK(c.length() % 2 == 0);
      CHECK(is_alternating_cycle(g, m, c));
      for (Vertex v : c.vertices()) CHECK(seen.insert(v).second);
      const auto flipped = exchange(g, current, c);
      CHECK(is_perfect_matching(g, flipped));
      CHECK(exchange(g, flipped, c) == current);
      current = flipped;
    }
    CHECK(current == n);
    CHECK(cycles.empty() == (m == n));
  }
}

TEST_CASE("property: reversing the cycle swaps in and out chords") {
  std::mt19937_64 rng(52);
  int with_chords = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = verify::random_matchable(rng, 2 * (2 + rng() % 4), 3, rng() % 3);
    const auto all = enumerate_matchings(g, 40).matchings;
    const auto& m = all[rng() % all.size()];
    const auto& n = all[rng() % all.size()];
    const auto& o = all[rng() % all.size()];
    const auto cycles = symdiff_decompose(g, m, o);
    if (cycles.empty()) continue;
    const auto& c = cycles.front();
    const auto fwd = find_chords(g, c, m, n);
    const auto rev = find_chords(g, c.reversed(), m, n);
    REQUIRE(fwd.size() == rev.size());
    with_chords += !fwd.empty();
    for (const auto& p : fwd) {
      const auto match = std::find_if(rev.begin(), rev.end(), [&](const Chord& q) {
        return std::minmax(p.a, p.b) == std::minmax(q.a, q.b);
      });
      REQUIRE(match != rev.end());
      if (p.kind == ChordKind::Odd) {
        CHECK(match->kind == ChordKind::Odd);
      } else {
        CHECK(match->kind != p.kind);
        CHECK(match->kind != ChordKind::Odd);
      }
      for (const auto& q : fwd) {
        CHECK(chords_cross(c, p, q) == chords_cross(c, q, p));
        CHECK(chords_cross(c, p, q) == chords_cross(c.reversed(), p, q));
      }
    }
  }
  CHECK(with_chords > 10);
}
