#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "posetcube/matching.hpp"
#include "test_support.hpp"

using namespace posetcube;
using testsupport::thrown_kind;

namespace {

BipartiteGraph make_graph(std::vector<int> left, std::vector<int> right,
                          std::map<int, std::vector<int>> adjacency) {
  BipartiteGraph g;
  g.left = std::move(left);
  g.right = std::move(right);
  g.adjacency = std::move(adjacency);
  return g;
}

}  // namespace

TEST_SUITE("matching") {
  TEST_CASE("single edge") {
    const auto g = make_graph({1}, {1}, {{1, {1}}});
    const Matching m = maximum_matching(g);
    CHECK(m.pairs == std::map<int, int>{{1, 1}});
  }

  TEST_CASE("pigeonhole") {
    const auto g = make_graph({1, 2}, {1}, {{1, {1}}, {2, {1}}});
    const Matching m = maximum_matching(g);
    CHECK(m.pairs == std::map<int, int>{{1, 1}});
  }

  TEST_CASE("deterministic augmenting order") {
    // a={1}, b={2}, c={3}; a reroutes to 2 when b claims 1, then c takes 3.
    const auto g = make_graph({1, 2, 3}, {1, 2, 3}, {{1, {1, 2}}, {2, {1}}, {3, {2, 3}}});
    const Matching m = maximum_matching(g);
    CHECK(m.pairs == std::map<int, int>{{1, 2}, {2, 1}, {3, 3}});
    CHECK(oracles::brute_max_matching(g) == 3);
  }

  TEST_CASE("hall violator on a saturated side is absent") {
    const auto g = make_graph({1, 2}, {1, 2}, {{1, {1}}, {2, {2}}});
    const Matching m = maximum_matching(g);
    CHECK_FALSE(hall_violator(g, m).has_value());
  }

  TEST_CASE("hall violator of deficiency one") {
    const auto g = make_graph({1, 2}, {7}, {{1, {7}}, {2, {7}}});
    const Matching m = maximum_matching(g);
    const auto s = hall_violator(g, m);
    REQUIRE(s.has_value());
    CHECK(*s == std::vector<int>{1, 2});
  }

  TEST_CASE("hall violator follows alternating paths") {
    const auto g = make_graph({1, 2, 3}, {1, 2, 3}, {{1, {1}}, {2, {1}}, {3, {1, 2}}});
    const Matching m = maximum_matching(g);
    CHECK(m.pairs == std::map<int, int>{{1, 1}, {3, 2}});
    const auto s = hall_violator(g, m);
    REQUIRE(s.has_value());
    CHECK(*s == std::vector<int>{1, 2});  // unmatched 2 reaches 1 via the matched edge
  }

  TEST_CASE("hall violator rejects augmentable matchings") {
    const auto g = make_graph({1}, {1}, {{1, {1}}});
    CHECK(thrown_kind([&] { hall_violator(g, Matching{}); }) == ErrorKind::NotMaximum);
  }

  TEST_CASE("hall violator rejects malformed matchings") {
    const auto g = make_graph({1, 2}, {1, 2}, {{1, {1}}, {2, {2}}});
    Matching not_an_edge;
    not_an_edge.pairs = {{1, 2}};
    CHECK(thrown_kind([&] { hall_violator(g, not_an_edge); }) == ErrorKind::BadParameter);
  }

  TEST_CASE("matches brute force on random graphs") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 300; ++trial) {
      const BipartiteGraph g = oracles::random_bipartite(rng, 8, 9);
      const Matching m = maximum_matching(g);
      CHECK(static_cast<int>(m.pairs.size()) == oracles::brute_max_matching(g));

      const auto s = hall_violator(g, m);
      CHECK(s.has_value() == !oracles::brute_hall_holds(g));
      if (s.has_value()) {
        std::set<int> neighbours;
        for (int l : *s) {
          const auto& nbrs = g.adjacency.at(l);
          neighbours.insert(nbrs.begin(), nbrs.end());
        }
        CHECK(neighbours.size() < s->size());
        // N(S) is matched entirely back into S.
        for (int r : neighbours) {
          bool matched_into_s = false;
          for (const auto& [l, mr] : m.pairs) {
            if (mr == r) {
              matched_into_s = std::find(s->begin(), s->end(), l) != s->end();
            }
          }
          CHECK(matched_into_s);
        }
      }
    }
  }

  TEST_CASE("könig defect formula on random graphs") {
    std::mt19937 rng(131);
    for (int trial = 0; trial < 200; ++trial) {
      const BipartiteGraph g = oracles::random_bipartite(rng, 10, 8);
      const Matching m = maximum_matching(g);
      // |M| = |L| - max over W of (|W| - |N(W)|)
      int worst_defect = 0;
      const size_t n = g.left.size();
      for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        std::set<int> neighbours;
        int members = 0;
        for (size_t i = 0; i < n; ++i) {
          if (!((mask >> i) & 1)) continue;
          ++members;
          const auto& nbrs = g.adjacency.at(g.left[i]);
          neighbours.insert(nbrs.begin(), nbrs.end());
        }
        worst_defect = std::max(worst_defect, members - static_cast<int>(neighbours.size()));
      }
      CHECK(static_cast<int>(m.pairs.size()) == static_cast<int>(n) - worst_defect);
    }
  }

  TEST_CASE("identical inputs produce identical outputs") {
    std::mt19937 rng(151);
    for (int trial = 0; trial < 50; ++trial) {
      const BipartiteGraph g = oracles::random_bipartite(rng, 8, 8);
      const Matching m1 = maximum_matching(g);
      const Matching m2 = maximum_matching(g);
      CHECK(m1.pairs == m2.pairs);
      CHECK(hall_violator(g, m1) == hall_violator(g, m2));
    }
  }
}
