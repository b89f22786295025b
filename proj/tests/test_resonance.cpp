#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "cubeforge/daisy.hpp"
#include "cubeforge/error.hpp"
#include "cubeforge/fixtures.hpp"
#include "cubeforge/matching.hpp"
#include "cubeforge/partial_cube.hpp"
#include "cubeforge/resonance.hpp"

using namespace cubeforge;

TEST_CASE("perfect matching counts match inclusion-exclusion") {
  std::mt19937 rng(61);
  for (int round = 0; round < 40; ++round) {
    const Graph g = oracle::random_bipartite(rng, 2 + round % 6, 0.45);
    const auto ms = perfect_matchings(g);
    CHECK(static_cast<long long>(ms.size()) == oracle::perfect_matchings_inclusion_exclusion(g));
    CHECK(has_perfect_matching(g) == !ms.empty());
    CHECK(std::is_sorted(ms.begin(), ms.end()));
    for (const auto& m : ms) CHECK(static_cast<int>(covered(m).size()) == g.order());
  }
  CHECK(perfect_matchings(cycle_graph(6)).size() == 2);
  CHECK(perfect_matchings(path_graph(3)).empty());
  CHECK_THROWS_AS(perfect_matchings(hypercube(3).graph, std::size_t{3}), BudgetError);
}

TEST_CASE("allowed edges lie on some perfect matching") {
  std::mt19937 rng(62);
  for (int round = 0; round < 30; ++round) {
    const Graph g = oracle::random_bipartite(rng, 3 + round % 4, 0.5);
    if (!has_perfect_matching(g)) {
      CHECK_THROWS_AS(allowed_edges(g), InputError);
      continue;
    }
    std::set<Edge> used;
    for (const auto& m : perfect_matchings(g)) used.insert(m.begin(), m.end());
    const auto allowed = allowed_edges(g);
    CHECK(std::set<Edge>(allowed.begin(), allowed.end()) == used);
  }
}

TEST_CASE("elementary components") {
  const auto comps = elementary_components(two_squares_bridge().graph());
  CHECK(comps.size() == 2);
  for (const auto& c : comps) CHECK_FALSE(c.is_k2);
  const auto path = elementary_components(path_graph(4));
  CHECK(path.size() == 2);
  for (const auto& c : path) CHECK(c.is_k2);
}

TEST_CASE("resonance graphs of small fixtures") {
  CHECK(oracle::isomorphic_by_search(resonance_graph(fibonaccene(1)).graph, path_graph(2)));
  for (int n = 1; n <= 5; ++n) {
    CHECK(oracle::isomorphic_by_search(resonance_graph(fibonaccene(n)).graph, fibonacci_cube(n).graph));
  }
  const auto r = resonance_graph(two_squares_bridge());
  CHECK(oracle::isomorphic_by_search(r.graph, hypercube(2).graph));
}

TEST_CASE("resonance adjacency is a single face flip") {
  const PlaneGraph pg = fibonaccene(3);
  const auto r = resonance_graph(pg);
  for (const Edge& e : r.graph.edges()) {
    std::vector<Edge> diff;
    std::set_symmetric_difference(r.matchings[e.u].begin(), r.matchings[e.u].end(), r.matchings[e.v].begin(),
                                  r.matchings[e.v].end(), std::back_inserter(diff));
    bool is_face = false;
    for (int f : pg.finite_faces()) is_face = is_face || pg.face_edges(f) == diff;
    CHECK(is_face);
  }
}

TEST_CASE("weakly elementary fixtures") {
  CHECK(is_weakly_elementary(fibonaccene(4)));
  CHECK(is_weakly_elementary(two_squares_bridge()));
  CHECK_FALSE(is_weakly_elementary(non_weakly_elementary_fixture()));
  CHECK(search_non_weakly_elementary().front() == 0b0101U);
  CHECK(is_weakly_elementary(nested_squares(0b1111)));
}

TEST_CASE("random weakly elementary grid graphs have median resonance graphs") {
  std::mt19937 rng(91);
  int tested = 0;
  for (int round = 0; round < 400 && tested < 25; ++round) {
    const auto s = oracle::random_grid(rng, 2 + round % 3, 3, 0.85);
    const PlaneGraph pg = embed_with_points(s.n, s.edges, s.points);
    if (!has_perfect_matching(pg.graph()) || !is_weakly_elementary(pg)) continue;
    ++tested;
    const auto r = resonance_graph(pg);
    CHECK(static_cast<long long>(r.matchings.size()) == oracle::perfect_matchings_inclusion_exclusion(pg.graph()));
    CHECK(is_median(r.graph));
  }
  CHECK(tested >= 10);
}

TEST_CASE("inner duals") {
  CHECK(oracle::isomorphic_by_search(inner_dual(fibonaccene(3)), path_graph(3)));
  CHECK(inner_dual(two_squares_bridge()).size() == 0);
  CHECK(allowed_inner_dual(fibonaccene(3)).order() == 3);
  CHECK_THROWS_AS(allowed_inner_dual(non_weakly_elementary_fixture()), InputError);
}

TEST_CASE("peripheral 2-colorability") {
  CHECK(is_peripherally_2_colorable(fibonaccene(1)));
  CHECK(is_peripherally_2_colorable(fibonaccene(5)));
  CHECK_FALSE(is_peripherally_2_colorable(two_squares_bridge()));
  CHECK_FALSE(is_peripherally_2_colorable(nested_squares(0b1111)));
}

TEST_CASE("alternation verdict does not depend on the periphery direction") {
  for (int n = 1; n <= 6; ++n) {
    const PlaneGraph pg = fibonaccene(n);
    const auto forward = periphery_degree3_colors(pg);
    const auto backward = periphery_degree3_colors(pg, true);
    auto alternates = [](const std::vector<Color>& c) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == c[(i + 1) % c.size()]) return false;
      }
      return c.size() % 2 == 0;
    };
    CHECK(forward.size() == backward.size());
    CHECK(alternates(forward) == alternates(backward));
  }
}
