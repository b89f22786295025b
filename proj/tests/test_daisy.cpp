#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "cubeforge/daisy.hpp"
#include "cubeforge/error.hpp"
#include "cubeforge/fixtures.hpp"

using namespace cubeforge;

namespace {

int fibonacci(int n) {
  int a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    const int c = a + b;
    a = b;
    b = c;
  }
  return a;
}

}  // namespace

TEST_CASE("hypercube, Fibonacci and Lucas cube orders") {
  for (int n = 0; n <= 6; ++n) {
    CHECK(hypercube(n).graph.order() == 1 << n);
    CHECK(hypercube(n).graph.size() == static_cast<std::size_t>(n * (1 << (n > 0 ? n - 1 : 0))));
  }
  for (int n = 1; n <= 12; ++n) {
    CHECK(fibonacci_cube(n).graph.order() == fibonacci(n + 2));
    if (n >= 3) CHECK(lucas_cube(n).graph.order() == fibonacci(n - 1) + fibonacci(n + 1));
  }
  CHECK(lucas_cube(1).graph.order() == 1);
  CHECK(oracle::isomorphic_by_permutation(lucas_cube(3).graph, star_graph(3)));
}

TEST_CASE("labels of generated cubes are downward closed and isometric") {
  for (const LabeledGraph& g : {fibonacci_cube(7), lucas_cube(7), hypercube(4), q3_minus()}) {
    CHECK(is_downward_closed(g.labeling));
    CHECK(oracle::hamming_equals_distance(g.graph, g.labeling.labels));
  }
}

TEST_CASE("daisy_from_generators takes the down-closure") {
  const std::vector<BitString> gens{BitString::parse("1100"), BitString::parse("0011")};
  const auto g = daisy_from_generators(4, gens);
  CHECK(g.graph.order() == 7);
  CHECK(oracle::isomorphic_by_search(g.graph, [] {
    // two squares sharing a vertex
    return build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
  }()));
  const std::vector<BitString> wrong{BitString::parse("10")};
  CHECK_THROWS_AS(daisy_from_generators(3, wrong), InputError);
}

TEST_CASE("daisy recognition on known graphs") {
  CHECK(is_daisy_cube(fibonacci_cube(6).graph));
  CHECK(is_daisy_cube(q3_minus().graph));
  CHECK(is_daisy_cube(path_graph(3)));
  CHECK_FALSE(is_daisy_cube(cycle_graph(6)));
  CHECK_FALSE(is_daisy_cube(cycle_graph(5)));
  CHECK_FALSE(is_daisy_cube(path_graph(4)));
  const auto cert = is_daisy_cube(fibonacci_cube(5).graph);
  REQUIRE(cert);
  CHECK(is_downward_closed(rebase(cert->cert, cert->root).labeling));
}

TEST_CASE("random down-sets are recognized after shuffling vertex ids") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int round = 0; round < 60; ++round) {
    const int k = 2 + round % 5;
    std::vector<BitString> gens;
    for (int j = 0; j < 3; ++j) {
      BitString s(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) s.set(static_cast<std::size_t>(i), bit(rng) == 1);
      gens.push_back(s);
    }
    const auto g = daisy_from_generators(k, gens);
    const Graph shuffled = relabel(g.graph, oracle::random_permutation(rng, g.graph.order()));
    const auto cert = is_daisy_cube(shuffled);
    REQUIRE(cert);
    CHECK(oracle::hamming_equals_distance(shuffled, cert->cert.labeling.labels));
  }
}

TEST_CASE("le_subgraph_check and is_downward_closed") {
  const auto f = fibonacci_cube(4);
  CHECK(is_downward_closed(f.labeling));
  BinaryLabeling broken = f.labeling;
  broken.labels.erase(broken.labels.begin());  // drop 0000
  CHECK_FALSE(is_downward_closed(broken));
  std::vector<Vertex> all(static_cast<std::size_t>(f.graph.order()));
  std::iota(all.begin(), all.end(), 0);
  CHECK(le_subgraph_check(f.labeling, all));
}

TEST_CASE("census counts and brute enumeration agree") {
  const std::vector<int> expected{1, 2, 5, 20};
  for (int k = 1; k <= 4; ++k) {
    const auto census = enumerate_daisy_cubes(k);
    CHECK(static_cast<int>(census.size()) == expected[k - 1]);
    std::vector<Graph> brute;
    for (const auto& members : oracle::spanning_down_sets(k)) brute.push_back(oracle::cube_subgraph(members));
    CHECK(oracle::distinct_up_to_iso(brute).size() == census.size());
    for (std::size_t i = 0; i < census.size(); ++i) {
      for (std::size_t j = i + 1; j < census.size(); ++j) {
        CHECK_FALSE(oracle::isomorphic_by_search(census[i].graph, census[j].graph));
      }
    }
  }
  const auto two = enumerate_daisy_cubes(2);
  CHECK(oracle::isomorphic_by_search(two[0].graph, path_graph(3)) != oracle::isomorphic_by_search(two[1].graph, path_graph(3)));
}

TEST_CASE("simplex graphs match the clique oracle") {
  std::mt19937 rng(23);
  for (int round = 0; round < 40; ++round) {
    const Graph g = oracle::random_graph(rng, 1 + round % 7, 0.5);
    const auto s = simplex_graph(g);
    CHECK(oracle::isomorphic_by_search(s.graph, oracle::cube_subgraph(oracle::cliques(g))));
    CHECK(is_daisy_cube(s.graph));
  }
  CHECK_THROWS_AS(simplex_graph(complete_graph(6), std::size_t{10}), BudgetError);
}
