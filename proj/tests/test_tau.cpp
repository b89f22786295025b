#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "cubeforge/daisy.hpp"
#include "cubeforge/fixtures.hpp"
#include "cubeforge/partial_cube.hpp"
#include "cubeforge/tau.hpp"

using namespace cubeforge;

namespace {

Graph tau_of(const Graph& g) {
  const auto cert = is_partial_cube(g);
  REQUIRE(cert);
  return tau_graph(g, *cert).graph;
}

// Classes adjacent when some u-v-w with d(u,w)=2 and a single common
// neighbor uses one edge of each.
Graph brute_tau(const Graph& g) {
  const auto cert = is_partial_cube(g);
  const auto d = oracle::floyd(g);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex u : g.neighbors(v)) {
      for (Vertex w : g.neighbors(v)) {
        if (u >= w || d[u][w] != 2) continue;
        int common = 0;
        for (Vertex x = 0; x < g.order(); ++x) common += d[u][x] == 1 && d[w][x] == 1;
        if (common != 1) continue;
        const int a = cert->theta.class_of(g, Edge(u, v));
        const int b = cert->theta.class_of(g, Edge(v, w));
        if (a != b) pairs.emplace_back(std::min(a, b), std::max(a, b));
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return build_graph(cert->theta.count(), pairs);
}

}  // namespace

TEST_CASE("tau-graphs of small families") {
  CHECK(tau_of(hypercube(4).graph).size() == 0);
  CHECK(oracle::isomorphic_by_permutation(tau_of(cycle_graph(6)), complete_graph(3)));
  CHECK(oracle::isomorphic_by_permutation(tau_of(path_graph(6)), path_graph(5)));
  CHECK(oracle::isomorphic_by_permutation(tau_of(q3_minus().graph), complete_graph(3)));
  CHECK(oracle::isomorphic_by_permutation(tau_of(star_graph(4)), complete_graph(4)));
}

TEST_CASE("convex 3-paths") {
  const Graph c = cycle_graph(6);
  CHECK(is_convex_p3(c, 0, 1, 2));
  CHECK_FALSE(is_convex_p3(cycle_graph(4), 0, 1, 2));
  CHECK_FALSE(is_convex_p3(complete_graph(3), 0, 1, 2));
}

TEST_CASE("tau matches the definition on random partial cubes") {
  std::mt19937 rng(41);
  int seen = 0;
  for (int round = 0; round < 400 && seen < 80; ++round) {
    const Graph g = oracle::random_graph(rng, 3 + round % 8, 0.3);
    if (!is_connected(g) || !is_partial_cube(g)) continue;
    ++seen;
    CHECK(tau_of(g) == brute_tau(g));
  }
  CHECK(seen >= 40);
}

TEST_CASE("tau of a product is the union of the factors' tau-graphs") {
  CHECK(tau_of_product_check(path_graph(3), cycle_graph(6)));
  CHECK(tau_of_product_check(q3_minus().graph, path_graph(4)));
  const Graph p = cartesian_product(path_graph(3), path_graph(3));
  CHECK(tau_of(p).size() == 2);
}

TEST_CASE("tau from explicit edge classes") {
  const Graph c = cycle_graph(6);
  const auto cert = is_partial_cube(c);
  const Graph t = tau_from_edge_classes(c, cert->theta.class_of_edge, cert->theta.count());
  CHECK(t == tau_graph(c, *cert).graph);
}
