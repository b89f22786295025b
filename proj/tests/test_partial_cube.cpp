#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "cubeforge/daisy.hpp"
#include "cubeforge/error.hpp"
#include "cubeforge/partial_cube.hpp"

using namespace cubeforge;

namespace {

// Brute transitive closure of the Theta relation, as a class id per edge.
std::vector<int> brute_theta_classes(const Graph& g) {
  const auto d = oracle::floyd(g);
  const auto edges = g.edges();
  std::vector<int> cls(edges.size());
  std::iota(cls.begin(), cls.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = 0; j < edges.size(); ++j) {
        if (cls[i] != cls[j] && oracle::theta(d, edges[i], edges[j])) {
          const int lo = std::min(cls[i], cls[j]);
          const int hi = std::max(cls[i], cls[j]);
          for (int& c : cls) {
            if (c == hi) c = lo;
          }
          changed = true;
        }
      }
    }
  }
  return cls;
}

bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
    }
  }
  return true;
}

std::vector<Graph> connected_samples(std::mt19937& rng, int count) {
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = 2 + static_cast<int>(out.size()) % 9;
    Graph g = oracle::random_graph(rng, n, 0.35);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST_CASE("known partial cubes and non-partial cubes") {
  CHECK(is_partial_cube(hypercube(4).graph));
  CHECK(is_partial_cube(cycle_graph(6)));
  CHECK(is_partial_cube(path_graph(5)));
  CHECK(is_partial_cube(star_graph(4)));
  CHECK_FALSE(is_partial_cube(cycle_graph(5)));
  CHECK_FALSE(is_partial_cube(complete_graph(3)));
  CHECK_FALSE(is_partial_cube(build_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})));  // K2,3
  CHECK_FALSE(is_partial_cube(Graph(2)));
  CHECK(is_partial_cube(Graph(1)));
}

TEST_CASE("theta classes match the brute closure") {
  std::mt19937 rng(21);
  for (const Graph& g : connected_samples(rng, 120)) {
    const ThetaResult t = theta_classes(g);
    CHECK(same_partition(t.partition.class_of_edge, brute_theta_classes(g)));
  }
}

TEST_CASE("certificates re-verify Hamming distance equals graph distance") {
  std::mt19937 rng(4);
  int certified = 0;
  for (const Graph& g : connected_samples(rng, 300)) {
    const auto cert = is_partial_cube(g);
    if (!cert) continue;
    ++certified;
    CHECK(verify_certificate(g, *cert));
    CHECK(oracle::hamming_equals_distance(g, cert->labeling.labels));
    CHECK(cert->labeling.labels[cert->base].none());
    const auto moved = rebase(*cert, g.order() - 1);
    CHECK(moved.labeling.labels[g.order() - 1].none());
    CHECK(verify_certificate(g, moved));
  }
  CHECK(certified > 50);
}

TEST_CASE("theta_related follows the distance inequality") {
  const Graph c = cycle_graph(6);
  const auto d = distances_all_pairs(c);
  CHECK(theta_related(c, d, Edge(0, 1), Edge(3, 4)));
  CHECK_FALSE(theta_related(c, d, Edge(0, 1), Edge(1, 2)));
}

TEST_CASE("halfspaces split the vertex set and boundary sets are matched") {
  const auto q = hypercube(3);
  const auto cert = is_partial_cube(q.graph);
  REQUIRE(cert);
  for (int c = 0; c < cert->theta.count(); ++c) {
    const Halfspaces h = halfspaces(q.graph, *cert, c);
    CHECK(h.w_ab.size() + h.w_ba.size() == 8);
    CHECK(h.u_ab.size() == h.u_ba.size());
    CHECK(is_peripheral(q.graph, *cert, c));
  }
  const Graph p = path_graph(4);
  const auto pc = is_partial_cube(p);
  CHECK(is_peripheral(p, *pc, pc->theta.class_of(p, Edge(0, 1))));
  CHECK_FALSE(is_peripheral(p, *pc, pc->theta.class_of(p, Edge(1, 2))));
  CHECK_THROWS_AS(halfspaces(p, *pc, 7), InputError);
}

TEST_CASE("contraction of a class lowers the class count by one") {
  std::mt19937 rng(9);
  for (const Graph& g : connected_samples(rng, 200)) {
    const auto cert = is_partial_cube(g);
    if (!cert) continue;
    for (int c = 0; c < cert->theta.count(); ++c) {
      const Contraction k = contract(g, *cert, c);
      const auto kc = is_partial_cube(k.graph);
      REQUIRE(kc);
      CHECK(kc->theta.count() == cert->theta.count() - 1);
      for (const Edge& e : g.edges()) {
        const bool merged = k.projection[e.u] == k.projection[e.v];
        CHECK(merged == (cert->theta.class_of(g, e) == c));
      }
    }
  }
}

TEST_CASE("peripheral expansion adds one peripheral class") {
  const Graph c6 = cycle_graph(6);
  const std::vector<Vertex> side{0, 1, 2, 3};
  const Graph e = peripheral_expansion(c6, side);
  CHECK(e.order() == 10);
  const auto cert = is_partial_cube(e);
  REQUIRE(cert);
  CHECK(cert->theta.count() == 4);
  int peripheral = 0;
  for (int c = 0; c < cert->theta.count(); ++c) peripheral += is_peripheral(e, *cert, c);
  CHECK(peripheral >= 1);
  // expanding along the whole graph is the product with K2
  const std::vector<Vertex> all{0, 1, 2, 3, 4, 5};
  CHECK(oracle::isomorphic_by_search(peripheral_expansion(c6, all), cartesian_product(c6, path_graph(2))));
  const std::vector<Vertex> non_isometric{0, 2};
  CHECK_THROWS_AS(peripheral_expansion(c6, non_isometric), InputError);
}

TEST_CASE("intervals and median graphs") {
  const Graph c = cycle_graph(6);
  CHECK(interval(c, 0, 3) == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  CHECK(interval(c, 0, 2) == std::vector<Vertex>{0, 1, 2});
  std::mt19937 rng(31);
  for (const Graph& g : connected_samples(rng, 150)) CHECK(is_median(g) == oracle::median_by_triples(g));
  CHECK(is_median(hypercube(3).graph));
  CHECK_FALSE(is_median(cycle_graph(6)));
}
