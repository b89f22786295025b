#include "cubeforge/fixtures.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

#include "cubeforge/error.hpp"
#include "cubeforge/iso.hpp"
#include "cubeforge/resonance.hpp"
#include "cubeforge/tau.hpp"

namespace cubeforge {

LabeledGraph q3_minus() {
  const std::vector<BitString> gens{BitString::parse("110"), BitString::parse("101"), BitString::parse("011")};
  return daisy_from_generators(3, gens);
}

PlaneGraph two_squares_bridge() {
  const std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5},
                                                     {5, 6}, {6, 7}, {7, 4}, {1, 4}};
  const std::vector<std::pair<double, double>> points{{0, 0}, {1, 0}, {1, 1}, {0, 1},
                                                      {2, 0}, {3, 0}, {3, 1}, {2, 1}};
  return embed_with_points(8, edges, points);
}

PlaneGraph nested_squares(unsigned spokes) {
  if (spokes >= 16) throw InputError("spoke mask has four bits");
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}};
  for (int i = 0; i < 4; ++i) {
    if ((spokes >> i) & 1U) edges.emplace_back(i, i + 4);
  }
  const std::vector<std::pair<double, double>> points{{-2, -2}, {2, -2}, {2, 2}, {-2, 2},
                                                      {-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
  return embed_with_points(8, edges, points);
}

std::vector<unsigned> search_non_weakly_elementary() {
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < 16; ++m) {
    if (std::popcount(m) >= 2) masks.push_back(m);
  }
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  std::vector<unsigned> out;
  for (unsigned m : masks) {
    if (!is_weakly_elementary(nested_squares(m))) out.push_back(m);
  }
  return out;
}

PlaneGraph non_weakly_elementary_fixture() { return nested_squares(0b0101); }

bool contraction_keeps_tau(const Graph& g, const PartialCubeCert& cert, int cls) {
  const Contraction c = contract(g, cert, cls);
  const auto cc = is_partial_cube(c.graph);
  ensure(cc.has_value(), "contraction of a partial cube is not a partial cube");

  // class of the quotient -> class of g, read off any preimage edge
  std::vector<int> origin(static_cast<std::size_t>(cc->theta.count()), -1);
  for (const Edge& e : g.edges()) {
    const int from = cert.theta.class_of(g, e);
    if (from == cls) continue;
    const int to = cc->theta.class_of(c.graph, Edge(c.projection[e.u], c.projection[e.v]));
    ensure(origin[to] < 0 || origin[to] == from, "quotient class has two origins");
    origin[to] = from;
  }
  const Graph quotient_tau = tau_graph(c.graph, *cc).graph;
  const Graph full_tau = tau_graph(g, cert).graph;
  for (int i = 0; i < cc->theta.count(); ++i) {
    for (int j = i + 1; j < cc->theta.count(); ++j) {
      if (quotient_tau.adjacent(i, j) != full_tau.adjacent(origin[i], origin[j])) return false;
    }
  }
  return true;
}

std::optional<ContractionMismatch> search_contraction_mismatch(int max_k) {
  for (int k = 1; k <= max_k; ++k) {
    for (const LabeledGraph& g : enumerate_daisy_cubes(k)) {
      const auto cert = is_daisy_cube(g.graph);
      ensure(cert.has_value(), "census member is not a daisy cube");
      for (int e = 0; e < cert->cert.theta.count(); ++e) {
        if (!contraction_keeps_tau(g.graph, cert->cert, e)) return ContractionMismatch{g, e};
      }
    }
  }
  return std::nullopt;
}

std::vector<Graph> all_trees(int n) {
  if (n < 1) throw InputError("trees need at least one vertex");
  std::vector<Graph> level{Graph(1)};
  for (int size = 2; size <= n; ++size) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& t : level) {
      for (Vertex v = 0; v < t.order(); ++v) {
        auto edges = t.edges();
        edges.emplace_back(v, t.order());
        Graph grown = graph_from_edges(size, edges);
        if (seen.insert(forest_canonical(grown).code).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Graph> all_graphs(int n) {
  if (n < 0 || n > 6) throw InputError("graph enumeration supports 0..6 vertices");
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::pair<int, int>, int> slot_of;
  for (std::size_t i = 0; i < slots.size(); ++i) slot_of[slots[i]] = static_cast<int>(i);

  std::set<std::uint32_t> canon;
  const std::uint32_t total = std::uint32_t{1} << slots.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::uint32_t best = mask;
    for (const auto& p : perms) {
      std::uint32_t image = 0;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (((mask >> i) & 1U) == 0) continue;
        const int a = std::min(p[slots[i].first], p[slots[i].second]);
        const int b = std::max(p[slots[i].first], p[slots[i].second]);
        image |= std::uint32_t{1} << slot_of.at({a, b});
      }
      best = std::min(best, image);
    }
    canon.insert(best);
  }
  std::vector<Graph> out;
  for (std::uint32_t mask : canon) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1U) edges.push_back(slots[i]);
    }
    out.push_back(build_graph(n, edges));
  }
  return out;
}

}  // namespace cubeforge
