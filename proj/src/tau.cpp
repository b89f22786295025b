#include "cubeforge/tau.hpp"

#include <algorithm>

#include "cubeforge/error.hpp"
#include "cubeforge/iso.hpp"

namespace cubeforge {

namespace {

// Convexity of u-v-w given that uv and vw are edges.
bool convex_at(const Graph& g, Vertex u, Vertex v, Vertex w) {
  if (g.adjacent(u, w)) return false;
  const auto nu = g.neighbors(u);
  const auto nw = g.neighbors(w);
  auto a = nu.begin();
  auto b = nw.begin();
  while (a != nu.end() && b != nw.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      if (*a != v) return false;
      ++a;
      ++b;
    }
  }
  return true;
}

}  // namespace

bool is_convex_p3(const Graph& g, Vertex u, Vertex v, Vertex w) {
  if (u == w) throw InputError("convex path needs distinct ends");
  if (!g.adjacent(u, v) || !g.adjacent(v, w)) throw InputError("convex path arguments are not a 2-path");
  return convex_at(g, u, v, w);
}

Graph tau_from_edge_classes(const Graph& g, std::span<const int> class_of_edge, int class_count) {
  std::vector<Edge> adjacent_classes;
  std::vector<bool> marked(static_cast<std::size_t>(class_count) * static_cast<std::size_t>(class_count), false);
  auto cls = [&](Vertex a, Vertex b) { return class_of_edge[*g.edge_id(Edge(a, b))]; };
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const int ci = cls(nbrs[i], v);
        const int cj = cls(v, nbrs[j]);
        const auto slot = static_cast<std::size_t>(std::min(ci, cj)) * static_cast<std::size_t>(class_count) +
                          static_cast<std::size_t>(std::max(ci, cj));
        if (ci == cj || marked[slot]) continue;
        if (convex_at(g, nbrs[i], v, nbrs[j])) {
          marked[slot] = true;
          adjacent_classes.emplace_back(ci, cj);
        }
      }
    }
  }
  return graph_from_edges(class_count, adjacent_classes);
}

TauGraph tau_graph(const Graph& g, const PartialCubeCert& cert) {
  // Incident edges of a partial cube never share a class.
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<int> seen;
    for (Vertex w : g.neighbors(v)) seen.push_back(cert.theta.class_of(g, Edge(v, w)));
    std::sort(seen.begin(), seen.end());
    ensure(std::adjacent_find(seen.begin(), seen.end()) == seen.end(), "incident edges share a Theta-class");
  }
  TauGraph out;
  out.graph = tau_from_edge_classes(g, cert.theta.class_of_edge, cert.theta.count());
  out.source_classes = cert.theta.classes;
  return out;
}

bool tau_of_product_check(const Graph& g, const Graph& h) {
  const auto cg = is_partial_cube(g);
  const auto ch = is_partial_cube(h);
  if (!cg || !ch) throw InputError("tau_of_product_check: factors must be partial cubes");
  const Graph product = cartesian_product(g, h);
  const auto cp = is_partial_cube(product);
  ensure(cp.has_value(), "product of partial cubes is not a partial cube");
  const Graph expected = disjoint_union(tau_graph(g, *cg).graph, tau_graph(h, *ch).graph);
  return graphs_isomorphic(tau_graph(product, *cp).graph, expected).has_value();
}

}  // namespace cubeforge
