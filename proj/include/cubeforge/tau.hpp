#pragma once

#include <span>
#include <vector>

#include "cubeforge/graph.hpp"
#include "cubeforge/partial_cube.hpp"

namespace cubeforge {

/// Graph on the Theta-classes of a partial cube. Two classes are adjacent
/// when some convex path on three vertices uses one edge of each.
struct TauGraph {
  Graph graph;
  std::vector<std::vector<Edge>> source_classes;
};

/// u-v-w with uv, vw edges: true iff u, w are nonadjacent and v is their only
/// common neighbor. Throws InputError when uv or vw is not an edge or u == w.
bool is_convex_p3(const Graph& g, Vertex u, Vertex v, Vertex w);

/// Tau adjacency for an arbitrary edge classification (`class_of_edge` is
/// indexed by Graph::edge_id, values in [0, class_count)).
Graph tau_from_edge_classes(const Graph& g, std::span<const int> class_of_edge, int class_count);

TauGraph tau_graph(const Graph& g, const PartialCubeCert& cert);

/// Checks tau(G x H) against the disjoint union tau(G) + tau(H).
/// Throws InputError when a factor is not a partial cube.
bool tau_of_product_check(const Graph& g, const Graph& h);

}  // namespace cubeforge
