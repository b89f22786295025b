#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cubeforge/bitstring.hpp"
#include "cubeforge/graph.hpp"

namespace cubeforge {

/// Partition of the edge set into Djokovic-Winkler classes.
///
/// Classes are numbered by their smallest edge, so the numbering depends only
/// on the graph and not on traversal order.
struct ThetaPartition {
  std::vector<std::vector<Edge>> classes;  // each sorted
  std::vector<int> class_of_edge;          // indexed by Graph::edge_id

  int count() const { return static_cast<int>(classes.size()); }
  /// Class of an edge of g. Throws InputError for non-edges.
  int class_of(const Graph& g, Edge e) const;
};

struct ThetaResult {
  ThetaPartition partition;  // classes of the transitive closure
  bool transitive = false;   // raw relation was already transitive
};

/// Isometric hypercube embedding witness.
///
/// Coordinate i of a label is set when the vertex lies on the side of class i
/// away from `base`.
struct PartialCubeCert {
  ThetaPartition theta;
  BinaryLabeling labeling;
  Vertex base = 0;
};

/// W and U sets for an oriented edge ab of a class.
struct Halfspaces {
  Vertex a = 0;
  Vertex b = 0;
  std::vector<Vertex> w_ab;
  std::vector<Vertex> w_ba;
  std::vector<Vertex> u_ab;
  std::vector<Vertex> u_ba;
};

struct Contraction {
  Graph graph;
  std::vector<Vertex> projection;  // old vertex -> merged vertex
};

/// d(x1,y1) + d(x2,y2) != d(x1,y2) + d(x2,y1) for e = x1x2, f = y1y2.
/// Throws InputError if e or f is not an edge or the graph is disconnected.
bool theta_related(const Graph& g, const DistanceMatrix& d, Edge e, Edge f);

/// Classes of the transitive closure of the relation. Throws InputError when
/// g is disconnected.
ThetaResult theta_classes(const Graph& g);

/// Certificate iff g is connected, bipartite and the class-coordinate
/// labeling from vertex 0 is an isometry into the hypercube.
std::optional<PartialCubeCert> is_partial_cube(const Graph& g);

/// Same certificate with labels re-expressed relative to a new base vertex.
PartialCubeCert rebase(const PartialCubeCert& cert, Vertex base);

/// Exhaustive check of the certificate invariants (distance equals Hamming
/// distance for every pair, edges flip exactly their class coordinate).
bool verify_certificate(const Graph& g, const PartialCubeCert& cert);

/// Halfspaces of class `cls`. Without an explicit orientation, a is the
/// endpoint of the class's smallest edge on the base vertex's side.
Halfspaces halfspaces(const Graph& g, const PartialCubeCert& cert, int cls,
                      std::optional<std::pair<Vertex, Vertex>> oriented = std::nullopt);

bool is_peripheral(const Graph& g, const PartialCubeCert& cert, int cls);

/// Quotient by the edges of one class. Merged vertices are numbered in order
/// of their smallest original identifier.
Contraction contract(const Graph& g, const PartialCubeCert& cert, int cls);

/// pe(H, H0): the copy of H0[i] (H0 sorted) gets identifier H.order() + i.
/// Throws InputError when H0 is empty or not isometric in H.
Graph peripheral_expansion(const Graph& h, std::span<const Vertex> h0);

/// Vertices on shortest u-v paths, sorted. Throws InputError across components.
std::vector<Vertex> interval(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v);
std::vector<Vertex> interval(const Graph& g, Vertex u, Vertex v);

/// Brute-force triple check. Throws InputError when g is disconnected.
bool is_median(const Graph& g);

}  // namespace cubeforge
