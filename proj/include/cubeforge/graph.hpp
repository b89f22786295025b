#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cubeforge {

using Vertex = int;

/// Undirected edge, stored with the smaller endpoint first.
struct Edge {
  Vertex u{};
  Vertex v{};

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool touches(Vertex x) const { return x == u || x == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on the vertices 0..order()-1.
///
/// Immutable once built. Adjacency lists are sorted, so neighbor iteration
/// order is deterministic and adjacency queries are a binary search.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex a, Vertex b) const;
  bool has_vertex(Vertex v) const { return v >= 0 && v < order(); }

  /// All edges in lexicographic order; position i has edge_id i.
  std::vector<Edge> edges() const;

  /// Dense index of an edge in lexicographic order, absent for non-edges.
  std::optional<std::size_t> edge_id(Edge e) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  friend Graph graph_from_edges(int n, std::span<const Edge> edges);

  void finalize();

  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::size_t> offset_;
  std::size_t edge_count_ = 0;
};

/// Builds a graph from vertex pairs; duplicate pairs collapse.
/// Throws InputError on out-of-range identifiers or self-loops.
Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs);
Graph graph_from_edges(int n, std::span<const Edge> edges);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

/// All-pairs hop distances. Unreachable pairs are reported as absent.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n);

  int order() const { return n_; }
  std::optional<int> get(Vertex a, Vertex b) const;
  bool reachable(Vertex a, Vertex b) const { return at(a, b) != kUnreachable; }

  /// Distance between two vertices known to be in the same component.
  /// Throws InputError otherwise.
  int hops(Vertex a, Vertex b) const;

  bool connected() const;
  /// Largest finite entry.
  int max_finite() const;

 private:
  friend DistanceMatrix distances_all_pairs(const Graph& g);

  static constexpr std::int32_t kUnreachable = -1;

  std::int32_t at(Vertex a, Vertex b) const {
    return d_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
  }

  int n_ = 0;
  std::vector<std::int32_t> d_;
};

DistanceMatrix distances_all_pairs(const Graph& g);

/// Single-source hop distances; absent for unreachable vertices.
std::vector<std::optional<int>> bfs_distances(const Graph& g, Vertex source);

enum class Color : std::uint8_t { Black, White };

/// Proper 2-coloring with the smallest vertex of each component black,
/// absent when some component has an odd cycle.
std::optional<std::vector<Color>> two_coloring(const Graph& g);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> origin;                 // new id -> old id
  std::vector<std::optional<Vertex>> remap;   // old id -> new id
};

/// Subgraph induced by `vertices`; new identifiers follow increasing old ids.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Spanning subgraph keeping only the listed edges (which must be edges of g).
Graph spanning_subgraph(const Graph& g, std::span<const Edge> keep);

/// Vertex (a, b) of the product gets identifier a * h.order() + b.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Vertices of h are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

/// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

std::vector<Vertex> common_neighbors(const Graph& g, Vertex a, Vertex b);

bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

}  // namespace cubeforge
