#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "cubeforge/graph.hpp"

namespace cubeforge {

/// Caller's choice of outer walks, one per connected component with edges.
/// Either face indices (in tracing order) or vertex walks; a walk hint names
/// the face that traverses walk[0] -> walk[1] and must match it exactly up to
/// rotation of the starting point. Both empty means "unique longest walk".
struct OuterHint {
  std::vector<int> faces;
  std::vector<std::vector<Vertex>> walks;

  bool empty() const { return faces.empty() && walks.empty(); }
};

/// Graph with a rotation system. Faces are traced with the rule
/// next(u->v) = (v -> successor of u in the rotation at v).
///
/// Components are assumed to lie side by side: every component contributes
/// one outer walk to the single infinite face, and all other walks are
/// finite faces.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_[v]; }
  const std::vector<std::vector<Vertex>>& rotations() const { return rotation_; }

  /// Face walks as vertex sequences; walk k traverses faces()[k][i] -> faces()[k][i+1], cyclically.
  const std::vector<std::vector<Vertex>>& faces() const { return faces_; }
  /// Index of the outer walk of each component with edges, ordered by smallest vertex.
  const std::vector<int>& outer_faces() const { return outer_; }
  bool is_outer(int face) const;
  /// Every face index that is not an outer walk, ascending.
  std::vector<int> finite_faces() const;

  /// Face traversing the directed edge u -> v.
  int face_of(Vertex u, Vertex v) const;
  /// Undirected edges on the boundary of a face, sorted and without repeats.
  std::vector<Edge> face_edges(int face) const;

  /// Outer walk of the component containing v, reversed, so that a
  /// coordinate embedding with counter-clockwise rotations gives clockwise
  /// order. Throws InputError for isolated vertices.
  std::vector<Vertex> periphery(Vertex v) const;

 private:
  friend struct PlaneAccess;

  Graph graph_;
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<std::vector<Vertex>> faces_;
  std::vector<std::vector<int>> dart_face_;  // aligned with graph_.neighbors(u)
  std::vector<int> outer_;
};

/// Validates the rotation system (each list is a permutation of a symmetric
/// simple adjacency), traces faces, checks Euler's formula per component and
/// resolves the outer walks. Throws InputError on an inconsistent rotation,
/// a failed Euler check, a bad hint or an ambiguous outer face.
PlaneGraph build_plane_graph(int n, std::vector<std::vector<Vertex>> rotations, const OuterHint& hint = {});

/// Counter-clockwise rotations from straight-line coordinates. The outer
/// walk of each component is the one enclosing positive signed area (the
/// only walk for a tree).
PlaneGraph embed_with_points(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                             const std::vector<std::pair<double, double>>& points);

/// Side-by-side union; vertices of b are shifted by a.order().
PlaneGraph plane_disjoint_union(const PlaneGraph& a, const PlaneGraph& b);

}  // namespace cubeforge
