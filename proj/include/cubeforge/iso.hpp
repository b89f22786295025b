#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cubeforge/daisy.hpp"
#include "cubeforge/graph.hpp"

namespace cubeforge {

/// Vertex map from the first graph to the second: map[v] is the image of v.
using VertexMap = std::vector<Vertex>;

/// Class index of the first partial cube -> class index of the second.
using ClassCorrespondence = std::vector<int>;

/// Canonical string of a forest: the sorted codes of its trees, each tree
/// encoded as nested parentheses rooted at a center.
struct ForestCode {
  std::string code;
  friend auto operator<=>(const ForestCode&, const ForestCode&) = default;
};

/// Edge-exact check that `map` is a bijection V(a) -> V(b) preserving
/// adjacency and non-adjacency.
bool is_isomorphism(const Graph& a, const Graph& b, const VertexMap& map);

/// Throws InputError when f has a cycle.
ForestCode forest_canonical(const Graph& f);

/// Isomorphism between two forests, built from the canonical codes.
/// Throws InputError when either input has a cycle.
std::optional<VertexMap> forests_isomorphic(const Graph& a, const Graph& b);

/// Backtracking search with degree / distance-profile pruning. Deterministic.
/// Throws BudgetError above the iso vertex budget.
std::optional<VertexMap> graphs_isomorphic(const Graph& a, const Graph& b);

/// Every isomorphism a -> b, in search order, up to `limit` of them.
std::vector<VertexMap> all_isomorphisms(const Graph& a, const Graph& b, std::size_t limit = 100000);

/// Builds the class-preserving isomorphism A -> B from an isomorphism of
/// forest tau-graphs by repeatedly contracting a pendant class, recursing,
/// and re-expanding through the matching of the contracted class.
///
/// Throws InputError when a tau-graph is not a forest or `upsilon` is not a
/// tau-graph isomorphism, and InternalError if any intermediate structural
/// claim fails.
VertexMap daisy_iso_from_tau(const Graph& a, const DaisyCert& cert_a, const Graph& b, const DaisyCert& cert_b,
                             const ClassCorrespondence& upsilon);

/// Three properties of a class-preserving isomorphism.
struct ClassIsoCheck {
  bool edge_exact = false;            // lambda is a graph isomorphism
  bool class_correspondence = false;  // uv in E_i  <=>  lambda(u)lambda(v) in F_upsilon(i)
  bool contraction_restriction = false;  // lambda induces A/E_j -> B/F_upsilon(j) for every j

  bool ok() const { return edge_exact && class_correspondence && contraction_restriction; }
};

ClassIsoCheck check_class_isomorphism(const Graph& a, const DaisyCert& cert_a, const Graph& b,
                                      const DaisyCert& cert_b, const ClassCorrespondence& upsilon,
                                      const VertexMap& lambda);

struct TauIsoDecision {
  bool isomorphic = false;
  std::optional<VertexMap> lambda;
  std::optional<ClassCorrespondence> correspondence;
};

/// Decides isomorphism of two daisy cubes with forest tau-graphs by comparing
/// the forests. Positive answers carry a verified lambda; negative answers are
/// cross-checked against graphs_isomorphic. Throws InputError when an input
/// is not a daisy cube or has a tau-graph with a cycle.
TauIsoDecision daisy_isomorphic_via_tau(const Graph& a, const Graph& b);

}  // namespace cubeforge
