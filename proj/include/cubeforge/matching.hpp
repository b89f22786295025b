#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cubeforge/graph.hpp"

namespace cubeforge {

/// Sorted edge list of pairwise disjoint edges.
using Matching = std::vector<Edge>;

/// Vertices covered by the matching, sorted.
std::vector<Vertex> covered(const Matching& m);

/// Every perfect matching, in lexicographic order of the sorted edge lists.
/// Throws BudgetError past the cap (default: the matching budget).
std::vector<Matching> perfect_matchings(const Graph& g, std::optional<std::size_t> cap = std::nullopt);

bool has_perfect_matching(const Graph& g);

/// Union of all perfect matchings, sorted. Throws InputError when g has none.
std::vector<Edge> allowed_edges(const Graph& g);

struct ElementaryComponent {
  std::vector<Vertex> vertices;
  bool is_k2 = false;
};

/// Components of the subgraph on the allowed edges. Throws InputError when g
/// has no perfect matching.
std::vector<ElementaryComponent> elementary_components(const Graph& g);

}  // namespace cubeforge
