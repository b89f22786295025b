#pragma once

#include <vector>

#include "cubeforge/graph.hpp"
#include "cubeforge/matching.hpp"
#include "cubeforge/plane.hpp"

namespace cubeforge {

struct ResonanceGraph {
  Graph graph;
  std::vector<Matching> matchings;  // vertex i is matchings[i]
};

/// Matchings are adjacent when their symmetric difference is exactly the
/// boundary edge set of one finite face. Throws InputError when the graph has
/// no perfect matching, BudgetError past the matching budget.
ResonanceGraph resonance_graph(const PlaneGraph& pg);

/// True iff every finite face of the allowed-edge subgraph has the boundary
/// edge set of some finite face of pg. Faces of the subgraph are found as
/// regions: faces of pg merged across each deleted edge. Throws InputError
/// without a perfect matching.
bool is_weakly_elementary(const PlaneGraph& pg);

/// Graph on the finite faces (numbered in finite_faces() order), adjacent
/// when two boundaries share an edge.
Graph inner_dual(const PlaneGraph& pg);

/// Inner dual of the allowed-edge subgraph: the finite faces of pg whose
/// boundary edges are all allowed. Throws InputError unless pg is weakly
/// elementary.
Graph allowed_inner_dual(const PlaneGraph& pg);

/// Plane elementary bipartite, not K2, degrees 2 or 3, degree-3 vertices on
/// the periphery and alternating in color along it.
bool is_peripherally_2_colorable(const PlaneGraph& pg);

/// Colors of the degree-3 vertices met along the clockwise periphery.
/// Empty for graphs without edges.
std::vector<Color> periphery_degree3_colors(const PlaneGraph& pg, bool reversed = false);

/// Zigzag chain of n hexagons. Throws InputError for n < 1.
PlaneGraph fibonaccene(int n);

}  // namespace cubeforge
