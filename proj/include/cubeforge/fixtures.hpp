#pragma once

#include <optional>
#include <vector>

#include "cubeforge/daisy.hpp"
#include "cubeforge/plane.hpp"

namespace cubeforge {

/// Q3 with the vertex 111 removed.
LabeledGraph q3_minus();

/// Two squares joined by one edge, drawn side by side.
PlaneGraph two_squares_bridge();

/// Square a,b,c,d around a square e,f,g,h (ids 0..7), with the spokes
/// a-e, b-f, c-g, d-h selected by bits 0..3 of `spokes`.
PlaneGraph nested_squares(unsigned spokes);

/// Spoke sets with at least two spokes, by spoke count then mask, whose
/// nested squares are not weakly elementary. The first one is the fixture.
std::vector<unsigned> search_non_weakly_elementary();

/// nested_squares with the spokes a-e and c-g: both spokes are forbidden,
/// and deleting them opens a new finite face between the squares.
PlaneGraph non_weakly_elementary_fixture();

/// A daisy cube with a class e such that tau(A) - e and tau(A/e) differ
/// under the index-preserving map.
struct ContractionMismatch {
  LabeledGraph graph;
  int cls = 0;
};

/// Scans the census up to k classes (by k, then census order, then class)
/// for the first contraction mismatch.
std::optional<ContractionMismatch> search_contraction_mismatch(int max_k);

/// tau(A) - e versus tau(A/e) with classes of A/e numbered like those of A
/// minus e. True when they coincide.
bool contraction_keeps_tau(const Graph& g, const PartialCubeCert& cert, int cls);

/// Trees on n vertices, one per isomorphism class, grown leaf by leaf.
std::vector<Graph> all_trees(int n);

/// Graphs on n vertices (n <= 6), one per isomorphism class, ordered by the
/// minimum adjacency bitmask over all vertex permutations.
std::vector<Graph> all_graphs(int n);

}  // namespace cubeforge
