#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cubeforge/bitstring.hpp"
#include "cubeforge/graph.hpp"
#include "cubeforge/partial_cube.hpp"

namespace cubeforge {

/// A graph together with the bit strings it was generated from.
struct LabeledGraph {
  Graph graph;
  BinaryLabeling labeling;
};

/// Daisy-cube witness: the partial-cube certificate based at `root`, whose
/// label set is downward closed.
struct DaisyCert {
  PartialCubeCert cert;
  Vertex root = 0;
};

/// Induced subgraph of the hypercube on the given labels. Vertices are
/// numbered in lexicographic label order.
LabeledGraph graph_from_labels(int width, std::vector<BitString> labels);

/// Q_n; throws BudgetError above the hypercube dimension budget.
LabeledGraph hypercube(int n);
/// Strings of length n without two consecutive ones.
LabeledGraph fibonacci_cube(int n);
/// Fibonacci strings that do not start and end with a one.
LabeledGraph lucas_cube(int n);

/// Q_n(X): induced on the downward closure of X. Throws InputError for an
/// empty X or a generator of the wrong width.
LabeledGraph daisy_from_generators(int n, std::span<const BitString> generators);

/// Graph of all cliques of g (including the empty one), adjacent when they
/// differ in one vertex. Labels are characteristic vectors over V(g).
/// Throws BudgetError when the clique count exceeds the cap (default: budget).
LabeledGraph simplex_graph(const Graph& g, std::optional<std::size_t> max_cliques = std::nullopt);

std::optional<DaisyCert> is_daisy_cube(const Graph& g);

/// Every label with position i set also appears with position i cleared.
bool is_downward_closed(const BinaryLabeling& labeling);

/// True iff the labels of `subset` equal their downward closure within the
/// labeled vertex set.
bool le_subgraph_check(const BinaryLabeling& labeling, std::span<const Vertex> subset);

/// Pairwise non-isomorphic daisy cubes with exactly k classes, as
/// downward-closed subsets of B^k that use every coordinate. Ordered by
/// vertex count, then edge count, then canonical label set. Throws
/// BudgetError above the census budget.
std::vector<LabeledGraph> enumerate_daisy_cubes(int k);

}  // namespace cubeforge
