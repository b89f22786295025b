#pragma once

#include <cstdint>

#include "cubeforge/daisy.hpp"
#include "cubeforge/graph.hpp"
#include "cubeforge/plane.hpp"

namespace cubeforge {

/// Peripherally 2-colorable plane graph whose inner dual is T. Node t gets
/// an even face of size max(6, 2 deg(t) + 2); child faces are glued onto
/// free periphery edges of their parent, with glue positions found by
/// backtracking. `seed` rotates the candidate order. Both postconditions are
/// checked before returning. Throws InputError unless T is a tree on at most
/// 10 vertices.
PlaneGraph tree_to_p2c(const Graph& tree, std::uint64_t seed = 0);

/// Plane bipartite graph whose resonance graph is isomorphic to h: one
/// tree_to_p2c piece per component of the tau-graph, side by side. Throws
/// NotRealizableError when the tau-graph has a cycle, InputError when h has
/// no edge or the certificate is invalid.
PlaneGraph realize_resonance(const Graph& h, const DaisyCert& cert, std::uint64_t seed = 0);

}  // namespace cubeforge
