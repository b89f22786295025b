#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubeforge/daisy.hpp"
#include "cubeforge/graph.hpp"
#include "cubeforge/partial_cube.hpp"
#include "cubeforge/plane.hpp"

namespace cubeforge {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file ("-" reads stdin). Throws InputError on
/// I/O or parse failure.
Json read_json(const std::string& path);

/// {"n": int, "edges": [[u, v], ...]} plus "labels" when given.
Json graph_to_json(const Graph& g, const BinaryLabeling* labels = nullptr);

/// Accepts {"n", "edges"}, or {"labels": [...]} for the induced hypercube
/// subgraph, or {"width", "generators": [...]} for a daisy cube. Labels are
/// returned when the input carried them.
struct ParsedGraph {
  Graph graph;
  std::optional<BinaryLabeling> labels;
};
ParsedGraph graph_from_json(const Json& j);

/// {"n", "rotations", "outer"}; "outer" is a face index, a list of face
/// indices, or a list of walks. Face walks are added for reference and are
/// ignored on input.
Json plane_to_json(const PlaneGraph& pg);
PlaneGraph plane_from_json(const Json& j);

Json census_to_json(int k, const std::vector<LabeledGraph>& graphs);

Json theta_to_json(const ThetaResult& theta);

/// DOT with edges colored by Theta-class when `cert` is given, and the tau
/// graph drawn as a separate cluster when `tau_overlay` is set.
std::string graph_to_dot(const Graph& g, const PartialCubeCert* cert, bool tau_overlay,
                         const std::string& name = "G");

/// DOT of the underlying graph with one comment line per face.
std::string plane_to_dot(const PlaneGraph& pg, const std::string& name = "P");

}  // namespace cubeforge
