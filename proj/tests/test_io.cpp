#include "doctest.h"
#include "oracles.hpp"

#include "cubeforge/daisy.hpp"
#include "cubeforge/error.hpp"
#include "cubeforge/fixtures.hpp"
#include "cubeforge/io.hpp"
#include "cubeforge/resonance.hpp"
#include "cubeforge/verify.hpp"

using namespace cubeforge;

TEST_CASE("graph JSON round trip") {
  const auto f = fibonacci_cube(4);
  const Json j = graph_to_json(f.graph, &f.labeling);
  const ParsedGraph back = graph_from_json(j);
  CHECK(back.graph == f.graph);
  REQUIRE(back.labels);
  CHECK(back.labels->labels == f.labeling.labels);
}

TEST_CASE("graph JSON from labels or generators") {
  const ParsedGraph a = graph_from_json(Json::parse(R"({"labels": ["00", "01", "10"]})"));
  CHECK(a.graph.size() == 2);
  const ParsedGraph b = graph_from_json(Json::parse(R"({"generators": ["110", "011"]})"));
  CHECK(b.graph.order() == 6);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 5]]})")), InputError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"([1, 2])")), InputError);
}

TEST_CASE("plane JSON round trip") {
  for (const PlaneGraph& pg : {fibonaccene(3), plane_disjoint_union(fibonaccene(1), two_squares_bridge())}) {
    const PlaneGraph back = plane_from_json(plane_to_json(pg));
    CHECK(back.graph() == pg.graph());
    CHECK(back.rotations() == pg.rotations());
    CHECK(back.outer_faces() == pg.outer_faces());
  }
}

TEST_CASE("DOT output names classes and faces") {
  const Graph c = cycle_graph(6);
  const auto cert = is_partial_cube(c);
  const std::string dot = graph_to_dot(c, &*cert, true);
  CHECK(dot.find("graph G") != std::string::npos);
  CHECK(dot.find("dashed") != std::string::npos);
  const std::string pdot = plane_to_dot(fibonaccene(2));
  CHECK(pdot.find("face 1") != std::string::npos);
}

TEST_CASE("budget parsing") {
  const Budget b = Budget::parse("census_classes=3,matchings=10");
  CHECK(b.census_classes == 3);
  CHECK(b.matchings == 10);
  CHECK_THROWS_AS(Budget::parse("nonsense"), InputError);
  CHECK_THROWS_AS(Budget::parse("matchings=x"), InputError);
}

TEST_CASE("verify reports are consistent") {
  const VerifyReport r = run_verify("fig1");
  CHECK(r.ok());
  for (const auto& s : r.statements) CHECK(s.failures.empty() == (s.passed == s.instances));
  CHECK_THROWS_AS(run_verify("lemma9.9"), InputError);
  CHECK_THROWS_AS(run_verify("lemma4.4", VerifyOptions{std::nullopt, 500}), InputError);
  CHECK(run_verify("fig1").to_text() == r.to_text());
}
