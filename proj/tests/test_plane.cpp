#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "cubeforge/error.hpp"
#include "cubeforge/fixtures.hpp"
#include "cubeforge/plane.hpp"
#include "cubeforge/resonance.hpp"

using namespace cubeforge;

namespace {

void check_euler(const PlaneGraph& pg) {
  const auto comps = components(pg.graph());
  int nontrivial = 0;
  for (const auto& c : comps) nontrivial += c.size() > 1;
  // one outer walk per component with edges, all others bounded
  const long v = pg.order();
  const long e = static_cast<long>(pg.graph().size());
  const long f = static_cast<long>(pg.faces().size());
  const long isolated = static_cast<long>(comps.size()) - nontrivial;
  CHECK(v - isolated - e + f == 2L * nontrivial);
  CHECK(static_cast<int>(pg.outer_faces().size()) == nontrivial);
}

}  // namespace

TEST_CASE("square and hexagon faces") {
  const PlaneGraph sq = build_plane_graph(4, {{1, 3}, {2, 0}, {3, 1}, {0, 2}}, OuterHint{{0}, {}});
  // both walks of a lone cycle have the same length
  CHECK_THROWS_AS(build_plane_graph(4, {{1, 3}, {2, 0}, {3, 1}, {0, 2}}), InputError);
  CHECK(sq.faces().size() == 2);
  CHECK(sq.finite_faces().size() == 1);
  check_euler(sq);
  const PlaneGraph hex = fibonaccene(1);
  CHECK(hex.order() == 6);
  CHECK(hex.finite_faces().size() == 1);
  CHECK(hex.periphery(0).size() == 6);
}

TEST_CASE("rotation systems are validated") {
  CHECK_THROWS_AS(build_plane_graph(3, {{1}, {0}}), InputError);
  CHECK_THROWS_AS(build_plane_graph(2, {{1, 1}, {0}}), InputError);
  CHECK_THROWS_AS(build_plane_graph(2, {{1}, {}}), InputError);
  CHECK_THROWS_AS(build_plane_graph(2, {{0}, {}}), InputError);
  // K4 with a rotation that is not planar: Euler fails
  CHECK_THROWS_AS(build_plane_graph(4, {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}), InputError);
}

TEST_CASE("fibonaccene face structure") {
  for (int n = 1; n <= 8; ++n) {
    const PlaneGraph pg = fibonaccene(n);
    CHECK(pg.order() == 4 * n + 2);
    CHECK(pg.finite_faces().size() == static_cast<std::size_t>(n));
    for (int f : pg.finite_faces()) CHECK(pg.face_edges(f).size() == 6);
    check_euler(pg);
    CHECK(oracle::isomorphic_by_search(inner_dual(pg), path_graph(n)));
  }
}

TEST_CASE("every dart lies on exactly one face") {
  const PlaneGraph pg = fibonaccene(4);
  std::size_t darts = 0;
  for (const auto& f : pg.faces()) darts += f.size();
  CHECK(darts == 2 * pg.graph().size());
  for (const Edge& e : pg.graph().edges()) {
    const int a = pg.face_of(e.u, e.v);
    const int b = pg.face_of(e.v, e.u);
    CHECK(a >= 0);
    CHECK(b >= 0);
  }
}

TEST_CASE("Euler formula holds after every edge deletion and retrace") {
  std::mt19937 rng(77);
  for (int round = 0; round < 40; ++round) {
    const auto s = oracle::random_grid(rng, 3 + round % 3, 3, 0.8);
    const PlaneGraph pg = embed_with_points(s.n, s.edges, s.points);
    check_euler(pg);
    for (std::size_t drop = 0; drop < s.edges.size(); ++drop) {
      auto fewer = s.edges;
      fewer.erase(fewer.begin() + static_cast<long>(drop));
      check_euler(embed_with_points(s.n, fewer, s.points));
    }
  }
  for (unsigned mask = 0; mask < 16; ++mask) check_euler(nested_squares(mask));
}

TEST_CASE("disjoint union keeps one outer walk per component") {
  const PlaneGraph u = plane_disjoint_union(fibonaccene(2), two_squares_bridge());
  check_euler(u);
  CHECK(u.outer_faces().size() == 2);
  CHECK(u.finite_faces().size() == 4);
}

TEST_CASE("outer hints select the outer face") {
  const std::vector<std::vector<Vertex>> rot{{1, 3}, {2, 0}, {3, 1}, {0, 2}};
  const PlaneGraph a = build_plane_graph(4, rot, OuterHint{{0}, {}});
  const PlaneGraph b = build_plane_graph(4, rot, OuterHint{{1}, {}});
  CHECK(a.outer_faces() != b.outer_faces());
  CHECK_THROWS_AS(build_plane_graph(4, rot, OuterHint{{5}, {}}), InputError);
}
