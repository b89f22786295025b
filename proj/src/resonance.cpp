#include "cubeforge/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "cubeforge/error.hpp"

namespace cubeforge {

namespace {

class Regions {
 public:
  explicit Regions(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::set<std::vector<Edge>> finite_face_edge_sets(const PlaneGraph& pg) {
  std::set<std::vector<Edge>> out;
  for (int f : pg.finite_faces()) out.insert(pg.face_edges(f));
  return out;
}

}  // namespace

ResonanceGraph resonance_graph(const PlaneGraph& pg) {
  ResonanceGraph out;
  out.matchings = perfect_matchings(pg.graph());
  if (out.matchings.empty()) throw InputError("graph has no perfect matching");
  const auto faces = finite_face_edge_sets(pg);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.matchings.size(); ++i) {
    for (std::size_t j = i + 1; j < out.matchings.size(); ++j) {
      std::vector<Edge> diff;
      std::set_symmetric_difference(out.matchings[i].begin(), out.matchings[i].end(), out.matchings[j].begin(),
                                    out.matchings[j].end(), std::back_inserter(diff));
      if (faces.contains(diff)) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  out.graph = graph_from_edges(static_cast<int>(out.matchings.size()), edges);
  return out;
}

bool is_weakly_elementary(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  const auto allowed = allowed_edges(g);
  const std::set<Edge> keep(allowed.begin(), allowed.end());
  Regions regions(pg.faces().size());
  const auto& outer = pg.outer_faces();
  for (std::size_t i = 1; i < outer.size(); ++i) regions.unite(static_cast<std::size_t>(outer[0]), static_cast<std::size_t>(outer[i]));
  for (const Edge& e : g.edges()) {
    if (keep.contains(e)) continue;
    regions.unite(static_cast<std::size_t>(pg.face_of(e.u, e.v)), static_cast<std::size_t>(pg.face_of(e.v, e.u)));
  }
  const std::size_t infinite = outer.empty() ? pg.faces().size() : regions.find(static_cast<std::size_t>(outer[0]));

  std::map<std::size_t, std::set<Edge>> boundary;
  for (const Edge& e : allowed) {
    for (const auto side : {pg.face_of(e.u, e.v), pg.face_of(e.v, e.u)}) {
      const std::size_t r = regions.find(static_cast<std::size_t>(side));
      if (r != infinite) boundary[r].insert(e);
    }
  }
  const auto old_faces = finite_face_edge_sets(pg);
  for (const auto& [region, edges] : boundary) {
    if (!old_faces.contains(std::vector<Edge>(edges.begin(), edges.end()))) return false;
  }
  return true;
}

Graph inner_dual(const PlaneGraph& pg) {
  const auto finite = pg.finite_faces();
  std::map<int, Vertex> index;
  for (std::size_t i = 0; i < finite.size(); ++i) index[finite[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : pg.graph().edges()) {
    const auto a = index.find(pg.face_of(e.u, e.v));
    const auto b = index.find(pg.face_of(e.v, e.u));
    if (a != index.end() && b != index.end() && a->second != b->second) edges.emplace_back(a->second, b->second);
  }
  return graph_from_edges(static_cast<int>(finite.size()), edges);
}

Graph allowed_inner_dual(const PlaneGraph& pg) {
  if (!is_weakly_elementary(pg)) throw InputError("graph is not weakly elementary");
  const auto allowed = allowed_edges(pg.graph());
  const std::set<Edge> keep(allowed.begin(), allowed.end());
  std::vector<Vertex> kept;
  const auto finite = pg.finite_faces();
  for (std::size_t i = 0; i < finite.size(); ++i) {
    const auto edges = pg.face_edges(finite[i]);
    if (std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return keep.contains(e); })) {
      kept.push_back(static_cast<Vertex>(i));
    }
  }
  return induced_subgraph(inner_dual(pg), kept).graph;
}

std::vector<Color> periphery_degree3_colors(const PlaneGraph& pg, bool reversed) {
  const Graph& g = pg.graph();
  if (g.size() == 0) return {};
  const auto coloring = two_coloring(g);
  if (!coloring) throw InputError("graph is not bipartite");
  auto walk = pg.periphery(g.edges().front().u);
  if (reversed) std::reverse(walk.begin(), walk.end());
  std::vector<Color> out;
  for (Vertex v : walk) {
    if (g.degree(v) == 3) out.push_back((*coloring)[v]);
  }
  return out;
}

bool is_peripherally_2_colorable(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  if (g.order() <= 2 || !is_connected(g)) return false;
  if (!two_coloring(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2 && g.degree(v) != 3) return false;
  }
  if (!has_perfect_matching(g)) return false;
  if (allowed_edges(g).size() != g.size()) return false;

  const auto walk = pg.periphery(0);
  std::set<Vertex> on_walk(walk.begin(), walk.end());
  if (on_walk.size() != walk.size()) return false;  // an elementary graph's periphery is a cycle
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 3 && !on_walk.contains(v)) return false;
  }
  const auto colors = periphery_degree3_colors(pg);
  if (colors.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] == colors[(i + 1) % colors.size()]) return false;
  }
  return true;
}

PlaneGraph fibonaccene(int n) {
  if (n < 1) throw InputError("fibonaccene needs at least one hexagon");
  // Pointy-top hexagons on axial coordinates; steps alternate east and north-east.
  const double root3 = std::sqrt(3.0);
  std::map<std::pair<long, long>, Vertex> ids;
  std::vector<std::pair<double, double>> points;
  std::vector<std::pair<Vertex, Vertex>> edges;
  int q = 0;
  int r = 0;
  for (int h = 0; h < n; ++h) {
    const double cx = root3 * (q + r / 2.0);
    const double cy = 1.5 * r;
    std::vector<Vertex> corner;
    for (int k = 0; k < 6; ++k) {
      const double angle = (30.0 + 60.0 * k) * std::acos(-1.0) / 180.0;
      const double x = cx + std::cos(angle);
      const double y = cy + std::sin(angle);
      const std::pair<long, long> key{std::lround(x * 1000.0), std::lround(y * 1000.0)};
      const auto [it, fresh] = ids.try_emplace(key, static_cast<Vertex>(points.size()));
      if (fresh) points.emplace_back(x, y);
      corner.push_back(it->second);
    }
    for (int k = 0; k < 6; ++k) edges.emplace_back(corner[k], corner[(k + 1) % 6]);
    if (h % 2 == 0) {
      ++q;
    } else {
      ++r;
    }
  }
  return embed_with_points(static_cast<int>(points.size()), edges, points);
}

}  // namespace cubeforge
