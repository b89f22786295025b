#include "cubeforge/plane.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "cubeforge/error.hpp"

namespace cubeforge {

namespace {

std::size_t slot_of(const Graph& g, Vertex u, Vertex v) {
  const auto nbrs = g.neighbors(u);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) throw InputError("not an edge: " + std::to_string(u) + "-" + std::to_string(v));
  return static_cast<std::size_t>(it - nbrs.begin());
}

bool same_cycle(const std::vector<Vertex>& walk, const std::vector<Vertex>& hint) {
  if (walk.size() != hint.size() || walk.empty()) return false;
  for (std::size_t shift = 0; shift < walk.size(); ++shift) {
    bool all = true;
    for (std::size_t i = 0; i < walk.size() && all; ++i) all = walk[(shift + i) % walk.size()] == hint[i];
    if (all) return true;
  }
  return false;
}

}  // namespace

bool PlaneGraph::is_outer(int face) const { return std::find(outer_.begin(), outer_.end(), face) != outer_.end(); }

std::vector<int> PlaneGraph::finite_faces() const {
  std::vector<int> out;
  for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
    if (!is_outer(f)) out.push_back(f);
  }
  return out;
}

int PlaneGraph::face_of(Vertex u, Vertex v) const {
  if (!graph_.has_vertex(u)) throw InputError("vertex out of range");
  return dart_face_[u][slot_of(graph_, u, v)];
}

std::vector<Edge> PlaneGraph::face_edges(int face) const {
  if (face < 0 || face >= static_cast<int>(faces_.size())) throw InputError("face index out of range");
  const auto& walk = faces_[face];
  std::vector<Edge> out;
  for (std::size_t i = 0; i < walk.size(); ++i) out.emplace_back(walk[i], walk[(i + 1) % walk.size()]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vertex> PlaneGraph::periphery(Vertex v) const {
  if (!graph_.has_vertex(v) || graph_.degree(v) == 0) throw InputError("periphery of an isolated vertex");
  for (int f : outer_) {
    const auto& walk = faces_[f];
    if (std::find(walk.begin(), walk.end(), v) == walk.end()) continue;
    std::vector<Vertex> out(walk.rbegin(), walk.rend());
    return out;
  }
  // v is not on its component's outer walk; find the component's walk via any neighbor chain.
  const auto dist = bfs_distances(graph_, v);
  for (int f : outer_) {
    if (dist[faces_[f].front()]) return {faces_[f].rbegin(), faces_[f].rend()};
  }
  ensure(false, "component without an outer walk");
  return {};
}

struct PlaneAccess {
  // Rotation validation, face tracing and the Euler check; no outer walks yet.
  static PlaneGraph trace(int n, std::vector<std::vector<Vertex>> rotations);
  static PlaneGraph& set_outer(PlaneGraph& pg, const OuterHint& hint,
                               const std::vector<int>* preferred);
};

PlaneGraph PlaneAccess::trace(int n, std::vector<std::vector<Vertex>> rotations) {
  if (n < 0) throw InputError("negative vertex count");
  if (static_cast<int>(rotations.size()) != n) throw InputError("rotation count differs from the vertex count");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 0; v < n; ++v) {
    std::set<Vertex> seen;
    for (Vertex w : rotations[v]) {
      if (w < 0 || w >= n) throw InputError("rotation of " + std::to_string(v) + " names an unknown vertex");
      if (w == v) throw InputError("rotation of " + std::to_string(v) + " contains a self-loop");
      if (!seen.insert(w).second) throw InputError("rotation of " + std::to_string(v) + " repeats a neighbor");
      pairs.emplace_back(v, w);
    }
  }
  PlaneGraph pg;
  pg.graph_ = build_graph(n, pairs);
  for (Vertex v = 0; v < n; ++v) {
    if (static_cast<int>(rotations[v].size()) != pg.graph_.degree(v)) {
      throw InputError("rotation system is not symmetric at vertex " + std::to_string(v));
    }
  }
  pg.rotation_ = std::move(rotations);

  // position of each neighbor in the rotation, aligned with sorted neighbors
  std::vector<std::vector<std::size_t>> place(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    place[v].resize(pg.rotation_[v].size());
    for (std::size_t i = 0; i < pg.rotation_[v].size(); ++i) place[v][slot_of(pg.graph_, v, pg.rotation_[v][i])] = i;
  }
  auto successor = [&](Vertex v, Vertex u) {
    const auto& rot = pg.rotation_[v];
    return rot[(place[v][slot_of(pg.graph_, v, u)] + 1) % rot.size()];
  };

  pg.dart_face_.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) pg.dart_face_[v].assign(pg.graph_.neighbors(v).size(), -1);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : pg.graph_.neighbors(u)) {
      if (pg.dart_face_[u][slot_of(pg.graph_, u, v)] >= 0) continue;
      const int id = static_cast<int>(pg.faces_.size());
      std::vector<Vertex> walk;
      Vertex a = u;
      Vertex b = v;
      while (pg.dart_face_[a][slot_of(pg.graph_, a, b)] < 0) {
        pg.dart_face_[a][slot_of(pg.graph_, a, b)] = id;
        walk.push_back(a);
        const Vertex c = successor(b, a);
        a = b;
        b = c;
      }
      ensure(a == u && b == v, "face tracing did not close up");
      pg.faces_.push_back(std::move(walk));
    }
  }

  // Euler per component: V - E + (walks - 1) = 1.
  const auto comps = components(pg.graph_);
  std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (Vertex v : comps[c]) comp_of[v] = static_cast<int>(c);
  }
  std::vector<long> vcount(comps.size(), 0);
  std::vector<long> ecount(comps.size(), 0);
  std::vector<long> walks(comps.size(), 0);
  for (Vertex v = 0; v < n; ++v) {
    ++vcount[comp_of[v]];
    for (Vertex w : pg.graph_.neighbors(v)) {
      if (w > v) ++ecount[comp_of[v]];
    }
  }
  for (const auto& f : pg.faces_) ++walks[comp_of[f.front()]];
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (ecount[c] == 0) continue;
    if (vcount[c] - ecount[c] + walks[c] != 2) {
      throw InputError("rotation system is not planar (Euler check fails on the component of vertex " +
                       std::to_string(comps[c].front()) + ")");
    }
  }
  return pg;
}

PlaneGraph& PlaneAccess::set_outer(PlaneGraph& pg, const OuterHint& hint, const std::vector<int>* preferred) {
  const auto comps = components(pg.graph_);
  std::vector<int> comp_of(static_cast<std::size_t>(pg.order()), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (Vertex v : comps[c]) comp_of[v] = static_cast<int>(c);
  }
  std::vector<int> chosen(comps.size(), -1);
  auto choose = [&](int face) {
    if (face < 0 || face >= static_cast<int>(pg.faces_.size())) throw InputError("outer face index out of range");
    const int c = comp_of[pg.faces_[face].front()];
    if (chosen[c] >= 0) throw InputError("two outer faces given for one component");
    chosen[c] = face;
  };
  if (preferred) {
    for (int f : *preferred) choose(f);
  }
  for (int f : hint.faces) choose(f);
  for (const auto& w : hint.walks) {
    if (w.size() < 2) throw InputError("outer walk hint needs at least two vertices");
    if (!pg.graph_.has_vertex(w[0]) || !pg.graph_.has_vertex(w[1])) throw InputError("outer walk hint vertex out of range");
    const int f = pg.face_of(w[0], w[1]);
    if (!same_cycle(pg.faces_[f], w)) throw InputError("outer walk hint does not match a traced face");
    choose(f);
  }
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (pg.graph_.degree(comps[c].front()) == 0 && comps[c].size() == 1) continue;
    if (chosen[c] >= 0) continue;
    if (!hint.empty() || preferred) throw InputError("outer hint does not cover every component");
    std::size_t longest = 0;
    int count = 0;
    for (int f = 0; f < static_cast<int>(pg.faces_.size()); ++f) {
      if (comp_of[pg.faces_[f].front()] != static_cast<int>(c)) continue;
      const auto len = pg.faces_[f].size();
      if (len > longest) {
        longest = len;
        count = 1;
        chosen[c] = f;
      } else if (len == longest) {
        ++count;
      }
    }
    if (count != 1) throw InputError("outer face is ambiguous; give an outer hint");
  }
  pg.outer_.clear();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (chosen[c] >= 0) pg.outer_.push_back(chosen[c]);
  }
  return pg;
}

PlaneGraph build_plane_graph(int n, std::vector<std::vector<Vertex>> rotations, const OuterHint& hint) {
  PlaneGraph pg = PlaneAccess::trace(n, std::move(rotations));
  PlaneAccess::set_outer(pg, hint, nullptr);
  return pg;
}

PlaneGraph embed_with_points(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                             const std::vector<std::pair<double, double>>& points) {
  if (static_cast<int>(points.size()) != n) throw InputError("point count differs from the vertex count");
  const Graph g = build_graph(n, edges);
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    rot[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    auto angle = [&](Vertex w) {
      return std::atan2(points[w].second - points[v].second, points[w].first - points[v].first);
    };
    std::sort(rot[v].begin(), rot[v].end(), [&](Vertex a, Vertex b) { return angle(a) < angle(b); });
  }
  PlaneGraph pg = PlaneAccess::trace(n, std::move(rot));

  // Inner faces come out clockwise, so the outer walk is the one with
  // positive area; a tree's single walk has zero area and is outer.
  const auto comps = components(g);
  std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (Vertex v : comps[c]) comp_of[v] = static_cast<int>(c);
  }
  std::vector<int> best(comps.size(), -1);
  std::vector<double> best_area(comps.size(), 0.0);
  std::vector<int> walk_count(comps.size(), 0);
  for (int f = 0; f < static_cast<int>(pg.faces().size()); ++f) {
    const auto& w = pg.faces()[f];
    double area = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto& p = points[w[i]];
      const auto& q = points[w[(i + 1) % w.size()]];
      area += p.first * q.second - q.first * p.second;
    }
    const int c = comp_of[w.front()];
    ++walk_count[c];
    if (best[c] < 0 || area > best_area[c]) {
      best[c] = f;
      best_area[c] = area;
    }
  }
  std::vector<int> outer;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (best[c] < 0) continue;
    if (walk_count[c] > 1 && best_area[c] <= 0.0) throw InputError("coordinates do not give a plane embedding");
    outer.push_back(best[c]);
  }
  PlaneAccess::set_outer(pg, {}, &outer);
  return pg;
}

PlaneGraph plane_disjoint_union(const PlaneGraph& a, const PlaneGraph& b) {
  const Vertex shift = a.order();
  std::vector<std::vector<Vertex>> rot = a.rotations();
  for (const auto& r : b.rotations()) {
    std::vector<Vertex> moved;
    for (Vertex w : r) moved.push_back(w + shift);
    rot.push_back(std::move(moved));
  }
  OuterHint hint;
  for (int f : a.outer_faces()) hint.walks.push_back(a.faces()[f]);
  for (int f : b.outer_faces()) {
    std::vector<Vertex> moved;
    for (Vertex w : b.faces()[f]) moved.push_back(w + shift);
    hint.walks.push_back(std::move(moved));
  }
  PlaneGraph pg = PlaneAccess::trace(a.order() + b.order(), std::move(rot));
  if (hint.walks.empty()) return pg;
  PlaneAccess::set_outer(pg, hint, nullptr);
  return pg;
}

}  // namespace cubeforge
