#include "cubeforge/partial_cube.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cubeforge/error.hpp"

namespace cubeforge {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

bool related(const DistanceMatrix& d, Edge e, Edge f) {
  return d.hops(e.u, f.u) + d.hops(e.v, f.v) != d.hops(e.u, f.v) + d.hops(e.v, f.u);
}

}  // namespace

int ThetaPartition::class_of(const Graph& g, Edge e) const {
  const auto id = g.edge_id(e);
  if (!id) {
    throw InputError("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
  }
  return class_of_edge[*id];
}

bool theta_related(const Graph& g, const DistanceMatrix& d, Edge e, Edge f) {
  if (!g.adjacent(e.u, e.v) || !g.adjacent(f.u, f.v)) throw InputError("theta_related: arguments must be edges");
  if (!d.connected()) throw InputError("theta_related: graph is disconnected");
  const bool forward = related(d, e, f);
  // Same inequality with f reversed; the verdict cannot depend on orientation.
  const bool reversed =
      d.hops(e.u, f.v) + d.hops(e.v, f.u) != d.hops(e.u, f.u) + d.hops(e.v, f.v);
  ensure(forward == reversed, "theta relation depends on edge orientation");
  return forward;
}

ThetaResult theta_classes(const Graph& g) {
  const DistanceMatrix d = distances_all_pairs(g);
  if (!d.connected()) throw InputError("theta_classes: graph is disconnected");
  const std::vector<Edge> edges = g.edges();
  const std::size_t m = edges.size();

  std::vector<bool> rel(m * m, false);
  DisjointSets sets(m);
  for (std::size_t i = 0; i < m; ++i) {
    rel[i * m + i] = true;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (related(d, edges[i], edges[j])) {
        rel[i * m + j] = rel[j * m + i] = true;
        sets.unite(i, j);
      }
    }
  }

  ThetaResult out;
  out.transitive = true;
  for (std::size_t i = 0; i < m && out.transitive; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (sets.find(i) == sets.find(j) && !rel[i * m + j]) {
        out.transitive = false;
        break;
      }
    }
  }

  // Roots are the smallest member, and edges are in lexicographic order, so
  // scanning edges in order numbers classes by their smallest edge.
  std::vector<int> class_of_root(m, -1);
  auto& part = out.partition;
  part.class_of_edge.assign(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t root = sets.find(i);
    if (class_of_root[root] < 0) {
      class_of_root[root] = part.count();
      part.classes.emplace_back();
    }
    part.class_of_edge[i] = class_of_root[root];
    part.classes[class_of_root[root]].push_back(edges[i]);
  }
  return out;
}

std::optional<PartialCubeCert> is_partial_cube(const Graph& g) {
  if (g.order() == 0 || !is_connected(g) || !two_coloring(g)) return std::nullopt;
  PartialCubeCert cert;
  cert.theta = theta_classes(g).partition;
  cert.base = 0;

  const DistanceMatrix d = distances_all_pairs(g);
  const int k = cert.theta.count();
  cert.labeling.width = k;
  cert.labeling.labels.assign(static_cast<std::size_t>(g.order()), BitString(static_cast<std::size_t>(k)));
  for (int c = 0; c < k; ++c) {
    Edge rep = cert.theta.classes[c].front();
    Vertex near = rep.u;
    Vertex far = rep.v;
    if (d.hops(cert.base, far) < d.hops(cert.base, near)) std::swap(near, far);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (d.hops(v, far) < d.hops(v, near)) cert.labeling.labels[v].set(static_cast<std::size_t>(c));
    }
  }
  if (!verify_certificate(g, cert)) return std::nullopt;
  return cert;
}

PartialCubeCert rebase(const PartialCubeCert& cert, Vertex base) {
  PartialCubeCert out = cert;
  const BitString shift = cert.labeling.labels.at(static_cast<std::size_t>(base));
  for (auto& label : out.labeling.labels) label = label ^ shift;
  out.base = base;
  return out;
}

bool verify_certificate(const Graph& g, const PartialCubeCert& cert) {
  const auto& labels = cert.labeling.labels;
  if (static_cast<int>(labels.size()) != g.order()) return false;
  if (!labels[cert.base].none()) return false;
  const std::vector<Edge> edges = g.edges();
  if (cert.theta.class_of_edge.size() != edges.size()) return false;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const BitString diff = labels[edges[i].u] ^ labels[edges[i].v];
    const auto cls = static_cast<std::size_t>(cert.theta.class_of_edge[i]);
    if (diff.count() != 1 || !diff.test(cls)) return false;
  }
  const DistanceMatrix d = distances_all_pairs(g);
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = a + 1; b < g.order(); ++b) {
      const auto dist = d.get(a, b);
      if (!dist || static_cast<std::size_t>(*dist) != hamming(labels[a], labels[b])) return false;
    }
  }
  return true;
}

Halfspaces halfspaces(const Graph& g, const PartialCubeCert& cert, int cls,
                      std::optional<std::pair<Vertex, Vertex>> oriented) {
  if (cls < 0 || cls >= cert.theta.count()) throw InputError("class index out of range");
  const auto& members = cert.theta.classes[cls];
  Halfspaces out;
  if (oriented) {
    const Edge e(oriented->first, oriented->second);
    if (!g.adjacent(e.u, e.v) || cert.theta.class_of(g, e) != cls) {
      throw InputError("oriented edge does not belong to the class");
    }
    out.a = oriented->first;
    out.b = oriented->second;
  } else {
    const Edge rep = members.front();
    const bool u_on_base_side = !cert.labeling.labels[rep.u].test(static_cast<std::size_t>(cls));
    out.a = u_on_base_side ? rep.u : rep.v;
    out.b = rep.other(out.a);
  }

  const auto da = bfs_distances(g, out.a);
  const auto db = bfs_distances(g, out.b);
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (Vertex w = 0; w < g.order(); ++w) {
    if (*da[w] < *db[w]) {
      out.w_ab.push_back(w);
      side[w] = 0;
    } else if (*db[w] < *da[w]) {
      out.w_ba.push_back(w);
      side[w] = 1;
    }
  }
  ensure(out.w_ab.size() + out.w_ba.size() == static_cast<std::size_t>(g.order()),
         "halfspaces do not cover the vertex set");
  for (Vertex w : out.w_ab) {
    for (Vertex x : g.neighbors(w)) {
      if (side[x] == 1) {
        out.u_ab.push_back(w);
        break;
      }
    }
  }
  for (Vertex w : out.w_ba) {
    for (Vertex x : g.neighbors(w)) {
      if (side[x] == 0) {
        out.u_ba.push_back(w);
        break;
      }
    }
  }
  ensure(out.u_ab.size() == members.size() && out.u_ba.size() == members.size(),
         "boundary sets differ in size from the class");

  std::vector<Edge> rest;
  for (const Edge& e : g.edges()) {
    if (cert.theta.class_of(g, e) != cls) rest.push_back(e);
  }
  const auto parts = components(spanning_subgraph(g, rest));
  ensure(parts.size() == 2, "removing a class does not leave exactly two components");
  const bool matches = (parts[0] == out.w_ab && parts[1] == out.w_ba) ||
                       (parts[0] == out.w_ba && parts[1] == out.w_ab);
  ensure(matches, "components after class removal differ from the halfspaces");
  return out;
}

bool is_peripheral(const Graph& g, const PartialCubeCert& cert, int cls) {
  const Halfspaces h = halfspaces(g, cert, cls);
  return h.w_ab == h.u_ab || h.w_ba == h.u_ba;
}

Contraction contract(const Graph& g, const PartialCubeCert& cert, int cls) {
  if (cls < 0 || cls >= cert.theta.count()) throw InputError("class index out of range");
  DisjointSets sets(static_cast<std::size_t>(g.order()));
  for (const Edge& e : cert.theta.classes[cls]) sets.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v));

  Contraction out;
  out.projection.assign(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> id_of_root(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto root = sets.find(static_cast<std::size_t>(v));
    if (id_of_root[root] < 0) id_of_root[root] = next++;
    out.projection[v] = id_of_root[root];
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = out.projection[e.u];
    const Vertex b = out.projection[e.v];
    if (a != b) edges.emplace_back(a, b);
  }
  out.graph = graph_from_edges(next, edges);

  const Halfspaces h = halfspaces(g, cert, cls);
  const bool ab_peripheral = h.w_ba == h.u_ba;
  if (ab_peripheral || h.w_ab == h.u_ab) {
    // The projection restricted to the non-peripheral side must be an
    // isomorphism from that induced halfspace onto the quotient.
    const auto& kept = ab_peripheral ? h.w_ab : h.w_ba;
    ensure(static_cast<int>(kept.size()) == out.graph.order(), "contraction size differs from the kept halfspace");
    const InducedSubgraph side = induced_subgraph(g, kept);
    std::vector<bool> hit(kept.size(), false);
    for (Vertex v : kept) {
      ensure(!hit[out.projection[v]], "projection is not injective on the kept halfspace");
      hit[out.projection[v]] = true;
    }
    ensure(side.graph.size() == out.graph.size(), "contraction edge count differs from the kept halfspace");
    for (const Edge& e : side.graph.edges()) {
      ensure(out.graph.adjacent(out.projection[side.origin[e.u]], out.projection[side.origin[e.v]]),
             "contraction is not isomorphic to the kept halfspace");
    }
  }
  return out;
}

Graph peripheral_expansion(const Graph& h, std::span<const Vertex> h0) {
  std::vector<Vertex> base(h0.begin(), h0.end());
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  if (base.empty()) throw InputError("peripheral expansion needs a nonempty subgraph");
  const InducedSubgraph sub = induced_subgraph(h, base);
  const DistanceMatrix dh = distances_all_pairs(h);
  const DistanceMatrix ds = distances_all_pairs(sub.graph);
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i + 1; j < base.size(); ++j) {
      const auto inside = ds.get(static_cast<Vertex>(i), static_cast<Vertex>(j));
      if (!inside || inside != dh.get(base[i], base[j])) {
        throw InputError("expansion subgraph is not isometric");
      }
    }
  }
  std::vector<Edge> edges = h.edges();
  const Vertex shift = h.order();
  for (std::size_t i = 0; i < base.size(); ++i) edges.emplace_back(base[i], shift + static_cast<Vertex>(i));
  for (const Edge& e : sub.graph.edges()) edges.emplace_back(shift + e.u, shift + e.v);
  return graph_from_edges(h.order() + static_cast<int>(base.size()), edges);
}

std::vector<Vertex> interval(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw InputError("interval: vertex out of range");
  const int duv = d.hops(u, v);
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (d.reachable(u, x) && d.hops(u, x) + d.hops(x, v) == duv) out.push_back(x);
  }
  return out;
}

std::vector<Vertex> interval(const Graph& g, Vertex u, Vertex v) {
  return interval(g, distances_all_pairs(g), u, v);
}

bool is_median(const Graph& g) {
  const DistanceMatrix d = distances_all_pairs(g);
  if (g.order() == 0 || !d.connected()) throw InputError("is_median: graph is disconnected");
  const int n = g.order();
  auto on = [&](Vertex a, Vertex x, Vertex b) { return d.hops(a, x) + d.hops(x, b) == d.hops(a, b); };
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      for (Vertex w = v + 1; w < n; ++w) {
        int medians = 0;
        for (Vertex x = 0; x < n && medians < 2; ++x) {
          if (on(u, x, v) && on(u, x, w) && on(v, x, w)) ++medians;
        }
        if (medians != 1) return false;
      }
    }
  }
  return true;
}

}  // namespace cubeforge
