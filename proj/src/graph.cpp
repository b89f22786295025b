#include "cubeforge/graph.hpp"

#include <deque>
#include <numeric>
#include <string>

#include "cubeforge/error.hpp"

namespace cubeforge {

Graph::Graph(int n) {
  if (n < 0) throw InputError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), {});
  finalize();
}

void Graph::finalize() {
  edge_count_ = 0;
  offset_.assign(adj_.size() + 1, 0);
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    auto& list = adj_[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    const auto higher = static_cast<std::size_t>(
        list.end() - std::upper_bound(list.begin(), list.end(), static_cast<Vertex>(v)));
    offset_[v + 1] = offset_[v] + higher;
    edge_count_ += higher;
  }
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (!has_vertex(a) || !has_vertex(b)) return false;
  const auto& list = adj_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex v = 0; v < order(); ++v) {
    for (Vertex w : adj_[v]) {
      if (w > v) out.emplace_back(v, w);
    }
  }
  return out;
}

std::optional<std::size_t> Graph::edge_id(Edge e) const {
  if (!adjacent(e.u, e.v)) return std::nullopt;
  const auto& list = adj_[e.u];
  const auto first_higher = std::upper_bound(list.begin(), list.end(), e.u);
  const auto pos = std::lower_bound(list.begin(), list.end(), e.v);
  return offset_[e.u] + static_cast<std::size_t>(pos - first_higher);
}

Graph graph_from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") out of range for " + std::to_string(n) + " vertices");
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  g.finalize();
  return g;
}

Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw InputError("pair (" + std::to_string(a) + "," + std::to_string(b) +
                       ") out of range for " + std::to_string(n) + " vertices");
    }
    if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
    edges.emplace_back(a, b);
  }
  return graph_from_edges(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return graph_from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return graph_from_edges(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return graph_from_edges(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return graph_from_edges(leaves + 1, edges);
}

DistanceMatrix::DistanceMatrix(int n)
    : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable) {}

std::optional<int> DistanceMatrix::get(Vertex a, Vertex b) const {
  const auto d = at(a, b);
  if (d == kUnreachable) return std::nullopt;
  return d;
}

int DistanceMatrix::hops(Vertex a, Vertex b) const {
  const auto d = at(a, b);
  if (d == kUnreachable) {
    throw InputError("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                     " lie in different components");
  }
  return d;
}

bool DistanceMatrix::connected() const {
  return std::none_of(d_.begin(), d_.end(), [](std::int32_t d) { return d == kUnreachable; });
}

int DistanceMatrix::max_finite() const {
  std::int32_t best = 0;
  for (auto d : d_) best = std::max(best, d);
  return best;
}

namespace {

template <typename Visit>
void bfs(const Graph& g, Vertex source, Visit&& visit) {
  std::vector<std::int32_t> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    visit(v, dist[v]);
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
}

}  // namespace

DistanceMatrix distances_all_pairs(const Graph& g) {
  DistanceMatrix m(g.order());
  const auto n = static_cast<std::size_t>(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    bfs(g, s, [&](Vertex v, std::int32_t d) { m.d_[static_cast<std::size_t>(s) * n + v] = d; });
  }
  return m;
}

std::vector<std::optional<int>> bfs_distances(const Graph& g, Vertex source) {
  if (!g.has_vertex(source)) throw InputError("source vertex out of range");
  std::vector<std::optional<int>> out(static_cast<std::size_t>(g.order()));
  bfs(g, source, [&](Vertex v, std::int32_t d) { out[v] = d; });
  return out;
}

std::optional<std::vector<Color>> two_coloring(const Graph& g) {
  std::vector<std::optional<Color>> color(static_cast<std::size_t>(g.order()));
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s]) continue;
    color[s] = Color::Black;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      const Color flipped = *color[v] == Color::Black ? Color::White : Color::Black;
      for (Vertex w : g.neighbors(v)) {
        if (!color[w]) {
          color[w] = flipped;
          queue.push_back(w);
        } else if (*color[w] != flipped) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Color> out;
  out.reserve(color.size());
  for (const auto& c : color) out.push_back(*c);
  return out;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> block;
    bfs(g, s, [&](Vertex v, std::int32_t) {
      seen[v] = true;
      block.push_back(v);
    });
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = a + 1; b < g.order(); ++b) {
      if (!g.adjacent(a, b)) edges.emplace_back(a, b);
    }
  }
  return graph_from_edges(g.order(), edges);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph out;
  out.remap.assign(static_cast<std::size_t>(g.order()), std::nullopt);
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (Vertex v : keep) {
    if (!g.has_vertex(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
    out.remap[v] = static_cast<Vertex>(out.origin.size());
    out.origin.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : keep) {
    for (Vertex w : g.neighbors(v)) {
      if (w > v && out.remap[w]) edges.emplace_back(*out.remap[v], *out.remap[w]);
    }
  }
  out.graph = graph_from_edges(static_cast<int>(keep.size()), edges);
  return out;
}

Graph spanning_subgraph(const Graph& g, std::span<const Edge> keep) {
  for (const Edge& e : keep) {
    if (!g.adjacent(e.u, e.v)) throw InputError("spanning_subgraph: not an edge of the graph");
  }
  return graph_from_edges(g.order(), keep);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) throw InputError("cartesian product with an empty factor");
  const int hn = h.order();
  std::vector<Edge> edges;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = 0; b < hn; ++b) {
      const Vertex self = a * hn + b;
      for (Vertex a2 : g.neighbors(a)) {
        if (a2 > a) edges.emplace_back(self, a2 * hn + b);
      }
      for (Vertex b2 : h.neighbors(b)) {
        if (b2 > b) edges.emplace_back(self, a * hn + b2);
      }
    }
  }
  return graph_from_edges(g.order() * hn, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) edges.emplace_back(e.u + g.order(), e.v + g.order());
  return graph_from_edges(g.order() + h.order(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw InputError("relabel: permutation size mismatch");
  std::vector<bool> hit(perm.size(), false);
  for (Vertex p : perm) {
    if (p < 0 || p >= g.order() || hit[p]) throw InputError("relabel: not a permutation");
    hit[p] = true;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return graph_from_edges(g.order(), edges);
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex a, Vertex b) {
  if (a == b) throw InputError("common_neighbors needs two distinct vertices");
  if (!g.has_vertex(a) || !g.has_vertex(b)) throw InputError("common_neighbors: vertex out of range");
  std::vector<Vertex> out;
  const auto na = g.neighbors(a);
  const auto nb = g.neighbors(b);
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
  return out;
}

bool is_forest(const Graph& g) {
  return g.size() + components(g).size() == static_cast<std::size_t>(g.order());
}

bool is_tree(const Graph& g) { return g.order() > 0 && is_forest(g) && is_connected(g); }

}  // namespace cubeforge
