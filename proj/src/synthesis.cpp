#include "cubeforge/synthesis.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "cubeforge/error.hpp"
#include "cubeforge/iso.hpp"
#include "cubeforge/resonance.hpp"
#include "cubeforge/tau.hpp"

namespace cubeforge {

namespace {

constexpr int kMaxTreeOrder = 10;

struct Layout {
  std::vector<std::vector<Vertex>> face;  // per tree node, in face-trace orientation
  std::vector<Vertex> outer;              // outer walk, cyclic
  std::vector<int> degree;
  std::vector<Color> color;

  Vertex add_vertex(Color c) {
    degree.push_back(2);
    color.push_back(c);
    return static_cast<Vertex>(degree.size() - 1);
  }
};

Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }

int face_size(const Graph& tree, Vertex t) { return std::max(6, 2 * tree.degree(t) + 2); }

PlaneGraph to_plane(const Layout& lay) {
  const auto n = lay.degree.size();
  std::vector<std::map<Vertex, Vertex>> succ(n);
  auto record = [&](const std::vector<Vertex>& walk) {
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const Vertex u = walk[i];
      const Vertex v = walk[(i + 1) % walk.size()];
      const Vertex w = walk[(i + 2) % walk.size()];
      ensure(succ[v].emplace(u, w).second, "two walks claim the same corner");
    }
  };
  for (const auto& f : lay.face) record(f);
  record(lay.outer);

  std::vector<std::vector<Vertex>> rot(n);
  for (std::size_t v = 0; v < n; ++v) {
    ensure(!succ[v].empty(), "vertex without corners");
    const Vertex start = succ[v].begin()->first;
    Vertex cur = start;
    do {
      rot[v].push_back(cur);
      cur = succ[v].at(cur);
    } while (cur != start);
    ensure(static_cast<int>(rot[v].size()) == lay.degree[v], "corners do not form one rotation");
  }
  OuterHint hint;
  hint.walks.push_back(lay.outer);
  return build_plane_graph(static_cast<int>(n), std::move(rot), hint);
}

bool accept(const Graph& tree, const Layout& lay, PlaneGraph& out) {
  PlaneGraph pg = to_plane(lay);
  if (!is_peripherally_2_colorable(pg)) return false;
  const auto finite = pg.finite_faces();
  if (static_cast<int>(finite.size()) != tree.order()) return false;
  std::map<int, Vertex> dual_index;
  for (std::size_t i = 0; i < finite.size(); ++i) dual_index[finite[i]] = static_cast<Vertex>(i);
  VertexMap node_to_dual(static_cast<std::size_t>(tree.order()));
  for (Vertex t = 0; t < tree.order(); ++t) node_to_dual[t] = dual_index.at(pg.face_of(lay.face[t][0], lay.face[t][1]));
  if (!is_isomorphism(tree, inner_dual(pg), node_to_dual)) return false;
  out = std::move(pg);
  return true;
}

class Gluer {
 public:
  Gluer(const Graph& tree, std::uint64_t seed) : tree_(tree), seed_(seed) {
    parent_.assign(static_cast<std::size_t>(tree.order()), -1);
    std::vector<char> seen(static_cast<std::size_t>(tree.order()), 0);
    order_.push_back(0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (Vertex w : tree.neighbors(order_[i])) {
        if (seen[w]) continue;
        seen[w] = 1;
        parent_[w] = order_[i];
        order_.push_back(w);
      }
    }
  }

  std::optional<PlaneGraph> run() {
    Layout lay;
    lay.face.resize(static_cast<std::size_t>(tree_.order()));
    const int s = face_size(tree_, 0);
    std::vector<Vertex> ring;
    for (int i = 0; i < s; ++i) ring.push_back(lay.add_vertex(i % 2 == 0 ? Color::Black : Color::White));
    lay.face[0] = ring;
    lay.outer.assign(ring.rbegin(), ring.rend());
    std::rotate(lay.outer.begin(), lay.outer.end() - 1, lay.outer.end());  // start at vertex 0
    std::optional<PlaneGraph> result;
    place(lay, 1, result);
    return result;
  }

 private:
  // Free parent edges on the periphery: outer walk has a -> b and the parent
  // face has b -> a, both ends still of degree 2.
  std::vector<std::size_t> candidates(const Layout& lay, Vertex p) const {
    const auto& pf = lay.face[p];
    std::vector<std::pair<std::size_t, std::size_t>> found;  // (position in parent face, position in outer)
    for (std::size_t i = 0; i < lay.outer.size(); ++i) {
      const Vertex a = lay.outer[i];
      const Vertex b = lay.outer[(i + 1) % lay.outer.size()];
      if (lay.degree[a] != 2 || lay.degree[b] != 2) continue;
      for (std::size_t j = 0; j < pf.size(); ++j) {
        if (pf[j] == b && pf[(j + 1) % pf.size()] == a) found.emplace_back(j, i);
      }
    }
    std::sort(found.begin(), found.end());
    std::vector<std::size_t> out;
    for (const auto& [j, i] : found) out.push_back(i);
    if (!out.empty()) std::rotate(out.begin(), out.begin() + static_cast<long>(seed_ % out.size()), out.end());
    return out;
  }

  // Degree-3 vertices along the periphery must alternate in color; inserting
  // the pair (a, b) keeps that iff a differs from the previous degree-3 vertex.
  static bool keeps_alternation(const Layout& lay, std::size_t at) {
    const std::size_t n = lay.outer.size();
    for (std::size_t step = 1; step < n; ++step) {
      const Vertex p = lay.outer[(at + n - step) % n];
      if (lay.degree[p] == 3) return lay.color[p] != lay.color[lay.outer[at]];
    }
    return true;
  }

  void place(Layout& lay, std::size_t k, std::optional<PlaneGraph>& result) {
    if (k == order_.size()) {
      PlaneGraph pg;
      if (accept(tree_, lay, pg)) result = std::move(pg);
      return;
    }
    const Vertex c = order_[k];
    for (std::size_t at : candidates(lay, parent_[c])) {
      if (!keeps_alternation(lay, at)) continue;
      Layout next = lay;
      const Vertex a = next.outer[at];
      const Vertex b = next.outer[(at + 1) % next.outer.size()];
      const int s = face_size(tree_, c);
      std::vector<Vertex> path;  // m1 .. m_{s-2}
      Color col = opposite(next.color[a]);
      for (int i = 0; i < s - 2; ++i) {
        path.push_back(next.add_vertex(col));
        col = opposite(col);
      }
      ensure(col == next.color[b], "glued face is not even");
      next.degree[a] = 3;
      next.degree[b] = 3;
      std::vector<Vertex> walk{a, b};
      walk.insert(walk.end(), path.rbegin(), path.rend());
      next.face[c] = std::move(walk);
      next.outer.insert(next.outer.begin() + static_cast<long>(at) + 1, path.begin(), path.end());
      place(next, k + 1, result);
      if (result) return;
    }
  }

  const Graph& tree_;
  std::uint64_t seed_;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
};

}  // namespace

PlaneGraph tree_to_p2c(const Graph& tree, std::uint64_t seed) {
  if (!is_tree(tree)) throw InputError("tree_to_p2c needs a tree");
  if (tree.order() > kMaxTreeOrder) {
    throw InputError("tree_to_p2c supports trees on at most " + std::to_string(kMaxTreeOrder) + " vertices");
  }
  auto found = Gluer(tree, seed).run();
  ensure(found.has_value(), "no gluing of faces realizes the tree");
  return std::move(*found);
}

PlaneGraph realize_resonance(const Graph& h, const DaisyCert& cert, std::uint64_t seed) {
  if (h.size() == 0) throw InputError("realize needs a daisy cube with at least one edge");
  if (!verify_certificate(h, cert.cert) || !is_downward_closed(cert.cert.labeling)) {
    throw InputError("invalid daisy-cube certificate");
  }
  const Graph tau = tau_graph(h, cert.cert).graph;
  if (!is_forest(tau)) throw NotRealizableError("tau-graph has a cycle, so no plane bipartite graph has this resonance graph");

  std::optional<PlaneGraph> out;
  for (const auto& comp : components(tau)) {
    const PlaneGraph piece = tree_to_p2c(induced_subgraph(tau, comp).graph, seed);
    out = out ? plane_disjoint_union(*out, piece) : piece;
  }
  const ResonanceGraph r = resonance_graph(*out);
  ensure(daisy_isomorphic_via_tau(r.graph, h).isomorphic, "resonance graph of the realization differs from the input");
  return std::move(*out);
}

}  // namespace cubeforge
