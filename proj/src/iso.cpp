#include "cubeforge/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "cubeforge/error.hpp"

namespace cubeforge {

bool is_isomorphism(const Graph& a, const Graph& b, const VertexMap& map) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (static_cast<int>(map.size()) != a.order()) return false;
  std::vector<char> used(static_cast<std::size_t>(b.order()), 0);
  for (Vertex image : map) {
    if (!b.has_vertex(image) || used[image]) return false;
    used[image] = 1;
  }
  // Equal edge counts plus an injective edge map means non-edges are preserved too.
  for (const Edge& e : a.edges()) {
    if (!b.adjacent(map[e.u], map[e.v])) return false;
  }
  return true;
}

namespace {

// ---- forests ----------------------------------------------------------------

std::vector<Vertex> tree_centers(const Graph& f, const std::vector<Vertex>& comp) {
  if (comp.size() <= 2) return comp;
  std::map<Vertex, int> deg;
  for (Vertex v : comp) deg[v] = f.degree(v);
  std::vector<Vertex> layer;
  for (Vertex v : comp) {
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = comp.size();
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      deg[leaf] = 0;
      for (Vertex w : f.neighbors(leaf)) {
        if (deg[w] > 0 && --deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string rooted_code(const Graph& f, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : f.neighbors(v)) {
    if (w != parent) kids.push_back(rooted_code(f, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ')';
  return out;
}

struct RootedTree {
  Vertex root;
  std::string code;
};

RootedTree best_rooting(const Graph& f, const std::vector<Vertex>& comp) {
  RootedTree best{-1, {}};
  for (Vertex c : tree_centers(f, comp)) {
    std::string code = rooted_code(f, c, -1);
    if (best.root < 0 || code < best.code) best = {c, std::move(code)};
  }
  return best;
}

void require_forest(const Graph& f) {
  if (!is_forest(f)) throw InputError("graph is not a forest");
}

// Pairs children by equal subtree codes, recursively.
void match_rooted(const Graph& a, Vertex va, Vertex pa, const Graph& b, Vertex vb, Vertex pb, VertexMap& map) {
  map[va] = vb;
  std::vector<std::pair<std::string, Vertex>> ka;
  std::vector<std::pair<std::string, Vertex>> kb;
  for (Vertex w : a.neighbors(va)) {
    if (w != pa) ka.emplace_back(rooted_code(a, w, va), w);
  }
  for (Vertex w : b.neighbors(vb)) {
    if (w != pb) kb.emplace_back(rooted_code(b, w, vb), w);
  }
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  ensure(ka.size() == kb.size(), "rooted trees with equal codes differ in arity");
  for (std::size_t i = 0; i < ka.size(); ++i) {
    ensure(ka[i].first == kb[i].first, "rooted trees with equal codes differ in a subtree");
    match_rooted(a, ka[i].second, va, b, kb[i].second, vb, map);
  }
}

}  // namespace

ForestCode forest_canonical(const Graph& f) {
  require_forest(f);
  std::vector<std::string> trees;
  for (const auto& comp : components(f)) trees.push_back(best_rooting(f, comp).code);
  std::sort(trees.begin(), trees.end());
  ForestCode out;
  for (const auto& t : trees) out.code += t;
  return out;
}

std::optional<VertexMap> forests_isomorphic(const Graph& a, const Graph& b) {
  require_forest(a);
  require_forest(b);
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  if (forest_canonical(a) != forest_canonical(b)) return std::nullopt;

  std::vector<RootedTree> tb;
  for (const auto& comp : components(b)) tb.push_back(best_rooting(b, comp));
  std::vector<char> taken(tb.size(), 0);

  VertexMap map(static_cast<std::size_t>(a.order()), -1);
  for (const auto& comp : components(a)) {
    const RootedTree ta = best_rooting(a, comp);
    std::size_t j = 0;
    while (j < tb.size() && (taken[j] || tb[j].code != ta.code)) ++j;
    ensure(j < tb.size(), "forest codes agree but no partner tree was found");
    taken[j] = 1;
    match_rooted(a, ta.root, -1, b, tb[j].root, -1, map);
  }
  ensure(is_isomorphism(a, b, map), "forest matching is not an isomorphism");
  return map;
}

namespace {

// ---- general backtracking ---------------------------------------------------

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, std::size_t limit)
      : a_(a), b_(b), n_(a.order()), limit_(limit), da_(distances_all_pairs(a)), db_(distances_all_pairs(b)) {}

  std::vector<VertexMap> run() {
    if (a_.order() != b_.order() || a_.size() != b_.size()) return {};
    if (n_ > default_budget().iso_vertices) {
      throw BudgetError("isomorphism search on " + std::to_string(n_) + " vertices exceeds the budget of " +
                        std::to_string(default_budget().iso_vertices));
    }
    if (n_ == 0) return {VertexMap{}};
    if (!assign_invariants()) return {};
    plan_order();
    map_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), 0);
    search(0);
    return std::move(found_);
  }

 private:
  // Degree, distance profile (unreachable pairs in the last slot), neighbor degrees.
  using Invariant = std::vector<int>;

  Invariant invariant_of(const Graph& g, const DistanceMatrix& d, Vertex v) const {
    Invariant inv;
    inv.push_back(g.degree(v));
    std::vector<int> profile(static_cast<std::size_t>(n_) + 1, 0);
    for (Vertex w = 0; w < n_; ++w) {
      const auto dist = d.get(v, w);
      ++profile[dist ? static_cast<std::size_t>(*dist) : static_cast<std::size_t>(n_)];
    }
    std::vector<int> nbr_degrees;
    for (Vertex w : g.neighbors(v)) nbr_degrees.push_back(g.degree(w));
    std::sort(nbr_degrees.begin(), nbr_degrees.end());
    inv.insert(inv.end(), profile.begin(), profile.end());
    inv.insert(inv.end(), nbr_degrees.begin(), nbr_degrees.end());
    return inv;
  }

  bool assign_invariants() {
    std::map<Invariant, int> ids;
    std::vector<Invariant> ia;
    std::vector<Invariant> ib;
    for (Vertex v = 0; v < n_; ++v) ia.push_back(invariant_of(a_, da_, v));
    for (Vertex v = 0; v < n_; ++v) ib.push_back(invariant_of(b_, db_, v));
    for (const auto& inv : ia) ids.try_emplace(inv, static_cast<int>(ids.size()));
    class_a_.resize(static_cast<std::size_t>(n_));
    class_b_.resize(static_cast<std::size_t>(n_));
    std::vector<int> count(ids.size(), 0);
    for (Vertex v = 0; v < n_; ++v) {
      class_a_[v] = ids.at(ia[v]);
      ++count[class_a_[v]];
    }
    for (Vertex v = 0; v < n_; ++v) {
      const auto it = ids.find(ib[v]);
      if (it == ids.end()) return false;
      class_b_[v] = it->second;
      if (--count[it->second] < 0) return false;
    }
    class_size_.assign(ids.size(), 0);
    for (Vertex v = 0; v < n_; ++v) ++class_size_[class_a_[v]];
    return true;
  }

  // Connected-first order: most already-placed neighbors, then rarest class.
  void plan_order() {
    std::vector<char> placed(static_cast<std::size_t>(n_), 0);
    std::vector<int> links(static_cast<std::size_t>(n_), 0);
    anchor_.assign(static_cast<std::size_t>(n_), -1);
    for (int step = 0; step < n_; ++step) {
      Vertex pick = -1;
      for (Vertex v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        if (pick < 0) {
          pick = v;
          continue;
        }
        const auto key_v = std::tuple(-links[v], class_size_[class_a_[v]], v);
        const auto key_p = std::tuple(-links[pick], class_size_[class_a_[pick]], pick);
        if (key_v < key_p) pick = v;
      }
      placed[pick] = 1;
      order_.push_back(pick);
      for (Vertex w : a_.neighbors(pick)) {
        if (!placed[w]) {
          ++links[w];
          if (anchor_[w] < 0) anchor_[w] = pick;
        }
      }
    }
  }

  bool consistent(Vertex v, Vertex image, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex w = order_[i];
      if (da_.get(v, w) != db_.get(image, map_[w])) return false;
    }
    return true;
  }

  void search(std::size_t depth) {
    if (found_.size() >= limit_) return;
    if (depth == order_.size()) {
      found_.push_back(map_);
      return;
    }
    const Vertex v = order_[depth];
    auto attempt = [&](Vertex image) {
      if (used_[image] || class_b_[image] != class_a_[v]) return;
      if (!consistent(v, image, depth)) return;
      map_[v] = image;
      used_[image] = 1;
      search(depth + 1);
      used_[image] = 0;
      map_[v] = -1;
    };
    if (anchor_[v] >= 0) {
      for (Vertex image : b_.neighbors(map_[anchor_[v]])) {
        attempt(image);
        if (found_.size() >= limit_) return;
      }
    } else {
      for (Vertex image = 0; image < n_; ++image) {
        attempt(image);
        if (found_.size() >= limit_) return;
      }
    }
  }

  const Graph& a_;
  const Graph& b_;
  int n_;
  std::size_t limit_;
  DistanceMatrix da_;
  DistanceMatrix db_;
  std::vector<int> class_a_;
  std::vector<int> class_b_;
  std::vector<int> class_size_;
  std::vector<Vertex> order_;
  std::vector<Vertex> anchor_;
  VertexMap map_;
  std::vector<char> used_;
  std::vector<VertexMap> found_;
};

}  // namespace

std::optional<VertexMap> graphs_isomorphic(const Graph& a, const Graph& b) {
  auto found = Matcher(a, b, 1).run();
  if (found.empty()) return std::nullopt;
  ensure(is_isomorphism(a, b, found.front()), "backtracking produced a non-isomorphism");
  return std::move(found.front());
}

std::vector<VertexMap> all_isomorphisms(const Graph& a, const Graph& b, std::size_t limit) {
  if (limit == 0) return {};
  return Matcher(a, b, limit).run();
}

}  // namespace cubeforge
