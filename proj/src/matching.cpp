#include "cubeforge/matching.hpp"

#include <algorithm>
#include <string>

#include "cubeforge/error.hpp"

namespace cubeforge {

std::vector<Vertex> covered(const Matching& m) {
  std::vector<Vertex> out;
  for (const Edge& e : m) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Stops quietly after `stop_after` matchings; throws past `limit`.
std::vector<Matching> enumerate(const Graph& g, std::size_t limit, std::size_t stop_after) {
  std::vector<Matching> out;
  if (g.order() % 2 != 0) return out;
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  Matching current;

  // Lowest uncovered vertex first, partners ascending: the chosen edges come
  // out already sorted, and the matchings in lexicographic order.
  auto extend = [&](auto&& self, Vertex from) -> void {
    if (out.size() >= stop_after) return;
    while (from < g.order() && used[from]) ++from;
    if (from == g.order()) {
      out.push_back(current);
      if (out.size() > limit) throw BudgetError("more than " + std::to_string(limit) + " perfect matchings");
      return;
    }
    used[from] = 1;
    for (Vertex w : g.neighbors(from)) {
      if (used[w]) continue;
      used[w] = 1;
      current.emplace_back(from, w);
      self(self, from + 1);
      current.pop_back();
      used[w] = 0;
    }
    used[from] = 0;
  };
  extend(extend, 0);
  return out;
}

}  // namespace

std::vector<Matching> perfect_matchings(const Graph& g, std::optional<std::size_t> cap) {
  const std::size_t limit = cap.value_or(static_cast<std::size_t>(default_budget().matchings));
  return enumerate(g, limit, limit + 1);
}

bool has_perfect_matching(const Graph& g) { return !enumerate(g, 1, 1).empty(); }

std::vector<Edge> allowed_edges(const Graph& g) {
  const auto all = perfect_matchings(g);
  if (all.empty()) throw InputError("graph has no perfect matching");
  std::vector<Edge> out;
  for (const auto& m : all) out.insert(out.end(), m.begin(), m.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ElementaryComponent> elementary_components(const Graph& g) {
  const auto allowed = allowed_edges(g);
  const Graph sub = spanning_subgraph(g, allowed);
  std::vector<ElementaryComponent> out;
  for (auto& comp : components(sub)) {
    ElementaryComponent c;
    c.is_k2 = comp.size() == 2;
    c.vertices = std::move(comp);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace cubeforge
