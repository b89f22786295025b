#include "cubeforge/daisy.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "cubeforge/error.hpp"
#include "cubeforge/iso.hpp"

namespace cubeforge {

LabeledGraph graph_from_labels(int width, std::vector<BitString> labels) {
  for (const auto& label : labels) {
    if (static_cast<int>(label.width()) != width) throw InputError("label width mismatch");
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    BitString probe = labels[i];
    for (int pos = 0; pos < width; ++pos) {
      probe.flip(static_cast<std::size_t>(pos));
      const auto it = std::lower_bound(labels.begin(), labels.end(), probe);
      if (it != labels.end() && *it == probe) {
        const auto j = static_cast<std::size_t>(it - labels.begin());
        if (j > i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
      probe.flip(static_cast<std::size_t>(pos));
    }
  }
  LabeledGraph out;
  out.graph = graph_from_edges(static_cast<int>(labels.size()), edges);
  out.labeling.width = width;
  out.labeling.labels = std::move(labels);
  return out;
}

namespace {

std::vector<BitString> strings_where(int n, auto&& keep) {
  std::vector<BitString> out;
  BitString s(static_cast<std::size_t>(n));
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int i = 0; i < n; ++i) s.set(static_cast<std::size_t>(i), ((mask >> i) & 1U) != 0);
    if (keep(s)) out.push_back(s);
  }
  return out;
}

bool no_adjacent_ones(const BitString& s) {
  for (std::size_t i = 0; i + 1 < s.width(); ++i) {
    if (s.test(i) && s.test(i + 1)) return false;
  }
  return true;
}

void check_dimension(int n, int minimum) {
  if (n < minimum) throw InputError("dimension must be at least " + std::to_string(minimum));
  if (n > default_budget().hypercube_dimension) {
    throw BudgetError("dimension " + std::to_string(n) + " exceeds the budget of " +
                      std::to_string(default_budget().hypercube_dimension));
  }
}

}  // namespace

LabeledGraph hypercube(int n) {
  check_dimension(n, 0);
  return graph_from_labels(n, strings_where(n, [](const BitString&) { return true; }));
}

LabeledGraph fibonacci_cube(int n) {
  check_dimension(n, 1);
  return graph_from_labels(n, strings_where(n, no_adjacent_ones));
}

LabeledGraph lucas_cube(int n) {
  check_dimension(n, 1);
  return graph_from_labels(n, strings_where(n, [n](const BitString& s) {
    return no_adjacent_ones(s) && !(s.test(0) && s.test(static_cast<std::size_t>(n - 1)));
  }));
}

LabeledGraph daisy_from_generators(int n, std::span<const BitString> generators) {
  if (generators.empty()) throw InputError("daisy cube needs at least one generator");
  check_dimension(n, 0);
  std::set<BitString> closure;
  for (const BitString& x : generators) {
    if (static_cast<int>(x.width()) != n) throw InputError("generator " + x.str() + " has the wrong width");
    std::vector<std::size_t> ones;
    for (std::size_t i = 0; i < x.width(); ++i) {
      if (x.test(i)) ones.push_back(i);
    }
    const std::uint64_t subsets = std::uint64_t{1} << ones.size();
    for (std::uint64_t sub = 0; sub < subsets; ++sub) {
      BitString y(x.width());
      for (std::size_t j = 0; j < ones.size(); ++j) {
        if ((sub >> j) & 1U) y.set(ones[j]);
      }
      closure.insert(std::move(y));
    }
  }
  return graph_from_labels(n, {closure.begin(), closure.end()});
}

LabeledGraph simplex_graph(const Graph& g, std::optional<std::size_t> max_cliques) {
  const std::size_t cap = max_cliques.value_or(default_budget().cliques);
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<BitString> cliques;
  std::vector<Vertex> current;

  auto extend = [&](auto&& self, Vertex from) -> void {
    BitString label(n);
    for (Vertex v : current) label.set(static_cast<std::size_t>(v));
    cliques.push_back(std::move(label));
    if (cliques.size() > cap) throw BudgetError("clique count exceeds " + std::to_string(cap));
    for (Vertex v = from; v < g.order(); ++v) {
      const bool joins = std::all_of(current.begin(), current.end(), [&](Vertex c) { return g.adjacent(c, v); });
      if (!joins) continue;
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return graph_from_labels(g.order(), std::move(cliques));
}

bool is_downward_closed(const BinaryLabeling& labeling) {
  const std::set<BitString> present(labeling.labels.begin(), labeling.labels.end());
  if (present.size() != labeling.labels.size()) return false;
  for (const BitString& label : labeling.labels) {
    BitString probe = label;
    for (std::size_t i = 0; i < probe.width(); ++i) {
      if (!probe.test(i)) continue;
      probe.flip(i);
      const bool found = present.contains(probe);
      probe.flip(i);
      if (!found) return false;
    }
  }
  return true;
}

bool le_subgraph_check(const BinaryLabeling& labeling, std::span<const Vertex> subset) {
  std::set<Vertex> members(subset.begin(), subset.end());
  for (Vertex s : members) {
    if (s < 0 || s >= static_cast<Vertex>(labeling.labels.size())) throw InputError("vertex out of range");
  }
  for (Vertex u = 0; u < static_cast<Vertex>(labeling.labels.size()); ++u) {
    if (members.contains(u)) continue;
    for (Vertex s : members) {
      if (labeling.le(u, s)) return false;
    }
  }
  return true;
}

std::optional<DaisyCert> is_daisy_cube(const Graph& g) {
  const auto cert = is_partial_cube(g);
  if (!cert) return std::nullopt;
  for (Vertex root = 0; root < g.order(); ++root) {
    BinaryLabeling shifted = cert->labeling;
    const BitString shift = shifted.labels[root];
    for (auto& label : shifted.labels) label = label ^ shift;
    if (!is_downward_closed(shifted)) continue;

    DaisyCert out{rebase(*cert, root), root};
    for (int c = 0; c < out.cert.theta.count(); ++c) {
      const auto& cls = out.cert.theta.classes[c];
      const auto at_root = std::count_if(cls.begin(), cls.end(), [root](const Edge& e) { return e.touches(root); });
      ensure(at_root == 1, "daisy class without exactly one edge at the root");
    }
    return out;
  }
  return std::nullopt;
}

namespace {

using SetMask = std::uint64_t;  // bit m set iff the label with coordinate mask m is present

SetMask permute_set(SetMask set, int k, const std::vector<int>& perm) {
  SetMask image = 0;
  const int total = 1 << k;
  for (int m = 0; m < total; ++m) {
    if (((set >> m) & 1U) == 0) continue;
    int mapped = 0;
    for (int i = 0; i < k; ++i) {
      if ((m >> i) & 1) mapped |= 1 << perm[i];
    }
    image |= SetMask{1} << mapped;
  }
  return image;
}

SetMask canonical_set(SetMask set, int k) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  SetMask best = set;
  do {
    best = std::min(best, permute_set(set, k, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

LabeledGraph graph_of_set(SetMask set, int k) {
  std::vector<BitString> labels;
  for (int m = 0; m < (1 << k); ++m) {
    if (((set >> m) & 1U) == 0) continue;
    BitString s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s.set(static_cast<std::size_t>(i), ((m >> i) & 1) != 0);
    labels.push_back(std::move(s));
  }
  return graph_from_labels(k, std::move(labels));
}

}  // namespace

std::vector<LabeledGraph> enumerate_daisy_cubes(int k) {
  if (k < 1) throw InputError("census needs at least one class");
  if (k > default_budget().census_classes) {
    throw BudgetError("census with " + std::to_string(k) + " classes exceeds the budget of " +
                      std::to_string(default_budget().census_classes));
  }
  if (k > 6) throw BudgetError("census supports at most 6 classes");

  // Masks by popcount, so every proper subset is decided before its supersets.
  std::vector<int> order(static_cast<std::size_t>(1) << k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [](int a, int b) { return __builtin_popcount(a) < __builtin_popcount(b); });

  std::set<SetMask> orbits;
  auto decide = [&](auto&& self, std::size_t idx, SetMask set) -> void {
    if (idx == order.size()) {
      orbits.insert(canonical_set(set, k));
      return;
    }
    const int m = order[idx];
    bool allowed = true;
    for (int i = 0; i < k && allowed; ++i) {
      if ((m >> i) & 1) allowed = ((set >> (m & ~(1 << i))) & 1U) != 0;
    }
    const bool forced = __builtin_popcount(m) <= 1;  // 0^k and every unit vector
    if (allowed) self(self, idx + 1, set | (SetMask{1} << m));
    if (!forced) self(self, idx + 1, set);
  };
  decide(decide, 0, 0);

  struct Candidate {
    SetMask key;
    LabeledGraph graph;
    std::vector<int> degrees;
  };
  std::vector<Candidate> candidates;
  for (SetMask key : orbits) {
    Candidate c{key, graph_of_set(key, k), {}};
    for (Vertex v = 0; v < c.graph.graph.order(); ++v) c.degrees.push_back(c.graph.graph.degree(v));
    std::sort(c.degrees.begin(), c.degrees.end());
    candidates.push_back(std::move(c));
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    const auto ka = std::tuple(a.graph.graph.order(), a.graph.graph.size(), a.key);
    const auto kb = std::tuple(b.graph.graph.order(), b.graph.graph.size(), b.key);
    return ka < kb;
  });

  std::vector<LabeledGraph> out;
  std::vector<const Candidate*> kept;
  for (const Candidate& c : candidates) {
    const bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const Candidate* other) {
      return other->degrees == c.degrees && other->graph.graph.size() == c.graph.graph.size() &&
             graphs_isomorphic(other->graph.graph, c.graph.graph).has_value();
    });
    if (duplicate) continue;
    kept.push_back(&c);
    out.push_back(c.graph);
  }
  return out;
}

}  // namespace cubeforge
