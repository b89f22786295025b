#include "cubeforge/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "cubeforge/daisy.hpp"
#include "cubeforge/error.hpp"
#include "cubeforge/fixtures.hpp"
#include "cubeforge/iso.hpp"
#include "cubeforge/resonance.hpp"
#include "cubeforge/synthesis.hpp"
#include "cubeforge/tau.hpp"

namespace cubeforge {

namespace {

class Tally {
 public:
  explicit Tally(std::string id) { result_.id = std::move(id); }

  // Input and internal errors count as failures; budget errors propagate.
  void run(const std::function<bool()>& body, Json reproducer) {
    bool ok = false;
    try {
      ok = body();
    } catch (const InputError& e) {
      reproducer["error"] = e.what();
    } catch (const InternalError& e) {
      reproducer["error"] = e.what();
    }
    ++result_.instances;
    if (ok) {
      ++result_.passed;
    } else {
      result_.failures.push_back(std::move(reproducer));
    }
  }

  StatementResult done() { return std::move(result_); }

 private:
  StatementResult result_;
};

using Suite = std::function<std::vector<StatementResult>(const VerifyOptions&)>;

int option(const std::optional<int>& value, int fallback, int lo, int hi, const char* name) {
  const int v = value.value_or(fallback);
  if (v < lo || v > hi) {
    throw InputError(std::string("--") + name + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return v;
}

Graph tau_of(const Graph& g) {
  const auto cert = is_partial_cube(g);
  if (!cert) throw InputError("not a partial cube");
  return tau_graph(g, *cert).graph;
}

Graph shuffled(const Graph& g, std::uint32_t seed) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(seed);
  for (std::size_t i = perm.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng() % i);
    std::swap(perm[i - 1], perm[j]);
  }
  return relabel(g, perm);
}

bool same_graph_up_to_iso(const Graph& a, const Graph& b) { return graphs_isomorphic(a, b).has_value(); }

struct CensusEntry {
  int k;
  std::size_t index;
  Graph graph;
};

std::vector<CensusEntry> census_upto(int k_max) {
  std::vector<CensusEntry> out;
  for (int k = 1; k <= k_max; ++k) {
    const auto members = enumerate_daisy_cubes(k);
    for (std::size_t i = 0; i < members.size(); ++i) out.push_back({k, i, members[i].graph});
  }
  return out;
}

Json census_ref(const CensusEntry& e) { return Json{{"k", e.k}, {"census_index", e.index}}; }

bool forest_tau(const Graph& g) { return is_forest(tau_of(g)); }

// ---- suites ------------------------------------------------------------------

std::vector<StatementResult> edgeless_tau(const VerifyOptions& o) {
  const int k_max = option(o.k, 5, 1, 6, "k");
  Tally t("lemma3.1");
  for (const auto& e : census_upto(k_max)) {
    Json rep = census_ref(e);
    rep["graph"] = graph_to_json(e.graph);
    t.run([&] { return (tau_of(e.graph).size() == 0) == same_graph_up_to_iso(e.graph, hypercube(e.k).graph); }, rep);
  }
  return {t.done()};
}

std::vector<StatementResult> class_isomorphisms(const VerifyOptions& o) {
  const int k_max = option(o.k, 4, 1, 6, "k");
  Tally t("theorem3.2");
  for (const auto& e : census_upto(k_max)) {
    if (!forest_tau(e.graph)) continue;
    const Graph copy = shuffled(e.graph, static_cast<std::uint32_t>(1000 * e.k + e.index));
    const auto ca = is_daisy_cube(e.graph);
    const auto cb = is_daisy_cube(copy);
    const Graph ta = tau_graph(e.graph, ca->cert).graph;
    const Graph tb = tau_graph(copy, cb->cert).graph;
    for (const VertexMap& upsilon : all_isomorphisms(ta, tb, 5000)) {
      Json rep = census_ref(e);
      rep["copy"] = graph_to_json(copy);
      rep["upsilon"] = upsilon;
      t.run(
          [&] {
            const VertexMap lambda = daisy_iso_from_tau(e.graph, *ca, copy, *cb, upsilon);
            return check_class_isomorphism(e.graph, *ca, copy, *cb, upsilon, lambda).ok();
          },
          rep);
    }
  }
  return {t.done()};
}

std::vector<StatementResult> iso_iff_tau_iso(const VerifyOptions& o) {
  const int k_max = option(o.k, 4, 1, 6, "k");
  std::vector<std::pair<Json, Graph>> pool;
  for (const auto& e : census_upto(k_max)) {
    if (!forest_tau(e.graph)) continue;
    pool.emplace_back(census_ref(e), e.graph);
    Json ref = census_ref(e);
    ref["shuffled"] = true;
    pool.emplace_back(ref, shuffled(e.graph, static_cast<std::uint32_t>(7 * e.k + 31 * e.index + 1)));
  }
  std::vector<ForestCode> codes;
  for (const auto& [ref, g] : pool) codes.push_back(forest_canonical(tau_of(g)));
  Tally t("corollary3.3");
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      Json rep{{"a", pool[i].first}, {"b", pool[j].first}};
      t.run(
          [&] {
            const bool iso = same_graph_up_to_iso(pool[i].second, pool[j].second);
            const bool via = daisy_isomorphic_via_tau(pool[i].second, pool[j].second).isomorphic;
            return iso == (codes[i] == codes[j]) && iso == via;
          },
          rep);
    }
  }
  return {t.done()};
}

std::vector<PlaneGraph> p2c_pieces() {
  return {fibonaccene(1), fibonaccene(2), fibonaccene(3), tree_to_p2c(star_graph(3)), tree_to_p2c(path_graph(4))};
}

std::vector<StatementResult> union_tau(const VerifyOptions&) {
  const auto pieces = p2c_pieces();
  Tally t("lemma4.1");
  const int count = static_cast<int>(pieces.size());
  std::vector<std::vector<int>> choices;
  for (int a = 0; a < count; ++a) {
    choices.push_back({a});
    for (int b = a; b < count; ++b) {
      choices.push_back({a, b});
      for (int c = b; c < count; ++c) choices.push_back({a, b, c});
    }
  }
  for (const auto& pick : choices) {
    t.run(
        [&] {
          PlaneGraph g = pieces[pick[0]];
          Graph duals = inner_dual(pieces[pick[0]]);
          for (std::size_t i = 1; i < pick.size(); ++i) {
            g = plane_disjoint_union(g, pieces[pick[i]]);
            duals = disjoint_union(duals, inner_dual(pieces[pick[i]]));
          }
          const Graph tau = tau_of(resonance_graph(g).graph);
          return is_forest(tau) && forests_isomorphic(tau, duals).has_value();
        },
        Json{{"pieces", pick}});
  }
  return {t.done()};
}

std::vector<std::pair<std::string, PlaneGraph>> plane_fixtures() {
  std::vector<std::pair<std::string, PlaneGraph>> out;
  for (int n = 1; n <= 4; ++n) out.emplace_back("fibonaccene(" + std::to_string(n) + ")", fibonaccene(n));
  out.emplace_back("two-squares-bridge", two_squares_bridge());
  for (unsigned m = 1; m < 16; ++m) out.emplace_back("nested-squares(" + std::to_string(m) + ")", nested_squares(m));
  out.emplace_back("p2c(star3)", tree_to_p2c(star_graph(3)));
  out.emplace_back("p2c(path4)", tree_to_p2c(path_graph(4)));
  out.emplace_back("fibonaccene(2)+two-squares-bridge", plane_disjoint_union(fibonaccene(2), two_squares_bridge()));
  return out;
}

std::vector<StatementResult> weakly_elementary_tau(const VerifyOptions&) {
  Tally forest("lemma4.2");
  Tally median("lemma4.2/resonance-median");
  for (const auto& [name, pg] : plane_fixtures()) {
    const Json rep{{"fixture", name}};
    if (!is_weakly_elementary(pg)) continue;
    const Graph r = resonance_graph(pg).graph;
    median.run([&] { return is_median(r); }, rep);
    if (!is_daisy_cube(r)) continue;
    forest.run(
        [&] {
          const Graph tau = tau_of(r);
          return is_forest(tau) && forests_isomorphic(tau, allowed_inner_dual(pg)).has_value();
        },
        rep);
  }
  return {forest.done(), median.done()};
}

std::vector<StatementResult> realization(const VerifyOptions& o) {
  const int k_max = option(o.k, 4, 1, 6, "k");
  Tally necessity("theorem4.3/necessity");
  for (const auto& [name, pg] : plane_fixtures()) {
    const Graph r = resonance_graph(pg).graph;
    if (!is_daisy_cube(r)) continue;
    necessity.run([&] { return is_forest(tau_of(r)); }, Json{{"fixture", name}});
  }
  Tally sufficiency("theorem4.3/sufficiency");
  for (const auto& e : census_upto(k_max)) {
    if (e.graph.size() == 0 || !forest_tau(e.graph)) continue;
    sufficiency.run(
        [&] {
          const auto cert = is_daisy_cube(e.graph);
          const PlaneGraph pg = realize_resonance(e.graph, *cert);
          return same_graph_up_to_iso(resonance_graph(pg).graph, e.graph);
        },
        census_ref(e));
  }
  Tally trees("theorem4.3/trees");
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& tree : all_trees(n)) {
      trees.run(
          [&] {
            const PlaneGraph pg = tree_to_p2c(tree);
            return is_peripherally_2_colorable(pg) && forests_isomorphic(inner_dual(pg), tree).has_value();
          },
          Json{{"tree", graph_to_json(tree)}});
    }
  }
  return {necessity.done(), sufficiency.done(), trees.done()};
}

std::vector<StatementResult> fibonacci_lucas(const VerifyOptions& o) {
  const int n_max = option(o.n, 10, 1, 14, "n");
  Tally fib("lemma4.4/fibonacci-path");
  Tally lucas("lemma4.4/lucas-cycle");
  Tally refuse("lemma4.4/lucas-not-realizable");
  for (int n = 1; n <= n_max; ++n) {
    fib.run([&] { return same_graph_up_to_iso(tau_of(fibonacci_cube(n).graph), path_graph(n)); }, Json{{"n", n}});
  }
  for (int n = 3; n <= n_max; ++n) {
    const Graph l = lucas_cube(n).graph;
    lucas.run([&] { return same_graph_up_to_iso(tau_of(l), cycle_graph(n)); }, Json{{"n", n}});
    refuse.run(
        [&] {
          try {
            (void)realize_resonance(l, *is_daisy_cube(l));
          } catch (const NotRealizableError&) {
            return true;
          }
          return false;
        },
        Json{{"n", n}});
  }
  return {fib.done(), lucas.done(), refuse.done()};
}

std::vector<StatementResult> simplex_identities(const VerifyOptions& o) {
  const int n_max = option(o.n, 8, 1, 10, "n");
  Tally complete("prop4.5/complete");
  Tally path("prop4.5/path-complement");
  Tally cycle("prop4.5/cycle-complement");
  Tally tau("prop4.5/tau");
  for (int n = 1; n <= std::min(n_max, 6); ++n) {
    complete.run([&] { return same_graph_up_to_iso(simplex_graph(complete_graph(n)).graph, hypercube(n).graph); },
                 Json{{"n", n}});
  }
  for (int n = 1; n <= n_max; ++n) {
    path.run(
        [&] {
          return same_graph_up_to_iso(simplex_graph(complement(path_graph(n))).graph, fibonacci_cube(n).graph);
        },
        Json{{"n", n}});
  }
  for (int n = 3; n <= n_max; ++n) {
    cycle.run(
        [&] { return same_graph_up_to_iso(simplex_graph(complement(cycle_graph(n))).graph, lucas_cube(n).graph); },
        Json{{"n", n}});
  }
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) {
      tau.run([&] { return same_graph_up_to_iso(tau_of(simplex_graph(complement(g)).graph), g); },
              Json{{"graph", graph_to_json(g)}});
    }
  }
  return {complete.done(), path.done(), cycle.done(), tau.done()};
}

std::vector<StatementResult> same_tau_k3(const VerifyOptions&) {
  const Graph c6 = cycle_graph(6);
  const Graph k13 = lucas_cube(3).graph;
  const Graph q3m = q3_minus().graph;
  const std::vector<std::pair<std::string, Graph>> trio{{"C6", c6}, {"Lucas3", k13}, {"Q3-", q3m}};
  Tally tau("fig1/tau-K3");
  for (const auto& [name, g] : trio) {
    tau.run([&] { return same_graph_up_to_iso(tau_of(g), complete_graph(3)); }, Json{{"graph", name}});
  }
  Tally distinct("fig1/pairwise-non-isomorphic");
  for (std::size_t i = 0; i < trio.size(); ++i) {
    for (std::size_t j = i + 1; j < trio.size(); ++j) {
      distinct.run([&] { return !same_graph_up_to_iso(trio[i].second, trio[j].second); },
                   Json{{"a", trio[i].first}, {"b", trio[j].first}});
    }
  }
  Tally predicates("fig1/daisy-median");
  predicates.run([&] { return !is_daisy_cube(c6) && !is_median(c6); }, Json{{"graph", "C6"}});
  predicates.run([&] { return is_median(k13); }, Json{{"graph", "Lucas3"}});
  predicates.run([&] { return is_daisy_cube(q3m).has_value() && !is_median(q3m); }, Json{{"graph", "Q3-"}});
  return {tau.done(), distinct.done(), predicates.done()};
}

std::vector<StatementResult> complete_tau(const VerifyOptions& o) {
  const int k = option(o.k, 5, 3, 6, "k");
  std::vector<Graph> hits;
  for (const auto& g : enumerate_daisy_cubes(k)) {
    if (same_graph_up_to_iso(tau_of(g.graph), complete_graph(k))) hits.push_back(g.graph);
  }
  Tally several("fig2/several-complete-tau");
  several.run(
      [&] {
        if (hits.size() < 2) return false;
        for (std::size_t i = 0; i < hits.size(); ++i) {
          for (std::size_t j = i + 1; j < hits.size(); ++j) {
            if (same_graph_up_to_iso(hits[i], hits[j])) return false;
          }
        }
        return true;
      },
      Json{{"k", k}, {"found", hits.size()}});
  Tally refused("fig2/refused");
  for (std::size_t i = 0; i < hits.size(); ++i) {
    refused.run(
        [&] {
          try {
            (void)daisy_isomorphic_via_tau(hits[i], hits[i]);
          } catch (const InputError&) {
            return true;
          }
          return false;
        },
        Json{{"k", k}, {"hit", i}});
  }
  return {several.done(), refused.done()};
}

std::vector<StatementResult> contraction_tau(const VerifyOptions& o) {
  const int k_max = option(o.k, 4, 1, 6, "k");
  Tally found("fig3/mismatch-found");
  found.run(
      [&] {
        const auto hit = search_contraction_mismatch(k_max);
        return hit.has_value() && !contraction_keeps_tau(hit->graph.graph, is_daisy_cube(hit->graph.graph)->cert, hit->cls);
      },
      Json{{"k", k_max}});
  Tally pendant("fig3/pendant-classes");
  for (const auto& e : census_upto(k_max)) {
    const auto cert = is_daisy_cube(e.graph);
    const Graph tau = tau_graph(e.graph, cert->cert).graph;
    if (!is_forest(tau)) continue;
    for (Vertex c = 0; c < tau.order(); ++c) {
      if (tau.degree(c) != 1) continue;
      Json rep = census_ref(e);
      rep["class"] = c;
      pendant.run([&] { return contraction_keeps_tau(e.graph, cert->cert, c); }, rep);
    }
  }
  return {found.done(), pendant.done()};
}

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table{
      {"lemma3.1", edgeless_tau},       {"theorem3.2", class_isomorphisms}, {"corollary3.3", iso_iff_tau_iso},
      {"lemma4.1", union_tau},          {"lemma4.2", weakly_elementary_tau}, {"theorem4.3", realization},
      {"lemma4.4", fibonacci_lucas},    {"prop4.5", simplex_identities},  {"fig1", same_tau_k3},
      {"fig2", complete_tau},           {"fig3", contraction_tau},
  };
  return table;
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(statements.begin(), statements.end(), [](const StatementResult& s) { return s.ok(); });
}

Json VerifyReport::to_json() const {
  Json out = Json::array();
  for (const auto& s : statements) {
    out.push_back(Json{{"id", s.id}, {"instances", s.instances}, {"passed", s.passed}, {"failures", s.failures}});
  }
  return out;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& s : statements) {
    out << (s.ok() ? "PASS " : "FAIL ") << s.id << ' ' << s.passed << '/' << s.instances << '\n';
    for (const auto& f : s.failures) out << "  reproducer " << f.dump() << '\n';
  }
  return out.str();
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"lemma3.1", "theorem3.2", "corollary3.3", "lemma4.1",
                                              "lemma4.2", "theorem4.3", "lemma4.4",     "prop4.5",
                                              "fig1",     "fig2",       "fig3"};
  return names;
}

VerifyReport run_verify(const std::string& suite, const VerifyOptions& options) {
  VerifyReport report;
  std::vector<std::string> selected;
  if (suite == "all") {
    selected = verify_suites();
  } else if (suites().contains(suite)) {
    selected.push_back(suite);
  } else {
    throw InputError("unknown suite \"" + suite + "\"");
  }
  for (const auto& name : selected) {
    auto part = suites().at(name)(options);
    for (auto& s : part) report.statements.push_back(std::move(s));
  }
  std::stable_sort(report.statements.begin(), report.statements.end(),
                   [](const StatementResult& a, const StatementResult& b) { return a.id < b.id; });
  return report;
}

}  // namespace cubeforge
