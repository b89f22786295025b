// Acceptance run: one PASS/FAIL line per criterion, each within its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"

#include "cubeforge/daisy.hpp"
#include "cubeforge/error.hpp"
#include "cubeforge/fixtures.hpp"
#include "cubeforge/iso.hpp"
#include "cubeforge/matching.hpp"
#include "cubeforge/partial_cube.hpp"
#include "cubeforge/resonance.hpp"
#include "cubeforge/synthesis.hpp"
#include "cubeforge/tau.hpp"

using namespace cubeforge;

namespace {

// Collects the first failed check of a criterion.
struct Check {
  std::string failure;
  void operator()(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

Graph tau_of(const Graph& g) {
  const auto cert = is_partial_cube(g);
  if (!cert) throw InternalError("not a partial cube");
  return tau_graph(g, *cert).graph;
}

bool forest_tau(const Graph& g) { return is_forest(tau_of(g)); }

Graph shuffled(const Graph& g, std::mt19937& rng) {
  return relabel(g, oracle::random_permutation(rng, g.order()));
}

void shared_k3_tau(Check& check) {
  const Graph c6 = cycle_graph(6);
  const Graph k13 = lucas_cube(3).graph;
  const Graph q3m = q3_minus().graph;
  const Graph k3 = complete_graph(3);
  for (const Graph* g : {&c6, &k13, &q3m}) check(oracle::isomorphic_by_permutation(tau_of(*g), k3), "tau is not K3");
  check(oracle::isomorphic_by_permutation(k13, star_graph(3)), "Lucas cube of order 3 is not K1,3");
  check(!oracle::isomorphic_by_permutation(c6, k13), "C6 ~ K1,3");
  check(!oracle::isomorphic_by_permutation(c6, q3m), "C6 ~ Q3-");
  check(!oracle::isomorphic_by_permutation(k13, q3m), "K1,3 ~ Q3-");
  check(!is_daisy_cube(c6) && !is_median(c6), "C6 predicates");
  check(is_median(k13), "K1,3 not median");
  check(is_daisy_cube(q3m).has_value() && !is_median(q3m), "Q3- predicates");
}

void edgeless_iff_hypercube(Check& check) {
  for (int k = 1; k <= 5; ++k) {
    const Graph qk = hypercube(k).graph;
    for (const auto& member : enumerate_daisy_cubes(k)) {
      const bool edgeless = tau_of(member.graph).size() == 0;
      check(edgeless == oracle::isomorphic_by_search(member.graph, qk), "k=" + std::to_string(k));
    }
  }
  const auto two = enumerate_daisy_cubes(2);
  check(two.size() == 2, "census k=2 size");
  const bool p3_first = oracle::isomorphic_by_search(two[0].graph, path_graph(3));
  const Graph& other = p3_first ? two[1].graph : two[0].graph;
  const Graph& p3 = p3_first ? two[0].graph : two[1].graph;
  check(oracle::isomorphic_by_search(p3, path_graph(3)), "census k=2 lacks P3");
  check(oracle::isomorphic_by_search(other, cycle_graph(4)), "census k=2 lacks Q2");
}

void check_all_upsilon(Check& check, const Graph& a, const Graph& b, const std::string& where) {
  const auto ca = is_daisy_cube(a);
  const auto cb = is_daisy_cube(b);
  const Graph ta = tau_graph(a, ca->cert).graph;
  const Graph tb = tau_graph(b, cb->cert).graph;
  for (const auto& upsilon : all_isomorphisms(ta, tb, 5000)) {
    const VertexMap lambda = daisy_iso_from_tau(a, *ca, b, *cb, upsilon);
    const ClassIsoCheck c = check_class_isomorphism(a, *ca, b, *cb, upsilon, lambda);
    check(c.edge_exact, where + ": lambda not edge-exact");
    check(c.class_correspondence, where + ": class correspondence");
    check(c.contraction_restriction, where + ": contraction restriction");
  }
}

void iso_via_tau(Check& check) {
  std::mt19937 rng(2024);
  std::vector<Graph> pool;
  for (int k = 1; k <= 4; ++k) {
    for (const auto& member : enumerate_daisy_cubes(k)) {
      if (!forest_tau(member.graph)) continue;
      pool.push_back(member.graph);
      pool.push_back(shuffled(member.graph, rng));
    }
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      const std::string where = "pair " + std::to_string(i) + "," + std::to_string(j);
      const bool iso = oracle::isomorphic_by_search(pool[i], pool[j]);
      check(graphs_isomorphic(pool[i], pool[j]).has_value() == iso, where + ": graphs_isomorphic");
      const bool codes = forest_canonical(tau_of(pool[i])) == forest_canonical(tau_of(pool[j]));
      check(codes == iso, where + ": forest codes");
      const TauIsoDecision d = daisy_isomorphic_via_tau(pool[i], pool[j]);
      check(d.isomorphic == iso, where + ": via-tau decision");
      if (iso) check_all_upsilon(check, pool[i], pool[j], where);
    }
  }
  // spot checks at five classes
  int spot = 0;
  for (const auto& member : enumerate_daisy_cubes(5)) {
    if (!forest_tau(member.graph) || spot++ % 6 != 0) continue;
    const Graph copy = shuffled(member.graph, rng);
    check(daisy_isomorphic_via_tau(member.graph, copy).isomorphic, "k=5 spot check decision");
    check_all_upsilon(check, member.graph, copy, "k=5 spot check");
  }
  check(spot > 0, "no k=5 forest members");
}

void complete_tau_refused(Check& check) {
  std::vector<Graph> complete_tau;
  for (const auto& member : enumerate_daisy_cubes(5)) {
    if (oracle::isomorphic_by_search(tau_of(member.graph), complete_graph(5))) complete_tau.push_back(member.graph);
  }
  check(complete_tau.size() >= 2, "fewer than two members with tau K5");
  for (std::size_t i = 0; i < complete_tau.size(); ++i) {
    for (std::size_t j = i + 1; j < complete_tau.size(); ++j) {
      check(!oracle::isomorphic_by_search(complete_tau[i], complete_tau[j]), "members not distinct");
    }
  }
  for (const Graph& a : complete_tau) {
    for (const Graph& b : complete_tau) {
      bool refused = false;
      try {
        daisy_isomorphic_via_tau(a, b);
      } catch (const InputError&) {
        refused = true;
      }
      check(refused, "via-tau decision accepted a non-forest tau");
    }
  }
}

void contraction_fixture(Check& check) {
  const auto found = search_contraction_mismatch(4);
  check(found.has_value(), "no contraction mismatch found");
  if (found) {
    const auto cert = is_partial_cube(found->graph.graph);
    check(!contraction_keeps_tau(found->graph.graph, *cert, found->cls), "recorded fixture does not mismatch");
  }
  for (int k = 1; k <= 5; ++k) {
    for (const auto& member : enumerate_daisy_cubes(k)) {
      const auto cert = is_partial_cube(member.graph);
      const Graph tau = tau_graph(member.graph, *cert).graph;
      if (!is_forest(tau)) continue;
      for (int c = 0; c < tau.order(); ++c) {
        if (tau.degree(c) != 1) continue;
        check(contraction_keeps_tau(member.graph, *cert, c), "pendant class changes tau at k=" + std::to_string(k));
      }
    }
  }
}

void fibonacci_lucas(Check& check) {
  for (int n = 1; n <= 10; ++n) {
    const Graph t = tau_of(fibonacci_cube(n).graph);
    check(forests_isomorphic(t, path_graph(n)).has_value(), "tau(Gamma_" + std::to_string(n) + ")");
  }
  check(fibonacci_cube(10).graph.order() == 144, "Gamma_10 order");
  for (int n = 3; n <= 10; ++n) {
    const auto lucas = lucas_cube(n);
    const Graph t = tau_of(lucas.graph);
    check(oracle::isomorphic_by_search(t, cycle_graph(n)), "tau(Lambda_" + std::to_string(n) + ")");
    bool refused = false;
    try {
      realize_resonance(lucas.graph, *is_daisy_cube(lucas.graph));
    } catch (const NotRealizableError&) {
      refused = true;
    }
    check(refused, "Lambda_" + std::to_string(n) + " realized");
  }
}

void simplex_identities(Check& check) {
  for (int n = 1; n <= 6; ++n) {
    check(oracle::isomorphic_by_search(simplex_graph(complete_graph(n)).graph, hypercube(n).graph),
          "K(K_" + std::to_string(n) + ")");
  }
  for (int n = 1; n <= 8; ++n) {
    check(oracle::isomorphic_by_search(simplex_graph(complement(path_graph(n))).graph, fibonacci_cube(n).graph),
          "K(P_n complement) n=" + std::to_string(n));
    if (n >= 3) {
      check(oracle::isomorphic_by_search(simplex_graph(complement(cycle_graph(n))).graph, lucas_cube(n).graph),
            "K(C_n complement) n=" + std::to_string(n));
    }
  }
  std::size_t total = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto graphs = all_graphs(n);
    total += graphs.size();
    if (n == 5) check(graphs.size() == 34, "graphs on five vertices");
    for (const Graph& g : graphs) {
      check(oracle::isomorphic_by_permutation(tau_of(simplex_graph(complement(g)).graph), g), "tau(K(G^c)) != G");
    }
  }
  check(total == 52, "graphs on at most five vertices");
}

void resonance_suite(Check& check) {
  const PlaneGraph c6 = build_plane_graph(6, {{1, 5}, {2, 0}, {3, 1}, {4, 2}, {5, 3}, {0, 4}}, OuterHint{{0}, {}});
  check(oracle::isomorphic_by_search(resonance_graph(c6).graph, path_graph(2)), "R(C6)");
  for (int n = 1; n <= 6; ++n) {
    check(oracle::isomorphic_by_search(resonance_graph(fibonaccene(n)).graph, fibonacci_cube(n).graph),
          "R(fibonaccene(" + std::to_string(n) + "))");
  }
  const PlaneGraph bridge = two_squares_bridge();
  const Graph r = resonance_graph(bridge).graph;
  check(oracle::isomorphic_by_search(r, cycle_graph(4)), "R(two squares + bridge)");
  // the elementary components are the two squares; the bridge is forbidden
  check(elementary_components(bridge.graph()).size() == 2, "two squares + bridge components");
  const PlaneGraph square = build_plane_graph(4, {{1, 3}, {2, 0}, {3, 1}, {0, 2}}, OuterHint{{0}, {}});
  const Graph r_square = resonance_graph(square).graph;
  const Graph product = cartesian_product(r_square, r_square);
  check(oracle::isomorphic_by_search(r, product), "R is not the product over components");
  std::vector<PlaneGraph> fixtures{two_squares_bridge(), plane_disjoint_union(fibonaccene(2), two_squares_bridge())};
  for (int n = 1; n <= 5; ++n) fixtures.push_back(fibonaccene(n));
  for (unsigned m = 0; m < 16; ++m) fixtures.push_back(nested_squares(m));
  int used = 0;
  for (const PlaneGraph& pg : fixtures) {
    if (!has_perfect_matching(pg.graph()) || !is_weakly_elementary(pg)) continue;
    const Graph rg = resonance_graph(pg).graph;
    if (!is_daisy_cube(rg)) continue;
    ++used;
    check(oracle::isomorphic_by_search(tau_of(rg), allowed_inner_dual(pg)), "tau(R) vs allowed inner dual");
  }
  check(used >= 8, "too few weakly elementary fixtures");
}

void round_trip(Check& check) {
  for (int k = 1; k <= 4; ++k) {
    for (const auto& member : enumerate_daisy_cubes(k)) {
      if (member.graph.size() == 0 || !forest_tau(member.graph)) continue;
      const PlaneGraph pg = realize_resonance(member.graph, *is_daisy_cube(member.graph));
      check(oracle::isomorphic_by_search(resonance_graph(pg).graph, member.graph), "round trip at k=" + std::to_string(k));
    }
  }
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& t : all_trees(n)) {
      const PlaneGraph pg = tree_to_p2c(t);
      check(is_peripherally_2_colorable(pg), "tree_to_p2c not peripherally 2-colorable");
      check(oracle::isomorphic_by_permutation(inner_dual(pg), t), "inner dual differs from the tree");
    }
  }
}

void oracle_equivalences(Check& check) {
  std::mt19937 rng(500);
  int certified = 0;
  for (int pair = 0; pair < 500; ++pair) {
    const int n = 1 + pair % 7;
    const Graph a = oracle::random_graph(rng, n, 0.45);
    const Graph b = pair % 2 ? shuffled(a, rng) : oracle::random_graph(rng, n, 0.45);
    check(graphs_isomorphic(a, b).has_value() == oracle::isomorphic_by_permutation(a, b),
          "graphs_isomorphic on pair " + std::to_string(pair));
    for (const Graph* g : {&a, &b}) {
      if (!is_connected(*g)) continue;
      if (const auto cert = is_partial_cube(*g)) {
        ++certified;
        check(oracle::hamming_equals_distance(*g, cert->labeling.labels), "certificate fails Hamming check");
      }
    }
  }
  for (int k = 1; k <= 4; ++k) {
    for (const auto& member : enumerate_daisy_cubes(k)) {
      const auto cert = is_partial_cube(member.graph);
      ++certified;
      check(cert && oracle::hamming_equals_distance(member.graph, cert->labeling.labels), "census certificate");
    }
  }
  check(certified > 100, "too few certified instances");
  for (int round = 0; round < 20; ++round) {
    const Graph g = oracle::random_bipartite(rng, 2 + round % 6, 0.5);
    check(static_cast<long long>(perfect_matchings(g).size()) == oracle::perfect_matchings_inclusion_exclusion(g),
          "perfect matching count, round " + std::to_string(round));
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "three graphs share tau K3", 1, shared_k3_tau},
      {2, "tau edgeless iff hypercube over the census", 120, edgeless_iff_hypercube},
      {3, "isomorphism via tau-forests", 300, iso_via_tau},
      {4, "census members with tau K5 are refused", 120, complete_tau_refused},
      {5, "contraction mismatch and pendant classes", 120, contraction_fixture},
      {6, "Fibonacci and Lucas tau-graphs", 30, fibonacci_lucas},
      {7, "simplex graph identities", 120, simplex_identities},
      {8, "resonance suite", 60, resonance_suite},
      {9, "realization round trip", 600, round_trip},
      {10, "oracle equivalences", 180, oracle_equivalences},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limit_seconds) check(false, "exceeded " + std::to_string(c.limit_seconds) + " s");
    const bool ok = check.failure.empty();
    failed += !ok;
    std::printf("%s criterion %d: %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                ok ? "" : " - ", check.failure.c_str());
  }
  return failed == 0 ? 0 : 1;
}
