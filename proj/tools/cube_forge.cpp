// cube-forge: command-line front end.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cubeforge/daisy.hpp"
#include "cubeforge/error.hpp"
#include "cubeforge/io.hpp"
#include "cubeforge/iso.hpp"
#include "cubeforge/partial_cube.hpp"
#include "cubeforge/resonance.hpp"
#include "cubeforge/synthesis.hpp"
#include "cubeforge/tau.hpp"
#include "cubeforge/verify.hpp"

using namespace cubeforge;

namespace {

enum Exit : int { kOk = 0, kFalse = 1, kInput = 2, kBudget = 3, kInternal = 4 };

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int verdict(bool value) {
  std::cout << (value ? "true" : "false") << '\n';
  return value ? kOk : kFalse;
}

ParsedGraph load_graph(const std::string& path) { return graph_from_json(read_json(path)); }

PartialCubeCert require_partial_cube(const Graph& g) {
  auto cert = is_partial_cube(g);
  if (!cert) throw InputError("graph is not a partial cube");
  return std::move(*cert);
}

DaisyCert require_daisy(const Graph& g) {
  auto cert = is_daisy_cube(g);
  if (!cert) throw InputError("graph is not a daisy cube");
  return std::move(*cert);
}

std::vector<BitString> parse_strings(const std::vector<std::string>& text) {
  std::vector<BitString> out;
  for (const auto& s : text) out.push_back(BitString::parse(s));
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial cubes, daisy cubes, tau-graphs and resonance graphs"};
  app.require_subcommand(1);
  std::function<int()> action;

  // gen
  std::string family;
  int size = 0;
  std::vector<std::string> generators;
  auto* gen = app.add_subcommand("gen", "Generate a graph family as JSON");
  gen->add_option("family", family,
                  "hypercube|fibonacci|lucas|daisy|path|cycle|complete|star|simplex-path-complement|"
                  "simplex-cycle-complement|fibonaccene")
      ->required();
  gen->add_option("n", size, "Size parameter")->required();
  gen->add_option("--gen", generators, "Generator strings for the daisy family");
  gen->callback([&] {
    action = [&] {
      if (family == "hypercube") {
        const auto g = hypercube(size);
        emit(graph_to_json(g.graph, &g.labeling));
      } else if (family == "fibonacci") {
        const auto g = fibonacci_cube(size);
        emit(graph_to_json(g.graph, &g.labeling));
      } else if (family == "lucas") {
        const auto g = lucas_cube(size);
        emit(graph_to_json(g.graph, &g.labeling));
      } else if (family == "daisy") {
        const auto gens = parse_strings(generators);
        const auto g = daisy_from_generators(size, gens);
        emit(graph_to_json(g.graph, &g.labeling));
      } else if (family == "path") {
        emit(graph_to_json(path_graph(size)));
      } else if (family == "cycle") {
        emit(graph_to_json(cycle_graph(size)));
      } else if (family == "complete") {
        emit(graph_to_json(complete_graph(size)));
      } else if (family == "star") {
        emit(graph_to_json(star_graph(size)));
      } else if (family == "simplex-path-complement") {
        const auto g = simplex_graph(complement(path_graph(size)));
        emit(graph_to_json(g.graph, &g.labeling));
      } else if (family == "simplex-cycle-complement") {
        const auto g = simplex_graph(complement(cycle_graph(size)));
        emit(graph_to_json(g.graph, &g.labeling));
      } else if (family == "fibonaccene") {
        emit(plane_to_json(fibonaccene(size)));
      } else {
        throw InputError("unknown family \"" + family + "\"");
      }
      return int{kOk};
    };
  });

  std::string input;
  std::string second;
  int cls = 0;

  auto* theta = app.add_subcommand("theta", "Theta-classes of a graph");
  theta->add_option("graph", input, "Graph JSON")->required();
  theta->callback([&] {
    action = [&] {
      emit(theta_to_json(theta_classes(load_graph(input).graph)));
      return int{kOk};
    };
  });

  auto* tau = app.add_subcommand("tau", "Tau-graph of a partial cube");
  tau->add_option("graph", input, "Graph JSON")->required();
  tau->callback([&] {
    action = [&] {
      const Graph g = load_graph(input).graph;
      const TauGraph t = tau_graph(g, require_partial_cube(g));
      Json out = graph_to_json(t.graph);
      out["forest"] = is_forest(t.graph);
      if (is_forest(t.graph)) out["forest_code"] = forest_canonical(t.graph).code;
      emit(out);
      return int{kOk};
    };
  });

  std::vector<int> oriented;
  auto* half = app.add_subcommand("halfspace", "W and U sets of a Theta-class");
  half->add_option("graph", input, "Graph JSON")->required();
  half->add_option("--class", cls, "Class index")->required();
  half->add_option("--edge", oriented, "Oriented edge a b of the class")->expected(2);
  half->callback([&] {
    action = [&] {
      const Graph g = load_graph(input).graph;
      std::optional<std::pair<Vertex, Vertex>> edge;
      if (oriented.size() == 2) edge = std::pair{oriented[0], oriented[1]};
      const Halfspaces h = halfspaces(g, require_partial_cube(g), cls, edge);
      emit(Json{{"a", h.a}, {"b", h.b}, {"W_ab", h.w_ab}, {"W_ba", h.w_ba}, {"U_ab", h.u_ab}, {"U_ba", h.u_ba}});
      return int{kOk};
    };
  });

  auto* contr = app.add_subcommand("contract", "Contract the edges of a Theta-class");
  contr->add_option("graph", input, "Graph JSON")->required();
  contr->add_option("--class", cls, "Class index")->required();
  contr->callback([&] {
    action = [&] {
      const Graph g = load_graph(input).graph;
      const Contraction c = contract(g, require_partial_cube(g), cls);
      Json out = graph_to_json(c.graph);
      out["projection"] = c.projection;
      emit(out);
      return int{kOk};
    };
  });

  std::vector<int> subset;
  auto* expand = app.add_subcommand("expand", "Peripheral expansion along an isometric subgraph");
  expand->add_option("graph", input, "Graph JSON")->required();
  expand->add_option("--subset", subset, "Vertices of the subgraph")->required()->delimiter(',');
  expand->callback([&] {
    action = [&] {
      emit(graph_to_json(peripheral_expansion(load_graph(input).graph, subset)));
      return int{kOk};
    };
  });

  auto* ipc = app.add_subcommand("is-partial-cube", "Partial-cube recognition");
  ipc->add_option("graph", input, "Graph JSON")->required();
  ipc->callback([&] {
    action = [&] {
      const Graph g = load_graph(input).graph;
      const auto cert = is_partial_cube(g);
      if (cert) emit(graph_to_json(g, &cert->labeling));
      return verdict(cert.has_value());
    };
  });

  auto* median = app.add_subcommand("is-median", "Median-graph test");
  median->add_option("graph", input, "Graph JSON")->required();
  median->callback([&] { action = [&] { return verdict(is_median(load_graph(input).graph)); }; });

  auto* daisy = app.add_subcommand("is-daisy", "Daisy-cube recognition");
  daisy->add_option("graph", input, "Graph JSON")->required();
  daisy->callback([&] {
    action = [&] {
      const Graph g = load_graph(input).graph;
      const auto cert = is_daisy_cube(g);
      if (cert) {
        Json out = graph_to_json(g, &cert->cert.labeling);
        out["root"] = cert->root;
        emit(out);
      }
      return verdict(cert.has_value());
    };
  });

  int census_k = 1;
  auto* census = app.add_subcommand("census", "Daisy cubes with exactly k classes up to isomorphism");
  census->add_option("--k", census_k, "Number of classes")->required();
  census->callback([&] {
    action = [&] {
      emit(census_to_json(census_k, enumerate_daisy_cubes(census_k)));
      return int{kOk};
    };
  });

  bool via_tau = false;
  bool all_upsilon = false;
  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("a", input, "Graph JSON")->required();
  iso->add_option("b", second, "Graph JSON")->required();
  iso->add_flag("--via-tau", via_tau, "Decide daisy cubes through their forest tau-graphs");
  iso->add_flag("--all-upsilon", all_upsilon, "With --via-tau, list a map for every tau-isomorphism");
  iso->callback([&] {
    action = [&] {
      const Graph a = load_graph(input).graph;
      const Graph b = load_graph(second).graph;
      if (!via_tau) {
        const auto map = graphs_isomorphic(a, b);
        if (map) emit(Json{{"map", *map}});
        return verdict(map.has_value());
      }
      const TauIsoDecision d = daisy_isomorphic_via_tau(a, b);
      if (!d.isomorphic) return verdict(false);
      Json out{{"lambda", *d.lambda}, {"upsilon", *d.correspondence}};
      if (all_upsilon) {
        const DaisyCert ca = require_daisy(a);
        const DaisyCert cb = require_daisy(b);
        Json all = Json::array();
        for (const auto& u : all_isomorphisms(tau_graph(a, ca.cert).graph, tau_graph(b, cb.cert).graph)) {
          all.push_back(Json{{"upsilon", u}, {"lambda", daisy_iso_from_tau(a, ca, b, cb, u)}});
        }
        out["all"] = std::move(all);
      }
      emit(out);
      return verdict(true);
    };
  });

  auto* res = app.add_subcommand("resonance", "Resonance graph of a plane bipartite graph");
  res->add_option("plane", input, "Plane-graph JSON")->required();
  res->callback([&] {
    action = [&] {
      const ResonanceGraph r = resonance_graph(plane_from_json(read_json(input)));
      Json out = graph_to_json(r.graph);
      Json ms = Json::array();
      for (const auto& m : r.matchings) {
        Json edges = Json::array();
        for (const Edge& e : m) edges.push_back({e.u, e.v});
        ms.push_back(std::move(edges));
      }
      out["matchings"] = std::move(ms);
      emit(out);
      return int{kOk};
    };
  });

  auto* dual = app.add_subcommand("inner-dual", "Inner dual of a plane graph");
  dual->add_option("plane", input, "Plane-graph JSON")->required();
  dual->callback([&] {
    action = [&] {
      emit(graph_to_json(inner_dual(plane_from_json(read_json(input)))));
      return int{kOk};
    };
  });

  auto* p2c = app.add_subcommand("is-p2c", "Peripheral 2-colorability test");
  p2c->add_option("plane", input, "Plane-graph JSON")->required();
  p2c->callback([&] { action = [&] { return verdict(is_peripherally_2_colorable(plane_from_json(read_json(input)))); }; });

  std::uint64_t seed = 0;
  auto* realize = app.add_subcommand("realize", "Plane bipartite graph with the given resonance graph");
  realize->add_option("daisy", input, "Graph JSON of a daisy cube")->required();
  realize->add_option("--seed", seed, "Rotates the gluing candidate order");
  realize->callback([&] {
    action = [&] {
      const Graph h = load_graph(input).graph;
      emit(plane_to_json(realize_resonance(h, require_daisy(h), seed)));
      return int{kOk};
    };
  });

  std::string suite;
  VerifyOptions vopts;
  bool json_report = false;
  auto* verify = app.add_subcommand("verify", "Run property suites");
  verify->add_option("suite", suite, "Suite name or all")->required();
  verify->add_option("--k", vopts.k, "Census classes");
  verify->add_option("--n", vopts.n, "Family size");
  verify->add_flag("--json", json_report, "Print the report as JSON");
  verify->callback([&] {
    action = [&] {
      const VerifyReport report = run_verify(suite, vopts);
      if (json_report) {
        emit(report.to_json());
      } else {
        std::cout << report.to_text();
      }
      return report.ok() ? int{kOk} : int{kFalse};
    };
  });

  std::string output;
  bool overlay = false;
  auto* dot = app.add_subcommand("dot", "Export graph, plane-graph or census JSON as DOT");
  dot->add_option("input", input, "JSON file")->required();
  dot->add_option("-o,--output", output, "Output file, or a prefix for census input");
  dot->add_flag("--tau", overlay, "Overlay the tau-graph");
  dot->callback([&] {
    action = [&] {
      const Json j = read_json(input);
      if (j.contains("rotations")) {
        write_text(output, plane_to_dot(plane_from_json(j)));
      } else if (j.contains("graphs")) {
        const auto& list = j.at("graphs");
        for (std::size_t i = 0; i < list.size(); ++i) {
          const ParsedGraph pg = graph_from_json(list[i]);
          const auto cert = is_partial_cube(pg.graph);
          const std::string name = "G" + std::to_string(i);
          const std::string text = graph_to_dot(pg.graph, cert ? &*cert : nullptr, overlay, name);
          if (output.empty() || output == "-") {
            std::cout << text;
          } else {
            write_text(output + "_" + std::to_string(i) + ".dot", text);
          }
        }
      } else {
        const Graph g = graph_from_json(j).graph;
        const auto cert = is_connected(g) ? is_partial_cube(g) : std::nullopt;
        write_text(output, graph_to_dot(g, cert ? &*cert : nullptr, overlay));
      }
      return int{kOk};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  try {
    return action();
  } catch (const NotRealizableError& e) {
    std::cerr << "not realizable: " << e.what() << '\n';
    return kFalse;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
