#include "cubeforge/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "cubeforge/error.hpp"
#include "cubeforge/tau.hpp"

namespace cubeforge {

namespace {

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
                                "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("field \"") + key + "\": " + e.what());
  }
}

std::vector<BitString> parse_labels(const std::vector<std::string>& text) {
  std::vector<BitString> out;
  for (const auto& s : text) out.push_back(BitString::parse(s));
  return out;
}

int common_width(const std::vector<BitString>& labels) {
  if (labels.empty()) throw InputError("label list is empty");
  const auto w = labels.front().width();
  for (const auto& l : labels) {
    if (l.width() != w) throw InputError("labels differ in width");
  }
  return static_cast<int>(w);
}

}  // namespace

Json read_json(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json graph_to_json(const Graph& g, const BinaryLabeling* labels) {
  Json out;
  out["n"] = g.order();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  out["edges"] = std::move(edges);
  if (labels) {
    Json ls = Json::array();
    for (const auto& l : labels->labels) ls.push_back(l.str());
    out["labels"] = std::move(ls);
  }
  return out;
}

ParsedGraph graph_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("graph JSON must be an object");
  ParsedGraph out;
  if (j.contains("generators")) {
    const auto gens = parse_labels(field<std::vector<std::string>>(j, "generators"));
    const int width = j.contains("width") ? field<int>(j, "width") : common_width(gens);
    LabeledGraph lg = daisy_from_generators(width, gens);
    out.graph = std::move(lg.graph);
    out.labels = std::move(lg.labeling);
    return out;
  }
  if (!j.contains("edges") && j.contains("labels")) {
    auto labels = parse_labels(field<std::vector<std::string>>(j, "labels"));
    const int width = common_width(labels);
    LabeledGraph lg = graph_from_labels(width, std::move(labels));
    out.graph = std::move(lg.graph);
    out.labels = std::move(lg.labeling);
    return out;
  }
  const int n = field<int>(j, "n");
  if (n < 0) throw InputError("negative vertex count");
  const auto pairs = field<std::vector<std::pair<Vertex, Vertex>>>(j, "edges");
  out.graph = build_graph(n, pairs);
  if (j.contains("labels")) {
    BinaryLabeling lab;
    lab.labels = parse_labels(field<std::vector<std::string>>(j, "labels"));
    if (static_cast<int>(lab.labels.size()) != n) throw InputError("label count differs from the vertex count");
    lab.width = n == 0 ? 0 : common_width(lab.labels);
    out.labels = std::move(lab);
  }
  return out;
}

Json plane_to_json(const PlaneGraph& pg) {
  Json out;
  out["n"] = pg.order();
  out["rotations"] = pg.rotations();
  const auto& outer = pg.outer_faces();
  if (outer.size() == 1) {
    out["outer"] = outer.front();
  } else {
    out["outer"] = outer;
  }
  out["faces"] = pg.faces();
  return out;
}

PlaneGraph plane_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("plane-graph JSON must be an object");
  const int n = field<int>(j, "n");
  auto rotations = field<std::vector<std::vector<Vertex>>>(j, "rotations");
  OuterHint hint;
  if (j.contains("outer")) {
    const Json& o = j.at("outer");
    if (o.is_number_integer()) {
      hint.faces.push_back(o.get<int>());
    } else if (o.is_array() && !o.empty() && o.front().is_array()) {
      hint.walks = field<std::vector<std::vector<Vertex>>>(j, "outer");
    } else if (o.is_array()) {
      hint.faces = field<std::vector<int>>(j, "outer");
    } else if (!o.is_null()) {
      throw InputError("\"outer\" must be a face index, a list of indices or a list of walks");
    }
  }
  return build_plane_graph(n, std::move(rotations), hint);
}

Json census_to_json(int k, const std::vector<LabeledGraph>& graphs) {
  Json out;
  out["k"] = k;
  out["count"] = graphs.size();
  Json list = Json::array();
  for (const auto& g : graphs) list.push_back(graph_to_json(g.graph, &g.labeling));
  out["graphs"] = std::move(list);
  return out;
}

Json theta_to_json(const ThetaResult& theta) {
  Json out;
  out["transitive"] = theta.transitive;
  Json classes = Json::array();
  for (const auto& cls : theta.partition.classes) {
    Json edges = Json::array();
    for (const Edge& e : cls) edges.push_back({e.u, e.v});
    classes.push_back(std::move(edges));
  }
  out["classes"] = std::move(classes);
  return out;
}

std::string graph_to_dot(const Graph& g, const PartialCubeCert* cert, bool tau_overlay, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  if (tau_overlay && cert) out << "  subgraph cluster_graph {\n    label=\"graph\";\n";
  const std::string pad = tau_overlay && cert ? "    " : "  ";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << pad << 'v' << v;
    if (cert) out << " [label=\"" << cert->labeling.labels[v].str() << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << pad << 'v' << e.u << " -- v" << e.v;
    if (cert) {
      const int c = cert->theta.class_of(g, e);
      out << " [color=\"" << kPalette[c % 10] << "\", label=\"" << c << "\"]";
    }
    out << ";\n";
  }
  if (tau_overlay && cert) {
    out << "  }\n  subgraph cluster_tau {\n    label=\"tau\";\n";
    const Graph tau = tau_graph(g, *cert).graph;
    for (Vertex c = 0; c < tau.order(); ++c) {
      out << "    t" << c << " [label=\"" << c << "\", shape=box, color=\"" << kPalette[c % 10] << "\"];\n";
    }
    for (const Edge& e : tau.edges()) out << "    t" << e.u << " -- t" << e.v << " [style=dashed];\n";
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

std::string plane_to_dot(const PlaneGraph& pg, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int f = 0; f < static_cast<int>(pg.faces().size()); ++f) {
    out << "  // face " << f << (pg.is_outer(f) ? " (outer):" : ":");
    for (Vertex v : pg.faces()[f]) out << ' ' << v;
    out << '\n';
  }
  for (Vertex v = 0; v < pg.order(); ++v) out << "  v" << v << ";\n";
  for (const Edge& e : pg.graph().edges()) {
    out << "  v" << e.u << " -- v" << e.v << " [label=\"" << pg.face_of(e.u, e.v) << '|' << pg.face_of(e.v, e.u)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cubeforge
