// Class-preserving isomorphisms of daisy cubes whose tau-graphs are forests.

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "cubeforge/daisy.hpp"
#include "cubeforge/error.hpp"
#include "cubeforge/iso.hpp"
#include "cubeforge/tau.hpp"

namespace cubeforge {

namespace {

// A sub-instance of one top-level daisy cube: an induced vertex set whose
// edges use exactly the active classes. Labels stay the top-level ones.
struct Instance {
  std::vector<Vertex> vertices;  // sorted top-level ids
  std::vector<int> active;       // sorted top-level class ids
};

struct Local {
  InducedSubgraph sub;
  std::vector<Edge> edges;          // local ids, by local edge id
  std::vector<int> edge_class;      // local edge id -> index into Instance::active
  std::map<int, int> top_to_local;  // top-level class -> index into Instance::active
  Graph tau;                        // on indices into Instance::active

  int local_class(int top) const { return top_to_local.at(top); }
};

int differing_coordinate(const BitString& x, const BitString& y) {
  ensure(hamming(x, y) == 1, "adjacent vertices differ in more than one coordinate");
  for (std::size_t i = 0; i < x.width(); ++i) {
    if (x.test(i) != y.test(i)) return static_cast<int>(i);
  }
  return -1;
}

int position_in(const std::vector<int>& sorted, int value) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
  ensure(it != sorted.end() && *it == value, "class is not active in this instance");
  return static_cast<int>(it - sorted.begin());
}

Local localize(const Graph& g, const BinaryLabeling& labels, const Instance& inst) {
  Local out;
  out.sub = induced_subgraph(g, inst.vertices);
  out.edges = out.sub.graph.edges();
  for (std::size_t i = 0; i < inst.active.size(); ++i) out.top_to_local[inst.active[i]] = static_cast<int>(i);
  std::vector<int> used(inst.active.size(), 0);
  for (const Edge& e : out.edges) {
    const int top = differing_coordinate(labels.labels[out.sub.origin[e.u]], labels.labels[out.sub.origin[e.v]]);
    const int local = position_in(inst.active, top);
    out.edge_class.push_back(local);
    ++used[local];
  }
  ensure(std::all_of(used.begin(), used.end(), [](int c) { return c > 0; }), "an active class has no edge");
  out.tau = tau_from_edge_classes(out.sub.graph, out.edge_class, static_cast<int>(inst.active.size()));
  return out;
}

// The instance is a daisy cube and its Theta-classes are exactly the label
// classes restricted to it.
void check_daisy_instance(const Local& loc, const Instance& inst, const char* what) {
  const std::string tag(what);
  ensure(is_daisy_cube(loc.sub.graph).has_value(), tag + " is not a daisy cube");
  if (loc.sub.graph.size() == 0) return;
  const ThetaResult theta = theta_classes(loc.sub.graph);
  ensure(theta.partition.count() == static_cast<int>(inst.active.size()),
         tag + " has a different number of Theta-classes than label classes");
  for (const auto& cls : theta.partition.classes) {
    const int first = loc.edge_class[*loc.sub.graph.edge_id(cls.front())];
    for (const Edge& e : cls) {
      ensure(loc.edge_class[*loc.sub.graph.edge_id(e)] == first, tag + " mixes label classes inside a Theta-class");
    }
  }
}

bool tau_maps(const Local& la, const Instance& ia, const Local& lb, const Instance& ib,
              const ClassCorrespondence& upsilon) {
  const auto n = ia.active.size();
  if (n != ib.active.size()) return false;
  std::vector<int> image(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int top = upsilon[ia.active[i]];
    const auto it = std::lower_bound(ib.active.begin(), ib.active.end(), top);
    if (it == ib.active.end() || *it != top) return false;
    image[i] = static_cast<int>(it - ib.active.begin());
  }
  return is_isomorphism(la.tau, lb.tau, image);
}

struct Split {
  Instance root_side;                  // bit e clear
  std::vector<Vertex> copy_side;       // bit e set
  std::vector<Vertex> attach;          // root-side vertices with a partner across e, sorted
  std::map<Vertex, Vertex> partner;    // attach vertex -> its copy across e
};

Split split_on(const Graph& g, const BinaryLabeling& labels, const Instance& inst, int e) {
  Split out;
  for (int c : inst.active) {
    if (c != e) out.root_side.active.push_back(c);
  }
  const auto bit = static_cast<std::size_t>(e);
  for (Vertex v : inst.vertices) {
    if (labels.labels[v].test(bit)) {
      out.copy_side.push_back(v);
    } else {
      out.root_side.vertices.push_back(v);
    }
  }
  std::set<Vertex> members(inst.vertices.begin(), inst.vertices.end());
  for (Vertex v : out.copy_side) {
    Vertex below = -1;
    for (Vertex w : g.neighbors(v)) {
      if (members.contains(w) && differing_coordinate(labels.labels[v], labels.labels[w]) == e) below = w;
    }
    ensure(below >= 0, "copy-side vertex without a partner across the contracted class");
    out.partner[below] = v;
    out.attach.push_back(below);
  }
  std::sort(out.attach.begin(), out.attach.end());
  return out;
}

// Structural facts about contracting the pendant class e (tau-neighbor alpha)
// of a daisy instance.
void check_pendant_split(const Graph& g, const BinaryLabeling& labels, const Instance& inst, const Local& whole,
                         const Split& split, int e, int alpha) {
  const Local root = localize(g, labels, split.root_side);
  check_daisy_instance(root, split.root_side, "root side of the contraction");

  // tau of the root side is tau of the instance with e deleted.
  const int le = whole.local_class(e);
  for (int i = 0; i < static_cast<int>(split.root_side.active.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(split.root_side.active.size()); ++j) {
      const int wi = whole.local_class(split.root_side.active[i]);
      const int wj = whole.local_class(split.root_side.active[j]);
      ensure(wi != le && wj != le, "contracted class survived the split");
      ensure(root.tau.adjacent(i, j) == whole.tau.adjacent(wi, wj), "tau of the root side is not tau minus e");
    }
  }

  // The attachment set is a daisy cube, closed downward inside the root side.
  Instance attach{split.attach, {}};
  for (int c : split.root_side.active) {
    if (c != alpha) attach.active.push_back(c);
  }
  {
    std::vector<Vertex> local_ids;
    for (Vertex v : split.attach) local_ids.push_back(*root.sub.remap[v]);
    BinaryLabeling root_labels;
    root_labels.width = labels.width;
    for (Vertex v : split.root_side.vertices) root_labels.labels.push_back(labels.labels[v]);
    ensure(le_subgraph_check(root_labels, local_ids), "attachment set is not downward closed in the root side");
  }
  ensure(!split.attach.empty(), "contracted class has no edges");
  // localize rejects edges outside the active classes and active classes
  // without edges, so this pins the class set to all but e and alpha.
  const Local at = localize(g, labels, attach);
  check_daisy_instance(at, attach, "attachment set");

  // Every alpha-edge lies in the root side, and the alpha-edges of the root
  // side are exactly the edges leaving the attachment set.
  const std::set<Vertex> attached(split.attach.begin(), split.attach.end());
  const std::set<Vertex> copies(split.copy_side.begin(), split.copy_side.end());
  for (std::size_t id = 0; id < whole.edge_class.size(); ++id) {
    if (inst.active[whole.edge_class[id]] != alpha) continue;
    const Edge le_edge = whole.edges[id];
    const Vertex u = whole.sub.origin[le_edge.u];
    const Vertex v = whole.sub.origin[le_edge.v];
    ensure(!copies.contains(u) && !copies.contains(v), "an alpha-edge reaches the copy side");
    ensure(attached.contains(u) != attached.contains(v), "an alpha-edge does not separate the attachment set");
  }
  for (const Edge& re : root.sub.graph.edges()) {
    const Vertex u = root.sub.origin[re.u];
    const Vertex v = root.sub.origin[re.v];
    if (attached.contains(u) != attached.contains(v)) {
      ensure(differing_coordinate(labels.labels[u], labels.labels[v]) == alpha,
             "an edge leaving the attachment set is not an alpha-edge");
    }
  }
}

// Cross-check against the generic contraction: the quotient by e is the root
// side, reached through the projection.
void check_against_contract(const Local& whole, const Split& split, int e) {
  const auto cert = is_partial_cube(whole.sub.graph);
  ensure(cert.has_value(), "daisy instance is not a partial cube");
  const Edge some = whole.edges[static_cast<std::size_t>(
      std::find(whole.edge_class.begin(), whole.edge_class.end(), whole.local_class(e)) - whole.edge_class.begin())];
  const Contraction c = contract(whole.sub.graph, *cert, cert->theta.class_of(whole.sub.graph, some));
  ensure(c.graph.order() == static_cast<int>(split.root_side.vertices.size()),
         "contraction order differs from the root side");
  std::vector<char> hit(static_cast<std::size_t>(c.graph.order()), 0);
  for (Vertex v : split.root_side.vertices) {
    const Vertex p = c.projection[*whole.sub.remap[v]];
    ensure(!hit[p], "projection is not injective on the root side");
    hit[p] = 1;
  }
}

class TauRecursion {
 public:
  TauRecursion(const Graph& a, const BinaryLabeling& la, const Graph& b, const BinaryLabeling& lb,
               const ClassCorrespondence& upsilon)
      : a_(a), la_(la), b_(b), lb_(lb), upsilon_(upsilon) {}

  // Returns the image of every vertex of ia (indexed by top-level A id).
  std::map<Vertex, Vertex> solve(const Instance& ia, const Instance& ib, bool top) {
    const Local loc_a = localize(a_, la_, ia);
    const Local loc_b = localize(b_, lb_, ib);
    check_daisy_instance(loc_a, ia, "instance of the first graph");
    check_daisy_instance(loc_b, ib, "instance of the second graph");
    if (!tau_maps(loc_a, ia, loc_b, ib, upsilon_)) {
      if (top) throw InputError("class correspondence is not an isomorphism of the tau-graphs");
      ensure(false, "restricted class correspondence stopped being a tau-isomorphism");
    }
    if (!is_forest(loc_a.tau) || !is_forest(loc_b.tau)) {
      if (top) throw InputError("tau-graph is not a forest");
      ensure(false, "a restricted tau-graph acquired a cycle");
    }

    const auto n = ia.active.size();
    if (loc_a.tau.size() == 0) {
      ensure(ia.vertices.size() == (std::size_t{1} << n) && ib.vertices.size() == ia.vertices.size(),
             "daisy cube with edgeless tau-graph is not a hypercube");
      return by_labels(ia, ib);
    }
    if (n == 2) {
      ensure(ia.vertices.size() == 3 && ib.vertices.size() == 3 && loc_a.sub.graph.size() == 2,
             "two adjacent classes without a path on three vertices");
      return by_labels(ia, ib);
    }

    // Smallest class that is a leaf of tau; its unique neighbor is alpha.
    int e_local = -1;
    for (int i = 0; i < static_cast<int>(n) && e_local < 0; ++i) {
      if (loc_a.tau.degree(i) == 1) e_local = i;
    }
    ensure(e_local >= 0, "nontrivial forest without a leaf");
    const int e = ia.active[e_local];
    const int alpha = ia.active[loc_a.tau.neighbors(e_local)[0]];
    const int f = upsilon_[e];
    const int beta = upsilon_[alpha];

    const Split sa = split_on(a_, la_, ia, e);
    const Split sb = split_on(b_, lb_, ib, f);
    check_pendant_split(a_, la_, ia, loc_a, sa, e, alpha);
    check_pendant_split(b_, lb_, ib, loc_b, sb, f, beta);
    check_against_contract(loc_a, sa, e);
    check_against_contract(loc_b, sb, f);

    std::map<Vertex, Vertex> lambda = solve(sa.root_side, sb.root_side, false);

    std::set<Vertex> image_of_attach;
    for (Vertex v : sa.attach) image_of_attach.insert(lambda.at(v));
    ensure(image_of_attach == std::set<Vertex>(sb.attach.begin(), sb.attach.end()),
           "recursive map does not carry one attachment set onto the other");

    for (const auto& [below, copy] : sa.partner) lambda[copy] = sb.partner.at(lambda.at(below));
    ensure(lambda.size() == ia.vertices.size(), "expanded map does not cover the instance");
    check_local_iso(ia, ib, lambda);
    return lambda;
  }

 private:
  // Root goes to root, so a class-preserving map is forced on labels.
  std::map<Vertex, Vertex> by_labels(const Instance& ia, const Instance& ib) const {
    std::map<BitString, Vertex> in_b;
    for (Vertex v : ib.vertices) in_b.emplace(lb_.labels[v], v);
    std::map<Vertex, Vertex> out;
    for (Vertex v : ia.vertices) {
      BitString image(static_cast<std::size_t>(lb_.width));
      for (int c : ia.active) {
        if (la_.labels[v].test(static_cast<std::size_t>(c))) image.set(static_cast<std::size_t>(upsilon_[c]));
      }
      const auto it = in_b.find(image);
      ensure(it != in_b.end(), "base case: image label missing from the second graph");
      out[v] = it->second;
    }
    check_local_iso(ia, ib, out);
    return out;
  }

  void check_local_iso(const Instance& ia, const Instance& ib, const std::map<Vertex, Vertex>& lambda) const {
    std::set<Vertex> image;
    for (const auto& [v, w] : lambda) image.insert(w);
    ensure(image == std::set<Vertex>(ib.vertices.begin(), ib.vertices.end()), "map is not onto the instance");
    const std::set<Vertex> members(ia.vertices.begin(), ia.vertices.end());
    const std::set<Vertex> members_b(ib.vertices.begin(), ib.vertices.end());
    std::size_t edges_a = 0;
    std::size_t edges_b = 0;
    for (Vertex v : ia.vertices) {
      for (Vertex w : a_.neighbors(v)) {
        if (w < v || !members.contains(w)) continue;
        ++edges_a;
        const Vertex x = lambda.at(v);
        const Vertex y = lambda.at(w);
        ensure(b_.adjacent(x, y), "map breaks an edge");
        ensure(differing_coordinate(lb_.labels[x], lb_.labels[y]) ==
                   upsilon_[differing_coordinate(la_.labels[v], la_.labels[w])],
               "map does not follow the class correspondence");
      }
    }
    for (Vertex v : ib.vertices) {
      for (Vertex w : b_.neighbors(v)) {
        if (w > v && members_b.contains(w)) ++edges_b;
      }
    }
    ensure(edges_a == edges_b, "instances differ in edge count");
  }

  const Graph& a_;
  const BinaryLabeling& la_;
  const Graph& b_;
  const BinaryLabeling& lb_;
  const ClassCorrespondence& upsilon_;
};

void require_daisy_cert(const Graph& g, const DaisyCert& cert) {
  if (!verify_certificate(g, cert.cert) || cert.cert.base != cert.root ||
      !is_downward_closed(cert.cert.labeling)) {
    throw InputError("invalid daisy-cube certificate");
  }
}

}  // namespace

VertexMap daisy_iso_from_tau(const Graph& a, const DaisyCert& cert_a, const Graph& b, const DaisyCert& cert_b,
                             const ClassCorrespondence& upsilon) {
  require_daisy_cert(a, cert_a);
  require_daisy_cert(b, cert_b);
  const int n = cert_a.cert.theta.count();
  if (cert_b.cert.theta.count() != n || static_cast<int>(upsilon.size()) != n) {
    throw InputError("class correspondence size does not match the class counts");
  }
  std::vector<int> sorted(upsilon.begin(), upsilon.end());
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted[i] != i) throw InputError("class correspondence is not a permutation");
  }

  Instance ia;
  Instance ib;
  for (Vertex v = 0; v < a.order(); ++v) ia.vertices.push_back(v);
  for (Vertex v = 0; v < b.order(); ++v) ib.vertices.push_back(v);
  for (int c = 0; c < n; ++c) {
    ia.active.push_back(c);
    ib.active.push_back(c);
  }
  if (a.order() != b.order()) {
    // Still validate the tau-graphs so bad input is reported as such.
    const Graph ta = tau_graph(a, cert_a.cert).graph;
    const Graph tb = tau_graph(b, cert_b.cert).graph;
    if (!is_forest(ta) || !is_forest(tb)) throw InputError("tau-graph is not a forest");
    if (!is_isomorphism(ta, tb, upsilon)) throw InputError("class correspondence is not an isomorphism of the tau-graphs");
    ensure(false, "isomorphic forest tau-graphs but different orders");
  }

  TauRecursion rec(a, cert_a.cert.labeling, b, cert_b.cert.labeling, upsilon);
  const auto lambda = rec.solve(ia, ib, true);
  VertexMap out(static_cast<std::size_t>(a.order()), -1);
  for (const auto& [v, w] : lambda) out[v] = w;

  const ClassIsoCheck check = check_class_isomorphism(a, cert_a, b, cert_b, upsilon, out);
  ensure(check.ok(), "constructed map fails the class-isomorphism check");
  return out;
}

ClassIsoCheck check_class_isomorphism(const Graph& a, const DaisyCert& cert_a, const Graph& b,
                                      const DaisyCert& cert_b, const ClassCorrespondence& upsilon,
                                      const VertexMap& lambda) {
  ClassIsoCheck out;
  out.edge_exact = is_isomorphism(a, b, lambda);
  if (!out.edge_exact) return out;
  const int n = cert_a.cert.theta.count();
  if (cert_b.cert.theta.count() != n || static_cast<int>(upsilon.size()) != n) return out;

  out.class_correspondence = true;
  for (const Edge& e : a.edges()) {
    const int ca = cert_a.cert.theta.class_of(a, e);
    const int cb = cert_b.cert.theta.class_of(b, Edge(lambda[e.u], lambda[e.v]));
    if (upsilon[ca] != cb) out.class_correspondence = false;
  }
  if (!out.class_correspondence) return out;

  out.contraction_restriction = true;
  for (int j = 0; j < n && out.contraction_restriction; ++j) {
    const Contraction qa = contract(a, cert_a.cert, j);
    const Contraction qb = contract(b, cert_b.cert, upsilon[j]);
    if (qa.graph.order() != qb.graph.order()) {
      out.contraction_restriction = false;
      break;
    }
    VertexMap induced(static_cast<std::size_t>(qa.graph.order()), -1);
    for (Vertex v = 0; v < a.order(); ++v) {
      const Vertex from = qa.projection[v];
      const Vertex to = qb.projection[lambda[v]];
      if (induced[from] >= 0 && induced[from] != to) out.contraction_restriction = false;
      induced[from] = to;
    }
    if (out.contraction_restriction) out.contraction_restriction = is_isomorphism(qa.graph, qb.graph, induced);
  }
  return out;
}

TauIsoDecision daisy_isomorphic_via_tau(const Graph& a, const Graph& b) {
  const auto cert_a = is_daisy_cube(a);
  const auto cert_b = is_daisy_cube(b);
  if (!cert_a || !cert_b) throw InputError("input is not a daisy cube");
  const Graph ta = tau_graph(a, cert_a->cert).graph;
  const Graph tb = tau_graph(b, cert_b->cert).graph;
  if (!is_forest(ta) || !is_forest(tb)) throw InputError("tau-graph has a cycle; outside the forest case");

  TauIsoDecision out;
  const auto upsilon = forests_isomorphic(ta, tb);
  if (!upsilon) {
    ensure(!graphs_isomorphic(a, b).has_value(), "tau-graphs differ but the daisy cubes are isomorphic");
    return out;
  }
  out.isomorphic = true;
  out.correspondence = *upsilon;
  out.lambda = daisy_iso_from_tau(a, *cert_a, b, *cert_b, *upsilon);
  return out;
}

}  // namespace cubeforge
