#include "fourg/boundary.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "fourg/errors.hpp"
#include "fourg/rational.hpp"

namespace fourg {

namespace {

std::size_t pinched_position(const GeneratingVector& v, int which) {
  if (which != 1 && which != 2)
    throw std::invalid_argument("degeneration: which must be 1 or 2");
  if (v.elements.size() != 4)
    throw std::invalid_argument("degeneration: expects a vector of length 4");
  return static_cast<std::size_t>(which - 1);
}

} // namespace

Degeneration degeneration(const GeneratingVector& v, int which) {
  const FiniteGroup& G = *v.group;
  const std::size_t p = pinched_position(v, which);
  Degeneration d;
  d.which = which;
  d.node = G.mul(v.elements[p], v.elements[p + 1]);
  std::vector<Element> rest{d.node};
  for (std::size_t i = 0; i < v.elements.size(); ++i)
    if (i != p && i != p + 1)
      rest.push_back(v.elements[i]);
  d.vertex = subgroup_generated(G, rest);
  d.vertex.index = G.order() / d.vertex.order();
  d.edge = subgroup_generated(G, {v.elements[p], v.elements[p + 1]});
  d.edge.index = G.order() / d.edge.order();
  return d;
}

DegenerationSubgroups degeneration_subgroups(const GeneratingVector& v) {
  DegenerationSubgroups out;
  out.h1 = degeneration(v, 1).vertex;
  out.h2 = degeneration(v, 2).vertex;
  out.index1 = out.h1.index;
  out.index2 = out.h2.index;
  return out;
}

OmegaData omega_data(const GeneratingVector& v, int which) {
  const FiniteGroup& G = *v.group;
  pinched_position(v, which);
  const auto& e = v.elements;
  if (which == 1)
    return {v.group, {G.mul(e[0], e[1]), e[2], e[3]}};
  return {v.group, {G.inv(G.mul(e[1], e[2])), e[0], G.inv(e[3])}};
}

int component_genus(const OmegaData& omega) {
  const FiniteGroup& G = *omega.group;
  const auto& im = omega.images;
  if (G.product({im[0], im[1], im[2]}) != G.identity())
    throw InvariantViolation("omega: product of the images is not trivial");
  const long long n = static_cast<long long>(G.generated_order(std::span<const Element>(im.data(), im.size())));
  const long long m2 = G.element_order(im[1]), m3 = G.element_order(im[2]);
  const long long cusp_order = G.element_order(im[0]);
  if (m2 < 2 || m3 < 2)
    throw InvariantViolation("omega: elliptic images must be nontrivial");
  // the cusp contributes exactly 1 to the orbifold Euler characteristic
  const Rational chi = Rational(2) - 1 - (1 - make_rational(1, m2)) - (1 - make_rational(1, m3));
  const long long cusps = n / cusp_order;
  // 2 - 2h - cusps = n * chi
  const Rational twice_h = Rational(2 - cusps) - chi * n;
  const Rational h = twice_h / 2;
  if (!is_integer(h) || h < 0)
    throw InvariantViolation("omega: component genus " + to_string(h) + " is not a non-negative integer");
  return static_cast<int>(boost::multiprecision::numerator(h));
}

int NodalGraph::total_genus() const {
  int s = 0;
  for (int w : vertex_genus)
    s += w - 1;
  return s + static_cast<int>(edges.size()) + 1;
}

nlohmann::ordered_json NodalGraph::to_json() const {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (int w : vertex_genus)
    j["vertices"].push_back({{"genus", w}});
  j["edges"] = nlohmann::ordered_json::array();
  for (auto [a, b] : edges)
    j["edges"].push_back({a, b});
  j["label"] = label;
  return j;
}

NodalGraph nodal_graph(const GeneratingVector& v, int which) {
  const FiniteGroup& G = *v.group;
  const Degeneration d = degeneration(v, which);
  const Element g_p = v.elements[pinched_position(v, which)];
  if (d.edge.order() != 2 * static_cast<std::size_t>(G.element_order(d.node)))
    throw InvariantViolation("pinched piece is not an annulus");

  const std::size_t n = G.order();
  std::vector<int> vertex_of(n, -1);
  int vertices = 0;
  for (Element a : G.elements()) {
    if (vertex_of[a.id] >= 0)
      continue;
    for (Element h : d.vertex.elements)
      vertex_of[G.mul(a, h).id] = vertices;
    ++vertices;
  }
  NodalGraph out;
  std::vector<char> seen(n, 0);
  for (Element a : G.elements()) {
    if (seen[a.id])
      continue;
    for (Element k : d.edge.elements)
      seen[G.mul(a, k).id] = 1;
    int x = vertex_of[a.id], y = vertex_of[G.mul(a, g_p).id];
    out.edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.edges.begin(), out.edges.end());
  const int w = component_genus(omega_data(v, which));
  out.vertex_genus.assign(vertices, w);

  const int e = static_cast<int>(out.edges.size());
  bool loops = std::all_of(out.edges.begin(), out.edges.end(), [](auto p) { return p.first == p.second; });
  bool dipole = vertices == 2 &&
                std::all_of(out.edges.begin(), out.edges.end(), [](auto p) { return p.first != p.second; });
  if (vertices == 1 && loops)
    out.label = std::to_string(e) + "-loops";
  else if (dipole)
    out.label = std::to_string(e) + "-dipole";
  else
    out.label = "graph";
  if (out.total_genus() != kernel_genus(static_cast<long long>(n), v.signature()))
    throw InvariantViolation("nodal graph of genus " + std::to_string(out.total_genus()) +
                             " does not match the surface");
  return out;
}

std::string_view to_string(Endpoint e) {
  switch (e) {
    case Endpoint::X_D: return "X_D";
    case Endpoint::X_R: return "X_R";
    case Endpoint::X_8g: return "X_8g";
  }
  return "?";
}

bool is_x_d(const NodalGraph& G, int g) {
  const std::size_t edges = g % 2 ? 2 : 1;
  return G.vertex_genus == std::vector<int>{g / 2, g / 2} && G.edges.size() == edges &&
         std::all_of(G.edges.begin(), G.edges.end(), [](auto p) { return p == std::pair{0, 1}; });
}

bool is_x_r(const NodalGraph& G, int g) {
  return G.vertex_genus == std::vector<int>{0} && G.edges.size() == static_cast<std::size_t>(g) &&
         std::all_of(G.edges.begin(), G.edges.end(), [](auto p) { return p == std::pair{0, 0}; });
}

Endpoint identify(const NodalGraph& G, int g) {
  if (is_x_d(G, g))
    return Endpoint::X_D;
  if (is_x_r(G, g))
    return Endpoint::X_R;
  throw InvariantViolation("nodal graph " + G.to_json().dump() + " is neither X_D nor X_R");
}

namespace {

struct ArcSpec {
  const char* label;
  NecKind kind;
  const char* extension;
  std::vector<int> pinches;  // degenerations compatible with the reflections
};

const ArcSpec kArcs[] = {
    {"a1", NecKind::a, "theta1*", {1, 2}},
    {"a2", NecKind::a, "theta2*", {1, 2}},
    {"b", NecKind::b, "theta*", {1}},
};

} // namespace

BoundaryDescription boundary_description(int g, const SearchOptions& options) {
  if (g < 2)
    throw std::invalid_argument("boundary_description: genus must be at least 2");
  BoundaryDescription out;
  out.genus = g;
  out.x8g.equation = "w^2 = z(z^" + std::to_string(2 * g) + " - 1)";
  out.x8g.signature = make_signature(0, Sign::plus, {}, {{2, 4, 4 * g}});
  out.x8g.full_aut_order = g == 2 ? 48 : 8 * static_cast<std::size_t>(g);

  std::map<NecKind, std::vector<ExtendedAction>> built;
  for (NecKind k : {NecKind::a, NecKind::b})
    built[k] = build_extensions(g, k, options);

  for (const auto& spec : kArcs) {
    const ExtendedAction* e = nullptr;
    for (const auto& cand : built[spec.kind])
      if (cand.label == spec.extension)
        e = &cand;
    if (!e)
      throw InvariantViolation(std::string("extension ") + spec.extension + " was not built");
    BoundaryArc arc;
    arc.label = spec.label;
    arc.extension = spec.extension;
    arc.species = species_set(*e);
    std::set<Endpoint> ends;
    const GeneratingVector v = restrict_to_index2(*e);
    for (int which : spec.pinches) {
      arc.graphs.push_back(nodal_graph(v, which));
      ends.insert(identify(arc.graphs.back(), g));
    }
    const TriangleExtension t = extend_to_triangle(*e);
    if (t.exists) {
      ends.insert(Endpoint::X_8g);
      std::size_t conformal = 0;
      for (Element x : t.overgroup->elements())
        conformal += t.overgroup->orientation(x) == 1;
      out.x8g.overgroup_order = t.overgroup->order();
      out.x8g.conformal_order = conformal;
    }
    arc.endpoints.assign(ends.begin(), ends.end());
    out.arcs.push_back(std::move(arc));
  }

  // each arc joins two endpoints, and every endpoint lies on exactly two arcs
  std::map<Endpoint, int> degree;
  std::set<std::vector<Endpoint>> pairs;
  bool ok = true;
  for (const auto& a : out.arcs) {
    ok = ok && a.endpoints.size() == 2;
    for (Endpoint p : a.endpoints)
      ++degree[p];
    pairs.insert(a.endpoints);
  }
  ok = ok && degree.size() == 3 && pairs.size() == 3;
  for (auto [p, d] : degree)
    ok = ok && d == 2;
  out.jordan_curve = ok;
  return out;
}

nlohmann::ordered_json BoundaryDescription::to_json() const {
  nlohmann::ordered_json j;
  j["genus"] = genus;
  j["arcs"] = nlohmann::ordered_json::array();
  for (const auto& a : arcs) {
    nlohmann::ordered_json arc;
    arc["label"] = a.label;
    arc["extension"] = a.extension;
    arc["species"] = nlohmann::ordered_json::array();
    for (const auto& s : a.species)
      arc["species"].push_back(render(s));
    arc["endpoints"] = nlohmann::ordered_json::array();
    for (Endpoint p : a.endpoints)
      arc["endpoints"].push_back(std::string(to_string(p)));
    arc["nodal_graphs"] = nlohmann::ordered_json::array();
    for (const auto& G : a.graphs)
      arc["nodal_graphs"].push_back(G.to_json());
    j["arcs"].push_back(arc);
  }
  j["x8g"] = {{"equation", x8g.equation},
              {"signature", render(x8g.signature)},
              {"overgroup_order", x8g.overgroup_order},
              {"conformal_order", x8g.conformal_order},
              {"full_aut_order", x8g.full_aut_order}};
  j["jordan_curve"] = jordan_curve;
  return j;
}

} // namespace fourg
