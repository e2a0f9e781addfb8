#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fourg/realforms.hpp"

namespace fourg {

// Pinching the pair (p, p+1) of v: which = 1 pinches (g1, g2), which = 2 pinches (g2, g3).
struct Degeneration {
  int which = 1;
  Element node;       // g_p g_{p+1}
  Subgroup vertex;    // <g_p g_{p+1}, remaining entries>
  Subgroup edge;      // <g_p, g_{p+1}>
};
Degeneration degeneration(const GeneratingVector& v, int which);

struct DegenerationSubgroups {
  Subgroup h1, h2;
  std::size_t index1 = 0, index2 = 0;
};
DegenerationSubgroups degeneration_subgroups(const GeneratingVector& v);

// Images of gamma_1 (parabolic), gamma_2, gamma_3 with gamma_1 gamma_2 gamma_3 = 1.
struct OmegaData {
  GroupPtr group;
  std::array<Element, 3> images;
};
OmegaData omega_data(const GeneratingVector& v, int which);
// Genus of the component covering the (0;+;[inf,m2,m3]) orbifold with
// monodromy omega; throws InvariantViolation when it is not integral.
int component_genus(const OmegaData& omega);

struct NodalGraph {
  std::vector<int> vertex_genus;
  std::vector<std::pair<int, int>> edges;
  std::string label;  // "k-dipole", "k-loops" or "graph"

  int total_genus() const;
  nlohmann::ordered_json to_json() const;
};
NodalGraph nodal_graph(const GeneratingVector& v, int which);

enum class Endpoint { X_D, X_R, X_8g };
std::string_view to_string(Endpoint e);
// X_D: dipole on two vertices of weight floor(g/2); X_R: one vertex of weight 0 with g loops.
bool is_x_d(const NodalGraph& G, int g);
bool is_x_r(const NodalGraph& G, int g);
Endpoint identify(const NodalGraph& G, int g);

struct BoundaryArc {
  std::string label;      // a1, a2, b
  std::string extension;  // theta1*, theta2*, theta*
  std::vector<Species> species;
  std::vector<NodalGraph> graphs;
  std::vector<Endpoint> endpoints;  // two, sorted
};

struct WimanEndpoint {
  std::string equation;
  Signature signature;          // of the NEC overgroup
  std::size_t overgroup_order;  // computed, conformal and anticonformal
  std::size_t conformal_order;  // computed, 8g
  std::size_t full_aut_order;   // 8g, 48 at g = 2
};

struct BoundaryDescription {
  int genus = 0;
  std::vector<BoundaryArc> arcs;
  WimanEndpoint x8g;
  bool jordan_curve = false;
  nlohmann::ordered_json to_json() const;
};

BoundaryDescription boundary_description(int g, const SearchOptions& options = {});

} // namespace fourg
