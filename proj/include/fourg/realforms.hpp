#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fourg/extensions.hpp"

namespace fourg {

struct SymmetryClass {
  Element representative;
  std::vector<Element> members;
  int ovals = -1;  // filled by count_ovals
};

// Conjugacy classes of orientation-reversing involutions of G*.
std::vector<SymmetryClass> symmetry_classes(const ExtendedAction& e);

// theta*(C(Gamma*, c)) for a canonical reflection c, next to C(G*, theta*(c)).
struct ReflectionCentralizer {
  GeneratorSymbol reflection;
  Element image;
  Subgroup centralizer;     // C(G*, theta*(c))
  Subgroup image_subgroup;  // theta*(C(Gamma*, c))
  std::size_t index = 0;
};

std::vector<ReflectionCentralizer> reflection_centralizers(const ExtendedAction& e);
int count_ovals(const ExtendedAction& e, const SymmetryClass& cls);

struct Species {
  int ovals = 0;
  bool separating = false;
  int value() const { return ovals == 0 ? 0 : (separating ? ovals : -ovals); }
  friend bool operator==(const Species&, const Species&) = default;
};
std::string render(const Species& s);  // "+2", "0", "-3"
// -g <= species <= g+1; separating implies k >= 1 and k = g+1 mod 2.
bool satisfies_harnack(const Species& s, int g);

// One entry per symmetry class, sorted by decreasing value.
std::vector<Species> species_set(const ExtendedAction& e);
std::vector<int> oval_multiset(const ExtendedAction& e);  // sorted decreasing

// Signs from the hyperelliptic model: with h the hyperelliptic involution,
// sigma separates iff it has g+1 ovals, or it has ovals and sigma*h has none.
std::optional<Element> hyperelliptic_involution(const ExtendedAction& e);
std::vector<Species> hyperelliptic_species(const ExtendedAction& e);

// Centralizer and centralizer-image identities stated for the explicit
// extensions, evaluated at genus g.
struct GuardIdentity {
  std::string label;        // extension label
  std::string description;  // e.g. "theta1*(C(c1,0)) = <x,(wx)^g> x <y>"
  bool holds = false;
};
std::vector<GuardIdentity> centralizer_guards(int g, const SearchOptions& options = {});

} // namespace fourg
