#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fourg/actions.hpp"
#include "fourg/presentation.hpp"

namespace fourg {

// a: (0;+;[-];{(2,2,2,2g)}), b: (0;+;[2];{(2,2g)})
enum class NecKind { a, b };
std::string_view to_string(NecKind k);
Signature nec_signature(int g, NecKind kind);

// D_2g x C_2 = <w, x> x <y>, all three generators orientation reversing.
GroupPtr kind_a_group(int g);
// extension_group_b(g) with x preserving and z, w reversing orientation.
GroupPtr kind_b_group(int g);

struct ExtendedAction {
  NecKind kind = NecKind::a;
  int genus = 0;
  Signature signature;
  GroupPtr group;  // carries the orientation character
  std::string label;
  std::vector<std::pair<GeneratorSymbol, Element>> images;

  Element image(const GeneratorSymbol& s) const;
  Element evaluate(const Word& w) const;
  // c_{1,j} for 0 <= j < s_1, the reflections counted in oval sums
  std::vector<GeneratorSymbol> canonical_reflections() const;
};

// Relators, orientation compatibility, exact torsion orders, surjectivity.
// Throws InvariantViolation with the first failure.
void verify_extended_action(const ExtendedAction& e);

struct ExtensionSearch {
  NecKind kind = NecKind::a;
  int genus = 0;
  std::size_t admissible_assignments = 0;
  std::size_t equivalences = 0;  // |Aut(G*)_kappa|, doubled by cycle reversal for kind a
  std::vector<std::vector<Element>> class_representatives;  // minimal tuples
  std::vector<std::size_t> class_sizes;
};

// Exhaustive search over reflection (and elliptic) images.
ExtensionSearch search_extensions(int g, NecKind kind, const SearchOptions& options = {});

// One action per class: the classes containing the explicit assignments
// theta1*, theta2* (kind a) and theta* (kind b) are returned with those
// assignments; any other class would be returned with its minimal tuple.
std::vector<ExtendedAction> build_extensions(int g, NecKind kind,
                                             const SearchOptions& options = {});

// Words for x'_1..x'_4 of the index-2 Fuchsian subgroup.
std::vector<Word> index2_words(NecKind kind);
std::vector<Element> restriction_images(const ExtendedAction& e);
// Vector over the orientation-preserving subgroup (as a group of its own).
GeneratingVector restrict_to_index2(const ExtendedAction& e);
// Whether the restriction is equivalent to standard_vector(g).
bool lands_in_standard_class(const ExtendedAction& e, const SearchOptions& options = {});

// Overgroup check for the (2,4,4g) triangle group containing the NEC group.
struct TriangleExtension {
  bool exists = false;
  GroupPtr overgroup;           // order 16g
  std::vector<Element> images;  // d0, d1, d2
};
TriangleExtension extend_to_triangle(const ExtendedAction& e);

} // namespace fourg
