#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fourg/group.hpp"

namespace fourg {

enum class StructureKind { cyclic, dihedral, dihedral_times_c2, elementary_abelian, other };

struct Fingerprint {
  std::size_t order = 0;
  std::map<int, std::size_t> order_profile;  // element order -> count
  std::size_t center_order = 0;
  std::vector<long long> abelian_invariants;  // of G/[G,G]

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteGroup& G);
// Invariant factors of the abelianization, e.g. {2, 2} or {12}.
std::vector<long long> abelian_invariants(const FiniteGroup& G);
Subgroup derived_subgroup(const FiniteGroup& G);

struct Recognition {
  StructureKind kind = StructureKind::other;
  std::size_t order = 0;
  std::vector<long long> abelian_invariants;
  // Standard model and an explicit isomorphism model -> G (empty for other).
  GroupPtr model;
  std::vector<Element> isomorphism;

  std::string describe() const;
};

Recognition recognize(const GroupPtr& G);

// Explicit isomorphism G -> H if one exists (element map), searched over
// images of a small generating set of G after fingerprint comparison.
std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& G,
                                                     const FiniteGroup& H);
// Generating set of minimal size found greedily among small candidates.
std::vector<Element> small_generating_set(const FiniteGroup& G);

} // namespace fourg
