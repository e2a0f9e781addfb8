#pragma once

#include <optional>
#include <vector>

#include "fourg/group.hpp"

namespace fourg {

// Groups of a given order assembled from the bundled constructors
// (metacyclic extensions, direct products, a few linear and permutation
// groups), pairwise non-isomorphic.
struct GroupCatalog {
  int order = 0;
  std::vector<GroupPtr> groups;
  std::optional<int> known_count;  // number of isomorphism types, when tabulated
  bool complete() const { return known_count && *known_count == static_cast<int>(groups.size()); }
};

GroupCatalog groups_of_order(int n);
std::optional<int> number_of_groups(int n);

// Appends `extra` groups not isomorphic to any already present.
void merge_into(GroupCatalog& catalog, const std::vector<GroupPtr>& extra);

} // namespace fourg
