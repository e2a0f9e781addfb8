#pragma once

#include <set>
#include <string_view>
#include <vector>

#include "fourg/signature.hpp"

namespace fourg {

enum class SignatureFamily {
  family1,                // (2,4g,4g)
  family2,                // (3,6,2g)
  family3,                // (4,4,2g)
  family4,                // (2,2,2,2g)
  quadruple_exceptional,  // (2,2,3,q), only g = 3, 6, 15
  sporadic,               // remaining triangle signatures
};

std::string_view to_string(SignatureFamily f);

struct TaggedSignature {
  Signature signature;
  SignatureFamily family;
};

// All genus-0 Fuchsian signatures whose periods divide 4g and whose area
// equals (2g-2)/4g. Sorted by (number of periods, periods).
std::vector<TaggedSignature> enumerate_4g_signatures(int g);

// Genus-0 period tuples (ascending) with sum of (1 - 1/m_i) == target and
// every m_i in `allowed` (ascending). Bounds on r and m_i follow from target.
std::vector<std::vector<int>> genus0_period_solutions(const Rational& target,
                                                      const std::vector<int>& allowed);

std::set<int> sporadic_genera(int limit);

} // namespace fourg
