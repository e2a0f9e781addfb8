#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fourg/admissible.hpp"
#include "fourg/group.hpp"
#include "fourg/signature.hpp"

namespace fourg {

struct SearchOptions {
  unsigned workers = 1;
  std::size_t max_order = 4096;  // searches over larger groups are skipped
};

// Images (g_1, ..., g_r) of the elliptic generators of a genus-0 Fuchsian
// group with periods (m_1, ..., m_r).
struct GeneratingVector {
  GroupPtr group;
  std::vector<int> periods;
  std::vector<Element> elements;

  Signature signature() const { return fuchsian_signature(0, periods); }
  friend bool operator==(const GeneratingVector& a, const GeneratingVector& b) {
    return a.group == b.group && a.periods == b.periods && a.elements == b.elements;
  }
};

// Product one, exact orders and generation.
bool is_smooth(const GeneratingVector& v);
std::string render(const GeneratingVector& v);

// Exhaustive, lexicographic by element indices. `periods` is used as given.
std::vector<GeneratingVector> smooth_vectors(const GroupPtr& G, const std::vector<int>& periods,
                                             const SearchOptions& options = {});

// (..., g_i g_{i+1} g_i^-1, g_i, ...); 1-based i with 1 <= i < r.
GeneratingVector braid_move(const GeneratingVector& v, std::size_t i);

struct ActionClass {
  GroupPtr group;
  std::vector<int> periods;             // ascending
  GeneratingVector representative;      // lexicographically minimal member
  std::vector<GeneratingVector> members;  // all members in ascending period order
};

// Orbits of smooth vectors on the sorted periods under braid moves (which
// also permute equal periods) and Aut(G).
std::vector<ActionClass> classify(const GroupPtr& G, std::vector<int> periods,
                                  const SearchOptions& options = {});

// Canonical representative of the class of v, given Aut(G).
GeneratingVector class_representative(const GeneratingVector& v,
                                      const std::vector<Automorphism>& automorphisms);
// All vectors (in any period order) reachable from v by braid moves.
std::vector<std::vector<Element>> braid_orbit(const GeneratingVector& v);

// g with 2g - 2 = |G| * area(s); throws on non-integral or negative values.
int kernel_genus(long long group_order, const Signature& s);

// (A, D^{g+1} A, D^g, D) in dihedral(4g).
GeneratingVector standard_vector(int g);
GroupPtr standard_group(int g);

// ---- eliminations ------------------------------------------------------

enum class Verdict { not_full, impossible, full_candidate };
std::string_view to_string(Verdict v);

struct GroupCount {
  std::string group;
  std::size_t smooth_vectors = 0;
};

struct FamilyOneResult {
  Signature signature;
  GeneratingVector forced;         // (C^{2g}, C^{2g-1}, C) in cyclic(4g)
  std::size_t catalog_classes = 0; // classes over all catalog groups of order 4g
  GroupPtr extension_group;        // order 8g
  GeneratingVector extension;      // on (2,4,4g)
  bool restriction_consistent = false;
  Verdict verdict = Verdict::full_candidate;
};

struct FamilyTwoResult {
  Signature signature;
  bool divisibility = false;  // 3 and 6 divide 4g
  // t with A^2 = C^t examined; each leads to A in <C>
  std::vector<int> contradictions;
  std::vector<GroupCount> catalog;
  Verdict verdict = Verdict::full_candidate;
};

struct FamilyThreeResult {
  Signature signature;
  std::vector<int> solutions;  // t with 2(t+1) = 0 mod 2g
  struct Branch {
    int t = 0;
    bool group_exists = false;
    bool rejected = false;
    std::string reason;
    bool swap_automorphism = false;
    GroupPtr extension_group;
  };
  std::vector<Branch> branches;
  std::size_t catalog_vectors = 0;
  std::size_t catalog_vectors_with_swap = 0;
  Verdict verdict = Verdict::full_candidate;
};

struct EliminationReport {
  int genus = 0;
  FamilyOneResult family1;
  FamilyTwoResult family2;
  FamilyThreeResult family3;
};

EliminationReport eliminate_cases(int g, const SearchOptions& options = {});

struct ExceptionalCandidate {
  Signature signature;
  SignatureFamily family;
  GroupPtr group;
  ActionClass action;
};

// Classes on the sporadic and quadruple-exceptional signatures of genus g
// over the given groups (each of order 4g).
std::vector<ExceptionalCandidate> exceptional_search(int g, const std::vector<GroupPtr>& groups,
                                                     const SearchOptions& options = {});

// Signatures of genus g that still admit an action of order 4g over the
// given groups once the family 1-3 verdicts are applied.
std::vector<Signature> candidate_full_signatures(int g, const std::vector<GroupPtr>& groups,
                                                 const SearchOptions& options = {});

} // namespace fourg
