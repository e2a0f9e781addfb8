#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fourg {

// Index into the parent group's element table.
struct Element {
  std::uint32_t id = 0;
  friend bool operator==(Element, Element) = default;
  friend auto operator<=>(Element, Element) = default;
};

// Largest order for which a dense multiplication table is built.
inline constexpr std::size_t kMaxTableOrder = 4096;

enum class Construction {
  cyclic,
  dihedral,
  direct_product,
  semidirect,
  metacyclic,
  permutation,
  table,
  subgroup,
};

struct GroupTag {
  Construction construction = Construction::table;
  std::string description;  // e.g. "cyclic(12)", "dihedral(20)"
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
public:
  // `table` is row-major: table[a*n + b] = a*b. Axioms and generation are
  // verified here (exhaustively up to order 512, sampled above).
  FiniteGroup(std::size_t order, std::vector<std::uint32_t> table,
              std::vector<Element> generators, std::vector<std::string> names,
              GroupTag tag);

  std::size_t order() const { return n_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return Element{table_[a.id * n_ + b.id]}; }
  Element inv(Element a) const { return Element{inverse_[a.id]}; }
  Element pow(Element a, long long k) const;
  Element product(std::initializer_list<Element> es) const;
  Element product(std::span<const Element> es) const;
  // by * a * by^-1
  Element conj(Element a, Element by) const { return mul(mul(by, a), inv(by)); }
  Element commutator(Element a, Element b) const;
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }
  int element_order(Element a) const { return orders_[a.id]; }

  Element element(std::size_t index) const;
  std::vector<Element> elements() const;
  const std::vector<Element>& generators() const { return generators_; }
  const std::string& name(Element a) const { return names_[a.id]; }
  std::optional<Element> find(std::string_view name) const;
  const GroupTag& tag() const { return tag_; }

  // Orientation character, when one has been attached.
  bool has_orientation() const { return !orientation_.empty(); }
  int orientation(Element a) const;

  // Copy with a different distinguished generating list (verified).
  GroupPtr with_generators(std::vector<Element> generators) const;
  // Copy with an orientation character given by its values on the
  // distinguished generators; fails if these do not define a homomorphism.
  GroupPtr with_orientation(const std::vector<int>& generator_signs) const;
  GroupPtr with_tag(GroupTag tag) const;
  GroupPtr with_names(std::vector<std::string> names) const;

  std::size_t generated_order(std::span<const Element> gens) const;
  std::vector<Element> closure(std::span<const Element> gens) const;

private:
  FiniteGroup() = default;
  void finish();

  std::size_t n_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<int> orders_;
  Element identity_;
  std::vector<Element> generators_;
  std::vector<std::string> names_;
  std::vector<int> orientation_;
  GroupTag tag_;
};

// Exhaustive up to order `exhaustive_limit`, sampled beyond it.
struct AxiomReport {
  bool ok = true;
  std::size_t triples_checked = 0;
  std::string failure;
};
AxiomReport verify_group_axioms(const FiniteGroup& G, std::size_t exhaustive_limit = 512);

struct Subgroup {
  std::vector<Element> elements;  // sorted
  std::vector<Element> generators;
  std::size_t index = 1;

  std::size_t order() const { return elements.size(); }
  bool contains(Element e) const;
  bool subset_of(const Subgroup& other) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

Subgroup subgroup_generated(const FiniteGroup& G, std::span<const Element> gens);
Subgroup subgroup_generated(const FiniteGroup& G, std::initializer_list<Element> gens);
Subgroup centralizer(const FiniteGroup& G, Element e);
Subgroup center(const FiniteGroup& G);
// The subgroup as a group in its own right; element i of the result is
// H.elements[i] (names inherited, generators = H.generators).
GroupPtr subgroup_as_group(const FiniteGroup& G, const Subgroup& H);

struct ConjugacyClass {
  Element representative;  // minimal index
  std::vector<Element> members;  // sorted
  std::size_t size() const { return members.size(); }
  bool contains(Element e) const;
};
std::vector<ConjugacyClass> conjugacy_classes(
    const FiniteGroup& G, const std::function<bool(Element)>& filter = {});

// Homomorphism determined by images of `src_gens` (which must generate
// `src`). Returns the full element map, or nullopt if the assignment does
// not extend to a homomorphism.
std::optional<std::vector<Element>> extend_to_homomorphism(
    const FiniteGroup& src, std::span<const Element> src_gens,
    const FiniteGroup& dst, std::span<const Element> images);

struct Automorphism {
  GroupPtr group;
  std::vector<Element> generator_images;  // images of group->generators()
  std::vector<Element> map;               // full table

  Element operator()(Element e) const { return map[e.id]; }
  bool preserves_orientation() const;
  bool is_involution() const;
};

// Automorphism given by generator images; nullopt if not bijective
// homomorphism.
std::optional<Automorphism> make_automorphism(const GroupPtr& G,
                                              std::vector<Element> generator_images);
// Same, with the images given for an arbitrary generating list.
std::optional<Automorphism> make_automorphism(const GroupPtr& G,
                                              std::span<const Element> sources,
                                              std::span<const Element> images);

struct AutomorphismOptions {
  std::map<std::size_t, Element> constraint;  // generator position -> image
  bool orientation_preserving = false;        // only if G has an orientation
  unsigned workers = 1;
};
// All automorphisms extending the constraint, ordered by generator images.
std::vector<Automorphism> automorphism_search(const GroupPtr& G,
                                              const AutomorphismOptions& options = {});

// ---- constructors -------------------------------------------------------

GroupPtr cyclic(int n, std::string letter = "a");
// Dihedral group of the given order 2n: D^i A^j, D of order n, A reflection.
GroupPtr dihedral(int order, std::string rotation = "D", std::string reflection = "A");
// <c, b | c^n = 1, b^k = c^u, b c b^-1 = c^t>; elements c^i b^j.
GroupPtr metacyclic(int n, int k, int t, int u, std::string c_letter = "c",
                    std::string b_letter = "b");
GroupPtr semidirect_cyclic(int n, int k, int t);
// <A, C | A^4 = C^{2g} = 1, A C A^-1 = C^-1, A^2 = C^g>, generators (A, C).
GroupPtr case3_group(int g);
GroupPtr direct_product(const GroupPtr& G, const GroupPtr& H);
// G x| <t>, t of order k acting by alpha (alpha^k must be the identity).
GroupPtr semidirect_by_automorphism(const Automorphism& alpha, int k,
                                    std::string letter = "t");
// D_2g = <z, w> extended by x acting as z -> (zw)^{g-1} z, zw -> (zw)^-1.
// Generators (x, z, w); order 8g.
GroupPtr extension_group_b(int g);
using Permutation = std::vector<std::uint32_t>;  // 0-based images
GroupPtr from_permutations(const std::vector<Permutation>& generators,
                           std::string description = "permutation group");
// Parses "cyclic(12)", "dihedral(8)", "metacyclic(5,4,2,0)", "case3(5)",
// "extension_b(3)", "direct_product(dihedral(12),cyclic(2))", ...
GroupPtr construct(std::string_view description);

std::string cycle_notation(const Permutation& p);

} // namespace fourg
