#include "fourg/catalog.hpp"

#include <map>
#include <mutex>
#include <set>
#include <numeric>
#include <stdexcept>

#include "fourg/recognize.hpp"

namespace fourg {

namespace {

// Number of isomorphism types of groups of order n (small orders only).
const std::map<int, int>& group_counts() {
  static const std::map<int, int> counts = {
      {1, 1},   {2, 1},   {3, 1},   {4, 2},   {5, 1},   {6, 2},   {7, 1},   {8, 5},
      {9, 2},   {10, 2},  {11, 1},  {12, 5},  {13, 1},  {14, 2},  {15, 1},  {16, 14},
      {17, 1},  {18, 5},  {19, 1},  {20, 5},  {21, 2},  {22, 2},  {23, 1},  {24, 15},
      {25, 2},  {26, 2},  {27, 5},  {28, 4},  {29, 1},  {30, 4},  {31, 1},  {32, 51},
      {33, 1},  {34, 2},  {35, 1},  {36, 14}, {37, 1},  {38, 2},  {39, 2},  {40, 14},
      {41, 1},  {42, 6},  {43, 1},  {44, 4},  {45, 2},  {46, 2},  {47, 1},  {48, 52},
      {49, 2},  {50, 5},  {51, 1},  {52, 5},  {53, 1},  {54, 15}, {55, 2},  {56, 13},
      {57, 2},  {58, 2},  {59, 1},  {60, 13}, {64, 267}, {72, 50}, {80, 52}, {84, 15},
      {88, 12}, {92, 4},  {96, 231}, {100, 16}, {108, 45}, {112, 43}, {116, 5},
      {120, 47}, {124, 4}, {128, 2328}, {132, 10}, {136, 15}, {140, 11}, {144, 197},
  };
  return counts;
}

std::vector<GroupPtr> raw_candidates(int n);

// Memoized catalog per order; catalogs are immutable once built.
std::mutex cache_mutex;
std::map<int, GroupCatalog> cache;

void add_unique(GroupCatalog& cat, const GroupPtr& G,
                std::vector<Fingerprint>& prints) {
  Fingerprint f = fingerprint(*G);
  for (std::size_t i = 0; i < cat.groups.size(); ++i)
    if (prints[i] == f && find_isomorphism(*cat.groups[i], *G))
      return;
  cat.groups.push_back(G);
  prints.push_back(std::move(f));
}

// Upper bound on |Aut(H)|: images of each generator range over elements of its order.
constexpr double kAutomorphismBudget = 20000;
double automorphism_bound(const FiniteGroup& H) {
  const auto profile = fingerprint(H).order_profile;
  double bound = 1;
  for (Element g : H.generators())
    bound *= static_cast<double>(profile.at(H.element_order(g)));
  return bound;
}

int automorphism_order(const Automorphism& alpha) {
  std::vector<Element> power = alpha.map;
  for (int k = 1; k <= 64; ++k) {
    bool identity = true;
    for (std::size_t i = 0; i < power.size() && identity; ++i)
      identity = power[i].id == i;
    if (identity)
      return k;
    for (auto& e : power)
      e = alpha(e);
  }
  return 0;
}

// One automorphism of order q per conjugacy class of cyclic subgroups of
// Aut(H); the others give isomorphic semidirect products.
std::vector<const Automorphism*> cyclic_subgroup_classes(const std::vector<Automorphism>& auts, int q) {
  using Map = std::vector<Element>;
  auto compose = [](const Map& a, const Map& b) {  // a after b
    Map out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
      out[i] = a[b[i].id];
    return out;
  };
  std::vector<Map> inverses;
  for (const auto& beta : auts) {
    Map inv(beta.map.size());
    for (std::size_t i = 0; i < inv.size(); ++i)
      inv[beta.map[i].id] = Element{static_cast<std::uint32_t>(i)};
    inverses.push_back(std::move(inv));
  }
  std::set<Map> seen;
  std::vector<const Automorphism*> out;
  for (const auto& alpha : auts) {
    if (seen.count(alpha.map) || automorphism_order(alpha) != q)
      continue;
    out.push_back(&alpha);
    for (std::size_t b = 0; b < auts.size(); ++b) {
      const Map gamma = compose(auts[b].map, compose(alpha.map, inverses[b]));
      Map power = gamma;
      for (int k = 1; k < q; ++k) {
        if (std::gcd(k, q) == 1)
          seen.insert(power);
        power = compose(gamma, power);
      }
    }
  }
  return out;
}

std::vector<GroupPtr> raw_candidates(int n) {
  std::vector<GroupPtr> out;
  // cyclic extensions <c,b | c^m, b^k = c^u, b c b^-1 = c^t>
  for (int m = 1; m <= n; ++m) {
    if (n % m)
      continue;
    const int k = n / m;
    for (int t = 0; t < m || (m == 1 && t == 0); ++t) {
      if (m > 1 && std::gcd(t, m) != 1)
        continue;
      long long tk = 1;
      for (int i = 0; i < k; ++i)
        tk = tk * t % m;
      if (m > 1 && tk != 1)
        continue;
      for (int u = 0; u < m || (m == 1 && u == 0); ++u) {
        if (m > 1 && (static_cast<long long>(u) * (t - 1)) % m != 0)
          continue;
        if (k == 1 && u != 0)
          continue;
        try {
          out.push_back(metacyclic(m, k, m == 1 ? 0 : t, u));
        } catch (const std::invalid_argument&) {
        }
      }
    }
  }
  // products of smaller catalog groups
  for (int a = 2; a * a <= n; ++a) {
    if (n % a)
      continue;
    for (const auto& A : groups_of_order(a).groups)
      for (const auto& B : groups_of_order(n / a).groups)
        out.push_back(direct_product(A, B));
  }
  // split extensions H x| C_q through automorphisms of order q; 2-groups
  // of order 64 and up are far too many to sort out this way
  for (int q = 2; q <= n && n % 64; ++q) {
    if (n % q || n / q < 4)
      continue;
    for (const auto& H : groups_of_order(n / q).groups) {
      if (fingerprint(*H).order_profile.count(static_cast<int>(H->order())) ||
          automorphism_bound(*H) > kAutomorphismBudget)
        continue;  // cyclic H is covered above
      const auto auts = automorphism_search(H);
      for (const Automorphism* alpha : cyclic_subgroup_classes(auts, q))
        out.push_back(semidirect_by_automorphism(*alpha, q, "t"));
    }
  }
  static const std::map<int, std::vector<std::string>> named = {
      {12, {"alternating(4)"}},
      {24, {"symmetric(4)", "sl2(3)"}},
      {48, {"gl2(3)", "binary_octahedral()"}},
      {60, {"alternating(5)"}},
      {120, {"symmetric(5)", "sl2(5)"}},
  };
  if (auto it = named.find(n); it != named.end())
    for (const auto& d : it->second)
      out.push_back(construct(d));
  if (n == 24) {
    // C3 x| D4, with D4 acting through each of its index-2 quotients
    out.push_back(from_permutations({{1, 2, 3, 0, 4, 6, 5}, {2, 1, 0, 3, 4, 5, 6}, {0, 1, 2, 3, 5, 6, 4}},
                                    "C3 x| D4 (kernel C2^2)"));
    out.push_back(from_permutations({{1, 2, 3, 0, 4, 5, 6}, {2, 1, 0, 3, 4, 6, 5}, {0, 1, 2, 3, 5, 6, 4}},
                                    "C3 x| D4 (kernel C4)"));
  }
  return out;
}

} // namespace

std::optional<int> number_of_groups(int n) {
  auto it = group_counts().find(n);
  if (it == group_counts().end())
    return std::nullopt;
  return it->second;
}

GroupCatalog groups_of_order(int n) {
  if (n < 1)
    throw std::invalid_argument("groups_of_order: n must be positive");
  if (static_cast<std::size_t>(n) > kMaxTableOrder)
    throw std::invalid_argument("groups_of_order: order exceeds table limit");
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = cache.find(n); it != cache.end())
      return it->second;
  }
  GroupCatalog cat;
  cat.order = n;
  cat.known_count = number_of_groups(n);
  std::vector<Fingerprint> prints;
  for (const auto& G : raw_candidates(n))
    add_unique(cat, G, prints);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(n, std::move(cat)).first->second;
}

void merge_into(GroupCatalog& catalog, const std::vector<GroupPtr>& extra) {
  std::vector<Fingerprint> prints;
  for (const auto& G : catalog.groups)
    prints.push_back(fingerprint(*G));
  for (const auto& G : extra) {
    if (static_cast<int>(G->order()) != catalog.order)
      throw std::invalid_argument("merge_into: group of order " +
                                  std::to_string(G->order()) + " in a catalog of order " +
                                  std::to_string(catalog.order));
    add_unique(catalog, G, prints);
  }
}

} // namespace fourg
