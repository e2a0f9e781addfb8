#include "fourg/actions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "fourg/parallel.hpp"

namespace fourg {

namespace {

struct TupleHash {
  std::size_t operator()(const std::vector<Element>& v) const noexcept {
    std::size_t h = v.size();
    for (Element e : v)
      h = h * 1000003u ^ e.id;
    return h;
  }
};
using TupleSet = std::unordered_set<std::vector<Element>, TupleHash>;

bool matches_periods(const FiniteGroup& G, const std::vector<Element>& t,
                     const std::vector<int>& periods) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (G.element_order(t[i]) != periods[i])
      return false;
  return true;
}

} // namespace

bool is_smooth(const GeneratingVector& v) {
  const FiniteGroup& G = *v.group;
  if (v.elements.size() != v.periods.size() || v.elements.empty())
    return false;
  if (G.product(v.elements) != G.identity())
    return false;
  if (!matches_periods(G, v.elements, v.periods))
    return false;
  return G.generated_order(v.elements) == G.order();
}

std::string render(const GeneratingVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.elements.size(); ++i)
    s += (i ? ", " : "") + v.group->name(v.elements[i]);
  return s + ")";
}

std::vector<GeneratingVector> smooth_vectors(const GroupPtr& Gp, const std::vector<int>& periods,
                                             const SearchOptions& options) {
  const FiniteGroup& G = *Gp;
  const std::size_t r = periods.size();
  std::vector<GeneratingVector> out;
  if (r < 2)
    return out;
  for (int m : periods)
    if (m < 1 || G.order() % static_cast<std::size_t>(m) != 0)
      return out;

  std::vector<std::vector<Element>> cand(r);
  for (std::size_t i = 0; i < r; ++i)
    for (Element e : G.elements())
      if (G.element_order(e) == periods[i])
        cand[i].push_back(e);
  for (const auto& c : cand)
    if (c.empty())
      return out;

  std::vector<std::vector<std::vector<Element>>> buckets(cand[0].size());
  parallel_for(cand[0].size(), options.workers, [&](std::size_t first) {
    std::vector<Element> t(r);
    t[0] = cand[0][first];
    auto& bucket = buckets[first];
    std::function<void(std::size_t, Element)> rec = [&](std::size_t i, Element prod) {
      if (i == r - 1) {
        Element last = G.inv(prod);
        if (G.element_order(last) != periods[r - 1])
          return;
        t[r - 1] = last;
        // no free slots remain: the prefix itself must generate G
        if (G.generated_order(std::span<const Element>(t.data(), r - 1)) != G.order())
          return;
        bucket.push_back(t);
        return;
      }
      for (Element c : cand[i]) {
        t[i] = c;
        rec(i + 1, G.mul(prod, c));
      }
    };
    rec(1, t[0]);
  });
  for (auto& bucket : buckets)
    for (auto& t : bucket)
      out.push_back(GeneratingVector{Gp, periods, std::move(t)});
  return out;
}

GeneratingVector braid_move(const GeneratingVector& v, std::size_t i) {
  const std::size_t r = v.elements.size();
  if (i < 1 || i >= r)
    throw std::out_of_range("braid_move: position " + std::to_string(i) +
                            " outside 1.." + std::to_string(r == 0 ? 0 : r - 1));
  const FiniteGroup& G = *v.group;
  GeneratingVector out = v;
  Element a = v.elements[i - 1], b = v.elements[i];
  out.elements[i - 1] = G.conj(b, a);
  out.elements[i] = a;
  std::swap(out.periods[i - 1], out.periods[i]);
  return out;
}

std::vector<std::vector<Element>> braid_orbit(const GeneratingVector& v) {
  const FiniteGroup& G = *v.group;
  const std::size_t r = v.elements.size();
  TupleSet seen{v.elements};
  std::vector<std::vector<Element>> orbit{v.elements};
  for (std::size_t q = 0; q < orbit.size(); ++q)
    for (std::size_t i = 0; i + 1 < r; ++i) {
      // sigma_i and its inverse
      std::vector<Element> f = orbit[q], b = orbit[q];
      Element x = f[i], y = f[i + 1];
      f[i] = G.conj(y, x);
      f[i + 1] = x;
      b[i] = y;
      b[i + 1] = G.conj(x, G.inv(y));
      for (auto* t : {&f, &b})
        if (seen.insert(*t).second)
          orbit.push_back(*t);
    }
  return orbit;
}

GeneratingVector class_representative(const GeneratingVector& v,
                                      const std::vector<Automorphism>& automorphisms) {
  std::vector<int> sorted = v.periods;
  std::sort(sorted.begin(), sorted.end());
  const FiniteGroup& G = *v.group;
  std::optional<std::vector<Element>> best;
  for (const auto& t : braid_orbit(v)) {
    if (!matches_periods(G, t, sorted))
      continue;
    for (const auto& a : automorphisms) {
      std::vector<Element> img(t.size());
      for (std::size_t i = 0; i < t.size(); ++i)
        img[i] = a(t[i]);
      if (!best || img < *best)
        best = std::move(img);
    }
  }
  if (!best)
    throw std::invalid_argument("class_representative: no member in ascending period order");
  return GeneratingVector{v.group, sorted, *best};
}

std::vector<ActionClass> classify(const GroupPtr& G, std::vector<int> periods,
                                  const SearchOptions& options) {
  std::sort(periods.begin(), periods.end());
  std::vector<ActionClass> out;
  const auto vectors = smooth_vectors(G, periods, options);
  if (vectors.empty())
    return out;
  AutomorphismOptions aopt;
  aopt.workers = options.workers;
  const auto auts = automorphism_search(G, aopt);

  TupleSet visited;
  for (const auto& v : vectors) {
    if (visited.count(v.elements))
      continue;
    TupleSet members;
    for (const auto& t : braid_orbit(v)) {
      if (!matches_periods(*G, t, periods))
        continue;
      for (const auto& a : auts) {
        std::vector<Element> img(t.size());
        for (std::size_t i = 0; i < t.size(); ++i)
          img[i] = a(t[i]);
        members.insert(std::move(img));
      }
    }
    std::vector<std::vector<Element>> sorted(members.begin(), members.end());
    std::sort(sorted.begin(), sorted.end());
    ActionClass cls;
    cls.group = G;
    cls.periods = periods;
    for (auto& t : sorted) {
      visited.insert(t);
      cls.members.push_back(GeneratingVector{G, periods, std::move(t)});
    }
    cls.representative = cls.members.front();
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const ActionClass& a, const ActionClass& b) {
    return a.representative.elements < b.representative.elements;
  });
  return out;
}

int kernel_genus(long long group_order, const Signature& s) {
  Rational twice = group_order * normalized_area(s) + 2;  // 2g
  if (!is_integer(twice) || !is_integer(twice / 2))
    throw std::domain_error("kernel_genus: non-integral genus for " + render(s) +
                            " and order " + std::to_string(group_order));
  Rational g = twice / 2;
  if (g < 0)
    throw std::domain_error("kernel_genus: negative genus");
  return static_cast<int>(boost::multiprecision::numerator(g));
}

GroupPtr standard_group(int g) {
  if (g < 2)
    throw std::invalid_argument("standard_group: g must be >= 2");
  return dihedral(4 * g);
}

GeneratingVector standard_vector(int g) {
  auto G = standard_group(g);
  const std::uint32_t n = 2 * g;  // rotations
  Element A{n}, D{1};
  Element DgA{n + static_cast<std::uint32_t>(g + 1)};
  Element Dg = G->pow(D, g);
  return GeneratingVector{G, {2, 2, 2, 2 * g}, {A, DgA, Dg, D}};
}

} // namespace fourg
