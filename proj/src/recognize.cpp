#include "fourg/recognize.hpp"

#include <algorithm>
#include <functional>

namespace fourg {

namespace {

bool is_bijection(const std::vector<Element>& f) {
  std::vector<char> hit(f.size(), 0);
  for (Element e : f) {
    if (hit[e.id])
      return false;
    hit[e.id] = 1;
  }
  return true;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  if (n > 1)
    out.push_back(n);
  return out;
}

} // namespace

Subgroup derived_subgroup(const FiniteGroup& G) {
  std::vector<Element> comms;
  std::vector<char> seen(G.order(), 0);
  for (Element a : G.elements())
    for (Element b : G.elements()) {
      Element c = G.commutator(a, b);
      if (!seen[c.id]) {
        seen[c.id] = 1;
        comms.push_back(c);
      }
    }
  return subgroup_generated(G, comms);
}

std::vector<long long> abelian_invariants(const FiniteGroup& G) {
  const Subgroup K = derived_subgroup(G);
  std::vector<char> in_k(G.order(), 0);
  for (Element k : K.elements)
    in_k[k.id] = 1;
  // one representative per coset aK
  std::vector<char> covered(G.order(), 0);
  std::vector<Element> reps;
  for (Element a : G.elements()) {
    if (covered[a.id])
      continue;
    reps.push_back(a);
    for (Element k : K.elements)
      covered[G.mul(a, k).id] = 1;
  }
  const long long q = static_cast<long long>(reps.size());
  std::vector<std::vector<int>> exponents;  // per prime, descending
  std::vector<long long> primes = prime_factors(q);
  for (long long p : primes) {
    // log_p #{x in Q : x^(p^j) = 1} = sum_i min(e_i, j)
    std::vector<int> logs{0};
    long long pj = 1;
    while (true) {
      pj *= p;
      long long count = 0;
      for (Element a : reps)
        if (in_k[G.pow(a, pj).id])
          ++count;
      int lg = 0;
      while (count > 1) {
        count /= p;
        ++lg;
      }
      if (lg == logs.back())
        break;
      logs.push_back(lg);
    }
    // number of factors with e_i >= j
    std::vector<int> at_least;
    for (std::size_t j = 1; j < logs.size(); ++j)
      at_least.push_back(logs[j] - logs[j - 1]);
    std::vector<int> es;
    for (std::size_t j = 0; j < at_least.size(); ++j) {
      int next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
      for (int c = 0; c < at_least[j] - next; ++c)
        es.push_back(static_cast<int>(j + 1));
    }
    std::sort(es.rbegin(), es.rend());
    exponents.push_back(es);
  }
  std::size_t width = 0;
  for (const auto& es : exponents)
    width = std::max(width, es.size());
  std::vector<long long> out(width, 1);
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t t = 0; t < exponents[i].size(); ++t)
      for (int e = 0; e < exponents[i][t]; ++e)
        out[t] *= primes[i];
  std::sort(out.begin(), out.end());
  return out;
}

Fingerprint fingerprint(const FiniteGroup& G) {
  Fingerprint f;
  f.order = G.order();
  for (Element e : G.elements())
    ++f.order_profile[G.element_order(e)];
  f.center_order = center(G).order();
  f.abelian_invariants = abelian_invariants(G);
  return f;
}

std::vector<Element> small_generating_set(const FiniteGroup& G) {
  const std::size_t n = G.order();
  if (n == 1)
    return {};
  for (Element a : G.elements())
    if (G.element_order(a) == static_cast<int>(n))
      return {a};
  if (n <= 256) {
    for (Element a : G.elements())
      for (Element b : G.elements())
        if (a < b) {
          Element pair[] = {a, b};
          if (G.generated_order(pair) == n)
            return {a, b};
        }
  }
  // greedy: repeatedly add the element that enlarges the span most
  std::vector<Element> gens;
  std::size_t span = 1;
  while (span < n) {
    Element best{};
    std::size_t best_size = span;
    for (Element a : G.elements()) {
      gens.push_back(a);
      std::size_t s = G.generated_order(gens);
      gens.pop_back();
      if (s > best_size) {
        best_size = s;
        best = a;
      }
    }
    gens.push_back(best);
    span = best_size;
  }
  return gens;
}

std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& G,
                                                     const FiniteGroup& H) {
  if (G.order() != H.order())
    return std::nullopt;
  if (!(fingerprint(G) == fingerprint(H)))
    return std::nullopt;
  const std::vector<Element> gens = small_generating_set(G);
  const std::size_t k = gens.size();
  std::vector<std::vector<Element>> cand(k);
  for (std::size_t i = 0; i < k; ++i)
    for (Element e : H.elements())
      if (H.element_order(e) == G.element_order(gens[i]))
        cand[i].push_back(e);
  std::vector<Element> img(k);
  std::optional<std::vector<Element>> result;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == k) {
      auto f = extend_to_homomorphism(G, gens, H, img);
      if (f && is_bijection(*f)) {
        result = std::move(f);
        return true;
      }
      return false;
    }
    for (Element c : cand[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = H.element_order(H.mul(img[j], c)) == G.element_order(G.mul(gens[j], gens[i]));
      if (!ok)
        continue;
      img[i] = c;
      if (rec(i + 1))
        return true;
    }
    return false;
  };
  if (k == 0) {
    return std::vector<Element>{H.identity()};
  }
  rec(0);
  return result;
}

Recognition recognize(const GroupPtr& Gp) {
  const FiniteGroup& G = *Gp;
  Recognition r;
  r.order = G.order();
  r.abelian_invariants = abelian_invariants(G);
  const std::size_t n = G.order();

  auto accept = [&](StructureKind kind, GroupPtr model, std::vector<Element> iso) {
    r.kind = kind;
    r.model = std::move(model);
    r.isomorphism = std::move(iso);
    return r;
  };

  for (Element a : G.elements())
    if (G.element_order(a) == static_cast<int>(n)) {
      auto model = cyclic(static_cast<int>(n));
      std::vector<Element> src = model->generators(), dst{a};
      if (n == 1)
        dst.clear();
      auto f = extend_to_homomorphism(*model, src, G, dst);
      if (f && is_bijection(*f))
        return accept(StructureKind::cyclic, model, std::move(*f));
    }

  bool abelian = center(G).order() == n;
  bool exponent2 = true;
  for (Element a : G.elements())
    exponent2 = exponent2 && G.element_order(a) <= 2;
  if (abelian && exponent2 && n > 1) {
    GroupPtr model = cyclic(2);
    for (std::size_t m = 4; m <= n; m *= 2)
      model = direct_product(model, cyclic(2));
    if (auto f = find_isomorphism(*model, G))
      return accept(StructureKind::elementary_abelian, model, std::move(*f));
  }

  if (n >= 6 && n % 2 == 0) {
    const int half = static_cast<int>(n / 2);
    auto model = dihedral(static_cast<int>(n));
    for (Element rot : G.elements()) {
      if (G.element_order(rot) != half)
        continue;
      for (Element s : G.elements()) {
        if (G.element_order(s) != 2 || G.conj(rot, s) != G.inv(rot))
          continue;
        Element imgs[] = {rot, s};
        auto f = extend_to_homomorphism(*model, model->generators(), G, imgs);
        if (f && is_bijection(*f))
          return accept(StructureKind::dihedral, model, std::move(*f));
      }
      break;  // every element of order n/2 >= 3 is a rotation
    }
  }

  if (n >= 8 && n % 4 == 0) {
    auto model = direct_product(dihedral(static_cast<int>(n / 2)), cyclic(2));
    if (auto f = find_isomorphism(*model, G))
      return accept(StructureKind::dihedral_times_c2, model, std::move(*f));
  }
  return r;
}

std::string Recognition::describe() const {
  switch (kind) {
  case StructureKind::cyclic:
    return "cyclic of order " + std::to_string(order);
  case StructureKind::dihedral:
    return "dihedral of order " + std::to_string(order);
  case StructureKind::dihedral_times_c2:
    return "dihedral of order " + std::to_string(order / 2) + " x C2";
  case StructureKind::elementary_abelian: {
    int rank = 0;
    for (std::size_t m = order; m > 1; m /= 2)
      ++rank;
    return "elementary abelian of rank " + std::to_string(rank);
  }
  case StructureKind::other:
    break;
  }
  std::string inv;
  for (auto d : abelian_invariants)
    inv += (inv.empty() ? "" : ",") + std::to_string(d);
  return "other of order " + std::to_string(order) + " (abelianization [" + inv + "])";
}

} // namespace fourg
