#include "fourg/group.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace fourg {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<std::uint32_t> table,
                         std::vector<Element> generators,
                         std::vector<std::string> names, GroupTag tag)
    : n_(order), table_(std::move(table)), generators_(std::move(generators)),
      names_(std::move(names)), tag_(std::move(tag)) {
  if (n_ == 0)
    throw std::invalid_argument("group of order 0");
  if (n_ > kMaxTableOrder)
    throw std::invalid_argument("group order " + std::to_string(n_) +
                                " exceeds the table limit " +
                                std::to_string(kMaxTableOrder));
  if (table_.size() != n_ * n_)
    throw std::invalid_argument("multiplication table has wrong size");
  for (auto v : table_)
    if (v >= n_)
      throw std::invalid_argument("multiplication table entry out of range");
  for (Element g : generators_)
    if (g.id >= n_)
      throw std::invalid_argument("generator index out of range");
  if (names_.empty())
    for (std::size_t i = 0; i < n_; ++i)
      names_.push_back("g" + std::to_string(i));
  if (names_.size() != n_)
    throw std::invalid_argument("element name list has wrong size");
  finish();
}

void FiniteGroup::finish() {
  // identity: the row that is the identity permutation
  bool found = false;
  for (std::size_t e = 0; e < n_ && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n_ && ok; ++a)
      ok = table_[e * n_ + a] == a && table_[a * n_ + e] == a;
    if (ok) {
      identity_ = Element{static_cast<std::uint32_t>(e)};
      found = true;
    }
  }
  if (!found)
    throw std::invalid_argument("not a group: no two-sided identity");

  inverse_.assign(n_, 0);
  for (std::size_t a = 0; a < n_; ++a) {
    bool ok = false;
    for (std::size_t b = 0; b < n_; ++b)
      if (table_[a * n_ + b] == identity_.id) {
        if (table_[b * n_ + a] != identity_.id)
          throw std::invalid_argument("not a group: one-sided inverse");
        inverse_[a] = static_cast<std::uint32_t>(b);
        ok = true;
        break;
      }
    if (!ok)
      throw std::invalid_argument("not a group: element without inverse");
  }

  AxiomReport axioms = verify_group_axioms(*this);
  if (!axioms.ok)
    throw std::invalid_argument("not a group: " + axioms.failure);

  orders_.assign(n_, 0);
  for (std::size_t a = 0; a < n_; ++a) {
    Element x{static_cast<std::uint32_t>(a)}, p = x;
    int k = 1;
    while (p != identity_) {
      p = mul(p, x);
      ++k;
    }
    orders_[a] = k;
  }

  if (generated_order(generators_) != n_)
    throw std::invalid_argument("distinguished generators do not generate the group");
}

Element FiniteGroup::pow(Element a, long long k) const {
  const long long o = orders_[a.id];
  k %= o;
  if (k < 0)
    k += o;
  Element out = identity_;
  for (long long i = 0; i < k; ++i)
    out = mul(out, a);
  return out;
}

Element FiniteGroup::product(std::initializer_list<Element> es) const {
  return product(std::span<const Element>(es.begin(), es.size()));
}

Element FiniteGroup::product(std::span<const Element> es) const {
  Element out = identity_;
  for (Element e : es)
    out = mul(out, e);
  return out;
}

Element FiniteGroup::commutator(Element a, Element b) const {
  return product({a, b, inv(a), inv(b)});
}

Element FiniteGroup::element(std::size_t index) const {
  if (index >= n_)
    throw std::out_of_range("element index out of range");
  return Element{static_cast<std::uint32_t>(index)};
}

std::vector<Element> FiniteGroup::elements() const {
  std::vector<Element> out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    out[i] = Element{static_cast<std::uint32_t>(i)};
  return out;
}

std::optional<Element> FiniteGroup::find(std::string_view name) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (names_[i] == name)
      return Element{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

int FiniteGroup::orientation(Element a) const {
  if (orientation_.empty())
    throw std::logic_error("group has no orientation character");
  return orientation_[a.id];
}

GroupPtr FiniteGroup::with_generators(std::vector<Element> generators) const {
  for (Element g : generators)
    if (g.id >= n_)
      throw std::invalid_argument("generator index out of range");
  if (generated_order(generators) != n_)
    throw std::invalid_argument("proposed generators do not generate the group");
  auto copy = std::shared_ptr<FiniteGroup>(new FiniteGroup(*this));
  copy->generators_ = std::move(generators);
  copy->orientation_ = orientation_;
  return copy;
}

GroupPtr FiniteGroup::with_orientation(const std::vector<int>& generator_signs) const {
  if (generator_signs.size() != generators_.size())
    throw std::invalid_argument("one orientation sign per generator required");
  std::vector<int> sign(n_, 0);
  sign[identity_.id] = 1;
  std::vector<Element> queue{identity_};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      Element next = mul(queue[q], generators_[i]);
      if (sign[next.id] == 0) {
        sign[next.id] = sign[queue[q].id] * generator_signs[i];
        queue.push_back(next);
      }
    }
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t i = 0; i < generators_.size(); ++i)
      if (sign[mul(Element{static_cast<std::uint32_t>(a)}, generators_[i]).id] !=
          sign[a] * generator_signs[i])
        throw std::invalid_argument("orientation signs do not define a homomorphism");
  auto copy = std::shared_ptr<FiniteGroup>(new FiniteGroup(*this));
  copy->orientation_ = std::move(sign);
  return copy;
}

GroupPtr FiniteGroup::with_tag(GroupTag tag) const {
  auto copy = std::shared_ptr<FiniteGroup>(new FiniteGroup(*this));
  copy->tag_ = std::move(tag);
  return copy;
}

GroupPtr FiniteGroup::with_names(std::vector<std::string> names) const {
  if (names.size() != n_)
    throw std::invalid_argument("element name list has wrong size");
  auto copy = std::shared_ptr<FiniteGroup>(new FiniteGroup(*this));
  copy->names_ = std::move(names);
  return copy;
}

std::vector<Element> FiniteGroup::closure(std::span<const Element> gens) const {
  std::vector<char> seen(n_, 0);
  std::vector<Element> out{identity_};
  seen[identity_.id] = 1;
  for (std::size_t q = 0; q < out.size(); ++q)
    for (Element g : gens) {
      Element next = mul(out[q], g);
      if (!seen[next.id]) {
        seen[next.id] = 1;
        out.push_back(next);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t FiniteGroup::generated_order(std::span<const Element> gens) const {
  return closure(gens).size();
}

AxiomReport verify_group_axioms(const FiniteGroup& G, std::size_t exhaustive_limit) {
  AxiomReport rep;
  const std::size_t n = G.order();
  auto check = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    Element x{a}, y{b}, z{c};
    ++rep.triples_checked;
    if (G.mul(G.mul(x, y), z) != G.mul(x, G.mul(y, z))) {
      rep.ok = false;
      rep.failure = "associativity fails for (" + std::to_string(a) + "," +
                    std::to_string(b) + "," + std::to_string(c) + ")";
      return false;
    }
    return true;
  };
  for (std::uint32_t a = 0; a < n; ++a) {
    Element x{a};
    if (G.mul(G.identity(), x) != x || G.mul(x, G.identity()) != x) {
      rep.ok = false;
      rep.failure = "identity law fails";
      return rep;
    }
    if (G.mul(x, G.inv(x)) != G.identity() || G.mul(G.inv(x), x) != G.identity()) {
      rep.ok = false;
      rep.failure = "inverse law fails";
      return rep;
    }
  }
  if (n <= exhaustive_limit) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c)
          if (!check(a, b, c))
            return rep;
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
    for (int i = 0; i < (1 << 20); ++i)
      if (!check(pick(rng), pick(rng), pick(rng)))
        return rep;
  }
  return rep;
}

bool Subgroup::contains(Element e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

bool Subgroup::subset_of(const Subgroup& other) const {
  return std::includes(other.elements.begin(), other.elements.end(),
                       elements.begin(), elements.end());
}

Subgroup subgroup_generated(const FiniteGroup& G, std::span<const Element> gens) {
  Subgroup H;
  H.elements = G.closure(gens);
  H.generators.assign(gens.begin(), gens.end());
  H.index = G.order() / H.elements.size();
  return H;
}

Subgroup subgroup_generated(const FiniteGroup& G, std::initializer_list<Element> gens) {
  return subgroup_generated(G, std::span<const Element>(gens.begin(), gens.size()));
}

namespace {

// Greedy generating set in increasing index order.
std::vector<Element> greedy_generators(const FiniteGroup& G,
                                       const std::vector<Element>& elements) {
  std::vector<Element> gens;
  std::vector<Element> span{G.identity()};
  for (Element e : elements) {
    if (std::binary_search(span.begin(), span.end(), e))
      continue;
    gens.push_back(e);
    span = G.closure(gens);
    if (span.size() == elements.size())
      break;
  }
  return gens;
}

Subgroup subgroup_from_elements(const FiniteGroup& G, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  Subgroup H;
  H.generators = greedy_generators(G, elements);
  H.elements = std::move(elements);
  H.index = G.order() / H.elements.size();
  return H;
}

} // namespace

Subgroup centralizer(const FiniteGroup& G, Element e) {
  std::vector<Element> els;
  for (Element h : G.elements())
    if (G.commute(h, e))
      els.push_back(h);
  return subgroup_from_elements(G, std::move(els));
}

Subgroup center(const FiniteGroup& G) {
  std::vector<Element> els;
  for (Element h : G.elements()) {
    bool central = true;
    for (Element g : G.generators())
      central = central && G.commute(h, g);
    if (central)
      els.push_back(h);
  }
  return subgroup_from_elements(G, std::move(els));
}

GroupPtr subgroup_as_group(const FiniteGroup& G, const Subgroup& H) {
  const std::size_t m = H.elements.size();
  std::vector<std::uint32_t> local(G.order(), UINT32_MAX);
  for (std::size_t i = 0; i < m; ++i)
    local[H.elements[i].id] = static_cast<std::uint32_t>(i);
  std::vector<std::uint32_t> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto v = local[G.mul(H.elements[i], H.elements[j]).id];
      if (v == UINT32_MAX)
        throw std::invalid_argument("subgroup_as_group: set not closed");
      table[i * m + j] = v;
    }
  std::vector<std::string> names;
  for (Element e : H.elements)
    names.push_back(G.name(e));
  std::vector<Element> gens;
  for (Element g : H.generators.empty() ? greedy_generators(G, H.elements) : H.generators)
    gens.push_back(Element{local[g.id]});
  auto out = std::make_shared<FiniteGroup>(
      m, std::move(table), std::move(gens), std::move(names),
      GroupTag{Construction::subgroup, "subgroup of " + G.tag().description});
  return out;
}

} // namespace fourg
