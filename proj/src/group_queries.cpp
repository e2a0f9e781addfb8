#include "fourg/group.hpp"

#include <algorithm>
#include <stdexcept>

#include "fourg/parallel.hpp"

namespace fourg {

namespace {

// Spanning tree of the Cayley graph of `src` w.r.t. `gens`, reused to test
// many candidate generator images.
class HomomorphismChecker {
public:
  HomomorphismChecker(const FiniteGroup& src, std::span<const Element> gens)
      : src_(src), gens_(gens.begin(), gens.end()) {
    const std::size_t n = src.order();
    std::vector<char> seen(n, 0);
    seen[src.identity().id] = 1;
    order_.push_back({src.identity(), src.identity(), 0});
    for (std::size_t q = 0; q < order_.size(); ++q)
      for (std::size_t i = 0; i < gens_.size(); ++i) {
        Element next = src.mul(order_[q].element, gens_[i]);
        if (!seen[next.id]) {
          seen[next.id] = 1;
          order_.push_back({next, order_[q].element, i});
        }
      }
    generates_ = order_.size() == n;
  }

  bool generates() const { return generates_; }

  std::optional<std::vector<Element>> extend(const FiniteGroup& dst,
                                             std::span<const Element> images) const {
    if (!generates_ || images.size() != gens_.size())
      return std::nullopt;
    std::vector<Element> f(src_.order());
    f[src_.identity().id] = dst.identity();
    for (std::size_t q = 1; q < order_.size(); ++q)
      f[order_[q].element.id] = dst.mul(f[order_[q].parent.id], images[order_[q].gen]);
    for (Element a : src_.elements())
      for (std::size_t i = 0; i < gens_.size(); ++i)
        if (f[src_.mul(a, gens_[i]).id] != dst.mul(f[a.id], images[i]))
          return std::nullopt;
    return f;
  }

private:
  struct Step {
    Element element, parent;
    std::size_t gen;
  };
  const FiniteGroup& src_;
  std::vector<Element> gens_;
  std::vector<Step> order_;
  bool generates_ = false;
};

bool is_bijection(const std::vector<Element>& f) {
  std::vector<char> hit(f.size(), 0);
  for (Element e : f) {
    if (e.id >= f.size() || hit[e.id])
      return false;
    hit[e.id] = 1;
  }
  return true;
}

} // namespace

bool ConjugacyClass::contains(Element e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& G,
                                              const std::function<bool(Element)>& filter) {
  std::vector<ConjugacyClass> out;
  std::vector<char> done(G.order(), 0);
  for (Element a : G.elements()) {
    if (done[a.id] || (filter && !filter(a)))
      continue;
    ConjugacyClass cls;
    for (Element h : G.elements()) {
      Element c = G.conj(a, h);
      if (!done[c.id]) {
        done[c.id] = 1;
        if (!filter || filter(c))
          cls.members.push_back(c);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();
    out.push_back(std::move(cls));
  }
  return out;
}

std::optional<std::vector<Element>> extend_to_homomorphism(
    const FiniteGroup& src, std::span<const Element> src_gens, const FiniteGroup& dst,
    std::span<const Element> images) {
  HomomorphismChecker checker(src, src_gens);
  return checker.extend(dst, images);
}

bool Automorphism::preserves_orientation() const {
  if (!group->has_orientation())
    return true;
  for (Element e : group->elements())
    if (group->orientation(e) != group->orientation(map[e.id]))
      return false;
  return true;
}

bool Automorphism::is_involution() const {
  for (Element e : group->elements())
    if (map[map[e.id].id] != e)
      return false;
  return true;
}

std::optional<Automorphism> make_automorphism(const GroupPtr& G,
                                              std::vector<Element> generator_images) {
  return make_automorphism(G, G->generators(), generator_images);
}

std::optional<Automorphism> make_automorphism(const GroupPtr& G,
                                              std::span<const Element> sources,
                                              std::span<const Element> images) {
  auto f = extend_to_homomorphism(*G, sources, *G, images);
  if (!f || !is_bijection(*f))
    return std::nullopt;
  Automorphism a;
  a.group = G;
  for (Element g : G->generators())
    a.generator_images.push_back((*f)[g.id]);
  a.map = std::move(*f);
  return a;
}

std::vector<Automorphism> automorphism_search(const GroupPtr& G,
                                              const AutomorphismOptions& options) {
  const FiniteGroup& grp = *G;
  const auto& gens = grp.generators();
  const std::size_t k = gens.size();
  const bool keep_orientation = options.orientation_preserving && grp.has_orientation();

  std::vector<std::vector<Element>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto it = options.constraint.find(i);
    if (it != options.constraint.end()) {
      candidates[i].push_back(it->second);
      continue;
    }
    for (Element e : grp.elements())
      if (grp.element_order(e) == grp.element_order(gens[i]) &&
          (!keep_orientation || grp.orientation(e) == grp.orientation(gens[i])))
        candidates[i].push_back(e);
  }
  for (const auto& [pos, img] : options.constraint)
    if (pos >= k)
      throw std::invalid_argument("automorphism constraint refers to a missing generator");

  HomomorphismChecker checker(grp, gens);
  if (k == 0) {
    std::vector<Automorphism> trivial;
    if (auto a = make_automorphism(G, {}))
      trivial.push_back(std::move(*a));
    return trivial;
  }

  std::vector<std::vector<Automorphism>> buckets(candidates[0].size());
  parallel_for(candidates[0].size(), options.workers, [&](std::size_t first) {
    std::vector<Element> img(k);
    img[0] = candidates[0][first];
    auto& bucket = buckets[first];
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == k) {
        auto f = checker.extend(grp, img);
        if (!f || !is_bijection(*f))
          return;
        if (keep_orientation)
          for (Element e : grp.elements())
            if (grp.orientation(e) != grp.orientation((*f)[e.id]))
              return;
        Automorphism a;
        a.group = G;
        a.generator_images = img;
        a.map = std::move(*f);
        bucket.push_back(std::move(a));
        return;
      }
      for (Element c : candidates[i]) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j)
          ok = grp.element_order(grp.mul(img[j], c)) ==
               grp.element_order(grp.mul(gens[j], gens[i]));
        if (!ok)
          continue;
        img[i] = c;
        rec(i + 1);
      }
    };
    if (grp.element_order(img[0]) == grp.element_order(gens[0]))
      rec(1);
  });
  std::vector<Automorphism> out;
  for (auto& b : buckets)
    for (auto& a : b)
      out.push_back(std::move(a));
  return out;
}

} // namespace fourg
