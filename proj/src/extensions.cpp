#include "fourg/extensions.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "fourg/errors.hpp"
#include "fourg/parallel.hpp"
#include "fourg/recognize.hpp"

namespace fourg {

std::string_view to_string(NecKind k) { return k == NecKind::a ? "a" : "b"; }

Signature nec_signature(int g, NecKind kind) {
  if (kind == NecKind::a)
    return make_signature(0, Sign::plus, {}, {{2, 2, 2, 2 * g}});
  return make_signature(0, Sign::plus, {2}, {{2, 2 * g}});
}

GroupPtr kind_a_group(int g) {
  if (g < 2)
    throw std::invalid_argument("kind_a_group: g must be >= 2");
  auto D = dihedral(4 * g, "(wx)", "x");
  auto G = direct_product(D, cyclic(2, "y"));
  std::vector<std::string> names;
  for (Element e : G->elements()) {
    std::string base = D->name(Element{e.id / 2});
    std::string s = (base == "1" ? "" : base) + (e.id % 2 ? "y" : "");
    names.push_back(s.empty() ? "1" : s);
  }
  const std::uint32_t n = 2 * g;
  Element x{n * 2}, w{(n + 1) * 2}, y{1};
  return G->with_names(std::move(names))
      ->with_generators({w, x, y})
      ->with_orientation({-1, -1, -1})
      ->with_tag({Construction::direct_product, "kind_a(" + std::to_string(g) + ")"});
}

GroupPtr kind_b_group(int g) {
  return extension_group_b(g)->with_orientation({1, -1, -1});
}

Element ExtendedAction::image(const GeneratorSymbol& s) const {
  for (const auto& [sym, el] : images)
    if (sym == s)
      return el;
  throw std::out_of_range("no image for generator " + render(s));
}

Element ExtendedAction::evaluate(const Word& w) const {
  const FiniteGroup& G = *group;
  return evaluate_word(
      w, G.identity(), [&](Element a, Element b) { return G.mul(a, b); },
      [&](Element a) { return G.inv(a); }, [&](const GeneratorSymbol& s) { return image(s); });
}

std::vector<GeneratorSymbol> ExtendedAction::canonical_reflections() const {
  std::vector<GeneratorSymbol> out;
  for (std::size_t i = 0; i < signature.period_cycles.size(); ++i)
    for (std::size_t j = 0; j < signature.period_cycles[i].size(); ++j)
      out.push_back(sym_c(static_cast<int>(i + 1), static_cast<int>(j)));
  return out;
}

void verify_extended_action(const ExtendedAction& e) {
  const FiniteGroup& G = *e.group;
  auto fail = [&](const std::string& what) {
    throw InvariantViolation("extended action " + e.label + " (g=" + std::to_string(e.genus) +
                             "): " + what);
  };
  if (!G.has_orientation())
    fail("group without orientation character");
  const CanonicalPresentation p = canonical_presentation(e.signature);
  for (const auto& r : p.relators)
    if (e.evaluate(r) != G.identity())
      fail("relator " + render(r) + " does not map to 1");
  std::vector<Element> all;
  for (const auto& s : p.generators) {
    Element img = e.image(s);
    all.push_back(img);
    if (G.orientation(img) != (s.orientation_reversing() ? -1 : 1))
      fail("orientation character wrong on " + render(s));
  }
  for (std::size_t i = 0; i < e.signature.proper_periods.size(); ++i)
    if (G.element_order(e.image(sym_x(static_cast<int>(i + 1)))) !=
        e.signature.proper_periods[i])
      fail("elliptic image of wrong order");
  for (std::size_t i = 0; i < e.signature.period_cycles.size(); ++i) {
    const auto& cyc = e.signature.period_cycles[i];
    const int ci = static_cast<int>(i + 1);
    for (std::size_t j = 0; j <= cyc.size(); ++j)
      if (G.element_order(e.image(sym_c(ci, static_cast<int>(j)))) != 2)
        fail("reflection image is not an involution");
    for (std::size_t j = 1; j <= cyc.size(); ++j) {
      Element link = G.mul(e.image(sym_c(ci, static_cast<int>(j - 1))),
                           e.image(sym_c(ci, static_cast<int>(j))));
      if (G.element_order(link) != cyc[j - 1])
        fail("link product of wrong order");
    }
  }
  if (G.generated_order(all) != G.order())
    fail("images do not generate the group");
}

namespace {

std::vector<Element> reversing_involutions(const FiniteGroup& G) {
  std::vector<Element> out;
  for (Element e : G.elements())
    if (G.element_order(e) == 2 && G.orientation(e) == -1)
      out.push_back(e);
  return out;
}

ExtendedAction make_action(int g, NecKind kind, const GroupPtr& G,
                           const std::vector<Element>& t, std::string label) {
  ExtendedAction e;
  e.kind = kind;
  e.genus = g;
  e.signature = nec_signature(g, kind);
  e.group = G;
  e.label = std::move(label);
  if (kind == NecKind::a) {
    for (int j = 0; j < 4; ++j)
      e.images.push_back({sym_c(1, j), t[j]});
    e.images.push_back({sym_c(1, 4), t[0]});
    e.images.push_back({sym_e(1), G->identity()});
  } else {
    Element a = t[0];
    e.images.push_back({sym_x(1), a});
    e.images.push_back({sym_c(1, 0), t[1]});
    e.images.push_back({sym_c(1, 1), t[2]});
    e.images.push_back({sym_c(1, 2), G->product({a, t[1], a})});
    e.images.push_back({sym_e(1), G->inv(a)});
  }
  return e;
}

// The explicit assignments: theta1*, theta2* onto <w,x> x <y>, and
// a -> x, c0 -> xwx, c1 -> z onto the kind-b group.
std::vector<std::pair<std::string, std::vector<Element>>> named_tuples(int g, NecKind kind,
                                                                       const FiniteGroup& G) {
  const auto& gens = G.generators();
  if (kind == NecKind::a) {
    Element w = gens[0], x = gens[1], y = gens[2];
    Element h = G.pow(G.mul(w, x), g);  // (wx)^g
    return {{"theta1*", {x, y, G.mul(h, w), w}}, {"theta2*", {x, y, G.mul(y, h), w}}};
  }
  Element x = gens[0], z = gens[1], w = gens[2];
  return {{"theta*", {x, G.product({x, w, x}), z}}};
}

struct Equivalences {
  std::vector<Automorphism> automorphisms;
  bool reversal = false;

  std::vector<std::vector<Element>> images(const std::vector<Element>& t) const {
    std::vector<std::vector<Element>> out;
    for (const auto& a : automorphisms) {
      std::vector<Element> img(t.size());
      for (std::size_t i = 0; i < t.size(); ++i)
        img[i] = a(t[i]);
      out.push_back(img);
      if (reversal) {
        std::reverse(img.begin(), img.end());
        out.push_back(std::move(img));
      }
    }
    return out;
  }
  std::vector<Element> canonical(const std::vector<Element>& t) const {
    auto all = images(t);
    return *std::min_element(all.begin(), all.end());
  }
};

std::vector<std::vector<Element>> admissible_tuples(int g, NecKind kind, const FiniteGroup& G,
                                                    const SearchOptions& options) {
  const auto R = reversing_involutions(G);
  const int n = 2 * g;
  std::vector<Element> firsts = R;
  if (kind == NecKind::b) {
    firsts.clear();
    for (Element e : G.elements())
      if (G.element_order(e) == 2 && G.orientation(e) == 1)
        firsts.push_back(e);
  }
  auto ord = [&](Element a, Element b) { return G.element_order(G.mul(a, b)); };
  std::vector<std::vector<std::vector<Element>>> buckets(firsts.size());
  parallel_for(firsts.size(), options.workers, [&](std::size_t i) {
    Element f = firsts[i];
    auto& out = buckets[i];
    if (kind == NecKind::a) {
      for (Element c1 : R) {
        if (ord(f, c1) != 2)
          continue;
        for (Element c2 : R) {
          if (ord(c1, c2) != 2)
            continue;
          for (Element c3 : R) {
            if (ord(c2, c3) != 2 || ord(c3, f) != n)
              continue;
            Element t[] = {f, c1, c2, c3};
            if (G.generated_order(t) == G.order())
              out.push_back({f, c1, c2, c3});
          }
        }
      }
    } else {
      for (Element c0 : R) {
        Element c2 = G.product({f, c0, f});
        for (Element c1 : R) {
          if (ord(c0, c1) != 2 || ord(c1, c2) != n)
            continue;
          Element t[] = {f, c0, c1};
          if (G.generated_order(t) == G.order())
            out.push_back({f, c0, c1});
        }
      }
    }
  });
  std::vector<std::vector<Element>> all;
  for (auto& b : buckets)
    for (auto& t : b)
      all.push_back(std::move(t));
  std::sort(all.begin(), all.end());
  return all;
}

Equivalences equivalences(const GroupPtr& G, NecKind kind, unsigned workers) {
  AutomorphismOptions opt;
  opt.orientation_preserving = true;
  opt.workers = workers;
  return Equivalences{automorphism_search(G, opt), kind == NecKind::a};
}

} // namespace

ExtensionSearch search_extensions(int g, NecKind kind, const SearchOptions& options) {
  GroupPtr G = kind == NecKind::a ? kind_a_group(g) : kind_b_group(g);
  ExtensionSearch s;
  s.kind = kind;
  s.genus = g;
  const auto tuples = admissible_tuples(g, kind, *G, options);
  s.admissible_assignments = tuples.size();
  const Equivalences eq = equivalences(G, kind, options.workers);
  s.equivalences = eq.automorphisms.size() * (eq.reversal ? 2 : 1);
  std::set<std::vector<Element>> seen;
  for (const auto& t : tuples) {
    if (seen.count(t))
      continue;
    std::set<std::vector<Element>> cls;
    for (auto& img : eq.images(t))
      cls.insert(std::move(img));
    s.class_representatives.push_back(*cls.begin());
    s.class_sizes.push_back(cls.size());
    seen.insert(cls.begin(), cls.end());
  }
  return s;
}

std::vector<ExtendedAction> build_extensions(int g, NecKind kind, const SearchOptions& options) {
  GroupPtr G = kind == NecKind::a ? kind_a_group(g) : kind_b_group(g);
  const ExtensionSearch s = search_extensions(g, kind, options);
  const Equivalences eq = equivalences(G, kind, options.workers);
  const auto named = named_tuples(g, kind, *G);

  std::vector<ExtendedAction> out;
  std::vector<char> used(s.class_representatives.size(), 0);
  for (const auto& [label, t] : named) {
    auto canon = eq.canonical(t);
    auto it = std::find(s.class_representatives.begin(), s.class_representatives.end(), canon);
    if (it == s.class_representatives.end())
      throw InvariantViolation(label + " is not an admissible assignment at g=" +
                               std::to_string(g));
    std::size_t idx = static_cast<std::size_t>(it - s.class_representatives.begin());
    if (used[idx])
      throw InvariantViolation(label + " lies in an already named class at g=" +
                               std::to_string(g));
    used[idx] = 1;
    out.push_back(make_action(g, kind, G, t, label));
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i])
      out.push_back(make_action(g, kind, G, s.class_representatives[i],
                                "extra-" + std::to_string(i + 1)));
  for (const auto& e : out)
    verify_extended_action(e);
  return out;
}

std::vector<Word> index2_words(NecKind kind) {
  Word c0(sym_c(1, 0)), c1(sym_c(1, 1)), c2(sym_c(1, 2)), c3(sym_c(1, 3)), c4(sym_c(1, 4));
  if (kind == NecKind::a)
    return {c0 * c1, c1 * c2, c2 * c3, c3 * c4};
  Word a(sym_x(1));
  return {a, c0 * a * c0, c0 * c1, c1 * a * c0 * a};
}

std::vector<Element> restriction_images(const ExtendedAction& e) {
  std::vector<Element> out;
  for (const auto& w : index2_words(e.kind))
    out.push_back(e.evaluate(w));
  return out;
}

GeneratingVector restrict_to_index2(const ExtendedAction& e) {
  const FiniteGroup& G = *e.group;
  std::vector<Element> plus;
  for (Element h : G.elements())
    if (G.orientation(h) == 1)
      plus.push_back(h);
  Subgroup H = subgroup_generated(G, plus);
  if (H.elements != plus)
    throw InvariantViolation("orientation-preserving elements do not form a subgroup");
  const auto imgs = restriction_images(e);
  if (G.generated_order(imgs) != H.order())
    throw InvariantViolation("restriction of " + e.label + " is not onto the index-2 subgroup");
  H.generators = imgs;
  GroupPtr Hg = subgroup_as_group(G, H);
  GeneratingVector v;
  v.group = Hg;
  v.periods = {2, 2, 2, 2 * e.genus};
  for (Element x : imgs) {
    auto it = std::lower_bound(H.elements.begin(), H.elements.end(), x);
    if (it == H.elements.end() || *it != x)
      throw InvariantViolation("restriction leaves the orientation-preserving subgroup");
    v.elements.push_back(Element{static_cast<std::uint32_t>(it - H.elements.begin())});
  }
  if (!is_smooth(v))
    throw InvariantViolation("restriction of " + e.label + " is not smooth");
  return v;
}

bool lands_in_standard_class(const ExtendedAction& e, const SearchOptions& options) {
  const GeneratingVector v = restrict_to_index2(e);
  const Recognition rec = recognize(v.group);
  if (rec.kind != StructureKind::dihedral || rec.order != static_cast<std::size_t>(4 * e.genus))
    return false;
  std::vector<Element> back(rec.isomorphism.size());
  for (std::size_t i = 0; i < rec.isomorphism.size(); ++i)
    back[rec.isomorphism[i].id] = Element{static_cast<std::uint32_t>(i)};
  GeneratingVector moved{rec.model, v.periods, {}};
  for (Element x : v.elements)
    moved.elements.push_back(back[x.id]);
  AutomorphismOptions aopt;
  aopt.workers = options.workers;
  const auto auts = automorphism_search(rec.model, aopt);
  GeneratingVector canonical{rec.model, v.periods, standard_vector(e.genus).elements};
  return class_representative(moved, auts).elements ==
         class_representative(canonical, auts).elements;
}

TriangleExtension extend_to_triangle(const ExtendedAction& e) {
  TriangleExtension out;
  const GroupPtr& G = e.group;
  std::vector<Element> sources, targets;
  if (e.kind == NecKind::a) {
    for (int j = 0; j < 4; ++j)
      sources.push_back(e.image(sym_c(1, j)));
    targets.assign(sources.rbegin(), sources.rend());
  } else {
    Element a = e.image(sym_x(1));
    sources = {a, e.image(sym_c(1, 0)), e.image(sym_c(1, 1))};
    targets = {a, G->product({a, sources[2], a}), e.image(sym_c(1, 2))};
  }
  auto alpha = make_automorphism(G, sources, targets);
  if (!alpha || !alpha->is_involution() || !alpha->preserves_orientation())
    return out;
  GroupPtr H = semidirect_by_automorphism(*alpha, 2, "t");
  std::vector<int> signs;
  for (Element s : G->generators())
    signs.push_back(G->orientation(s));
  signs.push_back(-1);
  H = H->with_orientation(signs);
  Element delta = H->generators().back();
  // elements of G keep their indices inside H
  std::vector<Element> d;
  if (e.kind == NecKind::a)
    d = {sources[0], sources[1], delta};
  else
    d = {delta, H->mul(delta, sources[0]), sources[2]};
  const int g = e.genus;
  bool ok = true;
  for (Element x : d)
    ok = ok && H->element_order(x) == 2 && H->orientation(x) == -1;
  ok = ok && H->element_order(H->mul(d[0], d[1])) == 2 &&
       H->element_order(H->mul(d[1], d[2])) == 4 &&
       H->element_order(H->mul(d[2], d[0])) == 4 * g && H->generated_order(d) == H->order();
  // the NEC generators are recovered as words in d0, d1, d2
  if (ok && e.kind == NecKind::a)
    ok = H->product({d[2], d[1], d[2]}) == sources[2] &&
         H->product({d[2], d[0], d[2]}) == sources[3];
  if (ok && e.kind == NecKind::b)
    ok = H->mul(d[0], d[1]) == sources[0] && H->product({d[1], d[2], d[1]}) == sources[1] &&
         H->product({d[0], d[2], d[0]}) == e.image(sym_c(1, 2));
  if (!ok)
    return out;
  out.exists = true;
  out.overgroup = H;
  out.images = d;
  return out;
}

} // namespace fourg
