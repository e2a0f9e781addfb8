#include "fourg/realforms.hpp"

#include <algorithm>
#include <stdexcept>

#include "fourg/errors.hpp"

namespace fourg {

namespace {

std::vector<ReflectionCentralizer> compute_reflection_data(const ExtendedAction& e) {
  const FiniteGroup& G = *e.group;
  std::vector<ReflectionCentralizer> out;
  for (std::size_t i = 0; i < e.signature.period_cycles.size(); ++i) {
    const auto& cyc = e.signature.period_cycles[i];
    const int ci = static_cast<int>(i + 1);
    const int s = static_cast<int>(cyc.size());
    if (s == 0)
      throw std::domain_error("count_ovals: empty period cycles are not supported");
    for (int j = 0; j < s; ++j) {
      auto half = [&](int n) {
        if (n % 2)
          throw std::domain_error("count_ovals: odd link period " + std::to_string(n));
        return n / 2;
      };
      std::vector<Word> words{Word(sym_c(ci, j))};
      if (j >= 1) {
        words.push_back((Word(sym_c(ci, j - 1)) * Word(sym_c(ci, j))).power(half(cyc[j - 1])));
      } else {
        // the neighbour across c_{i,s} = e^-1 c_{i,0} e, brought back by e
        Word corner = (Word(sym_c(ci, s - 1)) * Word(sym_c(ci, s))).power(half(cyc[s - 1]));
        words.push_back(Word(sym_e(ci)) * corner * Word(sym_e(ci), -1));
      }
      words.push_back((Word(sym_c(ci, j)) * Word(sym_c(ci, j + 1))).power(half(cyc[j])));

      ReflectionCentralizer rc;
      rc.reflection = sym_c(ci, j);
      rc.image = e.image(rc.reflection);
      std::vector<Element> gens;
      for (const auto& w : words)
        gens.push_back(e.evaluate(w));
      rc.image_subgroup = subgroup_generated(G, gens);
      rc.centralizer = centralizer(G, rc.image);
      if (!rc.image_subgroup.subset_of(rc.centralizer))
        throw InvariantViolation("centralizer image of " + render(rc.reflection) +
                                 " is not inside the centralizer");
      rc.index = rc.centralizer.order() / rc.image_subgroup.order();
      out.push_back(std::move(rc));
    }
  }
  return out;
}

std::vector<GuardIdentity> guard_identities(const ExtendedAction& e,
                                            const std::vector<ReflectionCentralizer>& data) {
  const FiniteGroup& G = *e.group;
  const int g = e.genus;
  const auto& gens = G.generators();
  std::vector<GuardIdentity> out;
  auto sub = [&](std::initializer_list<Element> els) { return subgroup_generated(G, els); };
  auto image_of = [&](int j) -> const Subgroup& {
    for (const auto& rc : data)
      if (rc.reflection == sym_c(1, j))
        return rc.image_subgroup;
    throw std::logic_error("missing reflection data");
  };
  auto add = [&](std::string d, bool holds) { out.push_back({e.label, std::move(d), holds}); };
  const Subgroup whole = sub({gens.begin()[0], gens.begin()[1], gens.begin()[2]});

  if (e.kind == NecKind::a && (e.label == "theta1*" || e.label == "theta2*")) {
    Element w = gens[0], x = gens[1], y = gens[2];
    Element h = G.pow(G.mul(w, x), g);
    const Subgroup xhy = sub({x, h, y}), whY = sub({w, h, y});
    const std::string L = e.label;
    add("C(G*,x) = <x,(wx)^g> x <y>", centralizer(G, x) == xhy);
    add("C(G*,y) = G*", centralizer(G, y) == whole);
    add("C(G*,w) = <w,(wx)^g> x <y>", centralizer(G, w) == whY);
    add(L + "(C(Gamma*,c0)) = <x,(wx)^g> x <y>", image_of(0) == xhy);
    if (L == "theta1*") {
      add("C(G*,(wx)^g w) = <w,(wx)^g> x <y>", centralizer(G, G.mul(h, w)) == whY);
      add(L + "(C(Gamma*,c1)) = <x,(wx)^g w> x <y>", image_of(1) == sub({x, G.mul(h, w), y}));
      add(L + "(C(Gamma*,c2)) = <w,(wx)^g> x <y>", image_of(2) == whY);
      add(L + "(C(Gamma*,c3)) = <w,(wx)^g>", image_of(3) == sub({w, h}));
    } else {
      add("C(G*,y(wx)^g) = G*", centralizer(G, G.mul(y, h)) == whole);
      add(L + "(C(Gamma*,c1)) = <x,(wx)^g> x <y>", image_of(1) == xhy);
      add(L + "(C(Gamma*,c2)) = <w,(wx)^g> x <y>", image_of(2) == whY);
      add(L + "(C(Gamma*,c3)) = <w,(wx)^g> x <y>", image_of(3) == whY);
    }
  } else if (e.kind == NecKind::b && e.label == "theta*") {
    Element x = gens[0], z = gens[1], w = gens[2];
    if (g % 2) {
      add("C(G*,z) = <z,(zw)^g,(xz)^g>",
          centralizer(G, z) == sub({z, G.pow(G.mul(z, w), g), G.pow(G.mul(x, z), g)}));
      add("C(G*,w) = <w,(zw)^g,(xw)^g>",
          centralizer(G, w) == sub({w, G.pow(G.mul(z, w), g), G.pow(G.mul(x, w), g)}));
      add("[C(G*,z) : theta*(C(Gamma*,c1))] = 2",
          centralizer(G, z).order() == 2 * image_of(1).order());
    } else {
      Element t = G.pow(G.mul(x, z), 2 * g);
      add("C(G*,z) = <z,(xz)^{2g}>", centralizer(G, z) == sub({z, t}));
      add("C(G*,w) = <w,(xz)^{2g}>", centralizer(G, w) == sub({w, t}));
    }
  }
  return out;
}

struct SignRule {
  const char* label;
  int parity;  // g mod 2
  bool has_separating;
  GeneratorSymbol separating;  // class of its image is the separating one
};

const SignRule kSignRules[] = {
    {"theta1*", 0, true, {GeneratorSymbol::Kind::c, 1, 1}},
    {"theta1*", 1, true, {GeneratorSymbol::Kind::c, 1, 1}},
    {"theta2*", 0, false, {}},
    {"theta2*", 1, false, {}},
    {"theta*", 0, false, {}},
    {"theta*", 1, false, {}},
};

} // namespace

std::vector<SymmetryClass> symmetry_classes(const ExtendedAction& e) {
  const FiniteGroup& G = *e.group;
  std::vector<SymmetryClass> out;
  for (auto& cls : conjugacy_classes(G, [&](Element a) {
         return G.element_order(a) == 2 && G.orientation(a) == -1;
       }))
    out.push_back({cls.representative, std::move(cls.members), -1});
  return out;
}

std::vector<ReflectionCentralizer> reflection_centralizers(const ExtendedAction& e) {
  auto data = compute_reflection_data(e);
  for (const auto& guard : guard_identities(e, data))
    if (!guard.holds)
      throw InvariantViolation("centralizer identity fails at g=" + std::to_string(e.genus) +
                               " for " + guard.label + ": " + guard.description);
  return data;
}

int count_ovals(const ExtendedAction& e, const SymmetryClass& cls) {
  const FiniteGroup& G = *e.group;
  if (G.element_order(cls.representative) != 2 || G.orientation(cls.representative) != -1)
    throw std::invalid_argument("count_ovals: not an orientation-reversing involution class");
  auto members = cls.members;
  std::sort(members.begin(), members.end());
  int total = 0;
  for (const auto& rc : reflection_centralizers(e))
    if (std::binary_search(members.begin(), members.end(), rc.image))
      total += static_cast<int>(rc.index);
  return total;
}

std::string render(const Species& s) {
  int v = s.value();
  return v > 0 ? "+" + std::to_string(v) : std::to_string(v);
}

bool satisfies_harnack(const Species& s, int g) {
  const int v = s.value();
  if (v < -g || v > g + 1 || s.ovals < 0 || s.ovals > g + 1)
    return false;
  if (s.separating)
    return s.ovals >= 1 && (s.ovals - (g + 1)) % 2 == 0;
  return true;
}

namespace {

std::vector<SymmetryClass> classes_with_ovals(const ExtendedAction& e) {
  auto classes = symmetry_classes(e);
  for (auto& c : classes)
    c.ovals = count_ovals(e, c);
  return classes;
}

void sort_species(std::vector<Species>& v) {
  std::stable_sort(v.begin(), v.end(),
                   [](const Species& a, const Species& b) { return a.value() > b.value(); });
}

} // namespace

std::vector<Species> species_set(const ExtendedAction& e) {
  const int g = e.genus;
  const SignRule* rule = nullptr;
  for (const auto& r : kSignRules)
    if (e.label == r.label && r.parity == g % 2)
      rule = &r;
  if (!rule)
    throw std::invalid_argument("species_set: no sign rule for extension " + e.label);
  std::vector<Species> out;
  for (const auto& c : classes_with_ovals(e)) {
    Species s{c.ovals, false};
    if (c.ovals == 0 || (c.ovals - (g + 1)) % 2 != 0) {
      s.separating = false;
    } else if (c.ovals == g + 1) {
      s.separating = true;  // g+1 ovals always separate
    } else if (rule->has_separating) {
      Element img = e.image(rule->separating);
      s.separating = std::binary_search(c.members.begin(), c.members.end(), img);
    }
    out.push_back(s);
  }
  sort_species(out);
  return out;
}

std::vector<int> oval_multiset(const ExtendedAction& e) {
  std::vector<int> out;
  for (const auto& c : classes_with_ovals(e))
    out.push_back(c.ovals);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::optional<Element> hyperelliptic_involution(const ExtendedAction& e) {
  const FiniteGroup& G = *e.group;
  std::vector<Element> plus;
  for (Element a : G.elements())
    if (G.orientation(a) == 1)
      plus.push_back(a);
  std::optional<Element> found;
  for (Element a : plus) {
    if (G.element_order(a) != 2)
      continue;
    bool central = std::all_of(plus.begin(), plus.end(), [&](Element b) { return G.commute(a, b); });
    if (!central)
      continue;
    if (found)
      return std::nullopt;  // not unique
    found = a;
  }
  return found;
}

std::vector<Species> hyperelliptic_species(const ExtendedAction& e) {
  const FiniteGroup& G = *e.group;
  const int g = e.genus;
  auto h = hyperelliptic_involution(e);
  if (!h)
    throw InvariantViolation("no unique central involution in the conformal subgroup");
  const auto classes = classes_with_ovals(e);
  std::vector<Species> out;
  for (const auto& c : classes) {
    Element partner = G.mul(c.representative, *h);
    int k2 = -1;
    for (const auto& d : classes)
      if (std::binary_search(d.members.begin(), d.members.end(), partner))
        k2 = d.ovals;
    if (k2 < 0)
      throw InvariantViolation("sigma*h is not an orientation-reversing involution");
    bool sep = (c.ovals > 0 && k2 == 0) || c.ovals == g + 1;
    out.push_back({c.ovals, sep});
  }
  sort_species(out);
  return out;
}

std::vector<GuardIdentity> centralizer_guards(int g, const SearchOptions& options) {
  std::vector<GuardIdentity> out;
  for (NecKind k : {NecKind::a, NecKind::b})
    for (const auto& e : build_extensions(g, k, options)) {
      auto ids = guard_identities(e, compute_reflection_data(e));
      out.insert(out.end(), ids.begin(), ids.end());
    }
  return out;
}

} // namespace fourg
