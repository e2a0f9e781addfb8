#include <doctest.h>

#include <algorithm>

#include "fourg/errors.hpp"
#include "fourg/realforms.hpp"

using namespace fourg;

namespace {

ExtendedAction extension(int g, NecKind kind, const std::string& label) {
  for (auto& e : build_extensions(g, kind))
    if (e.label == label)
      return e;
  throw std::logic_error("missing " + label);
}

SymmetryClass class_of(const ExtendedAction& e, Element a) {
  for (const auto& c : symmetry_classes(e))
    if (std::binary_search(c.members.begin(), c.members.end(), a))
      return c;
  throw std::logic_error("not a symmetry");
}

std::vector<int> values(const std::vector<Species>& s) {
  std::vector<int> out;
  for (const auto& x : s)
    out.push_back(x.value());
  return out;
}

}

TEST_CASE("symmetry classes") {
  auto t1 = extension(5, NecKind::a, "theta1*");
  const FiniteGroup& G = *t1.group;
  Element w = G.generators()[0], x = G.generators()[1], y = G.generators()[2];
  auto classes = symmetry_classes(t1);
  CHECK(classes.size() == 4);
  std::vector<Element> reps{x, y, G.mul(y, G.pow(G.mul(w, x), 5)), w};
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      CHECK(class_of(t1, reps[i]).representative != class_of(t1, reps[j]).representative);
  for (const auto& c : classes) {
    CHECK(G.element_order(c.representative) == 2);
    CHECK(G.orientation(c.representative) == -1);
  }

  auto b4 = extension(4, NecKind::b, "theta*");
  auto c4 = symmetry_classes(b4);
  REQUIRE(c4.size() == 1);
  CHECK(std::binary_search(c4[0].members.begin(), c4[0].members.end(), b4.group->generators()[1]));

  auto b5 = extension(5, NecKind::b, "theta*");
  const FiniteGroup& B = *b5.group;
  Element bx = B.generators()[0], z = B.generators()[1], bw = B.generators()[2];
  auto c5 = symmetry_classes(b5);
  CHECK(c5.size() == 4);
  std::vector<Element> breps{z, bw, B.pow(B.mul(bx, z), 5), B.pow(B.mul(bx, bw), 5)};
  std::vector<Element> seen;
  for (Element r : breps)
    seen.push_back(class_of(b5, r).representative);
  std::sort(seen.begin(), seen.end());
  CHECK(std::unique(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("oval counts") {
  for (int g : {4, 5}) {
    auto t1 = extension(g, NecKind::a, "theta1*");
    const FiniteGroup& G = *t1.group;
    Element w = G.generators()[0], x = G.generators()[1], y = G.generators()[2];
    CHECK(count_ovals(t1, class_of(t1, w)) == (g % 2 ? 2 : 3));
    CHECK(count_ovals(t1, class_of(t1, G.mul(y, G.pow(G.mul(w, x), g)))) == 0);
  }
  auto t2 = extension(5, NecKind::a, "theta2*");
  CHECK(count_ovals(t2, class_of(t2, t2.group->generators()[2])) == 5);
  for (int g : {3, 5, 7})
    CHECK(oval_multiset(extension(g, NecKind::a, "theta1*")) == std::vector<int>{2, 2, 2, 0});
  for (int g : {2, 4, 6})
    CHECK(oval_multiset(extension(g, NecKind::a, "theta1*")) == std::vector<int>{3, 1, 1, 0});
  for (int g = 2; g <= 8; ++g)
    CHECK(oval_multiset(extension(g, NecKind::a, "theta2*")) == std::vector<int>{g, g, 1, 1});
}

TEST_CASE("ovals are class functions") {
  for (int g = 2; g <= 6; ++g)
    for (auto kind : {NecKind::a, NecKind::b})
      for (const auto& e : build_extensions(g, kind))
        for (auto c : symmetry_classes(e)) {
          const int k = count_ovals(e, c);
          CHECK(k >= 0);
          for (Element m : c.members) {
            c.representative = m;
            CHECK(count_ovals(e, c) == k);
          }
        }
}

TEST_CASE("centralizer images") {
  for (int g = 2; g <= 8; ++g)
    for (auto kind : {NecKind::a, NecKind::b})
      for (const auto& e : build_extensions(g, kind))
        for (const auto& rc : reflection_centralizers(e)) {
          CHECK(rc.image_subgroup.subset_of(rc.centralizer));
          CHECK(rc.index >= 1);
          CHECK(rc.index * rc.image_subgroup.order() == rc.centralizer.order());
        }
  for (int g = 2; g <= 12; ++g)
    for (const auto& id : centralizer_guards(g))
      CHECK_MESSAGE(id.holds, "g=", g, " ", id.label, ": ", id.description);
}

TEST_CASE("species") {
  CHECK(values(species_set(extension(5, NecKind::a, "theta1*"))) == std::vector<int>{2, 0, -2, -2});
  CHECK(values(species_set(extension(4, NecKind::a, "theta1*"))) == std::vector<int>{1, 0, -1, -3});
  CHECK(values(species_set(extension(4, NecKind::a, "theta2*"))) == std::vector<int>{-1, -1, -4, -4});
  CHECK(values(species_set(extension(5, NecKind::a, "theta2*"))) == std::vector<int>{-1, -1, -5, -5});
  CHECK(values(species_set(extension(4, NecKind::b, "theta*"))) == std::vector<int>{-2});
  CHECK(values(species_set(extension(5, NecKind::b, "theta*"))) == std::vector<int>{0, 0, -2, -2});
  // an M-curve class (g+1 ovals) is always separating
  CHECK(values(species_set(extension(2, NecKind::a, "theta1*")))[0] == 3);
}

TEST_CASE("harnack and the hyperelliptic cross-check") {
  CHECK(satisfies_harnack({3, true}, 2));
  CHECK_FALSE(satisfies_harnack({2, true}, 2));
  CHECK_FALSE(satisfies_harnack({4, false}, 2));
  CHECK(satisfies_harnack({0, false}, 2));
  for (int g = 2; g <= 10; ++g)
    for (auto kind : {NecKind::a, NecKind::b})
      for (const auto& e : build_extensions(g, kind)) {
        auto s = species_set(e);
        for (const auto& x : s)
          CHECK(satisfies_harnack(x, g));
        auto h = hyperelliptic_involution(e);
        REQUIRE(h.has_value());
        CHECK(e.group->element_order(*h) == 2);
        CHECK(values(hyperelliptic_species(e)) == values(s));
      }
}
