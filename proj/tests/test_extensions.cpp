#include <doctest.h>

#include "fourg/errors.hpp"
#include "fourg/extensions.hpp"
#include "fourg/recognize.hpp"
#include "oracle.hpp"

using namespace fourg;

namespace {

const ExtendedAction& by_label(const std::vector<ExtendedAction>& es, const std::string& label) {
  for (const auto& e : es)
    if (e.label == label)
      return e;
  FAIL("no extension labelled ", label);
  throw std::logic_error("unreachable");
}

}

TEST_CASE("nec signatures") {
  CHECK(render(nec_signature(5, NecKind::a)) == "(0;+;[-];{(2,2,2,10)})");
  CHECK(render(nec_signature(5, NecKind::b)) == "(0;+;[2];{(2,10)})");
  for (int g = 2; g <= 8; ++g) {
    auto index2 = fuchsian_signature(0, {2, 2, 2, 2 * g});
    CHECK(rh_index(index2, nec_signature(g, NecKind::a)) == make_rational(2, 1));
    CHECK(rh_index(index2, nec_signature(g, NecKind::b)) == make_rational(2, 1));
  }
}

TEST_CASE("admissible assignments match a brute-force count") {
  for (int g = 2; g <= 6; ++g) {
    auto s = search_extensions(g, NecKind::a);
    CHECK(s.admissible_assignments == static_cast<std::size_t>(oracle::kind_a_assignments(g)));
    std::size_t total = 0;
    for (auto n : s.class_sizes)
      total += n;
    CHECK(total == s.admissible_assignments);
  }
}

TEST_CASE("class counts") {
  for (int g = 2; g <= 10; ++g) {
    auto a = build_extensions(g, NecKind::a);
    auto b = build_extensions(g, NecKind::b);
    CHECK(a.size() == 2);
    CHECK(b.size() == 1);
    CHECK(a[0].label == "theta1*");
    CHECK(a[1].label == "theta2*");
    CHECK(b[0].label == "theta*");
    for (const auto* list : {&a, &b})
      for (const auto& e : *list) {
        CHECK(e.group->order() == 8 * static_cast<std::size_t>(g));
        CHECK_NOTHROW(verify_extended_action(e));
        for (const auto& c : e.canonical_reflections())
          CHECK(e.group->orientation(e.image(c)) == -1);
        CHECK(lands_in_standard_class(e));
      }
    auto rb = recognize(b[0].group);
    CHECK(rb.kind == (g % 2 ? StructureKind::dihedral_times_c2 : StructureKind::dihedral));
    CHECK(recognize(a[0].group).kind == StructureKind::dihedral_times_c2);
  }
}

TEST_CASE("explicit images") {
  const int g = 5;
  auto a = build_extensions(g, NecKind::a);
  const auto& t1 = by_label(a, "theta1*");
  const FiniteGroup& G = *t1.group;
  Element w = G.generators()[0], x = G.generators()[1], y = G.generators()[2];
  Element wx = G.mul(w, x), wxg = G.pow(wx, g);
  CHECK(t1.image(sym_c(1, 0)) == x);
  CHECK(t1.image(sym_c(1, 1)) == y);
  CHECK(t1.image(sym_c(1, 2)) == G.mul(wxg, w));
  CHECK(t1.image(sym_c(1, 3)) == w);
  CHECK(restriction_images(t1) ==
        std::vector<Element>{G.mul(x, y), G.product({y, wxg, w}), wxg, wx});
  const auto& t2 = by_label(a, "theta2*");
  CHECK(t2.image(sym_c(1, 2)) == G.mul(y, wxg));

  for (int h : {2, 3, 4, 7}) {
    auto b = build_extensions(h, NecKind::b)[0];
    const FiniteGroup& B = *b.group;
    Element bx = B.generators()[0], z = B.generators()[1], bw = B.generators()[2];
    CHECK(b.image(sym_x(1)) == bx);
    CHECK(b.image(sym_c(1, 0)) == B.product({bx, bw, bx}));
    CHECK(b.image(sym_c(1, 1)) == z);
    CHECK(b.image(sym_c(1, 2)) == bw);
    Element zw = B.mul(z, bw);
    CHECK(restriction_images(b) ==
          std::vector<Element>{bx, B.mul(B.pow(zw, h + 1), bx), B.pow(zw, h), zw});
  }
}

TEST_CASE("verification rejects a broken action") {
  auto e = build_extensions(3, NecKind::a)[0];
  for (auto& [sym, el] : e.images)
    if (sym == sym_c(1, 1))
      el = e.group->identity();
  CHECK_THROWS_AS(verify_extended_action(e), InvariantViolation);
}

TEST_CASE("triangle overgroup") {
  for (int g = 2; g <= 6; ++g) {
    auto a = build_extensions(g, NecKind::a);
    auto b = build_extensions(g, NecKind::b);
    CHECK_FALSE(extend_to_triangle(by_label(a, "theta1*")).exists);
    auto t2 = extend_to_triangle(by_label(a, "theta2*"));
    auto tb = extend_to_triangle(b[0]);
    REQUIRE(t2.exists);
    REQUIRE(tb.exists);
    CHECK(t2.overgroup->order() == 16 * static_cast<std::size_t>(g));
    CHECK(tb.overgroup->order() == 16 * static_cast<std::size_t>(g));
  }
}
