#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fourg/catalog.hpp"
#include "fourg/errors.hpp"
#include "fourg/extensions.hpp"
#include "fourg/group.hpp"
#include "fourg/group_io.hpp"
#include "fourg/recognize.hpp"

using namespace fourg;

namespace {

Element el(const GroupPtr& G, std::string_view name) {
  auto e = G->find(name);
  REQUIRE_MESSAGE(e.has_value(), "no element named ", std::string(name));
  return *e;
}

// brute-force automorphism count: bijections fixed by generator images
std::size_t brute_aut_count(const GroupPtr& G) {
  std::size_t count = 0;
  const auto& gens = G->generators();
  std::vector<Element> img(gens.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == gens.size()) {
      if (extend_to_homomorphism(*G, gens, *G, img)) {
        auto f = extend_to_homomorphism(*G, gens, *G, img);
        std::vector<Element> sorted = *f;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        count += sorted.size() == G->order();
      }
      return;
    }
    for (Element e : G->elements()) {
      img[i] = e;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return count;
}

}

TEST_CASE("dihedral relations") {
  auto G = dihedral(8);
  CHECK(G->order() == 8);
  Element D = el(G, "D"), A = el(G, "A");
  CHECK(G->element_order(A) == 2);
  CHECK(G->element_order(D) == 4);
  CHECK(G->element_order(G->mul(D, A)) == 2);
  CHECK(G->element_order(G->identity()) == 1);
  CHECK(verify_group_axioms(*G).ok);
}

TEST_CASE("group axioms on constructed groups") {
  for (auto desc : {"cyclic(12)", "dihedral(20)", "metacyclic(5,4,2,0)", "case3(5)", "extension_b(3)",
                    "symmetric(4)", "sl2(3)", "gl2(3)", "binary_octahedral()",
                    "direct_product(dihedral(12),cyclic(2))"}) {
    auto G = construct(desc);
    auto r = verify_group_axioms(*G);
    CHECK_MESSAGE(r.ok, desc, " ", r.failure);
  }
  CHECK(construct("gl2(3)")->order() == 48);
  CHECK(construct("binary_octahedral()")->order() == 48);
  CHECK_THROWS_AS(construct("metacyclic(5,4,3,1)"), InputError);
  CHECK_THROWS_AS(construct("nosuch(3)"), ParseError);
}

TEST_CASE("semidirect parameters are validated") {
  CHECK_THROWS_AS(semidirect_cyclic(5, 2, 2), std::invalid_argument);  // 2^2 != 1 mod 5
  CHECK(semidirect_cyclic(5, 4, 2)->order() == 20);
}

TEST_CASE("extension group b") {
  for (int g = 2; g <= 12; ++g) {
    auto G = extension_group_b(g);
    CHECK(G->order() == 8 * static_cast<std::size_t>(g));
    auto rec = recognize(G);
    if (g % 2 == 0) {
      CHECK(rec.kind == StructureKind::dihedral);
      CHECK(rec.describe() == "dihedral of order " + std::to_string(8 * g));
    } else {
      CHECK(rec.kind == StructureKind::dihedral_times_c2);
    }
    Element x = G->generators()[0], z = G->generators()[1];
    // (zx)^2 = (zw)^{g-1}, of order 2g for even g and g for odd g
    CHECK(G->element_order(G->mul(z, x)) == (g % 2 ? 2 * g : 4 * g));
    if (g % 2) {
      Element t = G->pow(G->mul(x, z), g);
      CHECK(G->element_order(t) == 2);
      for (Element a : G->elements())
        CHECK(G->commute(a, t));
    }
  }
}

TEST_CASE("centralizers") {
  auto K = kind_a_group(5);
  Element w = K->generators()[0], x = K->generators()[1], y = K->generators()[2];
  CHECK(centralizer(*K, y).order() == K->order());
  auto Cw = centralizer(*K, w);
  CHECK(Cw.order() == 8);
  CHECK(Cw == subgroup_generated(*K, {w, K->pow(K->mul(w, x), 5), y}));
  auto B = extension_group_b(4);
  Element bx = B->generators()[0], bz = B->generators()[1];
  auto Cz = centralizer(*B, bz);
  CHECK(Cz.order() == 4);
  CHECK(Cz == subgroup_generated(*B, {bz, B->pow(B->mul(bx, bz), 8)}));
  for (auto G : {K, B, construct("sl2(3)")})
    for (Element e : G->elements()) {
      auto C = centralizer(*G, e);
      CHECK(C.contains(e));
      CHECK(center(*G).subset_of(C));
    }
}

TEST_CASE("conjugacy classes") {
  auto D = dihedral(8);
  auto inv = conjugacy_classes(*D, [&](Element a) { return D->element_order(a) == 2; });
  CHECK(inv.size() == 3);
  for (auto G : {dihedral(24), construct("symmetric(4)"), kind_a_group(3)}) {
    std::size_t total = 0;
    for (const auto& c : conjugacy_classes(*G, [](Element) { return true; })) {
      CHECK(G->order() % c.members.size() == 0);
      CHECK(c.representative == *std::min_element(c.members.begin(), c.members.end()));
      total += c.members.size();
    }
    CHECK(total == G->order());
  }
  auto B = kind_b_group(4);
  auto rev = conjugacy_classes(*B, [&](Element a) { return B->element_order(a) == 2 && B->orientation(a) == -1; });
  REQUIRE(rev.size() == 1);
  CHECK(std::count(rev[0].members.begin(), rev[0].members.end(), B->generators()[1]) == 1);
}

TEST_CASE("subgroups and indices") {
  auto G = dihedral(20);
  Element D = el(G, "D");
  auto H = subgroup_generated(*G, {D});
  CHECK(H.order() == 10);
  CHECK(H.index == 2);
  CHECK(subgroup_generated(*G, std::span<const Element>{}).order() == 1);
  CHECK(subgroup_generated(*G, {D, el(G, "A")}).order() == 20);
}

TEST_CASE("automorphisms") {
  CHECK(automorphism_search(cyclic(12)).size() == 4);
  CHECK(automorphism_search(dihedral(8)).size() == brute_aut_count(dihedral(8)));
  CHECK(automorphism_search(dihedral(8)).size() == 8);
  for (int n : {6, 10, 12, 20})
    CHECK(automorphism_search(dihedral(n)).size() == brute_aut_count(dihedral(n)));
  auto G = case3_group(5);
  Element A = G->generators()[0], C = G->generators()[1];
  AutomorphismOptions opt;
  opt.constraint = {{0, G->mul(G->inv(A), G->inv(C))}, {1, G->inv(C)}};
  CHECK(automorphism_search(G, opt).size() == 1);
  for (const auto& a : automorphism_search(dihedral(12)))
    for (Element e : a.group->elements())
      CHECK(a.group->element_order(a(e)) == a.group->element_order(e));
}

TEST_CASE("recognition") {
  CHECK(recognize(direct_product(dihedral(12), cyclic(2))).kind == StructureKind::dihedral_times_c2);
  auto e3 = direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2)));
  auto r = recognize(e3);
  CHECK(r.kind == StructureKind::elementary_abelian);
  CHECK(r.describe() == "elementary abelian of rank 3");
  CHECK(recognize(cyclic(7)).describe() == "cyclic of order 7");
  CHECK(recognize(construct("sl2(3)")).kind == StructureKind::other);
  CHECK(find_isomorphism(*construct("symmetric(4)"), *construct("sl2(3)")) == std::nullopt);
}

TEST_CASE("catalog against known counts") {
  for (int n : {8, 12, 16, 20, 24, 28, 40, 44, 52, 56, 60}) {
    auto c = groups_of_order(n);
    CHECK_MESSAGE(c.complete(), n);
  }
  auto c48 = groups_of_order(48);
  CHECK(c48.known_count == 52);
  CHECK(c48.groups.size() <= 52);
}

TEST_CASE("table and permutation ingestion") {
  std::ostringstream os;
  write_group_table(os, *dihedral(6));
  std::istringstream in(os.str());
  auto T = parse_group_table(in, "d6");
  CHECK(T->order() == 6);
  CHECK(find_isomorphism(*T, *dihedral(6)).has_value());

  std::istringstream perms("# S3\nperm (1 2)\nperm (1 2 3)\n");
  auto P = parse_permutation_group(perms, "s3");
  CHECK(P->order() == 6);
  CHECK(find_isomorphism(*P, *dihedral(6)).has_value());

  std::istringstream bad("order 2\n0 1\n1 1\n");
  CHECK_THROWS_AS(parse_group_table(bad, "bad"), InputError);
  std::istringstream ragged("order 2\n0 1\n1\n");
  CHECK_THROWS_AS(parse_group_table(ragged, "ragged"), InputError);

  auto dir = std::filesystem::temp_directory_path() / "fourg_tables_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "a.txt");
    write_group_table(f, *cyclic(4));
    std::ofstream p(dir / "b.txt");
    p << "perm (1 2)(3 4)\nperm (1 3)(2 4)\n";
  }
  auto groups = load_group_directory(dir);
  REQUIRE(groups.size() == 2);
  CHECK(groups[0]->order() == 4);
  CHECK(recognize(groups[1]).kind == StructureKind::elementary_abelian);
  std::filesystem::remove_all(dir);
}
