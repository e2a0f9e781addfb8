#include "fourg/checks.hpp"

#include <algorithm>
#include <thread>

#include "fourg/boundary.hpp"
#include "fourg/catalog.hpp"
#include "fourg/errors.hpp"
#include "fourg/realforms.hpp"

namespace fourg {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { r_.name = std::move(name); r_.passed = true; }
  void expect(bool ok, const std::string& what) {
    ++r_.cases;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.detail = what;
    }
  }
  // runs fn, turning exceptions into a failure
  template <class Fn>
  CheckResult run(Fn&& fn) {
    try {
      fn(*this);
    } catch (const std::exception& e) {
      r_.passed = false;
      if (r_.detail.empty())
        r_.detail = e.what();
    }
    return r_;
  }

 private:
  CheckResult r_;
};

std::vector<GroupPtr> groups_in_play(int g, const ReportOptions& options) {
  std::vector<GroupPtr> out{standard_group(g), kind_a_group(g), kind_b_group(g)};
  if (4 * static_cast<std::size_t>(g) <= options.search.max_order) {
    GroupCatalog cat = groups_of_order(4 * g);
    merge_into(cat, options.extra_groups);
    out.insert(out.end(), cat.groups.begin(), cat.groups.end());
  }
  return out;
}

} // namespace

std::vector<CheckResult> run_checks(int g, const ReportOptions& options) {
  const SearchOptions& opt = options.search;
  std::vector<CheckResult> out;
  const bool groups = 16 * static_cast<std::size_t>(g) <= opt.max_order;

  out.push_back(Suite("group-axioms").run([&](Suite& s) {
    for (const auto& G : groups_in_play(g, options)) {
      auto rep = verify_group_axioms(*G);
      s.expect(rep.ok, G->tag().description + ": " + rep.failure);
    }
  }));

  out.push_back(Suite("kernel-genus").run([&](Suite& s) {
    const long long n = 4LL * g;
    for (const auto& t : enumerate_4g_signatures(g))
      s.expect(kernel_genus(n, t.signature) == g, render(t.signature));
    for (NecKind k : {NecKind::a, NecKind::b})
      s.expect(kernel_genus(2 * n, nec_signature(g, k)) == g, render(nec_signature(g, k)));
    auto tri = make_signature(0, Sign::plus, {}, {{2, 4, 4 * g}});
    s.expect(kernel_genus(4 * n, tri) == g, render(tri));
  }));

  if (!groups) {
    out.push_back({"group-searches", true, 0, "skipped: above max-order"});
    return out;
  }

  out.push_back(Suite("braid-invariance").run([&](Suite& s) {
    const GroupPtr G = standard_group(g);
    AutomorphismOptions aopt;
    aopt.workers = opt.workers;
    const auto auts = automorphism_search(G, aopt);
    const auto classes = classify(G, {2, 2, 2, 2 * g}, opt);
    for (const auto& c : classes) {
      const std::size_t step = std::max<std::size_t>(1, c.members.size() / 64);
      for (std::size_t m = 0; m < c.members.size(); m += step)
        for (std::size_t i = 1; i < 4; ++i) {
          GeneratingVector moved = braid_move(c.members[m], i);
          s.expect(is_smooth(moved), "braid move leaves the smooth vectors");
          s.expect(class_representative(moved, auts) == c.representative,
                   "braid move changes the class of " + render(c.members[m]));
        }
    }
  }));

  std::vector<ExtendedAction> actions;
  for (NecKind k : {NecKind::a, NecKind::b})
    for (auto& e : build_extensions(g, k, opt))
      actions.push_back(std::move(e));

  out.push_back(Suite("centralizer-containment").run([&](Suite& s) {
    for (const auto& e : actions)
      for (const auto& rc : reflection_centralizers(e))
        s.expect(rc.image_subgroup.subset_of(rc.centralizer) && rc.index >= 1 &&
                     rc.index * rc.image_subgroup.order() == rc.centralizer.order(),
                 e.label + " " + render(rc.reflection));
  }));

  out.push_back(Suite("oval-class-function").run([&](Suite& s) {
    for (const auto& e : actions) {
      const FiniteGroup& G = *e.group;
      for (auto cls : symmetry_classes(e)) {
        const int k = count_ovals(e, cls);
        for (Element h : G.generators()) {
          SymmetryClass moved = cls;
          moved.representative = G.conj(cls.representative, h);
          s.expect(count_ovals(e, moved) == k, e.label + ": ovals change under conjugation");
        }
      }
    }
  }));

  out.push_back(Suite("harnack").run([&](Suite& s) {
    for (const auto& e : actions)
      for (const auto& sp : species_set(e))
        s.expect(satisfies_harnack(sp, g), e.label + " species " + render(sp));
  }));

  out.push_back(Suite("sign-cross-check").run([&](Suite& s) {
    for (const auto& e : actions)
      s.expect(species_set(e) == hyperelliptic_species(e), e.label);
  }));

  out.push_back(Suite("guard-identities").run([&](Suite& s) {
    for (const auto& gi : centralizer_guards(g, opt))
      s.expect(gi.holds, gi.label + ": " + gi.description);
  }));

  out.push_back(Suite("total-genus").run([&](Suite& s) {
    const auto b = boundary_description(g, opt);
    for (const auto& a : b.arcs)
      for (const auto& G : a.graphs)
        s.expect(G.total_genus() == g, a.label + " " + G.to_json().dump());
    s.expect(b.jordan_curve, "arcs do not form a closed curve");
  }));

  out.push_back(Suite("reproducibility").run([&](Suite& s) {
    ReportOptions one = options, many = options;
    one.search.workers = 1;
    many.search.workers = std::max(2u, opt.workers);
    s.expect(cmd_report(g, one).dump() == cmd_report(g, many).dump(), "report differs between 1 and " +
                                                                         std::to_string(many.search.workers) +
                                                                         " workers");
  }));
  return out;
}

Json checks_json(const std::vector<CheckResult>& results) {
  Json out = Json::array();
  for (const auto& r : results)
    out.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
  return out;
}

} // namespace fourg
