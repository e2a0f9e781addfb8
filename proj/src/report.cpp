#include "fourg/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fourg/boundary.hpp"
#include "fourg/catalog.hpp"
#include "fourg/errors.hpp"
#include "fourg/parallel.hpp"
#include "fourg/realforms.hpp"
#include "fourg/recognize.hpp"

namespace fourg {

const std::set<int>& expected_sporadic_genera() {
  static const std::set<int> genera = {3,   6,   9,   10,  12,  14,  15,  18,  20,  21,  24,
                                       28,  30,  33,  36,  40,  42,  45,  60,  66,  72,  84,
                                       90,  105, 126, 132, 153, 190, 273, 276, 420, 429, 861};
  return genera;
}

bool exceptional_family_genus(int g) { return g == 3 || g == 6 || g == 15; }
bool exceptional_surface_genus(int g) { return g == 3 || g == 6 || g == 12 || g == 30; }

std::vector<std::vector<int>> expected_species_values(int g) {
  if (g % 2)
    return {{2, 0, -2, -2}, {-1, -1, -g, -g}, {0, 0, -2, -2}};
  return {{1, 0, -1, -3}, {-1, -1, -g, -g}, {-2}};
}

namespace {

struct Notes {
  Json items = Json::array();
  void add(const char* kind, std::string text) { items.push_back({{"kind", kind}, {"text", std::move(text)}}); }
};

std::string join(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

Json flags_json(int g) {
  return {{"exceptional_family", exceptional_family_genus(g)},
          {"exceptional_surfaces", exceptional_surface_genus(g)}};
}

Json signatures_json(int g, Notes& notes) {
  Json out = Json::array();
  const Signature surface = surface_signature(g);
  for (const auto& t : enumerate_4g_signatures(g)) {
    out.push_back({{"signature", render(t.signature)},
                   {"family", std::string(to_string(t.family))},
                   {"area", to_string(normalized_area(t.signature))},
                   {"index", to_string(rh_index(surface, t.signature))},
                   {"teichmuller_dimension", dim_teichmuller(t.signature)}});
    if (t.family == SignatureFamily::sporadic && !expected_sporadic_genera().count(g))
      notes.add("discrepancy", "sporadic signature " + render(t.signature) +
                                   " solves the area equation but genus " + std::to_string(g) +
                                   " is not in the expected sporadic list");
  }
  return out;
}

Json vector_json(const GeneratingVector& v) { return render(v); }

Json standard_action_json(int g, const SearchOptions& opt) {
  const GroupPtr G = standard_group(g);
  const std::vector<int> periods{2, 2, 2, 2 * g};
  const auto classes = classify(G, periods, opt);
  std::size_t vectors = 0;
  for (const auto& c : classes)
    vectors += c.members.size();
  const GeneratingVector t = standard_vector(g);
  bool contains = !classes.empty() &&
                  std::any_of(classes[0].members.begin(), classes[0].members.end(),
                              [&](const GeneratingVector& m) { return m.elements == t.elements; });
  return {{"group", recognize(G).describe()},
          {"signature", render(fuchsian_signature(0, periods))},
          {"smooth_vectors", vectors},
          {"classes", classes.size()},
          {"representative", classes.empty() ? Json() : vector_json(classes[0].representative)},
          {"contains_standard_vector", contains}};
}

Json eliminations_json(int g, const SearchOptions& opt) {
  const EliminationReport r = eliminate_cases(g, opt);
  Json f1 = {{"signature", render(r.family1.signature)},
             {"forced_vector", vector_json(r.family1.forced)},
             {"catalog_classes", r.family1.catalog_classes},
             {"extension_group_order", r.family1.extension_group ? r.family1.extension_group->order() : 0},
             {"extension_vector", r.family1.extension.group ? vector_json(r.family1.extension) : Json()},
             {"restriction_consistent", r.family1.restriction_consistent},
             {"verdict", std::string(to_string(r.family1.verdict))}};
  Json counts = Json::array();
  for (const auto& c : r.family2.catalog)
    counts.push_back({{"group", c.group}, {"smooth_vectors", c.smooth_vectors}});
  Json f2 = {{"signature", render(r.family2.signature)},
             {"divisibility", r.family2.divisibility},
             {"contradictions", r.family2.contradictions},
             {"catalog", counts},
             {"verdict", std::string(to_string(r.family2.verdict))}};
  Json branches = Json::array();
  for (const auto& b : r.family3.branches)
    branches.push_back({{"t", b.t},
                        {"group_exists", b.group_exists},
                        {"rejected", b.rejected},
                        {"reason", b.reason},
                        {"swap_automorphism", b.swap_automorphism},
                        {"extension_group_order", b.extension_group ? b.extension_group->order() : 0}});
  Json f3 = {{"signature", render(r.family3.signature)},
             {"solutions", r.family3.solutions},
             {"branches", branches},
             {"catalog_vectors", r.family3.catalog_vectors},
             {"catalog_vectors_with_swap", r.family3.catalog_vectors_with_swap},
             {"verdict", std::string(to_string(r.family3.verdict))}};
  return {{"family-1", f1}, {"family-2", f2}, {"family-3", f3}};
}

Json species_json(const std::vector<Species>& s) {
  Json out = Json::array();
  for (const auto& x : s)
    out.push_back(render(x));
  return out;
}

std::vector<int> values(const std::vector<Species>& s) {
  std::vector<int> out;
  for (const auto& x : s)
    out.push_back(x.value());
  return out;
}

Json extensions_json(int g, const SearchOptions& opt, Notes& notes) {
  Json out = Json::array();
  const auto expected = expected_species_values(g);
  const std::vector<std::string> order{"theta1*", "theta2*", "theta*"};
  for (NecKind k : {NecKind::a, NecKind::b}) {
    const ExtensionSearch search = search_extensions(g, k, opt);
    for (const auto& e : build_extensions(g, k, opt)) {
      const auto species = species_set(e);
      const auto hyper = hyperelliptic_species(e);
      bool harnack = std::all_of(species.begin(), species.end(),
                                 [&](const Species& s) { return satisfies_harnack(s, g); });
      Json j = {{"kind", std::string(to_string(k))},
                {"label", e.label},
                {"signature", render(e.signature)},
                {"group", recognize(e.group).describe()},
                {"order", e.group->order()},
                {"admissible_assignments", search.admissible_assignments},
                {"equivalences", search.equivalences},
                {"classes_of_kind", search.class_representatives.size()},
                {"restriction_in_standard_class", lands_in_standard_class(e, opt)},
                {"extends_to_triangle", extend_to_triangle(e).exists},
                {"ovals", oval_multiset(e)},
                {"species", species_json(species)},
                {"hyperelliptic_species", species_json(hyper)},
                {"harnack", harnack}};
      auto pos = std::find(order.begin(), order.end(), e.label) - order.begin();
      if (pos < 3) {
        const auto& want = expected[pos];
        j["expected_species"] = want;
        if (values(species) != want)
          notes.add("discrepancy", e.label + ": computed species " + join(values(species)) +
                                       ", expected " + join(want) +
                                       (harnack ? "" : "; computed set violates Harnack") +
                                       (std::all_of(want.begin(), want.end(),
                                                    [&](int v) { return v >= -g && v <= g + 1; })
                                            ? ""
                                            : "; expected set violates Harnack"));
      }
      if (species != hyper)
        notes.add("discrepancy", e.label + ": sign table and hyperelliptic model disagree");
      out.push_back(j);
    }
  }
  return out;
}

Json guards_json(int g, const SearchOptions& opt) {
  Json out = Json::array();
  for (const auto& gi : centralizer_guards(g, opt))
    out.push_back({{"extension", gi.label}, {"identity", gi.description}, {"holds", gi.holds}});
  return out;
}

GroupCatalog exceptional_catalog(int g, const ReportOptions& options) {
  GroupCatalog cat = groups_of_order(4 * g);
  merge_into(cat, options.extra_groups);
  return cat;
}

Json exceptional_body(int g, const ReportOptions& options, Notes& notes) {
  const GroupCatalog cat = exceptional_catalog(g, options);
  Json catalog = {{"order", cat.order},
                  {"groups", cat.groups.size()},
                  {"ingested", options.extra_groups.size()},
                  {"known_count", cat.known_count ? Json(*cat.known_count) : Json()},
                  {"complete", cat.complete()}};
  if (!cat.complete())
    notes.add("warning", "built-in constructors may not cover all groups of order " +
                             std::to_string(4 * g) + " (" + std::to_string(cat.groups.size()) + " of " +
                             (cat.known_count ? std::to_string(*cat.known_count) : std::string("unknown")) +
                             "); supply tables with --tables");
  Json cands = Json::array();
  for (const auto& c : exceptional_search(g, cat.groups, options.search))
    cands.push_back({{"signature", render(c.signature)},
                     {"family", std::string(to_string(c.family))},
                     {"group", recognize(c.group).describe()},
                     {"provenance", c.group->tag().description},
                     {"representative", vector_json(c.action.representative)},
                     {"class_size", c.action.members.size()}});
  Json full = Json::array();
  for (const auto& s : candidate_full_signatures(g, cat.groups, options.search))
    full.push_back(render(s));
  return {{"catalog", catalog}, {"candidates", cands}, {"candidate_full_signatures", full}};
}

} // namespace

Json cmd_report(int g, const ReportOptions& options) {
  if (g < 2)
    throw std::invalid_argument("report: genus must be at least 2");
  Notes notes;
  Json r;
  r["genus"] = g;
  r["flags"] = flags_json(g);
  r["signatures"] = signatures_json(g, notes);
  if (exceptional_family_genus(g))
    notes.add("expected", "an additional exceptional uniparametric family exists in this genus");
  if (exceptional_surface_genus(g))
    notes.add("expected", "one or two exceptional surfaces exist in this genus");
  if (options.summary_only) {
    r["notes"] = notes.items;
    return r;
  }
  const SearchOptions& opt = options.search;
  const std::size_t order = 16 * static_cast<std::size_t>(g);
  if (order <= opt.max_order) {
    r["standard_action"] = standard_action_json(g, opt);
    r["eliminations"] = eliminations_json(g, opt);
    r["extensions"] = extensions_json(g, opt, notes);
    r["guards"] = guards_json(g, opt);
    r["boundary"] = boundary_description(g, opt).to_json();
    if (g == 2)
      notes.add("expected", "the endpoint curve of genus 2 has 48 automorphisms, more than 8g");
  } else {
    notes.add("warning", "group searches skipped: order " + std::to_string(order) +
                             " exceeds max-order " + std::to_string(opt.max_order));
  }
  if (4 * static_cast<std::size_t>(g) <= opt.max_order)
    r["exceptional"] = exceptional_body(g, options, notes);
  r["notes"] = notes.items;
  return r;
}

Json cmd_exceptional(int g, const ReportOptions& options) {
  if (g < 2)
    throw std::invalid_argument("exceptional: genus must be at least 2");
  for (const auto& G : options.extra_groups)
    if (G->order() != 4 * static_cast<std::size_t>(g))
      throw InputError("group table " + G->tag().description + " has order " + std::to_string(G->order()) +
                       ", expected " + std::to_string(4 * g));
  Notes notes;
  Json r;
  r["genus"] = g;
  r["flags"] = flags_json(g);
  Json body = exceptional_body(g, options, notes);
  for (auto& [k, v] : body.items())
    r[k] = v;
  r["notes"] = notes.items;
  return r;
}

Json cmd_atlas(int g_min, int g_max, const ReportOptions& options) {
  if (g_min < 2 || g_max < g_min)
    throw std::invalid_argument("atlas: need 2 <= g_min <= g_max");
  const std::size_t n = static_cast<std::size_t>(g_max - g_min + 1);
  std::vector<Json> reports(n);
  ReportOptions inner = options;
  inner.search.workers = 1;
  parallel_for(n, options.search.workers, [&](std::size_t i) {
    reports[i] = cmd_report(g_min + static_cast<int>(i), inner);
  });
  Json out;
  Json sporadic = Json::array(), unexpected = Json::array(), missing = Json::array();
  Json family = Json::array(), surfaces = Json::array();
  std::set<int> seen;
  for (const auto& r : reports) {
    int g = r["genus"];
    for (const auto& s : r["signatures"])
      if (s["family"] == "sporadic") {
        seen.insert(g);
        break;
      }
    if (r["flags"]["exceptional_family"])
      family.push_back(g);
    if (r["flags"]["exceptional_surfaces"])
      surfaces.push_back(g);
  }
  for (int g : seen) {
    sporadic.push_back(g);
    if (!expected_sporadic_genera().count(g))
      unexpected.push_back(g);
  }
  for (int g : expected_sporadic_genera())
    if (g >= g_min && g <= g_max && !seen.count(g))
      missing.push_back(g);
  out["range"] = {g_min, g_max};
  out["summary"] = {{"genera", n},
                    {"sporadic_arithmetic", sporadic},
                    {"unexpected_sporadic", unexpected},
                    {"missing_sporadic", missing},
                    {"exceptional_family", family},
                    {"exceptional_surfaces", surfaces}};
  out["reports"] = reports;
  return out;
}

namespace {

std::string list(const Json& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i)
      s += ", ";
    s += a[i].is_string() ? a[i].get<std::string>() : a[i].dump();
  }
  return s;
}

void notes_md(std::ostringstream& os, const Json& notes) {
  if (notes.empty())
    return;
  os << "\n### Notes\n\n";
  for (const auto& n : notes)
    os << "- [" << n["kind"].get<std::string>() << "] " << n["text"].get<std::string>() << "\n";
}

void exceptional_md(std::ostringstream& os, const Json& e) {
  const auto& c = e["catalog"];
  os << "Groups of order " << c["order"] << ": " << c["groups"] << " searched"
     << (c["complete"].get<bool>() ? " (complete)" : "") << ".\n\n";
  if (e["candidates"].empty())
    os << "No candidate actions.\n";
  for (const auto& x : e["candidates"])
    os << "- " << x["signature"].get<std::string>() << " (" << x["family"].get<std::string>() << ") on "
       << x["group"].get<std::string>() << ": " << x["representative"].get<std::string>() << "\n";
}

} // namespace

std::string report_markdown(const Json& r) {
  std::ostringstream os;
  const int g = r["genus"];
  os << "## Genus " << g << "\n\n";
  if (r["flags"]["exceptional_family"])
    os << "Flag: exceptional uniparametric family expected.\n";
  if (r["flags"]["exceptional_surfaces"])
    os << "Flag: exceptional surfaces expected.\n";
  if (r["flags"]["exceptional_family"] || r["flags"]["exceptional_surfaces"])
    os << "\n";
  os << "| signature | family | index | dim |\n|---|---|---|---|\n";
  for (const auto& s : r["signatures"])
    os << "| " << s["signature"].get<std::string>() << " | " << s["family"].get<std::string>() << " | "
       << s["index"].get<std::string>() << " | " << s["teichmuller_dimension"] << " |\n";
  if (r.contains("standard_action")) {
    const auto& t = r["standard_action"];
    os << "\nGroup " << t["group"].get<std::string>() << " on " << t["signature"].get<std::string>() << ": "
       << t["classes"] << " class(es), representative " << t["representative"].get<std::string>() << ".\n";
    os << "\n| extension | group | ovals | species |\n|---|---|---|---|\n";
    for (const auto& e : r["extensions"])
      os << "| " << e["label"].get<std::string>() << " | " << e["group"].get<std::string>() << " | "
         << list(e["ovals"]) << " | " << list(e["species"]) << " |\n";
    os << "\n### Boundary\n\n";
    for (const auto& a : r["boundary"]["arcs"])
      os << "- " << a["label"].get<std::string>() << " (" << a["extension"].get<std::string>() << ", {"
         << list(a["species"]) << "}): " << list(a["endpoints"]) << "\n";
    const auto& x = r["boundary"]["x8g"];
    os << "- X_8g: " << x["equation"].get<std::string>() << ", |Aut| = " << x["full_aut_order"] << "\n";
    os << "- closed Jordan curve: " << (r["boundary"]["jordan_curve"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (r.contains("exceptional")) {
    os << "\n### Exceptional search\n\n";
    exceptional_md(os, r["exceptional"]);
  }
  notes_md(os, r["notes"]);
  return os.str();
}

std::string atlas_markdown(const Json& a) {
  std::ostringstream os;
  const auto& s = a["summary"];
  os << "# Atlas " << a["range"][0] << ".." << a["range"][1] << "\n\n";
  os << "- genera: " << s["genera"] << "\n";
  os << "- sporadic (arithmetic): " << list(s["sporadic_arithmetic"]) << "\n";
  os << "- not in the expected list: " << list(s["unexpected_sporadic"]) << "\n";
  os << "- expected but not found: " << list(s["missing_sporadic"]) << "\n\n";
  for (const auto& r : a["reports"])
    os << report_markdown(r) << "\n";
  return os.str();
}

std::string exceptional_markdown(const Json& e) {
  std::ostringstream os;
  os << "## Exceptional search, genus " << e["genus"] << "\n\n";
  exceptional_md(os, e);
  notes_md(os, e["notes"]);
  return os.str();
}

} // namespace fourg
