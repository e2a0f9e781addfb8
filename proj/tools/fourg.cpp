#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>

#include "fourg/checks.hpp"
#include "fourg/errors.hpp"
#include "fourg/group_io.hpp"
#include "fourg/report.hpp"

using namespace fourg;

namespace {

struct Args {
  int genus = 0;
  std::string range;
  bool json = false, markdown = false;
  std::string tables;
  bool check = false;
  std::size_t max_order = 4096;
  unsigned workers = 1;
  bool summary_only = false;
  std::string signature;
};

std::pair<int, int> parse_range(const std::string& r) {
  auto colon = r.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("--range expects a:b");
  try {
    std::size_t used = 0;
    int a = std::stoi(r.substr(0, colon), &used);
    if (used != colon)
      throw std::invalid_argument("");
    int b = std::stoi(r.substr(colon + 1), &used);
    if (used != r.size() - colon - 1)
      throw std::invalid_argument("");
    return {a, b};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("--range expects a:b with integers, got '" + r + "'");
  }
}

ReportOptions report_options(const Args& a) {
  ReportOptions o;
  o.search.workers = std::max(1u, a.workers);
  o.search.max_order = a.max_order;
  o.summary_only = a.summary_only;
  if (!a.tables.empty())
    o.extra_groups = load_group_directory(a.tables);
  return o;
}

std::vector<GroupPtr> of_order(const std::vector<GroupPtr>& groups, std::size_t n) {
  std::vector<GroupPtr> out;
  for (const auto& G : groups)
    if (G->order() == n)
      out.push_back(G);
  return out;
}

int require_genus(const Args& a) {
  if (a.genus < 2)
    throw std::invalid_argument("--genus must be given and at least 2");
  return a.genus;
}

bool attach_checks(Json& report, int g, const ReportOptions& o) {
  auto results = run_checks(g, o);
  report["checks"] = checks_json(results);
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (!r.passed)
      std::cerr << "check failed at g=" << g << ": " << r.name << ": " << r.detail << "\n";
  }
  return ok;
}

void emit(const Args& a, const Json& j, std::string (*md)(const Json&)) {
  if (a.markdown && !a.json)
    std::cout << md(j);
  else
    std::cout << j.dump(2) << "\n";
}

int run(const Args& a, const std::string& cmd) {
  if (cmd == "signature") {
    Signature s = parse_signature(a.signature);
    Json j = {{"signature", render(s)}, {"fuchsian", s.is_fuchsian()}};
    j["area"] = s.has_parabolic() ? Json() : Json(to_string(normalized_area(s)));
    j["teichmuller_dimension"] = dim_teichmuller(s);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (cmd == "signatures") {
    const int g = require_genus(a);
    Json j = Json::array();
    for (const auto& t : enumerate_4g_signatures(g))
      j.push_back({{"signature", render(t.signature)}, {"family", std::string(to_string(t.family))}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  ReportOptions o = report_options(a);
  bool ok = true;
  if (cmd == "report") {
    const int g = require_genus(a);
    o.extra_groups = of_order(o.extra_groups, 4 * static_cast<std::size_t>(g));
    Json r = cmd_report(g, o);
    if (a.check)
      ok = attach_checks(r, g, o);
    emit(a, r, report_markdown);
  } else if (cmd == "atlas") {
    auto [lo, hi] = a.range.empty() ? std::pair{require_genus(a), a.genus} : parse_range(a.range);
    std::vector<GroupPtr> all = o.extra_groups;
    o.extra_groups.clear();  // per-genus tables are not used in sweeps
    Json r = cmd_atlas(lo, hi, o);
    if (a.check)
      for (auto& rep : r["reports"]) {
        ReportOptions per = o;
        per.extra_groups = of_order(all, 4 * static_cast<std::size_t>(rep["genus"].get<int>()));
        ok = attach_checks(rep, rep["genus"], per) && ok;
      }
    emit(a, r, atlas_markdown);
  } else if (cmd == "exceptional") {
    Json r = cmd_exceptional(require_genus(a), o);
    emit(a, r, exceptional_markdown);
  }
  return ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Surfaces of genus g with 4g automorphisms: signatures, actions, real forms, boundary"};
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.require_subcommand(1, 1);
  Args a;
  app.add_option("--genus", a.genus, "genus g >= 2");
  app.add_option("--range", a.range, "genus range a:b for atlas");
  app.add_flag("--json", a.json, "JSON output (default)");
  app.add_flag("--markdown", a.markdown, "Markdown output");
  app.add_option("--tables", a.tables, "directory of group table / permutation files");
  app.add_flag("--check", a.check, "run the invariant suites; exit 3 on any violation");
  app.add_option("--max-order", a.max_order, "skip group searches above this order");
  app.add_option("--workers", a.workers, "worker threads");
  app.add_flag("--summary-only", a.summary_only, "signatures and flags only");

  app.add_subcommand("report", "full pipeline for one genus")->fallthrough();
  app.add_subcommand("atlas", "reports over a genus range")->fallthrough();
  app.add_subcommand("exceptional", "actions on sporadic signatures")->fallthrough();
  app.add_subcommand("signatures", "admissible signatures of genus g")->fallthrough();
  auto* sig = app.add_subcommand("signature", "parse and normalize a signature")->fallthrough();
  sig->add_option("text", a.signature, "e.g. (0;+;[2,2,2,10];{-})")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  try {
    return run(a, app.get_subcommands().front()->get_name());
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
