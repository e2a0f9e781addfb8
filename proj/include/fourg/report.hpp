#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "fourg/actions.hpp"

namespace fourg {

using Json = nlohmann::ordered_json;

struct ReportOptions {
  SearchOptions search;
  std::vector<GroupPtr> extra_groups;  // ingested tables, order 4g only
  bool summary_only = false;           // signatures and flags, no group searches
};

// Reference data the computations are compared against.
const std::set<int>& expected_sporadic_genera();        // triangle solutions up to 861
bool exceptional_family_genus(int g);                   // 3, 6, 15
bool exceptional_surface_genus(int g);                  // 3, 6, 12, 30
std::vector<std::vector<int>> expected_species_values(int g);  // theta1*, theta2*, theta*

Json cmd_report(int g, const ReportOptions& options = {});
Json cmd_atlas(int g_min, int g_max, const ReportOptions& options = {});
Json cmd_exceptional(int g, const ReportOptions& options = {});

std::string report_markdown(const Json& report);
std::string atlas_markdown(const Json& atlas);
std::string exceptional_markdown(const Json& exceptional);

} // namespace fourg
