#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "fourg/group.hpp"

namespace fourg {

// "order n", n rows of n 0-based indices (row i = products i*j), optional
// "generators i1 i2 ...". Lines starting with '#' are comments.
GroupPtr parse_group_table(std::istream& in, const std::string& source = "<table>");
// One "perm (a b c)(d e)" line per generator, 1-based points.
GroupPtr parse_permutation_group(std::istream& in, const std::string& source = "<perms>");
// Dispatches on the first non-comment line.
GroupPtr load_group_file(const std::filesystem::path& path);
// All regular files of a directory in file-name order.
std::vector<GroupPtr> load_group_directory(const std::filesystem::path& dir);

Permutation parse_cycles(const std::string& text);
void write_group_table(std::ostream& out, const FiniteGroup& G);

} // namespace fourg
