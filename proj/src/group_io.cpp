#include "fourg/group_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fourg/errors.hpp"

namespace fourg {

namespace {

bool content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    return true;
  }
  return false;
}

[[noreturn]] void bad(const std::string& source, std::size_t lineno, const std::string& msg) {
  throw InputError(source + ":" + std::to_string(lineno) + ": " + msg);
}

long long read_index(std::istringstream& ss, const std::string& source, std::size_t lineno) {
  std::string tok;
  ss >> tok;
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size())
      throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    bad(source, lineno, "expected an integer, got '" + tok + "'");
  }
}

} // namespace

Permutation parse_cycles(const std::string& text) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t degree = 0, i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ','))
      ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(')
      throw InputError("permutation: expected '(' in \"" + text + "\"");
    ++i;
    std::vector<std::uint32_t> cyc;
    while (true) {
      skip();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i)
        throw InputError("permutation: expected a point in \"" + text + "\"");
      long long p = std::stoll(text.substr(start, i - start));
      if (p < 1 || p > 1000000)
        throw InputError("permutation: points are 1-based");
      cyc.push_back(static_cast<std::uint32_t>(p - 1));
      degree = std::max<std::size_t>(degree, static_cast<std::size_t>(p));
    }
    cycles.push_back(std::move(cyc));
    skip();
  }
  Permutation perm(degree);
  for (std::size_t k = 0; k < degree; ++k)
    perm[k] = static_cast<std::uint32_t>(k);
  std::vector<char> used(degree, 0);
  for (const auto& cyc : cycles)
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (used[cyc[k]])
        throw InputError("permutation: point repeated in \"" + text + "\"");
      used[cyc[k]] = 1;
      perm[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
  return perm;
}

GroupPtr parse_group_table(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  if (!content_line(in, line, lineno))
    bad(source, lineno, "empty group table");
  std::istringstream head(line);
  std::string kw;
  head >> kw;
  if (kw != "order")
    bad(source, lineno, "expected 'order n'");
  long long n = read_index(head, source, lineno);
  if (n < 1)
    bad(source, lineno, "order must be positive");
  if (static_cast<std::size_t>(n) > kMaxTableOrder)
    bad(source, lineno, "order exceeds the table limit " + std::to_string(kMaxTableOrder));
  std::vector<std::uint32_t> table;
  table.reserve(static_cast<std::size_t>(n * n));
  for (long long row = 0; row < n; ++row) {
    if (!content_line(in, line, lineno))
      bad(source, lineno, "table ends after " + std::to_string(row) + " rows");
    std::istringstream ss(line);
    for (long long col = 0; col < n; ++col) {
      long long v = read_index(ss, source, lineno);
      if (v < 0 || v >= n)
        bad(source, lineno, "entry " + std::to_string(v) + " out of range");
      table.push_back(static_cast<std::uint32_t>(v));
    }
    std::string extra;
    if (ss >> extra)
      bad(source, lineno, "row has more than " + std::to_string(n) + " entries");
  }
  std::vector<Element> gens;
  bool explicit_gens = false;
  if (content_line(in, line, lineno)) {
    std::istringstream ss(line);
    ss >> kw;
    if (kw != "generators")
      bad(source, lineno, "expected 'generators ...' or end of file");
    explicit_gens = true;
    std::string tok;
    while (ss >> tok) {
      std::istringstream one(tok);
      long long v = read_index(one, source, lineno);
      if (v < 0 || v >= n)
        bad(source, lineno, "generator index out of range");
      gens.push_back(Element{static_cast<std::uint32_t>(v)});
    }
    if (content_line(in, line, lineno))
      bad(source, lineno, "unexpected trailing content");
  }
  try {
    if (!explicit_gens) {
      // every element; replaced by a greedy generating set below
      for (long long i = 0; i < n; ++i)
        gens.push_back(Element{static_cast<std::uint32_t>(i)});
    }
    auto G = std::make_shared<FiniteGroup>(static_cast<std::size_t>(n), std::move(table),
                                           gens, std::vector<std::string>{},
                                           GroupTag{Construction::table, source});
    if (!explicit_gens) {
      std::vector<Element> greedy;
      std::vector<Element> span{G->identity()};
      for (Element e : G->elements()) {
        if (std::binary_search(span.begin(), span.end(), e))
          continue;
        greedy.push_back(e);
        span = G->closure(greedy);
      }
      return G->with_generators(greedy);
    }
    return G;
  } catch (const std::invalid_argument& e) {
    throw InputError(source + ": " + e.what());
  }
}

GroupPtr parse_permutation_group(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<Permutation> gens;
  while (content_line(in, line, lineno)) {
    if (line.rfind("perm", 0) != 0)
      bad(source, lineno, "expected 'perm (...)'");
    try {
      gens.push_back(parse_cycles(line.substr(4)));
    } catch (const InputError& e) {
      bad(source, lineno, e.what());
    }
  }
  if (gens.empty())
    bad(source, lineno, "no permutations given");
  try {
    return from_permutations(gens, source);
  } catch (const std::invalid_argument& e) {
    throw InputError(source + ": " + e.what());
  }
}

GroupPtr load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open group file " + path.string());
  std::string line;
  std::size_t lineno = 0;
  std::streampos start = in.tellg();
  if (!content_line(in, line, lineno))
    throw InputError(path.string() + ": empty file");
  in.clear();
  in.seekg(start);
  if (line.rfind("perm", 0) == 0)
    return parse_permutation_group(in, path.filename().string());
  return parse_group_table(in, path.filename().string());
}

std::vector<GroupPtr> load_group_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw InputError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file())
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<GroupPtr> out;
  for (const auto& f : files)
    out.push_back(load_group_file(f));
  return out;
}

void write_group_table(std::ostream& out, const FiniteGroup& G) {
  out << "order " << G.order() << "\n";
  for (Element a : G.elements()) {
    for (Element b : G.elements())
      out << (b.id ? " " : "") << G.mul(a, b).id;
    out << "\n";
  }
  out << "generators";
  for (Element g : G.generators())
    out << " " << g.id;
  out << "\n";
}

} // namespace fourg
