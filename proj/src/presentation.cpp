#include "fourg/presentation.hpp"

#include <stdexcept>

namespace fourg {

GeneratorSymbol sym_x(int i) { return {GeneratorSymbol::Kind::x, i, 0}; }
GeneratorSymbol sym_c(int i, int j) { return {GeneratorSymbol::Kind::c, i, j}; }
GeneratorSymbol sym_e(int i) { return {GeneratorSymbol::Kind::e, i, 0}; }
GeneratorSymbol sym_a(int i) { return {GeneratorSymbol::Kind::a, i, 0}; }
GeneratorSymbol sym_b(int i) { return {GeneratorSymbol::Kind::b, i, 0}; }
GeneratorSymbol sym_d(int i) { return {GeneratorSymbol::Kind::d, i, 0}; }

std::string render(const GeneratorSymbol& s) {
  using K = GeneratorSymbol::Kind;
  static const char* names[] = {"x", "c", "e", "a", "b", "d"};
  std::string out = names[static_cast<int>(s.kind)] + std::to_string(s.index);
  if (s.kind == K::c)
    out += "," + std::to_string(s.sub);
  return out;
}

Word::Word(GeneratorSymbol s, int exponent) { append(s, exponent); }

Word& Word::append(GeneratorSymbol s, int exponent) {
  if (exponent == 0)
    return *this;
  if (!letters.empty() && letters.back().first == s) {
    letters.back().second += exponent;
    if (letters.back().second == 0)
      letters.pop_back();
  } else {
    letters.emplace_back(s, exponent);
  }
  return *this;
}

Word& Word::append(const Word& w) {
  for (const auto& [s, e] : w.letters)
    append(s, e);
  return *this;
}

Word Word::inverse() const {
  Word out;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.append(it->first, -it->second);
  return out;
}

Word Word::power(int k) const {
  Word base = k < 0 ? inverse() : *this;
  Word out;
  for (int i = 0; i < (k < 0 ? -k : k); ++i)
    out.append(base);
  return out;
}

Word operator*(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

std::string render(const Word& w) {
  if (w.letters.empty())
    return "1";
  std::string out;
  for (const auto& [s, e] : w.letters) {
    if (!out.empty())
      out += " ";
    out += render(s);
    if (e != 1)
      out += "^" + std::to_string(e);
  }
  return out;
}

CanonicalPresentation canonical_presentation(const Signature& s) {
  CanonicalPresentation p;
  p.signature = s;
  const int r = static_cast<int>(s.proper_periods.size());
  const int k = static_cast<int>(s.period_cycles.size());

  for (int i = 1; i <= r; ++i) {
    p.generators.push_back(sym_x(i));
    int m = s.proper_periods[i - 1];
    if (m != kInfinitePeriod)
      p.relators.push_back(Word(sym_x(i), m));
  }
  for (int i = 1; i <= k; ++i) {
    const auto& cycle = s.period_cycles[i - 1];
    const int si = static_cast<int>(cycle.size());
    for (int j = 0; j <= si; ++j) {
      p.generators.push_back(sym_c(i, j));
      p.relators.push_back(Word(sym_c(i, j), 2));
    }
    for (int j = 1; j <= si; ++j)
      p.relators.push_back(
          (Word(sym_c(i, j - 1)) * Word(sym_c(i, j))).power(cycle[j - 1]));
    p.generators.push_back(sym_e(i));
    Word closing(sym_e(i), -1);
    closing.append(sym_c(i, 0)).append(sym_e(i)).append(sym_c(i, si), -1);
    p.relators.push_back(closing);
  }
  Word long_relation;
  for (int i = 1; i <= r; ++i)
    long_relation.append(sym_x(i));
  for (int i = 1; i <= k; ++i)
    long_relation.append(sym_e(i));
  for (int i = 1; i <= s.genus; ++i) {
    if (s.sign == Sign::plus) {
      p.generators.push_back(sym_a(i));
      p.generators.push_back(sym_b(i));
      long_relation.append(sym_a(i))
          .append(sym_b(i))
          .append(sym_a(i), -1)
          .append(sym_b(i), -1);
    } else {
      p.generators.push_back(sym_d(i));
      long_relation.append(sym_d(i), 2);
    }
  }
  p.relators.push_back(long_relation);
  return p;
}

} // namespace fourg
