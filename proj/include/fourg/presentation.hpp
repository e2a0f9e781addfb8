#pragma once

#include <compare>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fourg/signature.hpp"

namespace fourg {

// Canonical generators of an NEC group: elliptic x_i, reflections c_ij,
// connecting e_i, hyperbolic a_i/b_i (sign +) and glide reflections d_i (sign -).
struct GeneratorSymbol {
  enum class Kind { x, c, e, a, b, d };
  Kind kind = Kind::x;
  int index = 1;  // 1-based
  int sub = 0;    // j in c_{i,j}; 0 otherwise

  bool orientation_reversing() const { return kind == Kind::c || kind == Kind::d; }

  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
  friend auto operator<=>(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

GeneratorSymbol sym_x(int i);
GeneratorSymbol sym_c(int i, int j);
GeneratorSymbol sym_e(int i);
GeneratorSymbol sym_a(int i);
GeneratorSymbol sym_b(int i);
GeneratorSymbol sym_d(int i);

std::string render(const GeneratorSymbol& s);  // "x1", "c1,0", "e1", ...

struct Word {
  std::vector<std::pair<GeneratorSymbol, int>> letters;

  Word() = default;
  Word(GeneratorSymbol s, int exponent = 1);

  Word& append(GeneratorSymbol s, int exponent = 1);
  Word& append(const Word& w);
  Word inverse() const;
  Word power(int k) const;
  bool empty() const { return letters.empty(); }
};

Word operator*(const Word& a, const Word& b);
std::string render(const Word& w);

struct CanonicalPresentation {
  Signature signature;
  std::vector<GeneratorSymbol> generators;
  std::vector<Word> relators;
};

// The standard presentation attached to a signature. c_{i,s_i} appears only
// through the relator e_i^-1 c_{i,0} e_i = c_{i,s_i}, so it is listed as a
// generator but is determined by the others.
CanonicalPresentation canonical_presentation(const Signature& s);

// Evaluate a word in any group-like structure given letter images.
template <class Element, class Mul, class Inv, class Image>
Element evaluate_word(const Word& w, Element identity, Mul mul, Inv inv,
                      Image image) {
  Element acc = identity;
  for (const auto& [symbol, exponent] : w.letters) {
    Element g = image(symbol);
    if (exponent < 0)
      g = inv(g);
    int k = exponent < 0 ? -exponent : exponent;
    for (int t = 0; t < k; ++t)
      acc = mul(acc, g);
  }
  return acc;
}

} // namespace fourg
