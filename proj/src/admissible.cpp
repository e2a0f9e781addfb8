#include "fourg/admissible.hpp"

#include <algorithm>
#include <stdexcept>

namespace fourg {

namespace {

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 2; d <= n; ++d)
    if (n % d == 0)
      out.push_back(d);
  return out;
}

// Extend `prefix` by `slots` more periods (each >= allowed[from]) summing to
// `remaining`. Every term lies in [1 - 1/m_min, 1), which bounds the search.
void extend(const std::vector<int>& allowed, std::size_t from, int slots,
            const Rational& remaining, std::vector<int>& prefix,
            std::vector<std::vector<int>>& out) {
  if (slots == 0) {
    if (remaining == 0)
      out.push_back(prefix);
    return;
  }
  if (remaining >= slots)
    return;
  for (std::size_t i = from; i < allowed.size(); ++i) {
    const int m = allowed[i];
    const Rational term = 1 - make_rational(1, m);
    // all later terms are at least `term`
    if (term * slots > remaining)
      break;
    if (slots == 1) {
      if (term == remaining)
        out.push_back([&] { auto p = prefix; p.push_back(m); return p; }());
      continue;
    }
    prefix.push_back(m);
    extend(allowed, i, slots - 1, remaining - term, prefix, out);
    prefix.pop_back();
  }
}

SignatureFamily classify_periods(const std::vector<int>& p, int g) {
  using V = std::vector<int>;
  if (p == V{2, 4 * g, 4 * g})
    return SignatureFamily::family1;
  if (p == V{2, 2, 2, 2 * g})
    return SignatureFamily::family4;
  if (p.size() == 4)
    return SignatureFamily::quadruple_exceptional;
  V f2{3, 6, 2 * g}, f3{4, 4, 2 * g};
  std::sort(f2.begin(), f2.end());
  std::sort(f3.begin(), f3.end());
  if (p == f2)
    return SignatureFamily::family2;
  if (p == f3)
    return SignatureFamily::family3;
  return SignatureFamily::sporadic;
}

} // namespace

std::string_view to_string(SignatureFamily f) {
  switch (f) {
  case SignatureFamily::family1: return "family-1";
  case SignatureFamily::family2: return "family-2";
  case SignatureFamily::family3: return "family-3";
  case SignatureFamily::family4: return "family-4";
  case SignatureFamily::quadruple_exceptional: return "quadruple-exceptional";
  case SignatureFamily::sporadic: return "sporadic";
  }
  return "unknown";
}

std::vector<std::vector<int>> genus0_period_solutions(const Rational& target,
                                                      const std::vector<int>& allowed) {
  std::vector<std::vector<int>> out;
  if (target <= 0 || allowed.empty())
    return out;
  // r terms in [1/2, 1): r/2 <= target < r
  const Rational two_t = 2 * target;
  int r_max = static_cast<int>(boost::multiprecision::numerator(two_t) /
                               boost::multiprecision::denominator(two_t));
  int r_min = static_cast<int>(boost::multiprecision::numerator(target) /
                               boost::multiprecision::denominator(target)) + 1;
  std::vector<int> prefix;
  for (int r = std::max(r_min, 1); r <= r_max; ++r)
    extend(allowed, 0, r, target, prefix, out);
  return out;
}

std::vector<TaggedSignature> enumerate_4g_signatures(int g) {
  if (g < 2)
    throw std::invalid_argument("enumerate_4g_signatures: genus must be >= 2");
  // 2g - 2 = 4g (-2 + sum(1 - 1/m_i))
  const Rational target = make_rational(2) + make_rational(2 * g - 2, 4 * g);
  std::vector<TaggedSignature> out;
  for (auto& periods : genus0_period_solutions(target, divisors(4 * g))) {
    SignatureFamily f = classify_periods(periods, g);
    out.push_back({fuchsian_signature(0, std::move(periods)), f});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.signature.num_periods() != b.signature.num_periods())
      return a.signature.num_periods() < b.signature.num_periods();
    return a.signature.proper_periods < b.signature.proper_periods;
  });
  return out;
}

std::set<int> sporadic_genera(int limit) {
  if (limit < 2)
    throw std::invalid_argument("sporadic_genera: limit must be >= 2");
  std::set<int> out;
  for (int g = 2; g <= limit; ++g)
    for (const auto& t : enumerate_4g_signatures(g))
      if (t.family == SignatureFamily::sporadic) {
        out.insert(g);
        break;
      }
  return out;
}

} // namespace fourg
