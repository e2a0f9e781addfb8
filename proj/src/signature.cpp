#include "fourg/signature.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>

#include "fourg/errors.hpp"

namespace fourg {

namespace {

void check_period(int p, const char* what) {
  if (p < 2)
    throw std::invalid_argument(std::string(what) + " must be >= 2, got " +
                                std::to_string(p));
}

class SignatureParser {
public:
  explicit SignatureParser(std::string_view text) : s_(text) {}

  Signature parse() {
    Signature out;
    expect('(');
    out.genus = number();
    expect(';');
    skip();
    if (peek() == '+')
      out.sign = Sign::plus;
    else if (peek() == '-')
      out.sign = Sign::minus;
    else
      fail("expected sign '+' or '-'");
    ++pos_;
    expect(';');
    expect('[');
    if (accept('-')) {
      expect(']');
    } else {
      do
        out.proper_periods.push_back(period());
      while (accept(','));
      expect(']');
    }
    expect(';');
    expect('{');
    if (accept('-')) {
      expect('}');
    } else {
      do {
        expect('(');
        std::vector<int> cycle;
        if (!accept(')')) {
          do {
            std::size_t at = position();
            int p = period();
            if (p == kInfinitePeriod)
              throw ParseError("link periods must be finite", at);
            cycle.push_back(p);
          } while (accept(','));
          expect(')');
        }
        out.period_cycles.push_back(std::move(cycle));
      } while (accept(','));
      expect('}');
    }
    expect(')');
    skip();
    if (pos_ != s_.size())
      fail("trailing characters");
    std::sort(out.proper_periods.begin(), out.proper_periods.end());
    return out;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' ||
                                s_[pos_] == '\n' || s_[pos_] == '\r'))
      ++pos_;
  }
  std::size_t position() {
    skip();
    return pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  bool accept(char c) {
    skip();
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  int number() {
    skip();
    std::size_t start = pos_;
    int value = 0;
    auto r = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
    if (r.ec == std::errc::result_out_of_range)
      fail("number out of range");
    if (r.ec != std::errc() || s_[start] == '-' || s_[start] == '+')
      fail("expected a non-negative integer");
    pos_ = static_cast<std::size_t>(r.ptr - s_.data());
    return value;
  }

  int period() {
    skip();
    std::size_t start = pos_;
    if (s_.substr(pos_, 3) == "inf") {
      pos_ += 3;
      return kInfinitePeriod;
    }
    if (s_.substr(pos_, 3) == "\xE2\x88\x9E") {
      pos_ += 3;
      return kInfinitePeriod;
    }
    int p = number();
    if (p < 2)
      throw ParseError("period " + std::to_string(p) + " < 2", start);
    return p;
  }
};

void render_period(std::string& out, int p) {
  out += p == kInfinitePeriod ? std::string("inf") : std::to_string(p);
}

} // namespace

bool Signature::has_parabolic() const {
  return std::find(proper_periods.begin(), proper_periods.end(),
                   kInfinitePeriod) != proper_periods.end();
}

Signature make_signature(int genus, Sign sign, std::vector<int> proper_periods,
                         std::vector<std::vector<int>> period_cycles) {
  if (genus < 0)
    throw std::invalid_argument("signature genus must be non-negative");
  for (int m : proper_periods)
    check_period(m, "proper period");
  for (const auto& cycle : period_cycles)
    for (int n : cycle) {
      check_period(n, "link period");
      if (n == kInfinitePeriod)
        throw std::invalid_argument("link periods must be finite");
    }
  std::sort(proper_periods.begin(), proper_periods.end());
  return Signature{genus, sign, std::move(proper_periods), std::move(period_cycles)};
}

Signature fuchsian_signature(int genus, std::vector<int> periods) {
  return make_signature(genus, Sign::plus, std::move(periods));
}

Signature surface_signature(int genus) { return fuchsian_signature(genus, {}); }

Signature parse_signature(std::string_view text) {
  return SignatureParser(text).parse();
}

std::string render(const Signature& s) {
  std::string out = "(" + std::to_string(s.genus) + ";";
  out += s.sign == Sign::plus ? "+" : "-";
  out += ";[";
  if (s.proper_periods.empty())
    out += "-";
  for (std::size_t i = 0; i < s.proper_periods.size(); ++i) {
    if (i)
      out += ",";
    render_period(out, s.proper_periods[i]);
  }
  out += "];{";
  if (s.period_cycles.empty())
    out += "-";
  for (std::size_t i = 0; i < s.period_cycles.size(); ++i) {
    if (i)
      out += ",";
    out += "(";
    for (std::size_t j = 0; j < s.period_cycles[i].size(); ++j) {
      if (j)
        out += ",";
      render_period(out, s.period_cycles[i][j]);
    }
    out += ")";
  }
  out += "})";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Signature& s) {
  return os << render(s);
}

Rational normalized_area(const Signature& s) {
  if (s.has_parabolic())
    throw std::domain_error("normalized_area: parabolic period in " + render(s));
  const long long eps = s.sign == Sign::plus ? 2 : 1;
  Rational area = make_rational(eps * s.genus - 2 +
                                static_cast<long long>(s.period_cycles.size()));
  for (int m : s.proper_periods)
    area += 1 - make_rational(1, m);
  Rational links = 0;
  for (const auto& cycle : s.period_cycles)
    for (int n : cycle)
      links += 1 - make_rational(1, n);
  return area + links / 2;
}

Rational rh_index(const Signature& sub, const Signature& sup) {
  Rational a = normalized_area(sub);
  Rational b = normalized_area(sup);
  if (a <= 0 || b <= 0)
    throw std::domain_error("rh_index: non-positive area");
  return a / b;
}

int dim_teichmuller(const Signature& s) {
  const int eps = s.sign == Sign::plus ? 2 : 1;
  const int k = static_cast<int>(s.period_cycles.size());
  int links = 0;
  for (const auto& cycle : s.period_cycles)
    links += static_cast<int>(cycle.size());
  return 3 * (eps * s.genus - 1 + k) - 3 +
         (2 * static_cast<int>(s.proper_periods.size()) + links);
}

} // namespace fourg
