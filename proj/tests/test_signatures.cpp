#include <doctest.h>

#include "fourg/admissible.hpp"
#include "fourg/errors.hpp"
#include "fourg/signature.hpp"
#include "oracle.hpp"

using namespace fourg;

namespace {

bool same(const Rational& r, oracle::Frac f) { return r == make_rational(f.p, f.q); }

}

TEST_CASE("parse and render") {
  auto s = parse_signature("(0;+;[2,2,2,10];{-})");
  CHECK(s.genus == 0);
  CHECK(s.sign == Sign::plus);
  CHECK(s.proper_periods == std::vector<int>{2, 2, 2, 10});
  CHECK(s.period_cycles.empty());
  CHECK(s.is_fuchsian());

  auto t = parse_signature("(0;+;[-];{(2,2,2,10)})");
  CHECK(t.proper_periods.empty());
  REQUIRE(t.period_cycles.size() == 1);
  CHECK(t.period_cycles[0] == std::vector<int>{2, 2, 2, 10});
  CHECK_FALSE(t.is_fuchsian());

  CHECK(render(parse_signature(" ( 0 ; + ; [10,2, 2,2] ; { - } ) ")) == "(0;+;[2,2,2,10];{-})");
  CHECK(render(parse_signature("(1;-;[3];{(2,4),()})")) == "(1;-;[3];{(2,4),()})");
  CHECK(render(parse_signature("(0;+;[2,2,inf];{-})")) == "(0;+;[2,2,inf];{-})");
  CHECK(render(parse_signature("(0;+;[∞,2,2];{-})")) == "(0;+;[2,2,inf];{-})");
  for (const char* text : {"(0;+;[2,2,2,10];{-})", "(0;+;[2];{(2,6)})", "(3;-;[-];{-})",
                           "(0;+;[-];{(2,4,12)})"})
    CHECK(render(parse_signature(text)) == text);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_signature("(0;+;[2,1,2];{-})");
    FAIL("accepted a period 1");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
    CHECK(std::string(e.what()).find("position 8") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_signature("(0;+;[2,2];{-}"), ParseError);
  CHECK_THROWS_AS(parse_signature("(0;*;[2];{-})"), ParseError);
  CHECK_THROWS_AS(parse_signature("(0;+;[2];{(1,2)})"), ParseError);
  CHECK_THROWS_AS(parse_signature("(0;+;[2];{-}) x"), ParseError);
  CHECK_THROWS_AS(parse_signature(""), ParseError);
}

TEST_CASE("area matches the reference formula") {
  CHECK(normalized_area(fuchsian_signature(0, {2, 2, 2, 4})) == make_rational(1, 4));
  for (int g = 2; g <= 9; ++g) {
    CHECK(normalized_area(surface_signature(g)) == make_rational(2 * g - 2));
    CHECK(same(normalized_area(fuchsian_signature(0, {2, 2, 2, 2 * g})), oracle::area(0, true, {2, 2, 2, 2 * g}, {})));
    auto nec = make_signature(0, Sign::plus, {}, {{2, 2, 2, 2 * g}});
    CHECK(same(normalized_area(nec), oracle::area(0, true, {}, {{2, 2, 2, 2 * g}})));
    CHECK(normalized_area(nec) * 2 == normalized_area(fuchsian_signature(0, {2, 2, 2, 2 * g})));
  }
  CHECK(normalized_area(make_signature(0, Sign::plus, {}, {{2, 2, 2, 4}})) == make_rational(1, 8));
  auto odd = make_signature(1, Sign::minus, {3}, {{2, 4}, {}});
  CHECK(same(normalized_area(odd), oracle::area(1, false, {3}, {{2, 4}, {}})));
  CHECK(normalized_area(fuchsian_signature(0, {2, 3, 6})) == 0);
  CHECK_THROWS_AS(normalized_area(parse_signature("(0;+;[2,2,inf];{-})")), std::domain_error);
}

TEST_CASE("index") {
  CHECK(rh_index(surface_signature(2), fuchsian_signature(0, {2, 2, 2, 4})) == 8);
  CHECK(rh_index(surface_signature(2), fuchsian_signature(0, {2, 4, 8})) == 16);
  auto s = fuchsian_signature(0, {3, 4, 12});
  CHECK(rh_index(s, s) == 1);
  CHECK_THROWS(rh_index(surface_signature(2), fuchsian_signature(0, {2, 3, 6})));
  CHECK_THROWS(rh_index(fuchsian_signature(0, {2, 2, 2, 2}), surface_signature(2)));
}

TEST_CASE("Teichmuller dimension") {
  for (int g = 2; g <= 8; ++g) {
    CHECK(dim_teichmuller(fuchsian_signature(0, {2, 2, 2, 2 * g})) == 2);
    CHECK(dim_teichmuller(make_signature(0, Sign::plus, {}, {{2, 2, 2, 2 * g}})) == 1);
    CHECK(dim_teichmuller(surface_signature(g)) == 6 * g - 6);
    CHECK(dim_teichmuller(fuchsian_signature(0, {2, 4 * g, 4 * g})) == 0);
  }
}

TEST_CASE("4g signatures agree with the divisor-sum oracle") {
  for (int g = 2; g <= 60; ++g) {
    auto got = enumerate_4g_signatures(g);
    auto want = oracle::signatures_4g(g);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].signature.proper_periods == want[i]);
      CHECK(rh_index(surface_signature(g), got[i].signature) == 4 * g);
    }
  }
}

TEST_CASE("4g signatures at small genera") {
  auto periods = [](int g) {
    std::vector<std::vector<int>> out;
    for (const auto& t : enumerate_4g_signatures(g))
      out.push_back(t.signature.proper_periods);
    return out;
  };
  CHECK(periods(2) == std::vector<std::vector<int>>{{2, 8, 8}, {4, 4, 4}, {2, 2, 2, 4}});
  CHECK(periods(5) == std::vector<std::vector<int>>{{2, 20, 20}, {4, 4, 10}, {5, 5, 5}, {2, 2, 2, 10}});
  auto g3 = enumerate_4g_signatures(3);
  std::map<std::vector<int>, SignatureFamily> tags;
  for (const auto& t : g3)
    tags[t.signature.proper_periods] = t.family;
  CHECK(tags.at({2, 2, 3, 3}) == SignatureFamily::quadruple_exceptional);
  CHECK(tags.at({3, 4, 12}) == SignatureFamily::sporadic);
  CHECK(tags.at({3, 6, 6}) == SignatureFamily::family2);
  CHECK(tags.at({2, 12, 12}) == SignatureFamily::family1);
  CHECK(tags.at({4, 4, 6}) == SignatureFamily::family3);
  CHECK(tags.at({2, 2, 2, 6}) == SignatureFamily::family4);
  for (int g : {6, 15}) {
    bool found = false;
    for (const auto& t : enumerate_4g_signatures(g))
      found = found || (t.family == SignatureFamily::quadruple_exceptional &&
                        t.signature.proper_periods[0] == 2 && t.signature.proper_periods[2] == 3);
    CHECK(found);
  }
}

TEST_CASE("sporadic genera") {
  const std::set<int> listed = {3,  6,  9,  10, 12, 14, 15, 18, 20, 21, 24, 28,  30,  33,  36,  40,  42,
                                45, 60, 66, 72, 84, 90, 105, 126, 132, 153, 190, 273, 276, 420, 429, 861};
  auto got = sporadic_genera(861);
  for (int g : listed)
    CHECK(got.count(g));
  std::set<int> extra;
  std::set_difference(got.begin(), got.end(), listed.begin(), listed.end(), std::inserter(extra, extra.end()));
  CHECK(extra == std::set<int>{5});
  CHECK(got == oracle::sporadic_genera(861));
  CHECK(sporadic_genera(9).count(9));
  CHECK_FALSE(sporadic_genera(4).count(4));
}
