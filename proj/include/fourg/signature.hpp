#pragma once

#include <compare>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "fourg/rational.hpp"

namespace fourg {

enum class Sign { plus, minus };

// Marker for a parabolic class among the proper periods. Rendered as "inf".
inline constexpr int kInfinitePeriod = std::numeric_limits<int>::max();

// NEC signature (h; sign; [m_1..m_r]; {(n_11..n_1s_1) ...}).
// Proper periods are kept sorted ascending; period cycles keep their order.
struct Signature {
  int genus = 0;
  Sign sign = Sign::plus;
  std::vector<int> proper_periods;
  std::vector<std::vector<int>> period_cycles;

  bool is_fuchsian() const { return sign == Sign::plus && period_cycles.empty(); }
  bool has_parabolic() const;
  std::size_t num_periods() const { return proper_periods.size(); }

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

// Validates (genus >= 0, periods >= 2) and sorts proper periods.
Signature make_signature(int genus, Sign sign, std::vector<int> proper_periods,
                         std::vector<std::vector<int>> period_cycles = {});
Signature fuchsian_signature(int genus, std::vector<int> periods);
Signature surface_signature(int genus);

// Grammar: (h;+|-;[m,...]|[-];{(n,...),...}|{-}). Whitespace is ignored.
Signature parse_signature(std::string_view text);
std::string render(const Signature& s);
std::ostream& operator<<(std::ostream& os, const Signature& s);

// mu(Gamma) / 2 pi. Throws std::domain_error on a parabolic marker.
Rational normalized_area(const Signature& s);
// mu(sub) / mu(sup); both areas must be positive.
Rational rh_index(const Signature& sub, const Signature& sup);
int dim_teichmuller(const Signature& s);

} // namespace fourg
