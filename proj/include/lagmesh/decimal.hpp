#pragma once

#include <string>
#include <string_view>

#include "lagmesh/big_real.hpp"

namespace lagmesh {

// Truncated decimal expansion: sign, integer digits, and exactly the
// declared number of fractional digits.  Digits past the declared count are
// dropped, never rounded, so expansions of the same value at different
// lengths are prefix-comparable.
struct DecimalString {
  bool negative = false;
  std::string integer_part;  // digits only, no sign, no leading zeros (except "0")
  std::string fraction;      // digits only

  long fractional_digits() const { return static_cast<long>(fraction.size()); }
  std::string str() const;

  // Parses "[-]ddd.fff"; the fraction may be empty.
  static DecimalString parse(std::string_view text);
};

// Truncated expansion of x with exactly n_fractional fractional digits.
// Requires 1 <= n_fractional <= P-10: the last ten digits of the working
// precision are guard digits and are never reported.
DecimalString to_decimal_string(const BigReal& x, long n_fractional, const PrecisionContext& ctx);

// Value of the expansion at context precision; within 10^-len(fraction) of
// the value it was rendered from.
BigReal parse_decimal(const DecimalString& d, const PrecisionContext& ctx);

// Count of leading fractional digits on which a and b agree.  Zero when the
// sign or the integer part differs; never throws.
int matched_decimal_places(const DecimalString& a, const DecimalString& b);

}  // namespace lagmesh
