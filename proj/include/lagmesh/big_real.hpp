#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "lagmesh/errors.hpp"

namespace lagmesh {

class BigReal;

// Working precision in decimal digits.  Binary precision is
// ceil(P*log2(10)) + 64 bits, so every elementary operation is correct to
// well beyond P decimal digits.  Immutable; all values derive their
// precision from a context (never from global state).
class PrecisionContext {
 public:
  static constexpr long kMinDigits = 30;

  explicit PrecisionContext(long decimal_digits);

  long decimal_digits() const { return decimal_digits_; }
  mpfr_prec_t bit_precision() const { return bits_; }

  BigReal zero() const;
  BigReal from_int(long v) const;
  // Exact rational v = num/den, correctly rounded to the context precision.
  BigReal from_ratio(long num, long den) const;
  BigReal from_double(double v) const;
  // Parses a decimal literal ("-61.25", "1e-3").  Correctly rounded.
  BigReal from_string(std::string_view s) const;
  // 10^e, correctly rounded (exact while representable).
  BigReal pow10(long e) const;

 private:
  long decimal_digits_;
  mpfr_prec_t bits_;
};

PrecisionContext with_precision(long decimal_digits);

// Arbitrary-precision real backed by one mpfr_t.  Each value carries its
// own precision; binary operations round to the wider operand's precision
// (round-to-nearest), so identical operation sequences give bit-identical
// results on any machine and any thread count.
class BigReal {
 public:
  BigReal();  // zero at minimal precision; meant to be assigned over
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDZ); }
  // Shortest-ish debugging representation, not the DecimalString interface.
  std::string debug_string(size_t significant = 20) const;

  BigReal operator-() const;

  BigReal& operator+=(const BigReal& o) { return *this = *this + o; }
  BigReal& operator-=(const BigReal& o) { return *this = *this - o; }
  BigReal& operator*=(const BigReal& o) { return *this = *this * o; }
  BigReal& operator/=(const BigReal& o) { return *this = *this / o; }

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);

  friend BigReal operator+(const BigReal& a, long b);
  friend BigReal operator-(const BigReal& a, long b);
  friend BigReal operator*(const BigReal& a, long b);
  friend BigReal operator/(const BigReal& a, long b);
  friend BigReal operator+(long a, const BigReal& b) { return b + a; }
  friend BigReal operator*(long a, const BigReal& b) { return b * a; }
  friend BigReal operator-(long a, const BigReal& b);
  friend BigReal operator/(long a, const BigReal& b);

  // Comparisons are exact (no tolerance).
  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend bool operator<(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }

  friend BigReal abs(const BigReal& a);
  friend BigReal sqrt(const BigReal& a);
  friend BigReal floor(const BigReal& a);
  friend BigReal trunc(const BigReal& a);
  // a * 2^e, exact.
  friend BigReal ldexp2(const BigReal& a, long e);
  friend BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }
  friend BigReal min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }

  friend void swap(BigReal& a, BigReal& b) noexcept { mpfr_swap(a.v_, b.v_); }

  // Raw handle for the few call sites that need mpfr directly.
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  friend class PrecisionContext;
  explicit BigReal(mpfr_prec_t bits);  // zero at given binary precision

  mpfr_t v_;
};

}  // namespace lagmesh
