#include "lagmesh/big_real.hpp"

#include <algorithm>
#include <cmath>

namespace lagmesh {

namespace {

constexpr double kLog2Of10 = 3.321928094887362347870319429;

mpfr_prec_t bits_for_digits(long digits) {
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * kLog2Of10)) + 64;
}

mpfr_prec_t max_prec(const BigReal& a, const BigReal& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

PrecisionContext::PrecisionContext(long decimal_digits) : decimal_digits_(decimal_digits) {
  if (decimal_digits < kMinDigits) {
    throw ConfigError("precision must be at least " + std::to_string(kMinDigits) +
                      " decimal digits, got " + std::to_string(decimal_digits));
  }
  bits_ = bits_for_digits(decimal_digits);
}

PrecisionContext with_precision(long decimal_digits) { return PrecisionContext(decimal_digits); }

BigReal PrecisionContext::zero() const { return BigReal(bits_); }

BigReal PrecisionContext::from_int(long v) const {
  BigReal r(bits_);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

BigReal PrecisionContext::from_ratio(long num, long den) const {
  if (den == 0) throw ConfigError("from_ratio: zero denominator");
  BigReal r(bits_);
  mpfr_set_si(r.v_, num, MPFR_RNDN);
  mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
  return r;
}

BigReal PrecisionContext::from_double(double v) const {
  BigReal r(bits_);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

BigReal PrecisionContext::from_string(std::string_view s) const {
  BigReal r(bits_);
  std::string buf(s);
  if (mpfr_set_str(r.v_, buf.c_str(), 10, MPFR_RNDN) != 0) {
    throw ConfigError("unparsable decimal literal: '" + buf + "'");
  }
  return r;
}

BigReal PrecisionContext::pow10(long e) const {
  BigReal r(bits_);
  mpfr_set_si(r.v_, 10, MPFR_RNDN);
  mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

BigReal::BigReal() { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_set_zero(v_, 1); }

BigReal::BigReal(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);  // exact: same precision
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));  // adopt source precision
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

std::string BigReal::debug_string(size_t significant) const {
  mpfr_exp_t exp = 0;
  char* s = mpfr_get_str(nullptr, &exp, 10, significant, v_, MPFR_RNDN);
  std::string out = s ? s : "?";
  mpfr_free_str(s);
  out += "e" + std::to_string(static_cast<long>(exp));
  return out;
}

BigReal BigReal::operator-() const {
  BigReal r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);  // exact
  return r;
}

#define LAGMESH_BINOP(op, fn)                               \
  BigReal operator op(const BigReal& a, const BigReal& b) { \
    BigReal r(max_prec(a, b));                              \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                        \
    return r;                                               \
  }

LAGMESH_BINOP(+, mpfr_add)
LAGMESH_BINOP(-, mpfr_sub)
LAGMESH_BINOP(*, mpfr_mul)
LAGMESH_BINOP(/, mpfr_div)
#undef LAGMESH_BINOP

#define LAGMESH_BINOP_SI(op, fn)                     \
  BigReal operator op(const BigReal& a, long b) {    \
    BigReal r(a.precision());                        \
    fn(r.v_, a.v_, b, MPFR_RNDN);                    \
    return r;                                        \
  }

LAGMESH_BINOP_SI(+, mpfr_add_si)
LAGMESH_BINOP_SI(-, mpfr_sub_si)
LAGMESH_BINOP_SI(*, mpfr_mul_si)
LAGMESH_BINOP_SI(/, mpfr_div_si)
#undef LAGMESH_BINOP_SI

BigReal operator-(long a, const BigReal& b) {
  BigReal r(b.precision());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator/(long a, const BigReal& b) {
  BigReal r(b.precision());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

BigReal abs(const BigReal& a) {
  BigReal r(a.precision());
  mpfr_abs(r.v_, a.v_, MPFR_RNDN);  // exact
  return r;
}

BigReal sqrt(const BigReal& a) {
  BigReal r(a.precision());
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigReal floor(const BigReal& a) {
  BigReal r(a.precision());
  mpfr_floor(r.v_, a.v_);
  return r;
}

BigReal trunc(const BigReal& a) {
  BigReal r(a.precision());
  mpfr_trunc(r.v_, a.v_);
  return r;
}

BigReal ldexp2(const BigReal& a, long e) {
  BigReal r(a.precision());
  mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);  // exact
  return r;
}

}  // namespace lagmesh
