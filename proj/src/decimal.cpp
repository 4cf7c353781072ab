#include "lagmesh/decimal.hpp"

#include <gmp.h>

#include <algorithm>
#include <cctype>

namespace lagmesh {

namespace {

std::string strip_leading_zeros(std::string digits) {
  size_t first = digits.find_first_not_of('0');
  if (first == std::string::npos) return "0";
  return digits.substr(first);
}

std::string mpz_to_string(const mpz_t z) {
  char* raw = mpz_get_str(nullptr, 10, z);
  std::string out(raw);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(raw, out.size() + 1);
  return out;
}

}  // namespace

std::string DecimalString::str() const {
  std::string out;
  if (negative) out += '-';
  out += integer_part;
  if (!fraction.empty()) {
    out += '.';
    out += fraction;
  }
  return out;
}

DecimalString DecimalString::parse(std::string_view text) {
  DecimalString d;
  size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    d.negative = (text[pos] == '-');
    ++pos;
  }
  std::string intpart, frac;
  bool seen_dot = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (seen_dot) throw ConfigError("malformed decimal string: two dots");
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_dot ? frac : intpart) += c;
    } else {
      throw ConfigError(std::string("malformed decimal string: unexpected '") + c + "'");
    }
  }
  if (intpart.empty() && frac.empty()) throw ConfigError("empty decimal string");
  d.integer_part = strip_leading_zeros(intpart.empty() ? "0" : intpart);
  d.fraction = frac;
  return d;
}

DecimalString to_decimal_string(const BigReal& x, long n_fractional, const PrecisionContext& ctx) {
  if (n_fractional < 1) throw ConfigError("to_decimal_string: need at least one fractional digit");
  if (n_fractional > ctx.decimal_digits() - 10) {
    throw PrecisionExhausted("to_decimal_string: " + std::to_string(n_fractional) +
                             " fractional digits exceed P-10 = " +
                             std::to_string(ctx.decimal_digits() - 10));
  }
  if (!x.is_finite()) throw NumericalError("to_decimal_string: non-finite value");

  DecimalString d;
  d.negative = x.sign() < 0;

  mpfr_t mag;
  mpfr_init2(mag, mpfr_get_prec(x.raw()));
  mpfr_abs(mag, x.raw(), MPFR_RNDN);

  mpz_t zint;
  mpz_init(zint);
  mpfr_get_z(zint, mag, MPFR_RNDZ);
  d.integer_part = mpz_to_string(zint);

  // frac * 10^n, computed exactly, then truncated toward zero.
  mpfr_t frac;
  mpfr_init2(frac, mpfr_get_prec(mag));
  mpfr_frac(frac, mag, MPFR_RNDN);  // exact

  mpz_t scale;
  mpz_init(scale);
  mpz_ui_pow_ui(scale, 10, static_cast<unsigned long>(n_fractional));

  mpfr_t scaled;
  mpfr_init2(scaled, mpfr_get_prec(frac) + static_cast<mpfr_prec_t>(mpz_sizeinbase(scale, 2)) + 4);
  mpfr_mul_z(scaled, frac, scale, MPFR_RNDN);  // exact at this precision

  mpz_t zfrac;
  mpz_init(zfrac);
  mpfr_get_z(zfrac, scaled, MPFR_RNDZ);
  std::string digits = mpz_to_string(zfrac);
  if (static_cast<long>(digits.size()) < n_fractional) {
    digits.insert(digits.begin(), n_fractional - digits.size(), '0');
  }
  d.fraction = digits;

  mpz_clears(zint, scale, zfrac, nullptr);
  mpfr_clears(mag, frac, scaled, nullptr);
  return d;
}

BigReal parse_decimal(const DecimalString& d, const PrecisionContext& ctx) {
  return ctx.from_string(d.str());
}

int matched_decimal_places(const DecimalString& a, const DecimalString& b) {
  if (a.negative != b.negative) return 0;
  if (a.integer_part != b.integer_part) return 0;
  const size_t limit = std::min(a.fraction.size(), b.fraction.size());
  size_t n = 0;
  while (n < limit && a.fraction[n] == b.fraction[n]) ++n;
  return static_cast<int>(n);
}

}  // namespace lagmesh
