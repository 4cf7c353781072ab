#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmp.h>

#include "lagmesh/hermite.hpp"

using namespace lagmesh;

TEST_CASE("closed-form evaluations") {
  const PrecisionContext ctx(40);
  // H_2 = 4x^2 - 2
  const auto h2 = hermite_eval(2, ctx.from_int(1), ctx);
  CHECK(h2.value == ctx.from_int(2));
  CHECK(h2.derivative == ctx.from_int(8));
  // H_3 = 8x^3 - 12x
  const auto h3 = hermite_eval(3, ctx.zero(), ctx);
  CHECK(h3.value.is_zero());
  CHECK(h3.derivative == ctx.from_int(-12));

  const auto h0 = hermite_eval(0, ctx.from_int(5), ctx);
  CHECK(h0.value == ctx.from_int(1));
  CHECK(h0.derivative.is_zero());
}

TEST_CASE("recurrence matches exact integer coefficient summation") {
  // H_n(x) = n! sum_m (-1)^m / (m! (n-2m)!) (2x)^(n-2m); coefficients built
  // in exact integer arithmetic, evaluated at x = 3/2 (exact in binary).
  const PrecisionContext ctx(80);
  const long n = 25;

  mpz_t nfact, mfact, kfact, coef, two_pow;
  mpz_inits(nfact, mfact, kfact, coef, two_pow, nullptr);
  mpz_fac_ui(nfact, n);

  auto coef_string = [](const mpz_t z) {
    char* raw = mpz_get_str(nullptr, 10, z);
    std::string out(raw);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(raw, out.size() + 1);
    return out;
  };

  const BigReal x = ctx.from_ratio(3, 2);
  BigReal expected = ctx.zero();
  for (long m = 0; 2 * m <= n; ++m) {
    const long k = n - 2 * m;
    mpz_fac_ui(mfact, m);
    mpz_fac_ui(kfact, k);
    mpz_ui_pow_ui(two_pow, 2, k);
    mpz_divexact(coef, nfact, mfact);
    mpz_divexact(coef, coef, kfact);
    mpz_mul(coef, coef, two_pow);
    if (m % 2 == 1) mpz_neg(coef, coef);

    BigReal term = ctx.from_string(coef_string(coef));
    for (long p = 0; p < k; ++p) term *= x;
    expected += term;
  }
  mpz_clears(nfact, mfact, kfact, coef, two_pow, nullptr);

  const auto he = hermite_eval(n, x, ctx);
  CHECK(abs(he.value - expected) <= abs(expected) * ctx.pow10(-70));
}

TEST_CASE("small root sets match closed forms") {
  const PrecisionContext ctx(60);
  const BigReal tol = ctx.pow10(-(ctx.decimal_digits() - 5));

  const RootSet r1 = hermite_roots(1, ctx);
  REQUIRE(r1.roots.size() == 1);
  CHECK(r1.roots[0].is_zero());

  const RootSet r2 = hermite_roots(2, ctx);
  const BigReal inv_sqrt2 = sqrt(ctx.from_ratio(1, 2));
  CHECK(abs(r2.roots[1] - inv_sqrt2) < tol);
  CHECK(r2.roots[0] == -r2.roots[1]);

  const RootSet r3 = hermite_roots(3, ctx);
  const BigReal sqrt_3_2 = sqrt(ctx.from_ratio(3, 2));
  CHECK(abs(r3.roots[2] - sqrt_3_2) < tol);
  CHECK(r3.roots[1].is_zero());
  CHECK(r3.roots[0] == -r3.roots[2]);
}

TEST_CASE("degree 50: residuals, seeds, antisymmetry") {
  const PrecisionContext ctx(60);
  const long n = 50;
  const RootSet rs = hermite_roots(n, ctx);
  REQUIRE(rs.roots.size() == static_cast<size_t>(n));

  // strictly ascending, antisymmetric pairs exact by construction
  for (long i = 1; i < n; ++i) CHECK(rs.roots[i - 1] < rs.roots[i]);
  for (long i = 0; i < n; ++i) CHECK(rs.roots[i] == -rs.roots[n - 1 - i]);

  // Newton residual criterion for every root
  const BigReal bound = ctx.pow10(-(ctx.decimal_digits() - 5));
  const BigReal one = ctx.from_int(1);
  for (const BigReal& r : rs.roots) {
    const auto he = hermite_eval(n, r, ctx);
    CHECK(abs(he.value) < abs(he.derivative) * bound * max(one, abs(r)));
  }

  // hardware-precision Golub-Welsch agreement to >= 13 significant digits
  const std::vector<double> seeds = hermite_roots_seed(n);
  for (long i = 0; i < n; ++i) {
    const BigReal seed = ctx.from_double(seeds[i]);
    CHECK(abs(rs.roots[i] - seed) <= max(one, abs(seed)) * ctx.pow10(-13));
  }
}

TEST_CASE("interlacing for all degrees up to 100") {
  const PrecisionContext ctx(30);
  RootSet prev = hermite_roots(1, ctx);
  for (long n = 2; n <= 100; ++n) {
    const RootSet cur = hermite_roots(n, ctx);
    for (long i = 0; i + 1 < n; ++i) {
      CHECK(cur.roots[i] < prev.roots[i]);
      CHECK(prev.roots[i] < cur.roots[i + 1]);
    }
    prev = cur;
  }
}

TEST_CASE("sum of squared roots is n(n-1)/2") {
  const PrecisionContext ctx(50);
  for (long n : {7, 24, 61}) {
    const RootSet rs = hermite_roots(n, ctx);
    BigReal sum = ctx.zero();
    for (const BigReal& r : rs.roots) sum += r * r;
    const BigReal target = ctx.from_ratio(n * (n - 1), 2);
    CHECK(abs(sum - target) <= ctx.pow10(-(ctx.decimal_digits() - 10)) * (n * n));
  }
}

TEST_CASE("polishing a converged root is idempotent") {
  const PrecisionContext ctx(60);
  const RootSet rs = hermite_roots(12, ctx);
  const BigReal& root = rs.roots[9];
  const BigReal again = newton_stage(12, root, ctx.decimal_digits(), 8);
  CHECK(abs(again - root) < ctx.pow10(-(ctx.decimal_digits() - 5)));
}

TEST_CASE("newton budget exhaustion is a hard error") {
  const PrecisionContext ctx(120);
  CHECK_THROWS_AS(newton_stage(30, ctx.from_int(100), 120, 2), NumericalError);
}

TEST_CASE("input validation") {
  const PrecisionContext ctx(30);
  CHECK_THROWS_AS(hermite_roots(0, ctx), ConfigError);
  CHECK_THROWS_AS(hermite_eval(-1, ctx.zero(), ctx), ConfigError);
}
