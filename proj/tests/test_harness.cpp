#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "lagmesh/harness.hpp"
#include "lagmesh/parallel.hpp"

using namespace lagmesh;

TEST_CASE("rational parsing and canonical keys") {
  CHECK(Rational::parse("16").canonical() == "16");
  CHECK(Rational::parse("-1").canonical() == "-1");
  CHECK(Rational::parse("3/6").canonical() == "1/2");
  CHECK(Rational::parse("-4/2").canonical() == "-2");
  CHECK(Rational::parse("0.5").canonical() == "1/2");
  CHECK(Rational::parse("-0.25").canonical() == "-1/4");
  CHECK_THROWS_AS(Rational::parse("1/0"), ConfigError);
  CHECK_THROWS_AS(Rational::parse("abc"), ConfigError);

  const PrecisionContext ctx(40);
  CHECK(Rational::parse("-1/4").value(ctx) == ctx.from_ratio(-1, 4));
}

TEST_CASE("embedded reference matches the shipped data file") {
  std::ifstream in(LAGMESH_DATA_DIR "/paper_reference.txt", std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream content;
  content << in.rdbuf();
  CHECK(content.str() == embedded_reference_text());
}

TEST_CASE("reference transcription checksums") {
  const ReferenceTable& table = ReferenceTable::embedded();
  CHECK(table.require("-1", 0).digits.fractional_digits() == 246);
  CHECK(table.require("1", 0).digits.fractional_digits() == 239);
  CHECK(table.require("1", 19).digits.fractional_digits() == 219);
  CHECK(table.require("16", 0).digits.fractional_digits() == 198);
  CHECK(table.entries().size() == 4);

  // final markers coincide with the stored lengths
  for (const auto& entry : table.entries()) {
    int deepest = 0;
    for (const auto& marker : entry.markers) deepest = std::max(deepest, marker.decimal_place);
    CHECK(deepest == entry.digits.fractional_digits());
  }
}

TEST_CASE("reference_check counts and errors") {
  const ReferenceTable& table = ReferenceTable::embedded();
  const auto& stored = table.require("-1", 0);
  CHECK(reference_check(table, "-1", 0, stored.digits) == 246);

  DecimalString perturbed = stored.digits;
  perturbed.fraction.back() = perturbed.fraction.back() == '9' ? '0' : '9';
  CHECK(reference_check(table, "-1", 0, perturbed) == 245);

  CHECK_THROWS_AS(reference_check(table, "2", 0, stored.digits), MissingReference);
  CHECK(table.find("2", 0) == nullptr);
}

TEST_CASE("count_nodes") {
  const PrecisionContext ctx(40);
  const BigReal threshold = ctx.pow10(-20);

  VectorX<BigReal> same(4);
  for (long i = 0; i < 4; ++i) same[i] = ctx.from_int(3);
  CHECK(count_nodes(same, threshold) == 0);

  VectorX<BigReal> flip(2);
  flip[0] = ctx.from_int(1);
  flip[1] = ctx.from_int(-1);
  CHECK(count_nodes(flip, threshold) == 1);

  // near-zero components are ignored
  VectorX<BigReal> noisy(3);
  noisy[0] = ctx.from_int(1);
  noisy[1] = ctx.pow10(-30);
  noisy[2] = ctx.from_int(-1);
  CHECK(count_nodes(noisy, threshold) == 1);
}

TEST_CASE("closed-form solve at N = 2 (no self-check mode)") {
  RunConfig config;
  config.lambda = Rational::parse("1");
  config.states = 2;
  config.mesh_points = 2;
  config.precision = 40;
  config.variant = KineticVariant::Exact;
  config.check_increment = 0;

  const SolveReport report = solve_spectrum(config);
  REQUIRE(report.states.size() == 2);
  const PrecisionContext ctx(40);
  CHECK(abs(report.states[0].energy - ctx.from_ratio(1, 16)) < ctx.pow10(-25));
  CHECK(abs(report.states[1].energy - ctx.from_ratio(9, 16)) < ctx.pow10(-25));
  // full-precision agreement is reported when the self-check is disabled
  CHECK(report.states[0].matched_selfcheck == 30);
  CHECK(report.states[0].digits.fractional_digits() == 30);
}

TEST_CASE("config validation") {
  RunConfig config;
  config.lambda = Rational::parse("1");
  config.states = 2;
  config.mesh_points = 2;
  config.precision = 40;

  config.check_increment = 20;  // trust region applies with the check on
  CHECK_THROWS_AS(solve_spectrum(config), ConfigError);

  config.check_increment = 0;
  config.states = 3;  // exceeds the matrix order
  CHECK_THROWS_AS(solve_spectrum(config), ConfigError);

  config.states = 1;
  config.mesh_points = 0;
  CHECK_THROWS_AS(solve_spectrum(config), ConfigError);

  config.mesh_points = 2;
  config.scaling = Rational{-1, 1};
  CHECK_THROWS_AS(solve_spectrum(config), ConfigError);
}

TEST_CASE("identical-N self check certifies full precision") {
  RunConfig config;
  config.lambda = Rational::parse("-1");
  config.states = 1;
  config.mesh_points = 10;
  config.precision = 40;
  config.check_increment = 0;
  const auto matched = self_check_accuracy(config);
  REQUIRE(matched.size() == 1);
  CHECK(matched[0] == 30);
}

TEST_CASE("paper marker, self-check and study at N = 100, lambda = -1") {
  // [100_25]: the paper's E0 string is reproduced through decimal place 25
  RunConfig config;
  config.lambda = Rational::parse("-1");
  config.states = 1;
  config.mesh_points = 100;
  config.precision = 120;
  config.variant = KineticVariant::Exact;
  config.check_increment = 20;

  const SolveReport report = solve_spectrum(config);
  REQUIRE(report.states.size() == 1);
  REQUIRE(report.states[0].matched_reference.has_value());
  CHECK(*report.states[0].matched_reference >= 25);
  CHECK(report.states[0].matched_selfcheck >= 25);
  // reported digits are capped by the self-check agreement
  CHECK(report.states[0].digits.fractional_digits() == report.states[0].matched_selfcheck);

  // reported accuracy is honest: reference match cannot outrun the
  // self-check by more than the digit-boundary slack
  CHECK(*report.states[0].matched_reference <= report.states[0].matched_selfcheck + 2);

  // the 25-digit truncation equals the stored expansion's prefix
  const PrecisionContext ctx(120);
  const auto prefix = to_decimal_string(report.states[0].energy, 25, ctx);
  CHECK(prefix.str() == "0.6209270298257486608580357");
}

TEST_CASE("node counts label the states at N = 100, lambda = 1") {
  RunConfig config;
  config.lambda = Rational::parse("1");
  config.states = 20;
  config.mesh_points = 100;
  config.precision = 120;
  config.check_increment = 0;
  config.want_vectors = true;

  const SolveReport report = solve_spectrum(config);
  for (long k = 0; k < 20; ++k) {
    REQUIRE(report.states[k].nodes.has_value());
    CHECK(*report.states[k].nodes == k);
  }
  // E19 reproduces the paper through decimal place 8 (marker 100_8)
  REQUIRE(report.states[19].matched_reference.has_value());
  CHECK(*report.states[19].matched_reference >= 8);
}

TEST_CASE("convergence study reproduces the early lambda = -1 markers") {
  const auto rows = convergence_study(Rational::parse("-1"), 0, {25, 50, 75}, 60,
                                      KineticVariant::Exact, Rational{1, 1},
                                      ReferenceTable::embedded());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].matched_decimal_places == 8);
  CHECK(rows[1].matched_decimal_places == 14);
  CHECK(rows[2].matched_decimal_places == 20);
  for (const auto& row : rows) CHECK(row.runtime_seconds > 0);
  for (size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].matched_decimal_places + 1 >= rows[i - 1].matched_decimal_places);
  }

  CHECK_THROWS_AS(convergence_study(Rational::parse("2"), 0, {10, 20}, 40, KineticVariant::Exact,
                                    Rational{1, 1}, ReferenceTable::embedded()),
                  MissingReference);
  CHECK_THROWS_AS(convergence_study(Rational::parse("1"), 0, {20, 10}, 40, KineticVariant::Exact,
                                    Rational{1, 1}, ReferenceTable::embedded()),
                  ConfigError);
}

TEST_CASE("structured output carries the spec'd fields and is thread-count invariant") {
  RunConfig config;
  config.lambda = Rational::parse("1");
  config.states = 2;
  config.mesh_points = 24;
  config.precision = 60;
  config.check_increment = 6;

  set_thread_cap(1);
  const SolveReport first = solve_spectrum(config);
  const std::string one_thread = render_report_json(first, /*include_timings=*/false);
  set_thread_cap(4);
  const std::string four_threads = render_report_json(solve_spectrum(config), false);
  set_thread_cap(-1);
  CHECK(one_thread == four_threads);

  const auto parsed = nlohmann::json::parse(one_thread);
  CHECK(parsed["lambda"] == "1");
  CHECK(parsed["mesh_points"] == 24);
  CHECK(parsed["precision"] == 60);
  CHECK(parsed["variant"] == "exact");
  CHECK(parsed["scaling"] == "1");
  REQUIRE(parsed["energies"].is_array());
  CHECK(parsed["energies"].size() == 2);
  CHECK(parsed["energies"][0]["digits"].is_string());
  CHECK(parsed["energies"][0].contains("matched_selfcheck"));
  CHECK(!parsed.contains("runtime_seconds"));

  const std::string timed = render_report_json(first, true);
  const auto parsed_timed = nlohmann::json::parse(timed);
  CHECK(parsed_timed["runtime_seconds"]["total"].is_number());
  CHECK(parsed_timed["runtime_seconds"]["per_stage"].contains("tridiagonalize"));
}
