#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lagmesh/decimal.hpp"
#include "lagmesh/eigensolve.hpp"
#include "lagmesh/mesh.hpp"
#include "lagmesh/reference.hpp"

namespace lagmesh {

enum class OutputFormat { Text, Structured };

struct RunConfig {
  Rational lambda;
  long states = 20;
  long mesh_points = 0;
  long precision = 300;
  KineticVariant variant = KineticVariant::Exact;
  Rational scaling{1, 1};       // mesh scale h
  long check_increment = 20;    // self-check runs at N + increment; 0 disables
  bool want_vectors = false;
  OutputFormat format = OutputFormat::Text;
};

struct StageTimings {
  double roots = 0;
  double assembly = 0;
  double tridiagonalize = 0;
  double bisect = 0;
  double vectors = 0;
  double self_check = 0;
  double total = 0;
};

struct StateResult {
  long index = 0;
  BigReal energy;                        // full working-precision value
  DecimalString digits;                  // truncated at the self-check agreement length
  long matched_selfcheck = 0;            // capped at P-10
  std::optional<int> matched_reference;  // present when a paper expansion exists
  std::optional<long> nodes;             // present when vectors were requested
};

struct SolveReport {
  RunConfig config;
  std::vector<StateResult> states;
  StageTimings timings;
};

// Full pipeline: mesh, Hamiltonian, tridiagonalization, bisection of the
// requested states, optional eigenvectors and node counts, and the N vs
// N+increment accuracy certification.  Reported digit counts never exceed
// the self-check agreement.
SolveReport solve_spectrum(const RunConfig& config,
                           const ReferenceTable* reference = &ReferenceTable::embedded());

// Matched decimal places per state between the N and N+increment runs.
std::vector<long> self_check_accuracy(const RunConfig& config);

struct ConvergenceRow {
  long mesh_points = 0;
  double runtime_seconds = 0;
  int matched_decimal_places = 0;
  DecimalString energy;
};

// One row per mesh size: energy, wall time, and matched digits against the
// stored paper expansion for (lambda, state).
std::vector<ConvergenceRow> convergence_study(const Rational& lambda, long state,
                                              const std::vector<long>& mesh_list, long precision,
                                              KineticVariant variant, const Rational& scaling,
                                              const ReferenceTable& reference);

// Strict sign changes between consecutive mesh components, ignoring
// components below the threshold.
long count_nodes(const VectorX<BigReal>& vector, const BigReal& threshold);

// Reproduction config for one marker run of `check --against-paper`.
struct PaperCheckRow {
  std::string lambda_key;
  long state = 0;
  long mesh_points = 0;
  int decimal_place = 0;
  KineticVariant variant = KineticVariant::Exact;
  Rational scaling{1, 1};
  long precision = 0;
  int matched = 0;
  bool rounded_display_match = false;  // marker met only under rounded display
  bool pass = false;
  double runtime_seconds = 0;
};

// Runs every stored marker with mesh size <= max_mesh at P = max(120, Z+30)
// and reports matched digits against the stored expansion.
std::vector<PaperCheckRow> paper_check(const ReferenceTable& reference, long max_mesh);

// Renderers for the CLI.  Structured output is JSON with decimal-text digit
// strings; timings can be omitted so runs are byte-comparable.
std::string render_report_text(const SolveReport& report, bool include_timings = true);
std::string render_report_json(const SolveReport& report, bool include_timings = true);
std::string render_study_text(const Rational& lambda, long state,
                              const std::vector<ConvergenceRow>& rows);
std::string render_study_json(const Rational& lambda, long state,
                              const std::vector<ConvergenceRow>& rows, bool include_timings = true);
std::string render_check_text(const std::vector<PaperCheckRow>& rows);
std::string render_check_json(const std::vector<PaperCheckRow>& rows, bool include_timings = true);

}  // namespace lagmesh
