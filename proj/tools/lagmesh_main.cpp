#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "lagmesh/harness.hpp"

namespace {

using namespace lagmesh;

struct CommonOptions {
  std::string reference_path;
  bool no_timings = false;
  std::string format = "text";
};

const ReferenceTable& resolve_reference(const CommonOptions& opts, ReferenceTable& storage) {
  if (opts.reference_path.empty()) return ReferenceTable::embedded();
  storage = ReferenceTable::load_file(opts.reference_path);
  return storage;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Structured;
  throw ConfigError("unknown format '" + name + "' (use text|json)");
}

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--reference", opts.reference_path,
                  "reference data file (defaults to the embedded copy)");
  cmd->add_flag("--no-timings", opts.no_timings,
                "omit wall-clock fields so outputs are byte-comparable");
  cmd->add_option("--format", opts.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
}

int run(int argc, char** argv) {
  CLI::App app{"Lagrange-mesh eigensolver for one-dimensional polynomial potentials"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key = value file mirroring the flags; flags win");

  // solve
  auto* solve = app.add_subcommand("solve", "energies (and optionally vectors) at one mesh size");
  std::string lambda_text = "1", scaling_text = "1", variant_text = "exact";
  long states = 20, mesh_points = 0, precision = 300, increment = 20;
  bool vectors = false;
  std::string dump_path;
  CommonOptions solve_opts;
  solve->add_option("--lambda", lambda_text, "potential parameter (integer, decimal or p/q)")
      ->required();
  solve->add_option("--states", states, "number of lowest states (default 20)");
  solve->add_option("--mesh-points", mesh_points, "mesh size N")->required();
  solve->add_option("--precision", precision, "working precision in decimal digits (default 300)");
  solve->add_option("--variant", variant_text, "kinetic matrix form: exact|gauss")
      ->check(CLI::IsMember({"exact", "gauss"}));
  solve->add_option("--scaling", scaling_text, "mesh scale h (default 1)");
  solve->add_option("--check-increment", increment,
                    "self-check mesh increment (default 20, 0 disables)");
  solve->add_flag("--vectors", vectors, "compute eigenvectors and node counts");
  solve->add_option("--dump-hamiltonian", dump_path, "write the assembled matrix to a file");
  add_common(solve, solve_opts);

  // study
  auto* study = app.add_subcommand("study", "convergence against the paper expansion");
  std::string study_lambda = "1", study_scaling = "1", study_variant = "exact";
  long study_state = 0, study_precision = 300;
  std::vector<long> mesh_list;
  CommonOptions study_opts;
  study->add_option("--lambda", study_lambda, "potential parameter")->required();
  study->add_option("--state", study_state, "state index (default 0)");
  study->add_option("--mesh-list", mesh_list, "comma-separated ascending mesh sizes")
      ->required()
      ->delimiter(',');
  study->add_option("--precision", study_precision, "working precision (default 300)");
  study->add_option("--variant", study_variant, "kinetic matrix form: exact|gauss")
      ->check(CLI::IsMember({"exact", "gauss"}));
  study->add_option("--scaling", study_scaling, "mesh scale h (default 1)");
  add_common(study, study_opts);

  // check
  auto* check = app.add_subcommand("check", "reproduce the published digit markers");
  bool against_paper = false;
  long max_mesh = 400;
  CommonOptions check_opts;
  check->add_flag("--against-paper", against_paper, "run the full marker suite")->required();
  check->add_option("--max-mesh", max_mesh, "largest mesh size to run (default 400)");
  add_common(check, check_opts);

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) {
    RunConfig config;
    config.lambda = Rational::parse(lambda_text);
    config.states = states;
    config.mesh_points = mesh_points;
    config.precision = precision;
    config.variant = variant_from_string(variant_text);
    config.scaling = Rational::parse(scaling_text);
    config.check_increment = increment;
    config.want_vectors = vectors;
    config.format = parse_format(solve_opts.format);

    if (!dump_path.empty()) {
      const PrecisionContext ctx(config.precision);
      const LagrangeMesh mesh = build_mesh(config.mesh_points, config.scaling.value(ctx), ctx);
      const auto ham = hamiltonian_matrix(
          mesh, PotentialSpec::quartic(config.lambda.value(ctx), ctx), config.variant);
      std::ofstream out(dump_path);
      if (!out) throw ConfigError("cannot open dump file: " + dump_path);
      dump_matrix(out, ham, mesh, config.variant, ctx, 20);
    }

    ReferenceTable storage;
    const ReferenceTable& reference = resolve_reference(solve_opts, storage);
    const SolveReport report = solve_spectrum(config, &reference);
    if (config.format == OutputFormat::Structured) {
      std::cout << render_report_json(report, !solve_opts.no_timings);
    } else {
      std::cout << render_report_text(report, !solve_opts.no_timings);
    }
    return 0;
  }

  if (study->parsed()) {
    ReferenceTable storage;
    const ReferenceTable& reference = resolve_reference(study_opts, storage);
    const Rational lambda = Rational::parse(study_lambda);
    const auto rows =
        convergence_study(lambda, study_state, mesh_list, study_precision,
                          variant_from_string(study_variant), Rational::parse(study_scaling),
                          reference);
    if (parse_format(study_opts.format) == OutputFormat::Structured) {
      std::cout << render_study_json(lambda, study_state, rows, !study_opts.no_timings);
    } else {
      std::cout << render_study_text(lambda, study_state, rows);
    }
    return 0;
  }

  // check
  ReferenceTable storage;
  const ReferenceTable& reference = resolve_reference(check_opts, storage);
  const auto rows = paper_check(reference, max_mesh);
  if (parse_format(check_opts.format) == OutputFormat::Structured) {
    std::cout << render_check_json(rows, !check_opts.no_timings);
  } else {
    std::cout << render_check_text(rows);
  }
  for (const auto& row : rows) {
    if (!row.pass) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lagmesh::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const lagmesh::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 2;
  }
}
