// triuncert: sweeps and single-state evaluation for the tripartite
// entropic uncertainty bound.
//
//   triuncert run --scenario ghz --points 21 --output ghz.csv
//   triuncert eval --state rho.json --format json
//   triuncert state --family werner --p 0.3 --output rho.json
//
// Exit codes: 0 success, 2 validation error, 3 invariant violation.

#include <CLI11.hpp>
#include <iostream>
#include <numbers>

#include "triuncert/error.hpp"
#include "triuncert/experiments.hpp"
#include "triuncert/kernels.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitViolation = 3;

using namespace triuncert;

MeasurementBasis load_basis(const std::string& spec) {
  if (spec == "x" || spec == "y" || spec == "z") return pauli_basis(spec);
  return basis_from_json(read_json_file(spec));
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tripartite quantum-memory entropic uncertainty bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  ScenarioConfig cfg;
  std::string scenario = "ghz";
  std::string format = "csv";

  auto* run = app.add_subcommand("run", "Run a sweep scenario and write CSV/JSON data");
  run->add_option("--scenario", scenario, "ghz|w|werner|random-scatter|random-purity|xstate-check|keyrate")
      ->check(CLI::IsMember({"ghz", "w", "werner", "random-scatter", "random-purity", "xstate-check", "keyrate"}));
  run->add_option("--points", cfg.points, "Grid points for parameter sweeps")->capture_default_str();
  run->add_option("--samples", cfg.samples, "Random states per batch")->capture_default_str();
  run->add_option("--seed", cfg.seed, "Base seed; sample i uses seed + i")->capture_default_str();
  run->add_option("--alpha", cfg.alpha, "W-state mixing angle (radians)")->capture_default_str();
  run->add_option("--output", cfg.output_path, "Output file (default stdout)");
  run->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  run->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)")->capture_default_str();

  std::string state_file, x_spec = "x", z_spec = "z", xp_spec, zp_spec, eval_output;
  auto* eval = app.add_subcommand("eval", "Evaluate every bound for one three-qubit state");
  eval->add_option("--state", state_file, "JSON density matrix {dims, re, im}")->required();
  eval->add_option("--x", x_spec, "Alice's first basis: x|y|z or a JSON basis file")->capture_default_str();
  eval->add_option("--z", z_spec, "Alice's second basis")->capture_default_str();
  eval->add_option("--x-prime", xp_spec, "Bob's basis paired with --x (default: same as --x)");
  eval->add_option("--z-prime", zp_spec, "Bob's basis paired with --z (default: same as --z)");
  eval->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  eval->add_option("--output", eval_output, "Output file (default stdout)");

  std::string family = "ghz", state_output;
  double beta = std::numbers::pi / 4, theta = std::numbers::pi / 4, alpha = std::numbers::pi / 4, p = 0.0;
  std::uint64_t state_seed = 0;
  std::size_t rank = 8;
  auto* state = app.add_subcommand("state", "Export a named or random state as JSON");
  state->add_option("--family", family, "ghz|w|werner|random|mixed")
      ->check(CLI::IsMember({"ghz", "w", "werner", "random", "mixed"}))
      ->capture_default_str();
  state->add_option("--beta", beta, "GHZ angle");
  state->add_option("--theta", theta, "W-state angle theta");
  state->add_option("--alpha", alpha, "W-state angle alpha");
  state->add_option("--p", p, "Werner noise weight");
  state->add_option("--seed", state_seed, "Random-state seed");
  state->add_option("--rank", rank, "Random-state rank (1..8)");
  state->add_option("--output", state_output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  cfg.format = format == "json" ? OutputFormat::json : OutputFormat::csv;

  try {
    if (*run) {
      cfg.scenario = parse_scenario(scenario);
      const ScenarioResult result = run_scenario(cfg);
      emit(render(result.table, cfg.format), cfg.output_path);
      if (result.violations > 0) {
        std::cerr << "triuncert: " << result.violations << " invariant violation(s) in scenario " << scenario
                  << "\n";
        return kExitViolation;
      }
    } else if (*eval) {
      const DensityMatrix rho = density_matrix_from_json(read_json_file(state_file));
      const MeasurementBasis x = load_basis(x_spec);
      const MeasurementBasis z = load_basis(z_spec);
      const MeasurementBasis xp = load_basis(xp_spec.empty() ? x_spec : xp_spec);
      const MeasurementBasis zp = load_basis(zp_spec.empty() ? z_spec : zp_spec);
      emit(eval_to_text(run_eval(rho, x, z, xp, zp), cfg.format), eval_output);
    } else if (*state) {
      DensityMatrix rho = DensityMatrix::maximally_mixed({2, 2, 2});
      if (family == "ghz") rho = make_ghz(beta);
      if (family == "w") rho = make_w(theta, alpha);
      if (family == "werner") rho = make_werner(p);
      if (family == "random") rho = random_state(state_seed, rank).rho;
      emit(to_json(rho).dump(1) + "\n", state_output);
    }
  } catch (const ParseError& e) {
    std::cerr << "triuncert: parse error at byte " << e.offset() << ": " << e.what() << "\n";
    return kExitValidation;
  } catch (const DomainError& e) {
    std::cerr << "triuncert: domain error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ShapeError& e) {
    std::cerr << "triuncert: shape error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "triuncert: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
