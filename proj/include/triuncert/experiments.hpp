#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triuncert/bounds.hpp"
#include "triuncert/keyrate.hpp"
#include "triuncert/serialize.hpp"

namespace triuncert {

inline constexpr const char* kVersion = "1.0.0";

enum class Scenario { ghz, w, werner, random_scatter, random_purity, xstate_check, keyrate, eval };
enum class OutputFormat { csv, json };

Scenario parse_scenario(const std::string& name);
std::string scenario_name(Scenario s);

struct ScenarioConfig {
  Scenario scenario = Scenario::ghz;
  std::size_t points = 201;     // grid size for parameter sweeps
  std::size_t samples = 10000;  // batch size for random scenarios
  std::uint64_t seed = 0;       // sample i uses seed + i
  double alpha = std::numbers::pi / 4;  // W-state mixing angle
  std::string output_path;      // empty: caller decides (stdout)
  OutputFormat format = OutputFormat::csv;
  unsigned threads = 0;         // 0: hardware concurrency; never affects output

  /// Throws DomainError if points < 2 or samples < 1.
  void validate() const;
};

/// Column-oriented numeric table with ordered metadata. `summary` is an
/// optional second table (per-bin means for the purity scenario).
struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> summary_columns;
  std::vector<std::vector<double>> summary;

  std::size_t column(const std::string& name) const;
  std::optional<std::string> meta_value(const std::string& key) const;
};

struct ScenarioResult {
  Table table;
  /// Rows that broke a pointwise invariant the scenario is meant to exhibit.
  std::size_t violations = 0;
};

ScenarioResult run_ghz(const ScenarioConfig& cfg);
ScenarioResult run_w(const ScenarioConfig& cfg);
ScenarioResult run_werner(const ScenarioConfig& cfg);
ScenarioResult run_random_scatter(const ScenarioConfig& cfg);
ScenarioResult run_random_purity(const ScenarioConfig& cfg);
ScenarioResult run_xstate_check(const ScenarioConfig& cfg);
ScenarioResult run_keyrate(const ScenarioConfig& cfg);

/// Dispatches on cfg.scenario; eval is not a sweep and is rejected here.
ScenarioResult run_scenario(const ScenarioConfig& cfg);

struct EvalResult {
  BoundReport bounds;
  KeyRateReport keys;
};

/// Evaluates a three-qubit state with x, z on A and x', z' on B.
EvalResult run_eval(const DensityMatrix& rho, const MeasurementBasis& x, const MeasurementBasis& z,
                    const MeasurementBasis& x_prime, const MeasurementBasis& z_prime);

/// Reads the state from a JSON file and evaluates it with Pauli x and z on
/// both sides. ParseError for malformed files, DomainError for invalid states.
EvalResult run_eval(const ScenarioConfig& cfg, const std::string& state_file);

std::string eval_to_text(const EvalResult& r, OutputFormat format);

struct PurityBin {
  double lo = 0, hi = 0;
  std::size_t count = 0;
  double mean = 0;
};

/// Equal-width bins over [lo, hi]; the last bin is closed on the right.
std::vector<PurityBin> bin_means(const std::vector<double>& keys, const std::vector<double>& values,
                                 std::size_t nbins, double lo, double hi);

/// Whether the means of non-empty bins never increase from left to right.
bool means_non_increasing(const std::vector<PurityBin>& bins);

/// "#"-prefixed key=value lines, one header row, then data rows. The summary
/// table, if any, follows as "#"-prefixed lines.
std::string to_csv(const Table& t);

/// {"meta": {...}, "rows": [{col: value, ...}, ...], "summary": [...]}
std::string to_json_text(const Table& t);

std::string render(const Table& t, OutputFormat format);

/// Parses text produced by to_csv back into a table (meta and rows).
Table parse_csv(const std::string& text);

/// Writes text to a file; throws std::runtime_error naming the path on failure.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace triuncert
