#include "triuncert/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "triuncert/error.hpp"

namespace triuncert {

namespace {

constexpr double kTheoremTol = 1e-9;
constexpr double kRenesTol = 1e-12;
constexpr double kXStateTol = 1e-8;
constexpr double kKeyIdentityTol = 1e-12;
constexpr double kPi = std::numbers::pi;

// Runs body(i) for i in [0, count). Each index writes only its own slot, so
// results are independent of the thread count.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(count, 1)));
  if (n <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < count; i += n) body(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

double grid(double lo, double hi, std::size_t i, std::size_t points) {
  if (i + 1 == points) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
}

Table base_table(const ScenarioConfig& cfg) {
  Table t;
  t.meta.emplace_back("scenario", scenario_name(cfg.scenario));
  t.meta.emplace_back("version", kVersion);
  t.meta.emplace_back("seed", std::to_string(cfg.seed));
  return t;
}

const MeasurementBasis& pauli_x() {
  static const MeasurementBasis b = pauli_basis(Pauli::x);
  return b;
}

const MeasurementBasis& pauli_z() {
  static const MeasurementBasis b = pauli_basis(Pauli::z);
  return b;
}

void finish(ScenarioResult& r) { r.table.meta.emplace_back("violations", std::to_string(r.violations)); }

}  // namespace

Scenario parse_scenario(const std::string& name) {
  if (name == "ghz") return Scenario::ghz;
  if (name == "w") return Scenario::w;
  if (name == "werner") return Scenario::werner;
  if (name == "random-scatter") return Scenario::random_scatter;
  if (name == "random-purity") return Scenario::random_purity;
  if (name == "xstate-check") return Scenario::xstate_check;
  if (name == "keyrate") return Scenario::keyrate;
  if (name == "eval") return Scenario::eval;
  throw DomainError("unknown scenario '" + name + "'");
}

std::string scenario_name(Scenario s) {
  switch (s) {
    case Scenario::ghz: return "ghz";
    case Scenario::w: return "w";
    case Scenario::werner: return "werner";
    case Scenario::random_scatter: return "random-scatter";
    case Scenario::random_purity: return "random-purity";
    case Scenario::xstate_check: return "xstate-check";
    case Scenario::keyrate: return "keyrate";
    case Scenario::eval: return "eval";
  }
  return "unknown";
}

void ScenarioConfig::validate() const {
  if (points < 2) throw DomainError("points must be >= 2");
  if (samples < 1) throw DomainError("samples must be >= 1");
}

std::size_t Table::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("no column '" + name + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

std::optional<std::string> Table::meta_value(const std::string& key) const {
  for (const auto& [k, v] : meta)
    if (k == key) return v;
  return std::nullopt;
}

ScenarioResult run_ghz(const ScenarioConfig& cfg) {
  cfg.validate();
  ScenarioResult r{base_table(cfg)};
  r.table.meta.emplace_back("points", std::to_string(cfg.points));
  r.table.meta.emplace_back("grid", "beta in [0, pi/2]");
  r.table.columns = {"beta", "u_left", "u_right", "renes"};
  r.table.rows.resize(cfg.points);
  parallel_for(cfg.points, cfg.threads, [&](std::size_t i) {
    const double beta = grid(0.0, kPi / 2, i, cfg.points);
    const BoundReport b = full_report(make_ghz(beta), pauli_x(), pauli_z());
    r.table.rows[i] = {beta, b.u_left, b.u_right, b.renes};
  });
  for (const auto& row : r.table.rows)
    if (std::abs(row[1] - 1.0) > kTheoremTol || std::abs(row[2] - 1.0) > kTheoremTol ||
        std::abs(row[3] - 1.0) > kTheoremTol)
      ++r.violations;
  finish(r);
  return r;
}

ScenarioResult run_w(const ScenarioConfig& cfg) {
  cfg.validate();
  ScenarioResult r{base_table(cfg)};
  r.table.meta.emplace_back("points", std::to_string(cfg.points));
  r.table.meta.emplace_back("alpha", format_double(cfg.alpha));
  r.table.meta.emplace_back("grid", "theta in [0, pi]");
  r.table.columns = {"theta", "u_left", "u_right", "renes"};
  r.table.rows.resize(cfg.points);
  parallel_for(cfg.points, cfg.threads, [&](std::size_t i) {
    const double theta = grid(0.0, kPi, i, cfg.points);
    const BoundReport b = full_report(make_w(theta, cfg.alpha), pauli_x(), pauli_z());
    r.table.rows[i] = {theta, b.u_left, b.u_right, b.renes};
  });
  // Pure states: the bound collapses to q_mu and the relation must hold.
  for (const auto& row : r.table.rows)
    if (std::abs(row[2] - row[3]) > kTheoremTol || row[1] < row[2] - kTheoremTol) ++r.violations;
  finish(r);
  return r;
}

ScenarioResult run_werner(const ScenarioConfig& cfg) {
  cfg.validate();
  ScenarioResult r{base_table(cfg)};
  r.table.meta.emplace_back("points", std::to_string(cfg.points));
  r.table.meta.emplace_back("grid", "p in [0, 1]");
  r.table.columns = {"p", "u_left", "u_right", "renes", "analytic"};
  r.table.rows.resize(cfg.points);
  parallel_for(cfg.points, cfg.threads, [&](std::size_t i) {
    const double p = grid(0.0, 1.0, i, cfg.points);
    const BoundReport b = full_report(make_werner(p), pauli_x(), pauli_z());
    r.table.rows[i] = {p, b.u_left, b.u_right, b.renes, x_state_analytic(werner_x_params(p))};
  });
  for (const auto& row : r.table.rows)
    if (std::abs(row[1] - row[2]) > kXStateTol || std::abs(row[1] - row[4]) > kXStateTol ||
        row[2] < row[3] - kRenesTol)
      ++r.violations;
  finish(r);
  return r;
}

ScenarioResult run_random_scatter(const ScenarioConfig& cfg) {
  cfg.validate();
  ScenarioResult r{base_table(cfg)};
  r.table.meta.emplace_back("samples", std::to_string(cfg.samples));
  r.table.columns = {"index", "purity", "u_left", "u_right", "renes"};
  r.table.rows.resize(cfg.samples);
  parallel_for(cfg.samples, cfg.threads, [&](std::size_t i) {
    const RandomState s = random_state(cfg.seed + i);
    const BoundReport b = full_report(s.rho, pauli_x(), pauli_z());
    r.table.rows[i] = {static_cast<double>(i), b.purity, b.u_left, b.u_right, b.renes};
  });
  std::size_t theorem = 0, renes = 0;
  for (const auto& row : r.table.rows) {
    const bool bad_theorem = row[2] < row[3] - kTheoremTol;
    const bool bad_renes = row[3] < row[4] - kRenesTol;
    theorem += bad_theorem;
    renes += bad_renes;
    r.violations += bad_theorem || bad_renes;
  }
  r.table.meta.emplace_back("theorem_violations", std::to_string(theorem));
  r.table.meta.emplace_back("renes_violations", std::to_string(renes));
  finish(r);
  return r;
}

ScenarioResult run_random_purity(const ScenarioConfig& cfg) {
  cfg.validate();
  constexpr std::size_t kPureRows = 10;
  constexpr std::size_t kBins = 10;
  ScenarioResult r{base_table(cfg)};
  r.table.meta.emplace_back("samples", std::to_string(cfg.samples));
  r.table.meta.emplace_back("pure_rows", std::to_string(kPureRows));
  // kind: 0 random, 1 random pure (rank 1), 2 maximally mixed
  r.table.columns = {"index", "kind", "purity", "u_right"};
  const std::size_t total = cfg.samples + kPureRows + 1;
  r.table.rows.resize(total);
  parallel_for(total, cfg.threads, [&](std::size_t i) {
    double kind = 0.0;
    DensityMatrix rho = DensityMatrix::maximally_mixed({2, 2, 2});
    if (i < cfg.samples) {
      rho = random_state(cfg.seed + i).rho;
    } else if (i < cfg.samples + kPureRows) {
      kind = 1.0;
      rho = random_state(cfg.seed + i, 1).rho;
    } else {
      kind = 2.0;
    }
    const BoundReport b = full_report(rho, pauli_x(), pauli_z());
    r.table.rows[i] = {static_cast<double>(i), kind, b.purity, b.u_right};
  });

  std::vector<double> purities, bounds;
  for (const auto& row : r.table.rows) {
    const double kind = row[1], p = row[2], u = row[3];
    if (p < 0.125 - 1e-10 || p > 1.0 + 1e-10) ++r.violations;
    if (kind == 1.0 && std::abs(u - 1.0) > kTheoremTol) ++r.violations;
    if (kind == 2.0 && (std::abs(p - 0.125) > kTheoremTol || std::abs(u - 2.0) > kTheoremTol)) ++r.violations;
    if (kind == 0.0) {
      purities.push_back(p);
      bounds.push_back(u);
    }
  }

  const auto bins = bin_means(purities, bounds, kBins, 0.125, 1.0);
  r.table.summary_columns = {"bin_lo", "bin_hi", "count", "mean_u_right"};
  for (const auto& b : bins) r.table.summary.push_back({b.lo, b.hi, static_cast<double>(b.count), b.mean});
  // Statistical trend, reported rather than counted as a violation.
  r.table.meta.emplace_back("trend_non_increasing", means_non_increasing(bins) ? "true" : "false");
  finish(r);
  return r;
}

ScenarioResult run_xstate_check(const ScenarioConfig& cfg) {
  cfg.validate();
  constexpr std::size_t kWernerPoints = 21;
  ScenarioResult r{base_table(cfg)};
  r.table.meta.emplace_back("samples", std::to_string(cfg.samples));
  // kind: 0 random X-state, 1 GHZ(pi/4), 2 Werner grid point; param is the
  // sample index or Werner p
  r.table.columns = {"kind", "param", "u_left", "u_right", "analytic", "max_dev"};
  const std::size_t total = cfg.samples + 1 + kWernerPoints;
  r.table.rows.resize(total);
  parallel_for(total, cfg.threads, [&](std::size_t i) {
    double kind = 0.0, param = static_cast<double>(i);
    XStateParams params;
    if (i < cfg.samples) {
      params = random_x_params(cfg.seed + i);
    } else if (i == cfg.samples) {
      kind = 1.0;
      param = kPi / 4;
      params = ghz_x_params(kPi / 4);
    } else {
      kind = 2.0;
      param = grid(0.0, 1.0, i - cfg.samples - 1, kWernerPoints);
      params = werner_x_params(param);
    }
    const BoundReport b = full_report(make_x_state(params), pauli_x(), pauli_z());
    const double analytic = x_state_analytic(params);
    const double dev = std::max({std::abs(b.u_left - b.u_right), std::abs(b.u_left - analytic),
                                 std::abs(b.u_right - analytic)});
    r.table.rows[i] = {kind, param, b.u_left, b.u_right, analytic, dev};
  });
  double worst = 0.0;
  for (const auto& row : r.table.rows) {
    worst = std::max(worst, row[5]);
    if (row[5] > kXStateTol) ++r.violations;
  }
  r.table.meta.emplace_back("max_deviation", format_double(worst));
  finish(r);
  return r;
}

ScenarioResult run_keyrate(const ScenarioConfig& cfg) {
  cfg.validate();
  ScenarioResult r{base_table(cfg)};
  r.table.meta.emplace_back("samples", std::to_string(cfg.samples));
  r.table.meta.emplace_back("roles", "A,B,E");
  r.table.columns = {"index", "purity", "k_berta", "k_improved", "k_measured", "delta"};
  r.table.rows.resize(cfg.samples);
  parallel_for(cfg.samples, cfg.threads, [&](std::size_t i) {
    const RandomState s = random_state(cfg.seed + i);
    const KeyRateReport k = key_report(s.rho, pauli_x(), pauli_z(), pauli_x(), pauli_z());
    r.table.rows[i] = {static_cast<double>(i), purity(s.rho), k.k_berta, k.k_improved, k.k_measured, k.delta};
  });
  for (const auto& row : r.table.rows) {
    const double gain = std::max(0.0, row[5]);
    if (std::abs(row[3] - row[2] - gain) > kKeyIdentityTol || row[4] > row[3] + kTheoremTol) ++r.violations;
  }
  finish(r);
  return r;
}

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
  switch (cfg.scenario) {
    case Scenario::ghz: return run_ghz(cfg);
    case Scenario::w: return run_w(cfg);
    case Scenario::werner: return run_werner(cfg);
    case Scenario::random_scatter: return run_random_scatter(cfg);
    case Scenario::random_purity: return run_random_purity(cfg);
    case Scenario::xstate_check: return run_xstate_check(cfg);
    case Scenario::keyrate: return run_keyrate(cfg);
    case Scenario::eval: break;
  }
  throw DomainError("the eval scenario needs a state file; use run_eval");
}

EvalResult run_eval(const DensityMatrix& rho, const MeasurementBasis& x, const MeasurementBasis& z,
                    const MeasurementBasis& x_prime, const MeasurementBasis& z_prime) {
  if (rho.dims() != Dims{2, 2, 2}) throw DomainError("eval expects a three-qubit state with dims [2,2,2]");
  return {full_report(rho, x, z), key_report(rho, x, z, x_prime, z_prime)};
}

EvalResult run_eval(const ScenarioConfig&, const std::string& state_file) {
  const DensityMatrix rho = density_matrix_from_json(read_json_file(state_file));
  return run_eval(rho, pauli_x(), pauli_z(), pauli_x(), pauli_z());
}

std::string eval_to_text(const EvalResult& r, OutputFormat format) {
  if (format == OutputFormat::json) {
    Json j{{"bounds", to_json(r.bounds)}, {"keyrate", to_json(r.keys)}};
    return j.dump(2) + "\n";
  }
  Table t;
  t.meta.emplace_back("scenario", "eval");
  t.meta.emplace_back("version", kVersion);
  t.columns = bound_report_columns();
  t.columns.insert(t.columns.end(), key_report_columns().begin(), key_report_columns().end());
  std::vector<double> row = bound_report_row(0, r.bounds);
  const auto keys = key_report_row(r.keys);
  row.insert(row.end(), keys.begin(), keys.end());
  t.rows.push_back(std::move(row));
  return to_csv(t);
}

std::vector<PurityBin> bin_means(const std::vector<double>& keys, const std::vector<double>& values,
                                 std::size_t nbins, double lo, double hi) {
  if (keys.size() != values.size()) throw ShapeError("bin_means: keys and values differ in length");
  if (nbins == 0 || !(hi > lo)) throw DomainError("bin_means: need at least one bin over a non-empty range");
  std::vector<PurityBin> bins(nbins);
  const double width = (hi - lo) / static_cast<double>(nbins);
  for (std::size_t b = 0; b < nbins; ++b) {
    bins[b].lo = lo + width * static_cast<double>(b);
    bins[b].hi = b + 1 == nbins ? hi : lo + width * static_cast<double>(b + 1);
  }
  std::vector<double> sums(nbins, 0.0);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (keys[i] < lo || keys[i] > hi) continue;
    auto b = static_cast<std::size_t>((keys[i] - lo) / width);
    b = std::min(b, nbins - 1);
    sums[b] += values[i];
    ++bins[b].count;
  }
  for (std::size_t b = 0; b < nbins; ++b)
    bins[b].mean = bins[b].count ? sums[b] / static_cast<double>(bins[b].count) : 0.0;
  return bins;
}

bool means_non_increasing(const std::vector<PurityBin>& bins) {
  std::optional<double> prev;
  for (const auto& b : bins) {
    if (b.count == 0) continue;
    if (prev && b.mean > *prev) return false;
    prev = b.mean;
  }
  return true;
}

std::string to_csv(const Table& t) {
  std::ostringstream os;
  for (const auto& [k, v] : t.meta) os << "# " << k << "=" << v << "\n";
  for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_double(row[c]);
    os << "\n";
  }
  if (!t.summary_columns.empty()) {
    os << "# summary: ";
    for (std::size_t c = 0; c < t.summary_columns.size(); ++c) os << (c ? "," : "") << t.summary_columns[c];
    os << "\n";
    for (const auto& row : t.summary) {
      os << "# ";
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_double(row[c]);
      os << "\n";
    }
  }
  return os.str();
}

std::string to_json_text(const Table& t) {
  Json meta = Json::object();
  for (const auto& [k, v] : t.meta) meta[k] = v;
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json obj = Json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[t.columns[c]] = row[c];
    rows.push_back(std::move(obj));
  }
  Json out{{"meta", std::move(meta)}, {"rows", std::move(rows)}};
  if (!t.summary_columns.empty()) {
    Json summary = Json::array();
    for (const auto& row : t.summary) {
      Json obj = Json::object();
      for (std::size_t c = 0; c < row.size(); ++c) obj[t.summary_columns[c]] = row[c];
      summary.push_back(std::move(obj));
    }
    out["summary"] = std::move(summary);
  }
  return out.dump(1) + "\n";
}

std::string render(const Table& t, OutputFormat format) {
  return format == OutputFormat::json ? to_json_text(t) : to_csv(t);
}

Table parse_csv(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  const auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::istringstream ls(s);
    std::string cell;
    while (std::getline(ls, cell, ',')) out.push_back(cell);
    return out;
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (!have_header && eq != std::string::npos) t.meta.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
      continue;
    }
    if (!have_header) {
      t.columns = split(line);
      have_header = true;
      continue;
    }
    std::vector<double> row;
    for (const auto& cell : split(line)) row.push_back(std::stod(cell));
    if (row.size() != t.columns.size()) throw ParseError("CSV row width does not match header", 0);
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace triuncert
