#include "geomphase/cli_app.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numbers>
#include <thread>

#include "geomphase/interferometric.hpp"
#include "geomphase/uhlmann_transport.hpp"

namespace geomphase::cli {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

const std::vector<double> kDefaultMGrid = {0.0, 0.25, 0.5, 0.75, 1.0, 1.25};
const std::vector<double> kDefaultTGrid = {0.2, 0.4, 0.6, 0.8, 1.0};

std::vector<double> default_critical_m_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 60; ++i) {
    grid.push_back(i * 0.025);
  }
  return grid;
}

std::vector<double> default_x_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 199; ++i) {
    grid.push_back(i * 0.005);
  }
  return grid;
}

int resolve_density(const RunConfig& cfg, int fallback) {
  const int density = cfg.density.value_or(fallback);
  if (density < 64) {
    throw InvalidStateError("density must be >= 64");
  }
  return density;
}

int resolve_turns(const RunConfig& cfg, int fallback) {
  const int turns = cfg.turns.value_or(fallback);
  if (turns < 1) {
    throw InvalidStateError("turns must be >= 1");
  }
  return turns;
}

std::vector<double> resolve_grid(const std::vector<double>& given,
                                 const std::vector<double>& fallback) {
  const std::vector<double>& grid = given.empty() ? fallback : given;
  if (grid.empty()) {
    throw InvalidStateError("parameter grid must be non-empty");
  }
  return grid;
}

// Runs fn(i) for i in [0, n) on a small worker pool; any exception is
// rethrown on the calling thread after the pool drains.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t workers = std::min<std::size_t>(hw == 0 ? 1 : hw, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

Cell cell(double v) { return Cell{v}; }
Cell cell(long long v) { return Cell{v}; }
Cell cell(int v) { return Cell{static_cast<long long>(v)}; }
Cell cell(std::string v) { return Cell{std::move(v)}; }

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += ch;
    }
  }
  return out;
}

void write_cell_csv(const Cell& c, std::ostream& os) {
  if (std::holds_alternative<std::monostate>(c)) {
    return;
  }
  if (const auto* i = std::get_if<long long>(&c)) {
    os << *i;
  } else if (const auto* d = std::get_if<double>(&c)) {
    os << format_double(*d);
  } else {
    os << std::get<std::string>(c);
  }
}

void write_cell_json(const Cell& c, std::ostream& os) {
  if (std::holds_alternative<std::monostate>(c)) {
    os << "null";
  } else if (const auto* i = std::get_if<long long>(&c)) {
    os << *i;
  } else if (const auto* d = std::get_if<double>(&c)) {
    os << format_double(*d);
  } else {
    os << '"' << json_escape(std::get<std::string>(c)) << '"';
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_csv(const Table& table, std::ostream& os) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i > 0) os << ',';
    os << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) os << ',';
      write_cell_csv(row[i], os);
    }
    os << '\n';
  }
}

void write_json(const Table& table, std::ostream& os) {
  os << "[\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    os << "  {";
    const auto& row = table.rows[r];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) os << ", ";
      os << '"' << json_escape(table.columns[i]) << "\": ";
      write_cell_json(row[i], os);
    }
    os << '}' << (r + 1 < table.rows.size() ? "," : "") << '\n';
  }
  os << "]\n";
}

Table make_spectrum_table(const RunConfig& cfg) {
  const std::vector<double>& m_grid = resolve_grid(cfg.m_grid, kDefaultMGrid);
  const int density = resolve_density(cfg, 1024);
  Table table;
  table.columns = {"m", "k", "delta_k"};
  for (double m : m_grid) {
    const ChainParams params{m, 1.0};
    for (int i = 0; i <= density; ++i) {
      const double k = two_pi * i / density;
      table.rows.push_back({cell(m), cell(k), cell(band_gap(params, k))});
    }
  }
  return table;
}

Table make_bloch_curves_table(const RunConfig& cfg) {
  const std::vector<double>& m_grid = resolve_grid(cfg.m_grid, kDefaultMGrid);
  const std::vector<double>& t_grid = resolve_grid(cfg.t_grid, kDefaultTGrid);
  const int density = resolve_density(cfg, 1024);
  Table table;
  table.columns = {"m", "t", "k", "r_x", "r_y"};
  for (double m : m_grid) {
    for (double T : t_grid) {
      if (!(T > 0.0)) {
        throw InvalidStateError("bloch-curves requires T > 0");
      }
      const ChainParams params{m, T};
      for (int i = 0; i <= density; ++i) {
        const double k = two_pi * i / density;
        const BlochVector v = to_bloch(gibbs_state(params, k));
        table.rows.push_back(
            {cell(m), cell(T), cell(k), cell(v.x), cell(v.y)});
      }
    }
  }
  return table;
}

Table make_nodes_table(const RunConfig& cfg) {
  const double m = cfg.m.value_or(0.0);
  if (!cfg.x_grid.empty() && !cfg.t_grid.empty()) {
    throw InvalidStateError("give either an x grid or a T grid, not both");
  }
  std::vector<double> t_values;
  if (!cfg.x_grid.empty() || (cfg.t_grid.empty() && m == 0.0)) {
    if (m != 0.0) {
      throw InvalidStateError("the x grid applies to the flat band (m = 0)");
    }
    const std::vector<double> xs =
        cfg.x_grid.empty() ? default_x_grid() : cfg.x_grid;
    for (double x : xs) {
      if (!(x > 0.0 && x < 1.0)) {
        throw InvalidStateError("x values must lie in (0, 1)");
      }
      t_values.push_back(1.0 / std::acosh(1.0 / x));
    }
  } else {
    t_values = resolve_grid(cfg.t_grid, kDefaultTGrid);
  }
  const int turns = resolve_turns(cfg, 5);
  TransportSpec spec;
  spec.grid_per_turn = resolve_density(cfg, 4096);

  Table table;
  table.columns = {"m", "t", "k_node", "turn", "x", "degenerate"};
  std::vector<std::vector<std::vector<Cell>>> parts(t_values.size());
  parallel_for(t_values.size(), [&](std::size_t i) {
    const ChainParams params{m, t_values[i]};
    for (const NodeRecord& rec : find_nodes(params, turns, spec)) {
      parts[i].push_back({cell(m), cell(t_values[i]), cell(rec.k),
                          cell(rec.turn), cell(rec.x),
                          cell(static_cast<long long>(rec.degenerate))});
    }
  });
  for (auto& part : parts) {
    for (auto& row : part) {
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

Table make_critical_temps_table(const RunConfig& cfg) {
  const std::vector<double>& m_grid =
      resolve_grid(cfg.m_grid, default_critical_m_grid());
  const int max_turns = resolve_turns(cfg, 3);

  struct Job {
    int n1;
    int n2;
    double m;
  };
  std::vector<Job> jobs;
  for (int n1 = 1; n1 <= max_turns; ++n1) {
    for (int n2 = 0; n2 < n1; ++n2) {
      for (double m : m_grid) {
        jobs.push_back({n1, n2, m});
      }
    }
  }
  std::vector<std::optional<CriticalTemperature>> results(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    results[i] = critical_temperature(jobs[i].m, jobs[i].n1, jobs[i].n2);
  });

  Table table;
  table.columns = {"m", "n1", "n2", "t_c"};
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (results[i]) {
      table.rows.push_back({cell(jobs[i].m), cell(jobs[i].n1),
                            cell(jobs[i].n2), cell(results[i]->T)});
    }
  }
  return table;
}

Table make_phase_table(const RunConfig& cfg) {
  const double m = cfg.m.value_or(0.0);
  const double T = cfg.temperature.value_or(1.0);
  if (T < 0.0) {
    throw InvalidStateError("temperature must be >= 0");
  }
  const int turns = resolve_turns(cfg, 1);
  const int density = resolve_density(cfg, 4096);
  const ChainParams params{m, T};

  Table table;
  table.columns = {"m",     "t",      "turns",  "invariant",
                   "status", "phase", "factor", "detail"};
  const auto row = [&](const std::string& invariant, const std::string& status,
                       Cell phase, Cell factor, const std::string& detail) {
    table.rows.push_back({cell(m), cell(T), cell(turns), cell(invariant),
                          cell(status), std::move(phase), std::move(factor),
                          cell(detail)});
  };

  try {
    TransportSpec spec;
    spec.grid_per_turn = density;
    const std::size_t n_nodes = find_nodes(params, turns, spec).size();
    const int factor = uhlmann_phase_factor(params, turns, spec);
    row("uhlmann", "ok", cell(factor < 0 ? std::numbers::pi : 0.0),
        cell(factor), "nodes=" + std::to_string(n_nodes));
  } catch (const UndefinedPhaseError&) {
    row("uhlmann", "undefined", Cell{}, Cell{}, "node-at-closure-or-degenerate");
  } catch (const BundleUndefinedError&) {
    row("uhlmann", "undefined", Cell{}, Cell{}, "bundle-undefined");
  }

  try {
    const ClosedCurve curve = ClosedCurve::kitaev_gibbs(params, turns, density);
    const InterferometricResult res = interferometric_phase(curve);
    const long long w = std::llround(res.half_solid_angle / std::numbers::pi);
    row("interferometric", "ok", cell(res.gamma), Cell{},
        "winding_times_turns=" + std::to_string(w));
  } catch (const UndefinedPhaseError&) {
    row("interferometric", "undefined", Cell{}, Cell{}, "center-passage");
  } catch (const UndefinedStateError&) {
    row("interferometric", "undefined", Cell{}, Cell{}, "gap-closure");
  }

  return table;
}

int run_command(Subcommand cmd, const RunConfig& cfg, std::ostream& out,
                std::ostream& err) {
  try {
    Table table;
    switch (cmd) {
      case Subcommand::kSpectrum: table = make_spectrum_table(cfg); break;
      case Subcommand::kBlochCurves: table = make_bloch_curves_table(cfg); break;
      case Subcommand::kNodes: table = make_nodes_table(cfg); break;
      case Subcommand::kCriticalTemps:
        table = make_critical_temps_table(cfg);
        break;
      case Subcommand::kPhase: table = make_phase_table(cfg); break;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (cfg.out != "-") {
      file.open(cfg.out, std::ios::binary);
      if (!file) {
        err << R"({"error": "invalid-input", "message": "cannot open output file )"
            << json_escape(cfg.out) << R"("})" << '\n';
        return kExitInvalidInput;
      }
      sink = &file;
    }
    if (cfg.format == OutputFormat::kCsv) {
      write_csv(table, *sink);
    } else {
      write_json(table, *sink);
    }
    return kExitOk;
  } catch (const NumericError& e) {
    err << R"({"error": "numeric-failure", "message": ")" << json_escape(e.what())
        << R"("})" << '\n';
    return kExitNumericFailure;
  } catch (const std::exception& e) {
    err << R"({"error": "invalid-input", "message": ")" << json_escape(e.what())
        << R"("})" << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace geomphase::cli
