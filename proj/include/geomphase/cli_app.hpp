#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "geomphase/errors.hpp"

namespace geomphase::cli {

enum class Subcommand {
  kSpectrum,
  kBlochCurves,
  kNodes,
  kCriticalTemps,
  kPhase,
};

enum class OutputFormat { kCsv, kJson };

struct RunConfig {
  std::optional<double> m;
  std::vector<double> m_grid;
  std::optional<double> temperature;
  std::vector<double> t_grid;
  std::vector<double> x_grid;
  std::optional<int> turns;
  std::optional<int> density;
  OutputFormat format = OutputFormat::kCsv;
  std::string out = "-";
};

// A table cell is an integer, a real (rendered with 12 significant digits),
// a string, or empty (JSON null / empty CSV field).
using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_double(double v);

void write_csv(const Table& table, std::ostream& os);
void write_json(const Table& table, std::ostream& os);

Table make_spectrum_table(const RunConfig& cfg);
Table make_bloch_curves_table(const RunConfig& cfg);
Table make_nodes_table(const RunConfig& cfg);
Table make_critical_temps_table(const RunConfig& cfg);
Table make_phase_table(const RunConfig& cfg);

// Exit codes: 0 success, 1 invalid input, 2 numeric failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitNumericFailure = 2;

// Builds the table for `cmd`, renders it to cfg.out ("-" for stdout), and
// reports failures as one JSON object line on `err`. Returns the exit code.
int run_command(Subcommand cmd, const RunConfig& cfg, std::ostream& out,
                std::ostream& err);

}  // namespace geomphase::cli
