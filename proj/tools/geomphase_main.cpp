// Command-line front end: emits spectra, Bloch-ball curves, holonomy-trace
// nodes, critical temperatures and single-point phase verdicts as CSV/JSON.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "geomphase/cli_app.hpp"

namespace {

using geomphase::cli::RunConfig;
using geomphase::cli::Subcommand;

struct FlagSet {
  double m = 0.0;
  bool m_given = false;
  std::vector<double> m_grid;
  double t = 0.0;
  bool t_given = false;
  std::vector<double> t_grid;
  std::vector<double> x_grid;
  int turns = 0;
  bool turns_given = false;
  int density = 0;
  bool density_given = false;
  std::string format = "csv";
  std::string out = "-";
};

RunConfig to_config(const FlagSet& f) {
  RunConfig cfg;
  if (f.m_given) cfg.m = f.m;
  cfg.m_grid = f.m_grid;
  if (f.t_given) cfg.temperature = f.t;
  cfg.t_grid = f.t_grid;
  cfg.x_grid = f.x_grid;
  if (f.turns_given) cfg.turns = f.turns;
  if (f.density_given) cfg.density = f.density;
  if (f.format == "csv") {
    cfg.format = geomphase::cli::OutputFormat::kCsv;
  } else if (f.format == "json") {
    cfg.format = geomphase::cli::OutputFormat::kJson;
  } else {
    throw geomphase::InvalidStateError("format must be csv or json");
  }
  cfg.out = f.out;
  return cfg;
}

void add_output_flags(CLI::App* sub, FlagSet& f) {
  sub->add_option("--format", f.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", f.out, "Output path ('-' for stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Mixed-state geometric phases (Uhlmann and interferometric) for "
      "Gibbs curves of the Kitaev chain"};
  app.require_subcommand(1);
  FlagSet f;

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "Band gap over the Brillouin zone per m");
  spectrum->add_option("--m-grid", f.m_grid, "m values")->delimiter(',');
  spectrum->add_option("--density", f.density, "k samples per turn")
      ->each([&](const std::string&) { f.density_given = true; });
  add_output_flags(spectrum, f);

  CLI::App* bloch = app.add_subcommand(
      "bloch-curves", "Equatorial Bloch components of the Gibbs curves");
  bloch->add_option("--m-grid", f.m_grid, "m values")->delimiter(',');
  bloch->add_option("--t-grid", f.t_grid, "temperatures")->delimiter(',');
  bloch->add_option("--density", f.density, "k samples per turn")
      ->each([&](const std::string&) { f.density_given = true; });
  add_output_flags(bloch, f);

  CLI::App* nodes = app.add_subcommand(
      "nodes", "Zeros of the holonomy trace over repeated revolutions");
  nodes->add_option("--m", f.m, "chain parameter m")
      ->each([&](const std::string&) { f.m_given = true; });
  nodes->add_option("--x-grid", f.x_grid,
                    "flat-band purity parameters sech(1/T) in (0,1)")
      ->delimiter(',');
  nodes->add_option("--t-grid", f.t_grid, "temperatures")->delimiter(',');
  nodes->add_option("--turns", f.turns, "revolutions to scan")
      ->each([&](const std::string&) { f.turns_given = true; });
  nodes->add_option("--density", f.density, "bracketing grid per turn")
      ->each([&](const std::string&) { f.density_given = true; });
  add_output_flags(nodes, f);

  CLI::App* crit = app.add_subcommand(
      "critical-temps", "Temperatures with a node exactly at curve closure");
  crit->add_option("--m-grid", f.m_grid, "m values")->delimiter(',');
  crit->add_option("--turns", f.turns, "largest number of revolutions n1")
      ->each([&](const std::string&) { f.turns_given = true; });
  add_output_flags(crit, f);

  CLI::App* phase = app.add_subcommand(
      "phase", "Uhlmann and interferometric phase verdicts at one (m, T)");
  phase->add_option("--m", f.m, "chain parameter m")
      ->each([&](const std::string&) { f.m_given = true; });
  phase->add_option("--t", f.t, "temperature")
      ->each([&](const std::string&) { f.t_given = true; });
  phase->add_option("--turns", f.turns, "revolutions")
      ->each([&](const std::string&) { f.turns_given = true; });
  phase->add_option("--density", f.density, "samples per turn")
      ->each([&](const std::string&) { f.density_given = true; });
  add_output_flags(phase, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << R"({"error": "invalid-input", "message": ")" << e.what()
              << R"("})" << '\n';
    return geomphase::cli::kExitInvalidInput;
  }

  Subcommand cmd = Subcommand::kSpectrum;
  if (bloch->parsed()) cmd = Subcommand::kBlochCurves;
  if (nodes->parsed()) cmd = Subcommand::kNodes;
  if (crit->parsed()) cmd = Subcommand::kCriticalTemps;
  if (phase->parsed()) cmd = Subcommand::kPhase;

  try {
    return geomphase::cli::run_command(cmd, to_config(f), std::cout,
                                       std::cerr);
  } catch (const std::exception& e) {
    std::cerr << R"({"error": "invalid-input", "message": ")" << e.what()
              << R"("})" << '\n';
    return geomphase::cli::kExitInvalidInput;
  }
}
