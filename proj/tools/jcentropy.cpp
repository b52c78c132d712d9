// jcentropy: entropy sweeps of a two-level system coupled to a single boson
// mode.  Emits figure-ready CSV/JSON for thermal-ensemble and quench sweeps,
// dressed-spectrum listings and ratio zero-crossing refinement.

#include <clocale>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jcm/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSpecError = 2;
constexpr int kExitNumericError = 3;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw jcm::SpecError("cannot open output file: " + path);
  file << content;
  if (!file.good()) throw jcm::SpecError("failed writing output file: " + path);
}

jcm::OutputFormat parse_format(const std::string& fmt) {
  if (fmt == "csv") return jcm::OutputFormat::Csv;
  if (fmt == "json") return jcm::OutputFormat::Json;
  throw jcm::SpecError("unknown format: " + fmt);
}

jcm::SourceKind parse_source(const std::string& source) {
  if (source == "geometric") return jcm::SourceKind::Geometric;
  if (source == "poisson") return jcm::SourceKind::Poisson;
  throw jcm::SpecError("unknown source: " + source);
}

struct CommonFlags {
  std::string format = "csv";
  std::string out;
  bool bits = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format (csv or json)")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", flags.out, "Output path ('-' or empty for stdout)");
  cmd->add_flag("--bits", flags.bits, "Display entropies in bits instead of nats");
}

struct ThermalFlags {
  jcm::ThermalSweepSpec spec;
  CommonFlags common;
};

void add_thermal_options(CLI::App* cmd, ThermalFlags& flags) {
  cmd->add_option("--kappa-ratio", flags.spec.kappa_ratios,
                  "Coupling values kappa/omega (comma separated)")
      ->delimiter(',');
  cmd->add_option("--inv-beta-min", flags.spec.axis_min, "Lower end of (beta hbar omega)^-1");
  cmd->add_option("--inv-beta-max", flags.spec.axis_max, "Upper end of (beta hbar omega)^-1");
  cmd->add_option("--points", flags.spec.points, "Grid points per coupling value");
  cmd->add_option("--tol", flags.spec.trunc_tol, "Boltzmann tail tolerance");
  cmd->add_option("--n-cap", flags.spec.n_cap, "Hard ceiling on photon truncation");
  add_common(cmd, flags.common);
}

struct QuenchFlags {
  jcm::QuenchSweepSpec spec;
  std::string source = "geometric";
  CommonFlags common;
};

void add_quench_options(CLI::App* cmd, QuenchFlags& flags) {
  cmd->add_option("--source", flags.source, "Photon source model")
      ->check(CLI::IsMember({"geometric", "poisson"}));
  cmd->add_option("--nbar", flags.spec.nbars, "Mean photon numbers (comma separated)")
      ->delimiter(',');
  cmd->add_option("--tau-min", flags.spec.axis_min, "Lower end of tau = kappa t/(pi sqrt(nbar))");
  cmd->add_option("--tau-max", flags.spec.axis_max, "Upper end of tau");
  cmd->add_option("--points", flags.spec.points, "Grid points per nbar");
  cmd->add_option("--kappa", flags.spec.kappa, "Coupling strength in units of omega");
  cmd->add_option("--tol", flags.spec.trunc_tol, "Source tail tolerance");
  cmd->add_option("--n-cap", flags.spec.n_cap, "Hard ceiling on photon truncation");
  add_common(cmd, flags.common);
}

int run(int argc, char** argv) {
  CLI::App app{"Entropy analysis of a two-level atom coupled to a boson mode"};
  app.require_subcommand(1);

  ThermalFlags thermal;
  CLI::App* thermal_cmd =
      app.add_subcommand("thermal", "Equilibrium sweep over (beta hbar omega)^-1");
  add_thermal_options(thermal_cmd, thermal);

  QuenchFlags quench;
  CLI::App* quench_cmd = app.add_subcommand("quench", "Unitary quench sweep over tau");
  add_quench_options(quench_cmd, quench);

  struct {
    double kappa_ratio = 0.5;
    double omega = 1.0;
    int n_max = 30;
    CommonFlags common;
  } spectrum;
  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "List dressed levels as CSV");
  spectrum_cmd->add_option("--kappa-ratio", spectrum.kappa_ratio, "Coupling kappa/omega");
  spectrum_cmd->add_option("--n-max", spectrum.n_max, "Largest photon index to list");
  add_common(spectrum_cmd, spectrum.common);

  struct {
    std::string mode = "thermal";
    double axis_tol = 1e-6;
  } crossovers;
  ThermalFlags cross_thermal;
  QuenchFlags cross_quench;
  CLI::App* cross_cmd =
      app.add_subcommand("crossovers", "Refine ratio sign changes of a sweep");
  cross_cmd->add_option("--mode", crossovers.mode, "Sweep kind to scan")
      ->check(CLI::IsMember({"thermal", "quench"}));
  cross_cmd->add_option("--axis-tol", crossovers.axis_tol, "Bisection bracket tolerance");
  add_thermal_options(cross_cmd, cross_thermal);
  // quench flags share --points/--tol/--n-cap spellings; reuse the thermal
  // bindings for those and add the quench-specific ones
  cross_cmd->add_option("--source", cross_quench.source, "Photon source model")
      ->check(CLI::IsMember({"geometric", "poisson"}));
  cross_cmd->add_option("--nbar", cross_quench.spec.nbars, "Mean photon numbers")
      ->delimiter(',');
  cross_cmd->add_option("--tau-min", cross_quench.spec.axis_min, "Lower end of tau");
  cross_cmd->add_option("--tau-max", cross_quench.spec.axis_max, "Upper end of tau");
  cross_cmd->add_option("--kappa", cross_quench.spec.kappa, "Coupling strength");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e); // prints message / help text
    return rc == 0 ? kExitOk : kExitSpecError;
  }

  if (thermal_cmd->parsed()) {
    const auto table = jcm::run_thermal_sweep(thermal.spec);
    const auto fmt = parse_format(thermal.common.format);
    write_output(thermal.common.out, fmt == jcm::OutputFormat::Csv
                                         ? jcm::to_csv(table, thermal.common.bits)
                                         : jcm::to_json(table, thermal.common.bits));
  } else if (quench_cmd->parsed()) {
    quench.spec.source = parse_source(quench.source);
    const auto table = jcm::run_quench_sweep(quench.spec);
    const auto fmt = parse_format(quench.common.format);
    write_output(quench.common.out, fmt == jcm::OutputFormat::Csv
                                        ? jcm::to_csv(table, quench.common.bits)
                                        : jcm::to_json(table, quench.common.bits));
  } else if (spectrum_cmd->parsed()) {
    const auto listing = jcm::spectrum_listing(
        jcm::ModelParams::resonant(spectrum.kappa_ratio, spectrum.omega), spectrum.n_max);
    const auto fmt = parse_format(spectrum.common.format);
    write_output(spectrum.common.out, fmt == jcm::OutputFormat::Csv ? jcm::to_csv(listing)
                                                                    : jcm::to_json(listing));
  } else if (cross_cmd->parsed()) {
    std::vector<jcm::CrossoverRecord> records;
    jcm::SweepMode mode;
    if (crossovers.mode == "thermal") {
      mode = jcm::SweepMode::Thermal;
      const auto table = jcm::run_thermal_sweep(cross_thermal.spec);
      records = jcm::find_crossovers(table, cross_thermal.spec, crossovers.axis_tol);
    } else {
      mode = jcm::SweepMode::Quench;
      cross_quench.spec.source = parse_source(cross_quench.source);
      if (cross_cmd->count("--points")) cross_quench.spec.points = cross_thermal.spec.points;
      if (cross_cmd->count("--tol")) cross_quench.spec.trunc_tol = cross_thermal.spec.trunc_tol;
      if (cross_cmd->count("--n-cap")) cross_quench.spec.n_cap = cross_thermal.spec.n_cap;
      const auto table = jcm::run_quench_sweep(cross_quench.spec);
      records = jcm::find_crossovers(table, cross_quench.spec, crossovers.axis_tol);
    }
    const auto fmt = parse_format(cross_thermal.common.format);
    write_output(cross_thermal.common.out, fmt == jcm::OutputFormat::Csv
                                               ? jcm::to_csv(records, mode)
                                               : jcm::to_json(records, mode));
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_NUMERIC, "C"); // byte-identical output everywhere
  try {
    return run(argc, argv);
  } catch (const jcm::SpecError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitSpecError;
  } catch (const jcm::NumericError& err) {
    std::cerr << "numeric error: " << err.what() << "\n";
    return kExitNumericError;
  } catch (const std::exception& err) {
    std::cerr << "unexpected error: " << err.what() << "\n";
    return kExitNumericError;
  }
}
