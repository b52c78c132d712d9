#ifndef JCM_SWEEP_HPP
#define JCM_SWEEP_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jcm/dynamics.hpp"
#include "jcm/info_measures.hpp"
#include "jcm/model_params.hpp"
#include "jcm/thermal.hpp"

namespace jcm {

enum class SweepMode { Thermal, Quench };
enum class OutputFormat { Csv, Json };

/// Thermal sweep over the dimensionless temperature axis, one group per
/// coupling value kappa/omega.
struct ThermalSweepSpec {
  std::vector<double> kappa_ratios{0.5, 2.5, 5.0};
  double axis_min = 0.01; // (beta hbar omega)^-1
  double axis_max = 4.0;
  int points = 400;
  double omega = 1.0;
  double trunc_tol = 1e-12;
  int n_cap = 100000;
  ReportTols tols;

  void validate() const;
};

/// Quench sweep over tau = kappa t / (pi sqrt(nbar)), one group per nbar.
struct QuenchSweepSpec {
  SourceKind source = SourceKind::Geometric;
  std::vector<double> nbars{1.0, 5.0, 50.0};
  double axis_min = 1e-4;
  double axis_max = 3.0;
  int points = 1000;
  double kappa = 1.0;
  double omega = 1.0;
  double trunc_tol = 1e-14;
  int n_cap = 100000;
  ReportTols tols;

  void validate() const;
};

/// One evaluated grid point.  Axis columns: thermal rows carry
/// (inv_beta, kappa_ratio), quench rows (tau, kappa*t).  Rows whose
/// evaluation failed carry the diagnostic instead of a report.
struct SweepRow {
  double axis0 = 0.0;
  double axis1 = 0.0;
  std::optional<EntropyReport> report;
  std::string error;
};

struct SweepGroup {
  double param = 0.0; // kappa_ratio or nbar
  std::size_t first = 0;
  std::size_t count = 0;
};

struct SweepTable {
  SweepMode mode = SweepMode::Thermal;
  std::vector<SweepRow> rows;
  std::vector<SweepGroup> groups;

  const char* const* header() const;
  static constexpr int kColumns = 10;
};

/// Deterministic grids and group ordering: group parameter ascending, then
/// axis ascending.  Per-row truncation failures become error rows.
SweepTable run_thermal_sweep(const ThermalSweepSpec& spec);
SweepTable run_quench_sweep(const QuenchSweepSpec& spec);

/// Zero crossing of the ratio column, bisection-refined on the underlying
/// report function to a bracket narrower than axis_tol.
struct CrossoverRecord {
  double group_param = 0.0;
  double axis = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

/// Sign changes of f over the sorted samples (axis[i], ratio[i]); rows
/// without a ratio are skipped.  f must reproduce the sampled ratios.
std::vector<CrossoverRecord> find_crossovers(const std::vector<double>& axis,
                                             const std::vector<std::optional<double>>& ratio,
                                             const std::function<double(double)>& f,
                                             double axis_tol = 1e-6, double group_param = 0.0);

/// Crossovers of every group of a finished sweep table, re-evaluating the
/// report function for the bisection.
std::vector<CrossoverRecord> find_crossovers(const SweepTable& table,
                                             const ThermalSweepSpec& spec,
                                             double axis_tol = 1e-6);
std::vector<CrossoverRecord> find_crossovers(const SweepTable& table,
                                             const QuenchSweepSpec& spec,
                                             double axis_tol = 1e-6);

/// Dressed-level listing plus negative-branch / ground-state summary lines.
struct SpectrumListing {
  ModelParams params;
  std::vector<DressedLevel> levels;
  double singlet_energy = 0.0;
  std::vector<int> negative_branch;
  GroundLevel ground;
};

SpectrumListing spectrum_listing(const ModelParams& params, int n_max);

/// Serialization.  Numbers are printed with 17 significant digits so the
/// CSV round-trips bit-for-bit; output is locale-independent and
/// byte-reproducible.
std::string to_csv(const SweepTable& table, bool bits = false);
std::string to_json(const SweepTable& table, bool bits = false);
std::string to_csv(const std::vector<CrossoverRecord>& records, SweepMode mode);
std::string to_json(const std::vector<CrossoverRecord>& records, SweepMode mode);
std::string to_csv(const SpectrumListing& listing);
std::string to_json(const SpectrumListing& listing);

/// "%.17g" rendering used by every emitter.
std::string format_double(double value);

/// Index-parallel map used by the sweeps; honors the JC_THREADS environment
/// variable (<= 1 forces serial evaluation).  Results are ordered by index
/// regardless of scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace jcm

#endif
