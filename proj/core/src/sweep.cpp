#include "jcm/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include <json.hpp>

namespace jcm {

void ThermalSweepSpec::validate() const {
  if (kappa_ratios.empty()) throw SpecError("thermal sweep: need at least one kappa ratio");
  for (double k : kappa_ratios) {
    if (!(k >= 0.0)) throw SpecError("thermal sweep: kappa ratios must be >= 0");
  }
  if (!(axis_min > 0.0) || !(axis_max > axis_min) || !std::isfinite(axis_max)) {
    throw SpecError("thermal sweep: need finite 0 < inv_beta_min < inv_beta_max");
  }
  if (points < 2) throw SpecError("thermal sweep: need at least 2 points");
  if (!(omega > 0.0)) throw SpecError("thermal sweep: omega must be > 0");
}

void QuenchSweepSpec::validate() const {
  if (nbars.empty()) throw SpecError("quench sweep: need at least one nbar");
  for (double nb : nbars) {
    if (!(nb > 0.0)) throw SpecError("quench sweep: nbar must be > 0");
  }
  if (!(axis_min > 0.0) || !(axis_max > axis_min) || !std::isfinite(axis_max)) {
    throw SpecError("quench sweep: need finite 0 < tau_min < tau_max");
  }
  if (points < 2) throw SpecError("quench sweep: need at least 2 points");
  if (!(kappa > 0.0) || !(omega > 0.0)) {
    throw SpecError("quench sweep: kappa and omega must be > 0");
  }
  if (source == SourceKind::Custom) {
    throw SpecError("quench sweep: sweep sources are geometric or poisson");
  }
}

namespace {

std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> out(points);
  for (int i = 0; i < points; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  }
  return out;
}

std::string sanitize(std::string msg) {
  for (char& c : msg) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return msg;
}

static const char* kThermalHeader[SweepTable::kColumns] = {
    "inv_beta", "kappa_ratio", "S_joint", "S_A", "S_R",
    "cond_R",   "cond_A",      "mutual",  "ratio", "regime"};
static const char* kQuenchHeader[SweepTable::kColumns] = {
    "tau",    "kt",     "S_joint", "S_A", "S_R",
    "cond_R", "cond_A", "mutual",  "ratio", "regime"};

} // namespace

const char* const* SweepTable::header() const {
  return mode == SweepMode::Thermal ? kThermalHeader : kQuenchHeader;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  unsigned threads = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("JC_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) threads = static_cast<unsigned>(parsed);
  }
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  threads = std::min<unsigned>(threads, static_cast<unsigned>(count));
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += threads) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

SweepTable run_thermal_sweep(const ThermalSweepSpec& spec) {
  spec.validate();
  std::vector<double> kappas = spec.kappa_ratios;
  std::sort(kappas.begin(), kappas.end());
  const std::vector<double> axis = linspace(spec.axis_min, spec.axis_max, spec.points);

  SweepTable table;
  table.mode = SweepMode::Thermal;
  table.rows.resize(kappas.size() * axis.size());
  for (std::size_t g = 0; g < kappas.size(); ++g) {
    table.groups.push_back({kappas[g], g * axis.size(), axis.size()});
  }

  parallel_for(table.rows.size(), [&](std::size_t i) {
    const std::size_t g = i / axis.size();
    const std::size_t j = i % axis.size();
    SweepRow& row = table.rows[i];
    row.axis0 = axis[j];
    row.axis1 = kappas[g];
    ThermalConfig cfg{ModelParams::resonant(kappas[g], spec.omega), axis[j], spec.trunc_tol,
                      spec.n_cap};
    try {
      row.report = thermal_report(cfg, spec.tols);
    } catch (const NumericError& err) {
      row.error = sanitize(err.what());
    }
  });
  return table;
}

SweepTable run_quench_sweep(const QuenchSweepSpec& spec) {
  spec.validate();
  std::vector<double> nbars = spec.nbars;
  std::sort(nbars.begin(), nbars.end());
  const std::vector<double> axis = linspace(spec.axis_min, spec.axis_max, spec.points);

  SweepTable table;
  table.mode = SweepMode::Quench;
  table.rows.resize(nbars.size() * axis.size());
  for (std::size_t g = 0; g < nbars.size(); ++g) {
    table.groups.push_back({nbars[g], g * axis.size(), axis.size()});
  }

  parallel_for(table.rows.size(), [&](std::size_t i) {
    const std::size_t g = i / axis.size();
    const std::size_t j = i % axis.size();
    SweepRow& row = table.rows[i];
    const double nbar = nbars[g];
    const double t = tau_to_time(axis[j], nbar, spec.kappa);
    row.axis0 = axis[j];
    row.axis1 = spec.kappa * t;
    QuenchConfig cfg{ModelParams::resonant(spec.kappa / spec.omega, spec.omega),
                     spec.source == SourceKind::Geometric ? SourceModel::geometric(nbar)
                                                          : SourceModel::poisson(nbar),
                     spec.trunc_tol, spec.n_cap};
    try {
      row.report = dynamics_report(cfg, t, spec.tols);
    } catch (const NumericError& err) {
      row.error = sanitize(err.what());
    }
  });
  return table;
}

std::vector<CrossoverRecord> find_crossovers(const std::vector<double>& axis,
                                             const std::vector<std::optional<double>>& ratio,
                                             const std::function<double(double)>& f,
                                             double axis_tol, double group_param) {
  if (axis.size() != ratio.size()) {
    throw SpecError("find_crossovers: axis/ratio length mismatch");
  }
  // compress to rows that actually carry a ratio
  std::vector<std::pair<double, double>> valid;
  for (std::size_t i = 0; i < axis.size(); ++i) {
    if (ratio[i]) valid.emplace_back(axis[i], *ratio[i]);
  }

  std::vector<CrossoverRecord> out;
  for (std::size_t i = 0; i + 1 < valid.size(); ++i) {
    double lo = valid[i].first;
    double hi = valid[i + 1].first;
    double f_lo = valid[i].second;
    double f_hi = valid[i + 1].second;
    if (!(f_lo * f_hi < 0.0)) continue;

    while (hi - lo > axis_tol) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break; // axis resolution exhausted
      double f_mid = f(mid);
      if (f_mid == 0.0) f_mid = std::copysign(1e-300, f_lo); // keep the bracket strict
      if (f_mid * f_lo < 0.0) {
        hi = mid;
        f_hi = f_mid;
      } else {
        lo = mid;
        f_lo = f_mid;
      }
    }
    out.push_back({group_param, 0.5 * (lo + hi), lo, hi});
  }
  return out;
}

namespace {

template <typename Spec, typename Fn>
std::vector<CrossoverRecord> table_crossovers(const SweepTable& table, const Spec& spec,
                                              double axis_tol, Fn&& make_f) {
  std::vector<CrossoverRecord> out;
  for (const auto& group : table.groups) {
    std::vector<double> axis;
    std::vector<std::optional<double>> ratio;
    axis.reserve(group.count);
    ratio.reserve(group.count);
    for (std::size_t i = group.first; i < group.first + group.count; ++i) {
      const SweepRow& row = table.rows[i];
      axis.push_back(row.axis0);
      ratio.push_back(row.report ? row.report->ratio : std::nullopt);
    }
    auto records = find_crossovers(axis, ratio, make_f(group.param, spec), axis_tol, group.param);
    out.insert(out.end(), records.begin(), records.end());
  }
  return out;
}

} // namespace

std::vector<CrossoverRecord> find_crossovers(const SweepTable& table,
                                             const ThermalSweepSpec& spec, double axis_tol) {
  return table_crossovers(table, spec, axis_tol, [](double kappa_ratio, const ThermalSweepSpec& s) {
    return [kappa_ratio, s](double inv_beta) {
      ThermalConfig cfg{ModelParams::resonant(kappa_ratio, s.omega), inv_beta, s.trunc_tol,
                        s.n_cap};
      return thermal_report(cfg, s.tols).ratio.value_or(0.0);
    };
  });
}

std::vector<CrossoverRecord> find_crossovers(const SweepTable& table,
                                             const QuenchSweepSpec& spec, double axis_tol) {
  return table_crossovers(table, spec, axis_tol, [](double nbar, const QuenchSweepSpec& s) {
    return [nbar, s](double tau) {
      QuenchConfig cfg{ModelParams::resonant(s.kappa / s.omega, s.omega),
                       s.source == SourceKind::Geometric ? SourceModel::geometric(nbar)
                                                         : SourceModel::poisson(nbar),
                       s.trunc_tol, s.n_cap};
      return dynamics_report(cfg, tau_to_time(tau, nbar, s.kappa), s.tols).ratio.value_or(0.0);
    };
  });
}

SpectrumListing spectrum_listing(const ModelParams& params, int n_max) {
  params.validate();
  if (n_max < 0) throw SpecError("spectrum_listing: n_max must be >= 0");
  SpectrumListing listing;
  listing.params = params;
  listing.singlet_energy = singlet_energy(params);
  for (int n = 0; n <= n_max; ++n) {
    listing.levels.push_back(dressed_level(params, n, 1));
    listing.levels.push_back(dressed_level(params, n, 2));
  }
  listing.negative_branch = negative_branch_set(params, n_max);
  // ground certification may need to see past the user's n_max
  listing.ground =
      ground_level(params, std::max(n_max, negative_branch_scan_bound(params) + 2));
  return listing;
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

namespace {

constexpr double kLn2 = 0.69314718055994530942;

double display(double nats, bool bits) { return bits ? nats / kLn2 : nats; }

void append_report_fields(std::string& out, const SweepRow& row, bool bits) {
  const EntropyReport& rep = *row.report;
  out += format_double(display(rep.s_joint, bits));
  out += ',';
  out += format_double(display(rep.s_atom, bits));
  out += ',';
  out += format_double(display(rep.s_rad, bits));
  out += ',';
  out += format_double(display(rep.cond_given_rad, bits));
  out += ',';
  out += format_double(display(rep.cond_given_atom, bits));
  out += ',';
  out += format_double(display(rep.mutual, bits));
  out += ',';
  if (rep.ratio) out += format_double(*rep.ratio); // dimensionless either way
  out += ',';
  out += to_string(rep.regime);
}

nlohmann::ordered_json row_json(const SweepTable& table, const SweepRow& row, bool bits) {
  nlohmann::ordered_json obj;
  const char* const* names = table.header();
  obj[names[0]] = row.axis0;
  obj[names[1]] = row.axis1;
  if (!row.report) {
    obj["error"] = row.error;
    return obj;
  }
  const EntropyReport& rep = *row.report;
  obj[names[2]] = display(rep.s_joint, bits);
  obj[names[3]] = display(rep.s_atom, bits);
  obj[names[4]] = display(rep.s_rad, bits);
  obj[names[5]] = display(rep.cond_given_rad, bits);
  obj[names[6]] = display(rep.cond_given_atom, bits);
  obj[names[7]] = display(rep.mutual, bits);
  if (rep.ratio) {
    obj[names[8]] = *rep.ratio;
  } else {
    obj[names[8]] = nullptr;
  }
  obj[names[9]] = to_string(rep.regime);
  obj["maximally_classical"] = rep.maximally_classical;
  return obj;
}

} // namespace

std::string to_csv(const SweepTable& table, bool bits) {
  std::string out;
  const char* const* names = table.header();
  for (int c = 0; c < SweepTable::kColumns; ++c) {
    if (c) out += ',';
    out += names[c];
  }
  out += '\n';
  for (const SweepRow& row : table.rows) {
    out += format_double(row.axis0);
    out += ',';
    out += format_double(row.axis1);
    out += ',';
    if (row.report) {
      append_report_fields(out, row, bits);
    } else {
      out += ",,,,,,,error(" + row.error + ")";
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const SweepTable& table, bool bits) {
  nlohmann::ordered_json doc;
  doc["mode"] = table.mode == SweepMode::Thermal ? "thermal" : "quench";
  doc["entropy_unit"] = bits ? "bits" : "nats";
  doc["rows"] = nlohmann::ordered_json::array();
  for (const SweepRow& row : table.rows) {
    doc["rows"].push_back(row_json(table, row, bits));
  }
  return doc.dump(2) + "\n";
}

std::string to_csv(const std::vector<CrossoverRecord>& records, SweepMode mode) {
  std::string out = mode == SweepMode::Thermal ? "kappa_ratio" : "nbar";
  out += ",axis,bracket_lo,bracket_hi\n";
  for (const auto& rec : records) {
    out += format_double(rec.group_param);
    out += ',';
    out += format_double(rec.axis);
    out += ',';
    out += format_double(rec.bracket_lo);
    out += ',';
    out += format_double(rec.bracket_hi);
    out += '\n';
  }
  return out;
}

std::string to_json(const std::vector<CrossoverRecord>& records, SweepMode mode) {
  nlohmann::ordered_json doc;
  doc["mode"] = mode == SweepMode::Thermal ? "thermal" : "quench";
  doc["crossovers"] = nlohmann::ordered_json::array();
  const char* group_name = mode == SweepMode::Thermal ? "kappa_ratio" : "nbar";
  for (const auto& rec : records) {
    nlohmann::ordered_json obj;
    obj[group_name] = rec.group_param;
    obj["axis"] = rec.axis;
    obj["bracket_lo"] = rec.bracket_lo;
    obj["bracket_hi"] = rec.bracket_hi;
    doc["crossovers"].push_back(obj);
  }
  return doc.dump(2) + "\n";
}

namespace {

std::string ground_label(const GroundLevel& ground) {
  std::string label;
  for (std::size_t i = 0; i < ground.levels.size(); ++i) {
    if (i) label += " tie ";
    const LevelId& id = ground.levels[i];
    if (id.is_singlet()) {
      label += "|0,g>";
    } else {
      label += "phi(" + std::to_string(id.n) + "," + std::to_string(id.s) + ")";
    }
  }
  return label;
}

std::string brace_list(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  out += '}';
  return out;
}

} // namespace

std::string to_csv(const SpectrumListing& listing) {
  std::string out = "n,s,energy,theta\n";
  for (const auto& level : listing.levels) {
    out += std::to_string(level.n);
    out += ',';
    out += std::to_string(level.s);
    out += ',';
    out += format_double(level.energy);
    out += ',';
    out += format_double(level.theta);
    out += '\n';
  }
  out += "# singlet_energy = " + format_double(listing.singlet_energy) + "\n";
  out += "# negative_branch = " + brace_list(listing.negative_branch) + "\n";
  out += "# ground = " + ground_label(listing.ground) +
         ", energy = " + format_double(listing.ground.energy) + "\n";
  return out;
}

std::string to_json(const SpectrumListing& listing) {
  nlohmann::ordered_json doc;
  doc["omega"] = listing.params.omega;
  doc["omega0"] = listing.params.omega0;
  doc["kappa"] = listing.params.kappa;
  doc["levels"] = nlohmann::ordered_json::array();
  for (const auto& level : listing.levels) {
    doc["levels"].push_back({{"n", level.n},
                             {"s", level.s},
                             {"energy", level.energy},
                             {"theta", level.theta}});
  }
  doc["singlet_energy"] = listing.singlet_energy;
  doc["negative_branch"] = listing.negative_branch;
  doc["ground"] = {{"label", ground_label(listing.ground)}, {"energy", listing.ground.energy}};
  return doc.dump(2) + "\n";
}

} // namespace jcm
