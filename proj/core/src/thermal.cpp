#include "jcm/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace jcm {

void ThermalConfig::validate() const {
  params.validate();
  if (!(inv_beta > 0.0)) throw SpecError("ThermalConfig: inv_beta must be > 0");
  if (!(trunc_tol > 0.0) || trunc_tol > 1e-6) {
    throw SpecError("ThermalConfig: trunc_tol must be in (0, 1e-6]");
  }
  if (n_cap < 0) throw SpecError("ThermalConfig: n_cap must be >= 0");
}

ProbDist ThermalWeights::flatten() const {
  ProbDist out;
  out.tail_bound = tail_bound;
  out.weights.reserve(1 + w1.size() + w2.size());
  out.weights.push_back(w_singlet);
  for (std::size_t n = 0; n < w1.size(); ++n) {
    out.weights.push_back(w1[n]);
    out.weights.push_back(w2[n]);
  }
  return out;
}

namespace {

// Log of the unnormalized Boltzmann weights.
double log_weight_singlet(const ThermalConfig& cfg) {
  return cfg.beta() * 0.5 * cfg.params.omega0;
}

double log_weight(const ThermalConfig& cfg, int n, int s) {
  return -cfg.beta() * omega_ns(cfg.params, n, s);
}

// Largest exponent over the candidate set; the scan covers the minimum of
// Omega(n,2), which sits at or below the end of the negative branch.
double max_exponent(const ThermalConfig& cfg, int scan_to) {
  double m = log_weight_singlet(cfg);
  for (int n = 0; n <= scan_to; ++n) {
    m = std::max(m, log_weight(cfg, n, 2)); // branch 2 always dominates branch 1
  }
  return m;
}

double shifted_partial_z(const ThermalConfig& cfg, int n_max, double shift) {
  double z = std::exp(log_weight_singlet(cfg) - shift);
  for (int n = 0; n <= n_max; ++n) {
    z += std::exp(log_weight(cfg, n, 1) - shift);
    z += std::exp(log_weight(cfg, n, 2) - shift);
  }
  return z;
}

} // namespace

int resolve_truncation(const ThermalConfig& cfg) {
  cfg.validate();
  const auto negatives = negative_branch_set(cfg.params, negative_branch_scan_bound(cfg.params));
  const int last_negative = negatives.empty() ? -1 : negatives.back();
  // the negative branch must always be inside the truncation
  const int floor_n = std::max(last_negative + 5, 5);
  if (floor_n > cfg.n_cap) {
    throw TruncationError("resolve_truncation: negative branch needs n_max=" +
                          std::to_string(floor_n) + " > n_cap=" + std::to_string(cfg.n_cap));
  }

  const double shift = max_exponent(cfg, std::max(floor_n, 1));
  const double beta = cfg.beta();

  // Tail of sum_{n > n_max} 2 exp(-beta Omega(n,2)): lambda_n is concave in
  // n, so the term ratio is bounded by its value at the cut and the tail by
  // a geometric series once that ratio drops below 1.  The tail mass is
  // weighted by its -ln w entropy factor so that reported entropies, not
  // just the trace, are converged to trunc_tol.
  auto log_tail_term = [&](int n) {
    return std::log(2.0) - beta * cfg.params.omega * (n + 0.5) + beta * lambda_n(cfg.params, n);
  };

  int n_max = floor_n;
  double z_partial = shifted_partial_z(cfg, n_max, shift);
  while (true) {
    const double log_first = log_tail_term(n_max + 1);
    const double ratio = std::exp(log_tail_term(n_max + 2) - log_first);
    if (ratio < 1.0) {
      const double tail = std::exp(log_first - shift) / (1.0 - ratio) / z_partial;
      const double nats = std::log(z_partial) + shift - log_first;
      if (tail * (std::max(nats, 0.0) + 16.0) < cfg.trunc_tol) break;
    }
    ++n_max;
    if (n_max > cfg.n_cap) {
      throw TruncationError(
          "resolve_truncation: truncation exceeds cap (n_cap=" + std::to_string(cfg.n_cap) +
          ", inv_beta=" + std::to_string(cfg.inv_beta) +
          ", kappa=" + std::to_string(cfg.params.kappa) + ")");
    }
    z_partial += std::exp(log_weight(cfg, n_max, 1) - shift);
    z_partial += std::exp(log_weight(cfg, n_max, 2) - shift);
  }
  return n_max;
}

ThermalWeights boltzmann_weights_at(const ThermalConfig& cfg, int n_max) {
  cfg.validate();
  if (n_max < 0) throw SpecError("boltzmann_weights_at: n_max must be >= 0");

  const double shift = max_exponent(cfg, n_max);
  ThermalWeights out;
  out.n_max = n_max;
  out.tail_bound = cfg.trunc_tol;
  out.w1.resize(n_max + 1);
  out.w2.resize(n_max + 1);

  double z = std::exp(log_weight_singlet(cfg) - shift);
  out.w_singlet = z;
  for (int n = 0; n <= n_max; ++n) {
    out.w1[n] = std::exp(log_weight(cfg, n, 1) - shift);
    out.w2[n] = std::exp(log_weight(cfg, n, 2) - shift);
    z += out.w1[n] + out.w2[n];
  }
  out.w_singlet /= z;
  for (int n = 0; n <= n_max; ++n) {
    out.w1[n] /= z;
    out.w2[n] /= z;
  }
  out.log_z = std::log(z) + shift;
  return out;
}

ThermalWeights boltzmann_weights(const ThermalConfig& cfg) {
  return boltzmann_weights_at(cfg, resolve_truncation(cfg));
}

double joint_entropy(const ThermalConfig& cfg) {
  return shannon_entropy(boltzmann_weights(cfg).flatten());
}

QubitMarginal atom_marginal_from(const ThermalWeights& weights, const ModelParams& params) {
  double f_minus = weights.w_singlet;
  for (int n = 0; n <= weights.n_max; ++n) {
    const double th = theta_n(params, n);
    const double c2 = std::cos(th) * std::cos(th);
    const double s2 = std::sin(th) * std::sin(th);
    f_minus += weights.w1[n] * c2 + weights.w2[n] * s2;
  }
  return QubitMarginal{f_minus, 1.0 - f_minus};
}

QubitMarginal atom_marginal(const ThermalConfig& cfg) {
  return atom_marginal_from(boltzmann_weights(cfg), cfg.params);
}

ProbDist radiation_marginal_from(const ThermalWeights& weights, const ModelParams& params) {
  const int n_max = weights.n_max;
  ProbDist out;
  out.tail_bound = weights.tail_bound;
  out.weights.assign(n_max + 2, 0.0);
  for (int n = 0; n <= n_max; ++n) {
    const double th = theta_n(params, n);
    const double c2 = std::cos(th) * std::cos(th);
    const double s2 = std::sin(th) * std::sin(th);
    out.weights[n] += weights.w1[n] * s2 + weights.w2[n] * c2;     // |n,e> content
    out.weights[n + 1] += weights.w1[n] * c2 + weights.w2[n] * s2; // |n+1,g> content
  }
  out.weights[0] += weights.w_singlet;
  return out;
}

ProbDist radiation_marginal(const ThermalConfig& cfg) {
  return radiation_marginal_from(boltzmann_weights(cfg), cfg.params);
}

BlockDensity joint_density(const ThermalConfig& cfg) {
  const ThermalWeights weights = boltzmann_weights(cfg);
  BlockDensity rho;
  rho.params = cfg.params;
  rho.singlet_weight = weights.w_singlet;
  rho.blocks.resize(weights.n_max + 1);
  for (int n = 0; n <= weights.n_max; ++n) {
    rho.blocks[n] = HermBlock2{weights.w1[n], weights.w2[n], {0.0, 0.0}};
  }
  return rho;
}

EntropyReport thermal_report(const ThermalConfig& cfg, const ReportTols& tols) {
  const ThermalWeights weights = boltzmann_weights(cfg);
  const double s_joint = shannon_entropy(weights.flatten());
  const double s_atom = binary_entropy(atom_marginal_from(weights, cfg.params));
  const double s_rad = shannon_entropy(radiation_marginal_from(weights, cfg.params));
  return make_report(s_joint, s_atom, s_rad, tols);
}

} // namespace jcm
