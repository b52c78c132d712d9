#ifndef JCM_THERMAL_HPP
#define JCM_THERMAL_HPP

#include <vector>

#include "jcm/block_density.hpp"
#include "jcm/info_measures.hpp"
#include "jcm/model_params.hpp"
#include "jcm/prob_dist.hpp"
#include "jcm/spectrum.hpp"

namespace jcm {

/// Equilibrium ensemble at dimensionless temperature inv_beta = 1/(beta
/// hbar omega); the Boltzmann sums are truncated at photon index n_max
/// chosen so the dropped mass stays below trunc_tol relative to Z.
struct ThermalConfig {
  ModelParams params;
  double inv_beta = 1.0;
  double trunc_tol = 1e-12;
  int n_cap = 100000;

  double beta() const { return 1.0 / (inv_beta * params.omega); }
  void validate() const;
};

/// Normalized Boltzmann weights over {|0,g>} and all dressed levels up to
/// n_max, plus the log partition function (exponent-shifted evaluation).
struct ThermalWeights {
  double w_singlet = 0.0;
  std::vector<double> w1; // w(n,1), n = 0..n_max
  std::vector<double> w2; // w(n,2)
  double log_z = 0.0;
  int n_max = 0;
  double tail_bound = 0.0;

  /// All weights as one distribution (singlet, then branch pairs); entropy
  /// of this vector is the joint entropy since rho is dressed-diagonal.
  ProbDist flatten() const;
};

/// Smallest truncation index covering the whole negative Omega(n,2) branch
/// plus a margin, with the analytic Boltzmann tail below trunc_tol * Z.
/// Throws TruncationError when n_cap is hit first.
int resolve_truncation(const ThermalConfig& cfg);

ThermalWeights boltzmann_weights(const ThermalConfig& cfg);

/// Same, at an explicit truncation (used by truncation-stability checks).
ThermalWeights boltzmann_weights_at(const ThermalConfig& cfg, int n_max);

double joint_entropy(const ThermalConfig& cfg);

/// Closed-form two-level marginal (f_minus, f_plus).
QubitMarginal atom_marginal(const ThermalConfig& cfg);

/// Closed-form photon-number marginal p_n; photon n mixes branch weights
/// of blocks n and n-1.
ProbDist radiation_marginal(const ThermalConfig& cfg);

/// Dressed-diagonal joint density (feeds the dense oracle).
BlockDensity joint_density(const ThermalConfig& cfg);

EntropyReport thermal_report(const ThermalConfig& cfg, const ReportTols& tols = {});

ProbDist radiation_marginal_from(const ThermalWeights& weights, const ModelParams& params);
QubitMarginal atom_marginal_from(const ThermalWeights& weights, const ModelParams& params);

} // namespace jcm

#endif
