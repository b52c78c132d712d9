#ifndef JCM_DYNAMICS_HPP
#define JCM_DYNAMICS_HPP

#include <vector>

#include "jcm/block_density.hpp"
#include "jcm/info_measures.hpp"
#include "jcm/model_params.hpp"
#include "jcm/prob_dist.hpp"

namespace jcm {

enum class SourceKind { Geometric, Poisson, Custom };

/// Initial photon-number statistics of the field.  Geometric is the
/// blackbody-like source p(n) = Nbar^n / (1+Nbar)^(n+1); Poisson is the
/// coherent source p(n) = Nbar^n e^{-Nbar} / n!.
struct SourceModel {
  SourceKind kind = SourceKind::Geometric;
  double nbar = 1.0;
  ProbDist custom;

  static SourceModel geometric(double nbar) { return {SourceKind::Geometric, nbar, {}}; }
  static SourceModel poisson(double nbar) { return {SourceKind::Poisson, nbar, {}}; }
  static SourceModel custom_dist(ProbDist dist) {
    return {SourceKind::Custom, dist.mean(), std::move(dist)};
  }
};

/// Unitary quench from rho(0) = |e><e| (x) photon source.
struct QuenchConfig {
  ModelParams params;
  SourceModel source;
  double trunc_tol = 1e-14;
  int n_cap = 100000;

  void validate() const;
};

/// Conversion between raw time and the figure axis tau = kappa t / (pi sqrt(Nbar)).
double tau_to_time(double tau, double nbar, double kappa);
double time_to_tau(double t, double nbar, double kappa);

/// Truncated, normalized photon distribution with recorded tail bound.
ProbDist photon_dist(const SourceModel& source, double trunc_tol, int n_cap = 100000);

/// Probability that the n-block has swapped the excitation into the field:
/// W_n(t) = sin^2(2 theta_n) sin^2(lambda_n t).  At resonance lambda_n t
/// reduces to kappa sqrt(n+1) t.
double rabi_weight(const ModelParams& params, int n, double t);

/// (w_g(t), w_e(t)) with w_g = sum_n p(n) W_n(t).
QubitMarginal atom_marginal_t(const QuenchConfig& cfg, double t);

/// P_n(t) = p(n)(1 - W_n(t)) + p(n-1) W_{n-1}(t), with p(-1) = 0.
ProbDist radiation_marginal_t(const QuenchConfig& cfg, double t);

/// Joint state at time t: one rank-1 block per photon index, eigenvalues
/// (p(n), 0); coherence p(n) sin(theta) cos(theta) e^{-2 i lambda_n t}.
BlockDensity joint_density_t(const QuenchConfig& cfg, double t);

/// The conserved joint entropy, fixed by the initial field statistics:
/// geometric (Nbar+1)ln(Nbar+1) - Nbar ln Nbar; Poisson
/// Nbar - Nbar ln Nbar + sum_n p(n) ln n!; custom falls back to the
/// Shannon entropy of the distribution.
double joint_entropy_closed_form(const SourceModel& source, double trunc_tol = 1e-14);

/// Leading small-time behavior of (S_joint - S_R)/S_A:
///   sum_n (n+1) p(n) ln(p(n)/p(n+1))
///   ------------------------------------------
///   (Nbar+1) [ln(kappa^2 t^2) - 1 + ln(Nbar+1)]
/// Negative for small kappa t and tends to 0 from below as t -> 0+.
double small_time_ratio(const QuenchConfig& cfg, double t);

EntropyReport dynamics_report(const QuenchConfig& cfg, double t, const ReportTols& tols = {});

} // namespace jcm

#endif
