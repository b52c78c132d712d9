#include "jcm/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "jcm/spectrum.hpp"

namespace jcm {

void QuenchConfig::validate() const {
  params.validate();
  if (source.kind != SourceKind::Custom && !(source.nbar > 0.0)) {
    throw SpecError("QuenchConfig: nbar must be > 0");
  }
  if (!(trunc_tol > 0.0) || trunc_tol > 1e-6) {
    throw SpecError("QuenchConfig: trunc_tol must be in (0, 1e-6]");
  }
}

double tau_to_time(double tau, double nbar, double kappa) {
  if (!(kappa > 0.0)) throw SpecError("tau_to_time: kappa must be > 0");
  return tau * std::numbers::pi * std::sqrt(nbar) / kappa;
}

double time_to_tau(double t, double nbar, double kappa) {
  return kappa * t / (std::numbers::pi * std::sqrt(nbar));
}

ProbDist photon_dist(const SourceModel& source, double trunc_tol, int n_cap) {
  if (!(trunc_tol > 0.0)) throw SpecError("photon_dist: trunc_tol must be > 0");

  switch (source.kind) {
    case SourceKind::Custom: {
      source.custom.validate();
      return source.custom;
    }
    case SourceKind::Geometric: {
      const double nbar = source.nbar;
      if (!(nbar > 0.0)) throw SpecError("photon_dist: nbar must be > 0");
      const double log_q = std::log(nbar) - std::log1p(nbar);
      // Truncate on the mean-weighted tail sum_{n>M} n p(n) =
      // q^{M+1} [(M+1) - M q] / (1-q); this keeps the truncated mean within
      // trunc_tol of nbar and bounds the plain tail mass q^{M+1} a fortiori.
      const double q = nbar / (1.0 + nbar);
      int n_max = std::max<int>(1, static_cast<int>(std::ceil(std::log(trunc_tol) / log_q)));
      auto mean_tail = [&](int m) {
        return std::exp((m + 1) * log_q) * ((m + 1) - m * q) * (1.0 + nbar);
      };
      while (mean_tail(n_max) >= trunc_tol) {
        if (++n_max > n_cap) {
          throw TruncationError("photon_dist: geometric truncation exceeds n_cap=" +
                                std::to_string(n_cap));
        }
      }
      ProbDist out;
      out.weights.resize(n_max + 1);
      for (int n = 0; n <= n_max; ++n) {
        out.weights[n] = std::exp(n * log_q - std::log1p(nbar));
      }
      out.tail_bound = std::exp((n_max + 1) * log_q);
      return out;
    }
    case SourceKind::Poisson: {
      const double nbar = source.nbar;
      if (!(nbar > 0.0)) throw SpecError("photon_dist: nbar must be > 0");
      const double log_nbar = std::log(nbar);
      std::vector<double> w;
      for (int n = 0; n <= n_cap; ++n) {
        const double p = std::exp(n * log_nbar - nbar - std::lgamma(n + 1.0));
        w.push_back(p);
        // past the mean the terms decay at least geometrically with ratio
        // nbar/(n+2); stop once the mean-weighted tail bound
        // p(n+1) [ (n+1)/(1-r) + r/(1-r)^2 ] is below tolerance
        if (n + 2 > 2.0 * nbar && n > 2) {
          const double r = nbar / (n + 2.0);
          const double p_next = std::exp((n + 1) * log_nbar - nbar - std::lgamma(n + 2.0));
          const double mean_tail = p_next * ((n + 1) / (1.0 - r) + r / ((1.0 - r) * (1.0 - r)));
          if (mean_tail < trunc_tol) {
            ProbDist out;
            out.weights = std::move(w);
            out.tail_bound = p_next / (1.0 - r);
            return out;
          }
        }
      }
      throw TruncationError("photon_dist: Poisson truncation exceeds n_cap=" +
                            std::to_string(n_cap));
    }
  }
  throw SpecError("photon_dist: unknown source kind");
}

double rabi_weight(const ModelParams& params, int n, double t) {
  if (t < 0.0) throw SpecError("rabi_weight: t must be >= 0");
  const double th = theta_n(params, n);
  const double s2t = std::sin(2.0 * th);
  const double osc = std::sin(lambda_n(params, n) * t);
  return s2t * s2t * osc * osc;
}

QubitMarginal atom_marginal_t(const QuenchConfig& cfg, double t) {
  cfg.validate();
  const ProbDist p = photon_dist(cfg.source, cfg.trunc_tol, cfg.n_cap);
  double w_g = 0.0;
  for (std::size_t n = 0; n < p.weights.size(); ++n) {
    w_g += p.weights[n] * rabi_weight(cfg.params, static_cast<int>(n), t);
  }
  return QubitMarginal{w_g, 1.0 - w_g};
}

ProbDist radiation_marginal_t(const QuenchConfig& cfg, double t) {
  cfg.validate();
  const ProbDist p = photon_dist(cfg.source, cfg.trunc_tol, cfg.n_cap);
  const int n_src = static_cast<int>(p.weights.size()) - 1;
  ProbDist out;
  out.tail_bound = p.tail_bound;
  out.weights.assign(n_src + 2, 0.0);
  for (int n = 0; n <= n_src; ++n) {
    const double w = rabi_weight(cfg.params, n, t);
    out.weights[n] += p.weights[n] * (1.0 - w);
    out.weights[n + 1] += p.weights[n] * w;
  }
  return out;
}

BlockDensity joint_density_t(const QuenchConfig& cfg, double t) {
  cfg.validate();
  const ProbDist p = photon_dist(cfg.source, cfg.trunc_tol, cfg.n_cap);
  BlockDensity rho;
  rho.params = cfg.params;
  rho.blocks.resize(p.weights.size());
  for (std::size_t n = 0; n < p.weights.size(); ++n) {
    const double th = theta_n(cfg.params, static_cast<int>(n));
    const double si = std::sin(th);
    const double co = std::cos(th);
    const double phase = -2.0 * lambda_n(cfg.params, static_cast<int>(n)) * t;
    // |n,e> = sin(theta)|phi(n,1)> + cos(theta)|phi(n,2)>, evolved unitarily:
    // each block stays the rank-1 projector p(n) |psi_n(t)><psi_n(t)|.
    rho.blocks[n] = HermBlock2{
        p.weights[n] * si * si, p.weights[n] * co * co,
        p.weights[n] * si * co * std::complex<double>{std::cos(phase), std::sin(phase)}};
  }
  return rho;
}

double joint_entropy_closed_form(const SourceModel& source, double trunc_tol) {
  switch (source.kind) {
    case SourceKind::Geometric: {
      const double nbar = source.nbar;
      if (!(nbar > 0.0)) throw SpecError("joint_entropy_closed_form: nbar must be > 0");
      return (nbar + 1.0) * std::log1p(nbar) - nbar * std::log(nbar);
    }
    case SourceKind::Poisson: {
      const double nbar = source.nbar;
      if (!(nbar > 0.0)) throw SpecError("joint_entropy_closed_form: nbar must be > 0");
      // sum_n p(n) ln(n!) converges super-geometrically past the mean
      double series = 0.0;
      for (int n = 2;; ++n) {
        const double term =
            std::exp(n * std::log(nbar) - nbar - std::lgamma(n + 1.0)) * std::lgamma(n + 1.0);
        series += term;
        if (n > 2.0 * nbar + 10.0 && term < 1e-18) break;
      }
      return nbar - nbar * std::log(nbar) + series;
    }
    case SourceKind::Custom:
      return shannon_entropy(photon_dist(source, trunc_tol));
  }
  throw SpecError("joint_entropy_closed_form: unknown source kind");
}

double small_time_ratio(const QuenchConfig& cfg, double t) {
  cfg.validate();
  if (!(t > 0.0)) throw SpecError("small_time_ratio: undefined at t = 0");
  const ProbDist p = photon_dist(cfg.source, cfg.trunc_tol, cfg.n_cap);

  double numerator = 0.0;
  for (std::size_t n = 0; n + 1 < p.weights.size(); ++n) {
    const double pn = p.weights[n];
    const double pn1 = p.weights[n + 1];
    if (pn1 <= 0.0) continue;
    if (pn <= 0.0) {
      throw NumericError("small_time_ratio: p(n) = 0 with p(n+1) > 0 at n=" +
                         std::to_string(n));
    }
    numerator += (n + 1.0) * pn * std::log(pn / pn1);
  }

  const double nbar = cfg.source.kind == SourceKind::Custom ? p.mean() : cfg.source.nbar;
  const double kt = cfg.params.kappa * t;
  const double denominator =
      (nbar + 1.0) * (std::log(kt * kt) - 1.0 + std::log1p(nbar));
  return numerator / denominator;
}

EntropyReport dynamics_report(const QuenchConfig& cfg, double t, const ReportTols& tols) {
  const double s_joint = joint_entropy_closed_form(cfg.source, cfg.trunc_tol);
  const double s_atom = binary_entropy(atom_marginal_t(cfg, t));
  const double s_rad = shannon_entropy(radiation_marginal_t(cfg, t));
  return make_report(s_joint, s_atom, s_rad, tols);
}

} // namespace jcm
