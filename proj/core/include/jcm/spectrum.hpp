#ifndef JCM_SPECTRUM_HPP
#define JCM_SPECTRUM_HPP

#include <vector>

#include "jcm/model_params.hpp"

namespace jcm {

/// One dressed eigenpair: photon index n >= 0, branch s in {1,2}, the
/// eigenenergy Omega(n,s) and the mixing angle theta_n in [0, pi/2).
struct DressedLevel {
  int n;
  int s;
  double energy;
  double theta;
};

/// Identifies an eigenstate: either the uncoupled |0,g> singlet or a
/// dressed level (n,s).  The singlet is encoded as n = -1, s = 0.
struct LevelId {
  int n = -1;
  int s = 0;
  bool is_singlet() const { return s == 0; }
  bool operator==(const LevelId&) const = default;
};

/// Minimum of the spectrum over {|0,g>} and all dressed levels up to n_max.
/// Exact energy ties are reported as multiple entries.
struct GroundLevel {
  double energy = 0.0;
  std::vector<LevelId> levels;
};

/// lambda_n = sqrt((detuning/2)^2 + kappa^2 (n+1)); half the Rabi splitting.
double lambda_n(const ModelParams& params, int n);

/// Mixing angle theta_n = atan(kappa sqrt(n+1) / (detuning/2 + lambda_n)).
/// Equals pi/4 for every n at resonance and 0 in the uncoupled limit.
double theta_n(const ModelParams& params, int n);

/// Dressed eigenenergy Omega(n,s) = omega (n + 1/2) + (3 - 2s) lambda_n.
/// Branch s = 1 lies above branch s = 2 by exactly 2 lambda_n.
double omega_ns(const ModelParams& params, int n, int s);

/// Energy of the uncoupled ground state |0,g>: -omega0 / 2.
double singlet_energy(const ModelParams& params);

DressedLevel dressed_level(const ModelParams& params, int n, int s);

/// Photon indices n <= n_max with Omega(n,2) < 0, ascending.  The boundary
/// Omega(n,2) == 0 is classified as not negative.
std::vector<int> negative_branch_set(const ModelParams& params, int n_max);

/// Largest n that could possibly have Omega(n,2) < 0 (coarse analytic bound);
/// useful for choosing scan ranges.
int negative_branch_scan_bound(const ModelParams& params);

/// Spectrum minimizer over {|0,g>} and dressed levels with n <= n_max.
/// Throws TruncationError if n_max is too small to certify the minimum,
/// i.e. if the lower branch is not yet rising clear of the best candidate.
GroundLevel ground_level(const ModelParams& params, int n_max);

} // namespace jcm

#endif
