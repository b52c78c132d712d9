#include "jcm/spectrum.hpp"

#include <cmath>
#include <string>

namespace jcm {

double lambda_n(const ModelParams& params, int n) {
  if (n < 0) throw SpecError("lambda_n: n must be >= 0");
  const double half_det = 0.5 * params.detuning();
  return std::sqrt(half_det * half_det + params.kappa * params.kappa * (n + 1.0));
}

double theta_n(const ModelParams& params, int n) {
  if (n < 0) throw SpecError("theta_n: n must be >= 0");
  if (params.kappa == 0.0) return 0.0; // uncoupled limit
  const double half_det = 0.5 * params.detuning();
  // denominator half_det + lambda_n > 0 whenever kappa > 0
  return std::atan(params.kappa * std::sqrt(n + 1.0) / (half_det + lambda_n(params, n)));
}

double omega_ns(const ModelParams& params, int n, int s) {
  if (n < 0) throw SpecError("omega_ns: n must be >= 0");
  if (s != 1 && s != 2) throw SpecError("omega_ns: branch s must be 1 or 2");
  return params.omega * (n + 0.5) + (3.0 - 2.0 * s) * lambda_n(params, n);
}

double singlet_energy(const ModelParams& params) { return -0.5 * params.omega0; }

DressedLevel dressed_level(const ModelParams& params, int n, int s) {
  return DressedLevel{n, s, omega_ns(params, n, s), theta_n(params, n)};
}

std::vector<int> negative_branch_set(const ModelParams& params, int n_max) {
  if (n_max < 0) throw SpecError("negative_branch_set: n_max must be >= 0");
  std::vector<int> out;
  for (int n = 0; n <= n_max; ++n) {
    if (omega_ns(params, n, 2) < 0.0) out.push_back(n);
  }
  return out;
}

int negative_branch_scan_bound(const ModelParams& params) {
  // Omega(n,2) < 0 requires omega (m - 1/2) < |detuning|/2 + kappa sqrt(m)
  // with m = n + 1, so sqrt(m) is below the positive root of the quadratic
  // omega x^2 - kappa x - (omega + |detuning|) / 2.
  const double w = params.omega;
  const double k = params.kappa;
  const double d = std::abs(params.detuning());
  const double root = (k + std::sqrt(k * k + 2.0 * w * (w + d))) / (2.0 * w);
  return static_cast<int>(std::ceil(root * root)) + 1;
}

GroundLevel ground_level(const ModelParams& params, int n_max) {
  if (n_max < 0) throw SpecError("ground_level: n_max must be >= 0");

  GroundLevel best;
  best.energy = singlet_energy(params);
  best.levels = {LevelId{}};

  auto consider = [&best](double energy, LevelId id) {
    if (energy < best.energy) {
      best.energy = energy;
      best.levels = {id};
    } else if (energy == best.energy) {
      best.levels.push_back(id);
    }
  };

  for (int n = 0; n <= n_max; ++n) {
    consider(omega_ns(params, n, 1), LevelId{n, 1});
    consider(omega_ns(params, n, 2), LevelId{n, 2});
  }

  // Omega(n,2) is convex in n, so once the scan end is both rising and above
  // the current minimum no lower level can exist beyond n_max.  Branch 1 is
  // always above branch 2.
  const double end2 = omega_ns(params, n_max, 2);
  const bool rising =
      n_max == 0 ? params.kappa == 0.0 : end2 > omega_ns(params, n_max - 1, 2);
  if (!(rising || params.kappa == 0.0) || end2 <= best.energy) {
    throw TruncationError("ground_level: n_max=" + std::to_string(n_max) +
                          " too small to certify the spectrum minimum");
  }
  return best;
}

} // namespace jcm
