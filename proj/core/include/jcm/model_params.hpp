#ifndef JCM_MODEL_PARAMS_HPP
#define JCM_MODEL_PARAMS_HPP

#include "jcm/errors.hpp"

namespace jcm {

/// Physical constants of the atom-field model in hbar = 1 units.
///
/// omega is the field mode frequency, omega0 the two-level splitting and
/// kappa the dipole coupling strength, all in the same energy units.
/// Energies produced elsewhere are in units of omega when omega = 1, which
/// is the default used by the CLI.
struct ModelParams {
  double omega = 1.0;
  double omega0 = 1.0;
  double kappa = 0.0;

  double detuning() const { return omega - omega0; }
  bool is_resonant() const { return detuning() == 0.0; }

  void validate() const {
    if (!(omega > 0.0)) throw SpecError("ModelParams: omega must be > 0");
    if (!(omega0 > 0.0)) throw SpecError("ModelParams: omega0 must be > 0");
    if (!(kappa >= 0.0)) throw SpecError("ModelParams: kappa must be >= 0");
  }

  /// Resonant parameter set with coupling expressed as kappa/omega.
  static ModelParams resonant(double kappa_ratio, double omega = 1.0) {
    return ModelParams{omega, omega, kappa_ratio * omega};
  }
};

} // namespace jcm

#endif
