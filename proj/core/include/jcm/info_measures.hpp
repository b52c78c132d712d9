#ifndef JCM_INFO_MEASURES_HPP
#define JCM_INFO_MEASURES_HPP

#include <optional>
#include <string>
#include <utility>

#include "jcm/errors.hpp"

namespace jcm {

enum class Regime {
  Degenerate,            // a marginal entropy is numerically zero
  Independent,           // mutual entropy ~ 0
  ClassicallyCorrelated, // 0 < mutual <= min(S_A, S_R)
  Supercorrelated,       // mutual > min(S_A, S_R): negative conditional entropy
};

std::string to_string(Regime regime);

struct ReportTols {
  double bounds = 1e-9;  // entropy inequality slack
  double regime = 1e-6;  // regime boundary slack (physical, looser)
  double ratio = 1e-9;   // smallest S_A for which the ratio is reported
};

/// All entropy functionals at one parameter point, in nats.
struct EntropyReport {
  double s_joint = 0.0;
  double s_atom = 0.0;
  double s_rad = 0.0;
  double cond_given_rad = 0.0;  // S(A+R|R) = S_joint - S_R
  double cond_given_atom = 0.0; // S(A+R|A) = S_joint - S_A
  double mutual = 0.0;          // S(A:R) = S_A + S_R - S_joint
  std::optional<double> ratio;  // cond_given_rad / S_A, absent when S_A ~ 0
  Regime regime = Regime::Degenerate;
  bool maximally_classical = false; // |mutual - min(S_A,S_R)| within tolerance
};

/// (S_joint - S_rad, S_joint - S_atom); either may be negative for
/// entangled states.
std::pair<double, double> conditional_entropies(double s_joint, double s_atom,
                                                double s_rad);

/// S_A + S_R - S_joint.  Throws BoundViolation if the result lands below
/// -1e-6 or above 2 min(S_A, S_R) + 1e-6; those bounds can only break via
/// an upstream bug, so nothing is clamped.
double mutual_entropy(double s_joint, double s_atom, double s_rad);

Regime classify(const EntropyReport& report, double tol);

/// Assembles the full report and checks its internal identities
/// (ratio = 1 - mutual/S_A, Araki-Lieb, subadditivity).
EntropyReport make_report(double s_joint, double s_atom, double s_rad,
                          const ReportTols& tols = {});

} // namespace jcm

#endif
