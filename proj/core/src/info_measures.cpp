#include "jcm/info_measures.hpp"

#include <algorithm>
#include <cmath>

namespace jcm {

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::Degenerate: return "degenerate";
    case Regime::Independent: return "independent";
    case Regime::ClassicallyCorrelated: return "classically_correlated";
    case Regime::Supercorrelated: return "supercorrelated";
  }
  return "unknown";
}

std::pair<double, double> conditional_entropies(double s_joint, double s_atom,
                                                double s_rad) {
  return {s_joint - s_rad, s_joint - s_atom};
}

namespace {

void check_mutual_bounds(double mutual, double s_atom, double s_rad) {
  const double quantum_cap = 2.0 * std::min(s_atom, s_rad);
  if (mutual < -1e-6 || mutual > quantum_cap + 1e-6) {
    throw BoundViolation("mutual_entropy: S(A:R) = " + std::to_string(mutual) +
                         " violates [0, 2 min(S_A, S_R) = " +
                         std::to_string(quantum_cap) + "]");
  }
}

} // namespace

double mutual_entropy(double s_joint, double s_atom, double s_rad) {
  const double mutual = s_atom + s_rad - s_joint;
  check_mutual_bounds(mutual, s_atom, s_rad);
  return mutual;
}

Regime classify(const EntropyReport& report, double tol) {
  const double floor = std::min(report.s_atom, report.s_rad);
  if (floor < tol) return Regime::Degenerate;
  if (report.mutual > floor + tol) return Regime::Supercorrelated;
  if (report.mutual < tol) return Regime::Independent;
  return Regime::ClassicallyCorrelated;
}

EntropyReport make_report(double s_joint, double s_atom, double s_rad,
                          const ReportTols& tols) {
  EntropyReport rep;
  rep.s_joint = s_joint;
  rep.s_atom = s_atom;
  rep.s_rad = s_rad;
  std::tie(rep.cond_given_rad, rep.cond_given_atom) =
      conditional_entropies(s_joint, s_atom, s_rad);
  // reassociated so that ratio = 1 - mutual/S_A holds to roundoff even for
  // tiny S_A (the ratio itself is confined to [-1, 1] by Araki-Lieb)
  rep.mutual = s_atom - rep.cond_given_rad;
  check_mutual_bounds(rep.mutual, s_atom, s_rad);

  if (std::abs(s_atom - s_rad) > s_joint + tols.bounds ||
      s_joint > s_atom + s_rad + tols.bounds) {
    throw BoundViolation("make_report: triangle/subadditivity violated at (" +
                         std::to_string(s_joint) + ", " + std::to_string(s_atom) +
                         ", " + std::to_string(s_rad) + ")");
  }

  if (s_atom >= tols.ratio) {
    rep.ratio = rep.cond_given_rad / s_atom;
    // algebraic identity, checked rather than assumed
    const double alt = 1.0 - rep.mutual / s_atom;
    if (std::abs(*rep.ratio - alt) > 1e-10) {
      throw BoundViolation("make_report: ratio identity drift " +
                           std::to_string(std::abs(*rep.ratio - alt)));
    }
  }

  rep.regime = classify(rep, tols.regime);
  rep.maximally_classical =
      rep.regime != Regime::Degenerate &&
      std::abs(rep.mutual - std::min(s_atom, s_rad)) <= tols.regime;
  return rep;
}

} // namespace jcm
