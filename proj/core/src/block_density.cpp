#include "jcm/block_density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace jcm {

std::pair<double, double> block_eigvals(const HermBlock2& block) {
  const double trace = block.a + block.b;
  const double half_gap = 0.5 * (block.a - block.b);
  const double radius = std::sqrt(half_gap * half_gap + std::norm(block.c));
  // hi lands in [trace/2, trace], so trace - hi is exact (Sterbenz) and the
  // pair sums to the trace bitwise; clamping hi also clamps lo into [0, trace]
  const double hi = std::min(0.5 * trace + radius, trace);
  const double lo = trace - hi;
  return {hi, lo};
}

double BlockDensity::trace() const {
  double t = singlet_weight.value_or(0.0);
  for (const auto& blk : blocks) t += blk.trace();
  return t;
}

void BlockDensity::validate(double tol_psd, double tol_trace) const {
  if (singlet_weight && *singlet_weight < -tol_psd) {
    throw InvalidDistribution("BlockDensity: negative singlet weight");
  }
  for (std::size_t n = 0; n < blocks.size(); ++n) {
    const auto& blk = blocks[n];
    if (blk.a < -tol_psd || blk.b < -tol_psd ||
        blk.a * blk.b - std::norm(blk.c) < -tol_psd) {
      throw InvalidDistribution("BlockDensity: block " + std::to_string(n) +
                                " is not PSD within tolerance");
    }
  }
  const double t = trace();
  if (std::abs(t - 1.0) > tol_trace) {
    throw InvalidDistribution("BlockDensity: trace " + std::to_string(t) +
                              " not within tolerance of 1");
  }
}

double von_neumann_entropy(const BlockDensity& rho) {
  rho.validate();
  double s = 0.0;
  if (rho.singlet_weight) s += entropy_term(*rho.singlet_weight);
  for (const auto& blk : rho.blocks) {
    const auto [hi, lo] = block_eigvals(blk);
    s += entropy_term(hi) + entropy_term(lo);
  }
  return s;
}

} // namespace jcm
